#pragma once

#include <complex>
#include <string>
#include <vector>

#include "clutchlab/bundle.hpp"
#include "clutchlab/clutch.hpp"
#include "clutchlab/group.hpp"
#include "clutchlab/rep.hpp"

namespace clutchlab {

struct BuiltinGroup {
  GroupPtr group;
  GroupAction action;  // the canonical action that comes with the group
};

/// Z_m = <a> acting on m points by a.x_i = x_{i+1}.
BuiltinGroup cyclic_group(int m);
/// D_m = <a, b | a^m, b^2, bab^-1 a> of order 2m, element a^k b^s at index
/// k + m s, acting on m points by a.x_i = x_{i+1}, b.x_i = x_{-i}.
BuiltinGroup dihedral_group(int m);
/// The order 24 symmetry group of a regular tetrahedron (permutations of
/// its vertices 0..3 in lexicographic order), acting on the 12 corners of
/// the four separated faces. Corner (f, v) is vertex v of the face opposite
/// vertex f; corners are ordered by v, then f, so corners 0, 1, 2 are the
/// three preimages of vertex 0.
BuiltinGroup tetra_group();
/// "cyclic(m)", "dihedral(m)" or "tetra" (also "cyclic:m", "dihedral:m").
/// Throws DomainError for unknown names or m < 1.
BuiltinGroup builtin_group(const std::string& spec);

/// D_2 acting on 4 points by a.x_i = x_{i+2}, b.x_i = x_{1-i}.
GroupAction klein_four_point_action();

/// The 3-dimensional irreducible reflection representation of the
/// tetrahedral group (permutation action on C^4 restricted to the sum-zero
/// hyperplane, in an orthonormal basis).
Representation tetra_standard_rep(const GroupPtr& tetra);

namespace fixtures {

/// Z_2 swapping two points, rank 1, trivial transport.
BundlePtr swap_bundle();
/// psi(0,1) = z, psi(1,0) = 1/z over swap_bundle-shaped bundles.
PointwiseClutchingMap swap_clutch(const BundlePtr& bundle, std::complex<double> z);
/// D_3 rotating 3 points, rank 1, trivial transport.
BundlePtr s3_three_point();
/// Z_4 acting on 2 points through Z_4 -> Z_2, rank 1, transport i^g; the
/// fiber is the sign representation of the stabilizer {0, 2}.
BundlePtr z4_two_point();
/// The tetrahedral pull-back of `w` over the 12 face corners, restricted to
/// the three preimages of vertex 0 (a D_3-bundle over 3 points).
RestrictedBundle tetra_vertex(const Representation& w);
/// tetra_vertex of the standard representation.
RestrictedBundle tetra_vertex();
/// The trivial action of the group of `v` on n points, every fiber v.
BundlePtr trivial_action(const Representation& v, int n);
/// Z_2 acting trivially on 2 points with fibers triv and sign: no
/// representation extends both.
BundlePtr incompatible_fibers();

}  // namespace fixtures

}  // namespace clutchlab
