#pragma once

#include <cstdint>
#include <vector>

#include "clutchlab/bundle.hpp"
#include "clutchlab/clutch.hpp"
#include "clutchlab/rep.hpp"

namespace clutchlab {

/// An isomorphism class of G-representations, identified by its exact
/// multiplicity vector over the rows of the group's character table.
struct ExtensionClass {
  std::vector<int> multiplicities;
  Character character;
  int dim = 0;

  bool operator==(const ExtensionClass& other) const { return multiplicities == other.multiplicities; }
};

ExtensionClass extension_class(const Character& chi, const CharacterTable& table,
                               const Tolerances& tol = {});
ExtensionClass extension_class(const std::vector<int>& multiplicities, const CharacterTable& table);

/// Direct sum of the explicit irreducibles with the class's multiplicities.
Representation realize(const ExtensionClass& w, const std::vector<Representation>& irreps);

/// res_{G_s} w ~ F_s at every orbit representative s.
bool is_extension(const Character& w, const EquivariantBundle& bundle, const Tolerances& tol = {});
bool is_extension(const Representation& w, const EquivariantBundle& bundle,
                  const Tolerances& tol = {});

/// Every class of representation extensions of the bundle, in lexicographic
/// order of multiplicity vectors. Throws DomainError for non-constant rank.
std::vector<ExtensionClass> enumerate_extensions(const EquivariantBundle& bundle,
                                                 const CharacterTable& table,
                                                 const Tolerances& tol = {});

/// An equivariant fiberwise isomorphism p from the bundle to w, assembled
/// orbit by orbit from random intertwiners at the orbit representatives.
std::vector<CMatrix> build_fiberwise_iso(const EquivariantBundle& bundle, const Representation& w,
                                         std::uint64_t seed, const Tolerances& tol = {});

/// An equivariant clutching map glued to a representation isomorphic to w.
PointwiseClutchingMap component_representative(const BundlePtr& bundle, const Representation& w,
                                               std::uint64_t seed, const Tolerances& tol = {});

/// The class of the glued representation at the minimal basepoint.
ExtensionClass gl(const PointwiseClutchingMap& psi, const CharacterTable& table,
                  const Tolerances& tol = {});

struct Component {
  ExtensionClass extension;
  PointwiseClutchingMap representative;
};

/// Path components of the space of equivariant clutching maps, one per
/// extension class, each with a representative. The representative of
/// class i is built with seed + i.
std::vector<Component> pi0(const BundlePtr& bundle, const CharacterTable& table,
                           const std::vector<Representation>& irreps, std::uint64_t seed = 0,
                           const Tolerances& tol = {});

bool same_component(const PointwiseClutchingMap& a, const PointwiseClutchingMap& b,
                    const CharacterTable& table, const Tolerances& tol = {});

}  // namespace clutchlab
