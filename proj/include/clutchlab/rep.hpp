#pragma once

#include <cstdint>
#include <vector>

#include "clutchlab/group.hpp"
#include "clutchlab/linalg.hpp"

namespace clutchlab {

/// A complex representation: one dim x dim matrix per group element index.
struct Representation {
  GroupPtr group;
  int dim = 0;
  std::vector<CMatrix> mats;
};

/// Worst relative residual of mats[g h] = mats[g] mats[h] and mats[0] = I.
double homomorphism_residual(const Representation& rep);
/// Throws DomainError unless `rep` is a representation within tol.eps_mat.
void check_representation(const Representation& rep, const Tolerances& tol = {});

Representation trivial_rep(const GroupPtr& group, int dim = 1);
Representation regular_rep(const GroupPtr& group);
Representation permutation_rep(const GroupAction& action);
Representation direct_sum(const Representation& a, const Representation& b);
/// g -> t rep(g) t^-1.
Representation conjugate_rep(const Representation& rep, const CMatrix& t);

/// Class function stored as one value per conjugacy class.
struct Character {
  GroupPtr group;
  std::vector<Complex> values;

  Complex degree() const { return values.front(); }
  Complex at(int g) const { return values[group->class_of(g)]; }
};

Character character_of(const Representation& rep);
/// (1/|G|) sum_g conj(a(g)) b(g).
Complex inner_product(const Character& a, const Character& b);
double max_abs_difference(const Character& a, const Character& b);
/// The restriction to `k`, expressed over k.group's classes.
Character restrict_character(const Character& chi, const Subgroup& k);

/// Irreducible characters sorted by degree, then by values in descending
/// lexicographic (real, imaginary) order. Row 0 is the trivial character.
struct CharacterTable {
  GroupPtr group;
  std::vector<Character> rows;
  std::vector<int> dims;

  int size() const { return static_cast<int>(rows.size()); }
};

/// Burnside's method: simultaneous eigenvectors of the class-sum
/// multiplication matrices, found from a seeded random linear combination.
/// Throws NumericalError when no separating combination is found.
CharacterTable character_table(const GroupPtr& group, std::uint64_t seed = 0,
                               const Tolerances& tol = {});

/// Multiplicity of every irreducible of `table` in `chi`. Throws DomainError
/// if some inner product is negative or not within eps_char of an integer.
std::vector<int> multiplicity_vector(const Character& chi, const CharacterTable& table,
                                     const Tolerances& tol = {});

/// The nonzero multiplicities l_1..l_m with the irreducibles they belong to;
/// iso_G(w) is GL(l_1) x ... x GL(l_m).
struct CommutantShape {
  std::vector<int> irreducibles;
  std::vector<int> multiplicities;

  int num_factors() const { return static_cast<int>(multiplicities.size()); }
};

CommutantShape multiplicities(const Character& chi, const CharacterTable& table,
                              const Tolerances& tol = {});
CommutantShape multiplicities(const Representation& rep, const CharacterTable& table,
                              const Tolerances& tol = {});

/// Character built from a multiplicity vector over `table`.
Character character_from_multiplicities(const std::vector<int>& mult, const CharacterTable& table);

/// The representation of k.group given by the matrices of k's elements.
Representation restrict_rep(const Representation& rep, const Subgroup& k);

bool is_isomorphic(const Representation& v, const Representation& w, const Tolerances& tol = {});
bool is_isomorphic(const Character& v, const Character& w, const Tolerances& tol = {});

/// An invertible T with T v(g) = w(g) T, obtained by averaging
/// w(g) R v(g)^-1 over the group for seeded random R. Throws DomainError for
/// non-isomorphic inputs and NumericalError after 10 singular attempts.
CMatrix random_intertwiner(const Representation& v, const Representation& w, std::uint64_t seed,
                           const Tolerances& tol = {});

/// max_g ||t v(g) - w(g) t||_F / max(1, ||t||_F).
double intertwining_residual(const CMatrix& t, const Representation& v, const Representation& w);

/// Explicit matrices for every irreducible of small groups, found by
/// splitting the regular representation with isotypic projectors.
std::vector<Representation> irreducible_representations(const CharacterTable& table,
                                                        std::uint64_t seed = 0,
                                                        const Tolerances& tol = {});

}  // namespace clutchlab
