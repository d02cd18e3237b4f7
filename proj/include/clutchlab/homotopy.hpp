#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clutchlab/bundle.hpp"
#include "clutchlab/rep.hpp"

namespace clutchlab {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// S = U M V with U, V unimodular and S diagonal, s_1 | s_2 | ..., s_i >= 0.
struct SmithForm {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;

  std::vector<std::int64_t> diagonal() const;
};

/// Exact reduction in 64-bit integers; throws NumericalError on overflow.
SmithForm smith_normal_form(const IntMatrix& m, int rows, int cols);
inline SmithForm smith_normal_form(const IntMatrix& m) {
  return smith_normal_form(m, static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
/// Exact determinant of a square integer matrix (fraction-free elimination).
std::int64_t determinant(const IntMatrix& m);

/// Z^free_rank + Z/t_1 + ... with t_1 | t_2 | ... and every t_i > 1.
struct FgAbelianGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const FgAbelianGroup&) const = default;
  std::string to_string() const;
};

/// Cokernel of the map Z^cols -> Z^rows given by m.
FgAbelianGroup cokernel(const IntMatrix& m, int rows, int cols);
inline FgAbelianGroup cokernel(const IntMatrix& m) {
  return cokernel(m, static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
}

/// entries[j][i] = multiplicity of the K-irreducible V_j in res_K U_i, over
/// the G-irreducibles U_i occurring in w and the V_j occurring in res_K w.
/// This is the map pi_1(iso_G(w)) -> pi_1(iso_K(w)).
struct Pi1Matrix {
  IntMatrix entries;
  std::vector<int> rows;  // K-irreducible indices
  std::vector<int> cols;  // G-irreducible indices
};

Pi1Matrix pi1_restriction_matrix(const Character& w, const CharacterTable& g_table, const Subgroup& k,
                                 const CharacterTable& k_table, const Tolerances& tol = {});
Pi1Matrix pi1_restriction_matrix(const Character& w, const Subgroup& k, const Tolerances& tol = {});

/// Every irreducible constituent of w restricts irreducibly to k.
bool condition_I(const Character& w, const CharacterTable& g_table, const Subgroup& k,
                 const Tolerances& tol = {});
bool condition_I(const Character& w, const Subgroup& k, const Tolerances& tol = {});

enum class Derivation { Transitive, MultiOrbit };
std::string to_string(Derivation d);

struct Pi1Result {
  FgAbelianGroup group;
  IntMatrix matrix;    // blocks stacked over orbit representatives
  int columns = 0;
  bool condition_I = false;  // at every orbit representative
  Derivation derivation = Derivation::Transitive;
};

/// pi_1 of the component of clutching maps glued to w: the cokernel of the
/// stacked restriction matrices over all orbit representatives.
/// Throws DomainError if w is not an extension of the bundle.
Pi1Result pi1_component(const EquivariantBundle& bundle, const Character& w,
                        const Tolerances& tol = {});

struct SimplyConnectedCertificate {
  bool certified_trivial = false;
  Pi1Result computed;
};

/// Certified trivial when the action is transitive and Condition (I) holds
/// at the stabilizer; the computed cokernel must then agree (checked).
SimplyConnectedCertificate simply_connected_certificate(const EquivariantBundle& bundle,
                                                        const Character& w,
                                                        const Tolerances& tol = {});

}  // namespace clutchlab
