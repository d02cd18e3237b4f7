#include "clutchlab/homotopy.hpp"

#include <cmath>

#include "clutchlab/errors.hpp"
#include "clutchlab/extensions.hpp"

namespace clutchlab {

namespace {

int rounded_inner_product(const Character& a, const Character& b, const Tolerances& tol) {
  const Complex ip = inner_product(a, b);
  const double r = std::round(ip.real());
  if (std::abs(ip - Complex(r)) > tol.eps_char || r < 0)
    throw DomainError("restriction multiplicity is not a nonnegative integer");
  return static_cast<int>(r);
}

}  // namespace

Pi1Matrix pi1_restriction_matrix(const Character& w, const CharacterTable& g_table, const Subgroup& k,
                                 const CharacterTable& k_table, const Tolerances& tol) {
  if (k.parent->table() != w.group->table()) throw DomainError("subgroup of a different group");
  Pi1Matrix out;
  out.cols = multiplicities(w, g_table, tol).irreducibles;
  out.rows = multiplicities(restrict_character(w, k), k_table, tol).irreducibles;
  for (int j : out.rows) {
    std::vector<std::int64_t> row;
    for (int i : out.cols)
      row.push_back(rounded_inner_product(restrict_character(g_table.rows[i], k), k_table.rows[j], tol));
    out.entries.push_back(std::move(row));
  }
  return out;
}

Pi1Matrix pi1_restriction_matrix(const Character& w, const Subgroup& k, const Tolerances& tol) {
  return pi1_restriction_matrix(w, character_table(w.group, 0, tol), k,
                                character_table(k.group, 0, tol), tol);
}

bool condition_I(const Character& w, const CharacterTable& g_table, const Subgroup& k,
                 const Tolerances& tol) {
  for (int i : multiplicities(w, g_table, tol).irreducibles) {
    const auto res = restrict_character(g_table.rows[i], k);
    if (rounded_inner_product(res, res, tol) != 1) return false;
  }
  return true;
}

bool condition_I(const Character& w, const Subgroup& k, const Tolerances& tol) {
  return condition_I(w, character_table(w.group, 0, tol), k, tol);
}

std::string to_string(Derivation d) {
  return d == Derivation::Transitive ? "paper-transitive" : "derived-multi-orbit";
}

Pi1Result pi1_component(const EquivariantBundle& bundle, const Character& w, const Tolerances& tol) {
  if (!is_extension(w, bundle, tol)) throw DomainError("representation is not an extension of the bundle");
  const auto g_table = character_table(bundle.group(), 0, tol);
  const auto reps = orbits(bundle.action()).representatives;
  Pi1Result out;
  out.derivation = reps.size() == 1 ? Derivation::Transitive : Derivation::MultiOrbit;
  out.condition_I = true;
  for (int s : reps) {
    const Subgroup stab = stabilizer(bundle.action(), s);
    const auto k_table = character_table(stab.group, 0, tol);
    auto block = pi1_restriction_matrix(w, g_table, stab, k_table, tol);
    out.columns = static_cast<int>(block.cols.size());
    for (auto& row : block.entries) out.matrix.push_back(std::move(row));
    out.condition_I = out.condition_I && condition_I(w, g_table, stab, tol);
  }
  out.group = cokernel(out.matrix, static_cast<int>(out.matrix.size()), out.columns);
  return out;
}

SimplyConnectedCertificate simply_connected_certificate(const EquivariantBundle& bundle,
                                                        const Character& w, const Tolerances& tol) {
  SimplyConnectedCertificate cert;
  cert.computed = pi1_component(bundle, w, tol);
  cert.certified_trivial = bundle.action().is_transitive() && cert.computed.condition_I;
  if (cert.certified_trivial && !cert.computed.group.is_trivial())
    throw NumericalError("Condition (I) holds but the computed fundamental group is " +
                         cert.computed.group.to_string());
  return cert;
}

}  // namespace clutchlab
