#include "clutchlab/extensions.hpp"

#include <functional>
#include <string>

#include "clutchlab/errors.hpp"

namespace clutchlab {

ExtensionClass extension_class(const Character& chi, const CharacterTable& table,
                               const Tolerances& tol) {
  return extension_class(multiplicity_vector(chi, table, tol), table);
}

ExtensionClass extension_class(const std::vector<int>& multiplicities, const CharacterTable& table) {
  if (multiplicities.size() != table.rows.size())
    throw DomainError("multiplicity vector does not match the character table");
  ExtensionClass w{multiplicities, character_from_multiplicities(multiplicities, table), 0};
  for (size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] < 0) throw DomainError("negative multiplicity");
    w.dim += multiplicities[i] * table.dims[i];
  }
  return w;
}

Representation realize(const ExtensionClass& w, const std::vector<Representation>& irreps) {
  if (w.multiplicities.size() != irreps.size())
    throw DomainError("multiplicity vector does not match the irreducibles");
  Representation rep{irreps.front().group, 0, std::vector<CMatrix>(irreps.front().mats.size(), CMatrix(0, 0))};
  for (size_t i = 0; i < irreps.size(); ++i)
    for (int k = 0; k < w.multiplicities[i]; ++k) rep = direct_sum(rep, irreps[i]);
  return rep;
}

bool is_extension(const Character& w, const EquivariantBundle& bundle, const Tolerances& tol) {
  if (w.group->table() != bundle.group()->table())
    throw DomainError("representation and bundle are over different groups");
  for (int s : orbits(bundle.action()).representatives) {
    const auto fiber = character_of(fiber_representation(bundle, s));
    const auto res = restrict_character(w, stabilizer(bundle.action(), s));
    if (max_abs_difference(fiber, res) > tol.eps_char) return false;
  }
  return true;
}

bool is_extension(const Representation& w, const EquivariantBundle& bundle, const Tolerances& tol) {
  return is_extension(character_of(w), bundle, tol);
}

std::vector<ExtensionClass> enumerate_extensions(const EquivariantBundle& bundle,
                                                 const CharacterTable& table,
                                                 const Tolerances& tol) {
  if (!bundle.constant_rank()) throw DomainError("extensions need fibers of constant rank");
  const int rank = bundle.rank(0);
  std::vector<ExtensionClass> out;
  std::vector<int> mult(table.rows.size(), 0);
  std::function<void(size_t, int)> search = [&](size_t i, int remaining) {
    if (i == mult.size()) {
      if (remaining != 0) return;
      auto w = extension_class(mult, table);
      if (is_extension(w.character, bundle, tol)) out.push_back(std::move(w));
      return;
    }
    for (int k = 0; k * table.dims[i] <= remaining; ++k) {
      mult[i] = k;
      search(i + 1, remaining - k * table.dims[i]);
    }
    mult[i] = 0;
  };
  search(0, rank);
  return out;
}

std::vector<CMatrix> build_fiberwise_iso(const EquivariantBundle& bundle, const Representation& w,
                                         std::uint64_t seed, const Tolerances& tol) {
  if (!is_extension(w, bundle, tol)) throw DomainError("representation is not an extension of the bundle");
  const auto& action = bundle.action();
  const auto& group = *bundle.group();
  const auto orb = orbits(action);
  std::vector<CMatrix> p(bundle.base_size());
  for (size_t o = 0; o < orb.orbits.size(); ++o) {
    const int s = orb.representatives[o];
    const Subgroup stab = stabilizer(action, s);
    const CMatrix r = random_intertwiner(fiber_representation(bundle, s), restrict_rep(w, stab),
                                         seed + o, tol);
    std::vector<char> placed(bundle.base_size(), 0);
    for (int g = 0; g < group.order(); ++g) {
      const int x = action(g, s);
      CMatrix candidate = w.mats[g] * r * bundle.transport(g, s).inverse();
      if (!placed[x]) {
        // g is the minimal element carrying s to x.
        p[x] = std::move(candidate);
        placed[x] = 1;
      } else if (rel_residual(candidate, p[x]) > tol.eps_mat) {
        throw NumericalError("fiberwise isomorphism depends on the coset representative at point " +
                             std::to_string(x));
      }
    }
  }
  const double res = fiberwise_equivariance_residual(bundle, w, p);
  if (res > tol.eps_mat)
    throw NumericalError("fiberwise isomorphism is not equivariant (residual " + std::to_string(res) + ")");
  return p;
}

PointwiseClutchingMap component_representative(const BundlePtr& bundle, const Representation& w,
                                               std::uint64_t seed, const Tolerances& tol) {
  const auto p = build_fiberwise_iso(*bundle, w, seed, tol);
  return clutch_from_fiberwise_iso(bundle, w, p, tol);
}

ExtensionClass gl(const PointwiseClutchingMap& psi, const CharacterTable& table,
                  const Tolerances& tol) {
  return extension_class(character_of(glued_representation(psi, 0, tol).rep), table, tol);
}

std::vector<Component> pi0(const BundlePtr& bundle, const CharacterTable& table,
                           const std::vector<Representation>& irreps, std::uint64_t seed,
                           const Tolerances& tol) {
  std::vector<Component> out;
  const auto classes = enumerate_extensions(*bundle, table, tol);
  for (size_t i = 0; i < classes.size(); ++i) {
    const auto w = realize(classes[i], irreps);
    out.push_back({classes[i], component_representative(bundle, w, seed + i, tol)});
  }
  return out;
}

bool same_component(const PointwiseClutchingMap& a, const PointwiseClutchingMap& b,
                    const CharacterTable& table, const Tolerances& tol) {
  if (!same_bundle(*a.bundle(), *b.bundle()))
    throw DomainError("clutching maps belong to different bundles");
  return gl(a, table, tol) == gl(b, table, tol);
}

}  // namespace clutchlab
