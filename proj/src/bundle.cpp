#include "clutchlab/bundle.hpp"

#include <algorithm>
#include <string>

#include "clutchlab/errors.hpp"
#include "clutchlab/kernels.hpp"

namespace clutchlab {

EquivariantBundle::EquivariantBundle(GroupAction action, std::vector<int> ranks,
                                     std::vector<CMatrix> transport)
    : action_(std::move(action)), ranks_(std::move(ranks)), transport_(std::move(transport)) {
  const int n = action_.base_size();
  if (static_cast<int>(ranks_.size()) != n) throw DomainError("bundle needs one rank per point");
  for (int r : ranks_)
    if (r < 0) throw DomainError("negative fiber rank");
  if (static_cast<int>(transport_.size()) != group()->order() * n)
    throw DomainError("bundle needs one transport matrix per (element, point)");
  for (int g = 0; g < group()->order(); ++g)
    for (int x = 0; x < n; ++x) {
      const auto& m = this->transport(g, x);
      if (m.rows() != ranks_[action_(g, x)] || m.cols() != ranks_[x])
        throw DomainError("transport matrix (" + std::to_string(g) + "," + std::to_string(x) +
                          ") has wrong shape");
    }
}

bool EquivariantBundle::constant_rank() const {
  return std::all_of(ranks_.begin(), ranks_.end(), [&](int r) { return r == ranks_.front(); });
}

bool same_bundle(const EquivariantBundle& a, const EquivariantBundle& b) {
  if (&a == &b) return true;
  if (a.group()->table() != b.group()->table() || a.action().table() != b.action().table() ||
      a.ranks() != b.ranks())
    return false;
  for (size_t i = 0; i < a.transport().size(); ++i)
    if (a.transport()[i] != b.transport()[i]) return false;
  return true;
}

ValidationReport validate_bundle(const EquivariantBundle& bundle, const Tolerances& tol) {
  ValidationReport report;
  const int n = bundle.base_size();
  const int order = bundle.group()->order();
  auto note = [&](std::string kind, std::vector<int> where, double r) {
    report.worst_residual = std::max(report.worst_residual, r);
    if (r > tol.eps_mat) report.violations.push_back({std::move(kind), std::move(where), r});
  };
  for (int x = 0; x < n; ++x) note("identity", {x}, rel_residual(bundle.transport(0, x), identity(bundle.rank(x))));
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < n; ++x) {
      const double s = smallest_singular_value(bundle.transport(g, x));
      if (s <= tol.eps_sing) report.violations.push_back({"invertibility", {g, x}, s});
    }
  const auto cocycle = kernels::omp::cocycle_residuals(bundle);
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      for (int x = 0; x < n; ++x) note("cocycle", {g, h, x}, cocycle[(g * order + h) * n + x]);
  return report;
}

Representation fiber_representation(const EquivariantBundle& bundle, int x) {
  if (x < 0 || x >= bundle.base_size()) throw DomainError("point out of range");
  const Subgroup stab = stabilizer(bundle.action(), x);
  Representation rep{stab.group, bundle.rank(x), {}};
  for (int g : stab.elements) rep.mats.push_back(bundle.transport(g, x));
  return rep;
}

RestrictedBundle restrict_bundle(const EquivariantBundle& bundle, std::vector<int> subset) {
  if (subset.empty()) throw DomainError("cannot restrict to an empty point set");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  Subgroup k = preserving_subgroup(bundle.action(), subset);
  std::vector<int> local(bundle.base_size(), -1);
  for (size_t i = 0; i < subset.size(); ++i) local[subset[i]] = static_cast<int>(i);

  const int m = static_cast<int>(subset.size());
  std::vector<std::vector<int>> act;
  std::vector<CMatrix> transport;
  for (int g : k.elements) {
    std::vector<int> row(m);
    for (int i = 0; i < m; ++i) {
      row[i] = local[bundle.action()(g, subset[i])];
      transport.push_back(bundle.transport(g, subset[i]));
    }
    act.push_back(std::move(row));
  }
  std::vector<int> ranks;
  for (int x : subset) ranks.push_back(bundle.rank(x));
  auto restricted = std::make_shared<const EquivariantBundle>(
      GroupAction(k.group, m, std::move(act)), std::move(ranks), std::move(transport));
  return {std::move(restricted), std::move(k), std::move(subset)};
}

EquivariantBundle pullback_bundle(const Representation& w, const GroupAction& action) {
  if (w.group->table() != action.group()->table())
    throw DomainError("representation and action are over different groups");
  const int n = action.base_size();
  std::vector<CMatrix> transport;
  for (int g = 0; g < w.group->order(); ++g)
    for (int x = 0; x < n; ++x) transport.push_back(w.mats[g]);
  return EquivariantBundle(action, std::vector<int>(n, w.dim), std::move(transport));
}

}  // namespace clutchlab
