#pragma once

#include <memory>
#include <vector>

#include "clutchlab/group.hpp"
#include "clutchlab/linalg.hpp"
#include "clutchlab/rep.hpp"
#include "clutchlab/report.hpp"

namespace clutchlab {

/// An equivariant complex vector bundle over a finite G-set. The fiber over
/// x is C^ranks[x]; g acts from the fiber over x to the fiber over g.x by
/// the matrix transport(g, x).
class EquivariantBundle {
 public:
  /// Checks shapes only; use validate_bundle for the cocycle identities.
  /// `transport` is indexed g * base_size + x.
  EquivariantBundle(GroupAction action, std::vector<int> ranks, std::vector<CMatrix> transport);

  const GroupAction& action() const { return action_; }
  const GroupPtr& group() const { return action_.group(); }
  int base_size() const { return action_.base_size(); }
  int rank(int x) const { return ranks_[x]; }
  const std::vector<int>& ranks() const { return ranks_; }
  const CMatrix& transport(int g, int x) const { return transport_[g * base_size() + x]; }
  const std::vector<CMatrix>& transport() const { return transport_; }
  bool constant_rank() const;

 private:
  GroupAction action_;
  std::vector<int> ranks_;
  std::vector<CMatrix> transport_;
};

using BundlePtr = std::shared_ptr<const EquivariantBundle>;

/// Same action, ranks and transport (pointer equality short-circuits).
bool same_bundle(const EquivariantBundle& a, const EquivariantBundle& b);

/// Identity, cocycle and invertibility checks; every failing identity is
/// reported with its residual.
ValidationReport validate_bundle(const EquivariantBundle& bundle, const Tolerances& tol = {});

/// g -> transport(g, x) over the stabilizer of x (indexed by its .group).
Representation fiber_representation(const EquivariantBundle& bundle, int x);

struct RestrictedBundle {
  BundlePtr bundle;         // over subgroup.group, base re-indexed to `points`
  Subgroup subgroup;        // G_A inside the original group
  std::vector<int> points;  // sorted A; new point i is points[i]
};

/// E_A: the bundle over A with the action of the subgroup preserving A.
RestrictedBundle restrict_bundle(const EquivariantBundle& bundle, std::vector<int> subset);

/// Every fiber is the space of w and transport(g, x) = w(g).
EquivariantBundle pullback_bundle(const Representation& w, const GroupAction& action);

}  // namespace clutchlab
