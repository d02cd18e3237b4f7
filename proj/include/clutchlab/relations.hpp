#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clutchlab/bundle.hpp"
#include "clutchlab/clutch.hpp"
#include "clutchlab/errors.hpp"

namespace clutchlab {

using PointPair = std::pair<int, int>;

struct BinaryRelation {
  int base_size = 0;
  std::set<PointPair> pairs;

  bool contains(int x, int y) const { return pairs.count({x, y}) > 0; }
  bool operator==(const BinaryRelation&) const = default;
};

BinaryRelation make_relation(int base_size, const std::vector<PointPair>& pairs);
BinaryRelation diagonal(int base_size);
BinaryRelation full_relation(int base_size);

BinaryRelation rel_inverse(const BinaryRelation& b);
/// {(x, x'') : (x, x') in b and (x', x'') in b_after for some x'}.
BinaryRelation rel_compose(const BinaryRelation& b_after, const BinaryRelation& b);
BinaryRelation rel_saturate(const GroupAction& action, const BinaryRelation& b);
BinaryRelation rel_union(const BinaryRelation& a, const BinaryRelation& b);

/// The smallest reflexive, symmetric, transitive, G-invariant relation
/// containing b (worklist fixpoint).
BinaryRelation equivariant_closure(const GroupAction& action, const BinaryRelation& b);
/// Whether clutching data on b determines an equivariant clutching map.
bool determines_all(const GroupAction& action, const BinaryRelation& b);

/// Matrices on exactly the pairs of a relation.
struct PartialClutchData {
  BinaryRelation relation;
  std::map<PointPair, CMatrix> values;
};

PartialClutchData evaluate(const PointwiseClutchingMap& psi, const BinaryRelation& b);

/// Raised by reconstruct when two derivations of one entry disagree.
class InconsistentDataError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Propagates the data over the equivariant closure of its relation by
/// reflexivity, inversion, composition and the group action, checking every
/// re-derivation for consistency. Throws DomainError if the relation does
/// not determine all pairs and InconsistentDataError on a conflict.
PointwiseClutchingMap reconstruct(const BundlePtr& bundle, const PartialClutchData& data,
                                  const Tolerances& tol = {});

struct RestrictedClutch {
  RestrictedBundle restricted;
  PointwiseClutchingMap psi;
  /// max |res_K(glued psi) - glued(restricted psi)| over K's classes, both
  /// glued at the smallest point of the subset.
  double character_residual = 0.0;
};

/// Restriction of an equivariant clutching map to A x A over the subgroup
/// preserving A.
RestrictedClutch restrict_clutch(const PointwiseClutchingMap& psi, const std::vector<int>& subset,
                                 const Tolerances& tol = {});

}  // namespace clutchlab
