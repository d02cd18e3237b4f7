#pragma once

#include <memory>
#include <string>
#include <vector>

namespace clutchlab {

/// A finite group stored as a full Cayley table with the identity at index 0.
///
/// Construction validates the group axioms and precomputes inverses and
/// conjugacy classes; instances are immutable and shared through GroupPtr.
class FiniteGroup {
 public:
  /// Throws DomainError unless `table` is the Cayley table of a group with
  /// identity 0.
  static std::shared_ptr<const FiniteGroup> from_table(std::string name,
                                                       std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
  std::vector<std::vector<int>> table() const;

  /// Classes sorted by their minimal element; class 0 is {identity}.
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  bool is_abelian() const;

 private:
  FiniteGroup() = default;

  std::string name_;
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Conjugacy classes of `group`, identity class first.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& group);

/// A subgroup given by the sorted element indices of its parent.
/// `group` is the subgroup re-tabulated as a group of its own; its element i
/// is parent element `elements[i]`.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;
  GroupPtr group;

  /// Throws DomainError if `elements` is not closed or lacks the identity.
  static Subgroup make(GroupPtr parent, std::vector<int> elements);
  static Subgroup whole(GroupPtr parent);

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  /// Index of parent element g inside `elements`, or -1.
  int local_index(int g) const;
};

/// A permutation action act[g][x] = g.x on the points 0..base_size-1.
class GroupAction {
 public:
  /// Throws DomainError unless `act` is a homomorphism into Sym(base_size).
  GroupAction(GroupPtr group, int base_size, std::vector<std::vector<int>> act);

  const GroupPtr& group() const { return group_; }
  int base_size() const { return base_size_; }
  int operator()(int g, int x) const { return act_[g][x]; }
  const std::vector<std::vector<int>>& table() const { return act_; }

  bool is_transitive() const;
  bool is_trivial() const;

 private:
  GroupPtr group_;
  int base_size_;
  std::vector<std::vector<int>> act_;
};

struct Orbits {
  std::vector<std::vector<int>> orbits;  // each sorted ascending
  std::vector<int> representatives;      // minimal point of each orbit
  std::vector<int> orbit_of;             // point -> orbit index
};

Orbits orbits(const GroupAction& action);
Subgroup stabilizer(const GroupAction& action, int x);
/// Elements mapping the point set `subset` onto itself.
Subgroup preserving_subgroup(const GroupAction& action, const std::vector<int>& subset);
/// The restriction of `action` to the subgroup `k`, re-indexed over k.group.
GroupAction restrict_action(const GroupAction& action, const Subgroup& k);

}  // namespace clutchlab
