#include "clutchlab/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "clutchlab/errors.hpp"

namespace clutchlab {

namespace {

bool is_permutation_of_range(const std::vector<int>& row, int n) {
  if (static_cast<int>(row.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : row) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::string name, std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw DomainError("group table is empty");
  for (int a = 0; a < n; ++a) {
    if (!is_permutation_of_range(table[a], n))
      throw DomainError("group table row " + std::to_string(a) + " is not a permutation");
    if (table[0][a] != a || table[a][0] != a)
      throw DomainError("index 0 is not the identity");
  }
  for (int b = 0; b < n; ++b) {
    std::vector<int> col(n);
    for (int a = 0; a < n; ++a) col[a] = table[a][b];
    if (!is_permutation_of_range(col, n))
      throw DomainError("group table column " + std::to_string(b) + " is not a permutation");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw DomainError("group table is not associative at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->order_ = n;
  g->table_.resize(static_cast<size_t>(n) * n);
  g->inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      g->table_[a * n + b] = table[a][b];
      if (table[a][b] == 0) g->inverse_[a] = b;
    }
  g->classes_ = conjugacy_classes(*g);
  g->class_of_.assign(n, -1);
  for (int c = 0; c < g->num_classes(); ++c)
    for (int e : g->classes_[c]) g->class_of_[e] = c;
  return g;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& group) {
  const int n = group.order();
  std::vector<char> assigned(n, 0);
  std::vector<std::vector<int>> classes;
  for (int h = 0; h < n; ++h) {
    if (assigned[h]) continue;
    std::set<int> cls;
    for (int g = 0; g < n; ++g) cls.insert(group.conj(g, h));
    for (int e : cls) assigned[e] = 1;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

Subgroup Subgroup::make(GroupPtr parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0)
    throw DomainError("subgroup does not contain the identity");
  const int k = static_cast<int>(elements.size());
  std::vector<int> local(parent->order(), -1);
  for (int i = 0; i < k; ++i) {
    if (elements[i] < 0 || elements[i] >= parent->order())
      throw DomainError("subgroup element out of range");
    local[elements[i]] = i;
  }
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int prod = local[parent->mul(elements[i], elements[j])];
      if (prod < 0) throw DomainError("element set is not closed under multiplication");
      table[i][j] = prod;
    }
  Subgroup s;
  s.group = FiniteGroup::from_table(parent->name() + "_sub", std::move(table));
  s.parent = std::move(parent);
  s.elements = std::move(elements);
  return s;
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return make(std::move(parent), std::move(all));
}

bool Subgroup::contains(int g) const { return local_index(g) >= 0; }

int Subgroup::local_index(int g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) return -1;
  return static_cast<int>(it - elements.begin());
}

GroupAction::GroupAction(GroupPtr group, int base_size, std::vector<std::vector<int>> act)
    : group_(std::move(group)), base_size_(base_size), act_(std::move(act)) {
  const int n = group_->order();
  if (base_size_ < 1) throw DomainError("action base set must be nonempty");
  if (static_cast<int>(act_.size()) != n)
    throw DomainError("action needs one row per group element");
  for (int g = 0; g < n; ++g)
    if (!is_permutation_of_range(act_[g], base_size_))
      throw DomainError("action row " + std::to_string(g) + " is not a permutation");
  for (int x = 0; x < base_size_; ++x)
    if (act_[0][x] != x) throw DomainError("identity does not act trivially");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int x = 0; x < base_size_; ++x)
        if (act_[group_->mul(g, h)][x] != act_[g][act_[h][x]])
          throw DomainError("action is not compatible with the group law");
}

bool GroupAction::is_transitive() const { return orbits(*this).orbits.size() == 1; }

bool GroupAction::is_trivial() const {
  for (const auto& row : act_)
    for (int x = 0; x < base_size_; ++x)
      if (row[x] != x) return false;
  return true;
}

Orbits orbits(const GroupAction& action) {
  const int n_points = action.base_size();
  Orbits out;
  out.orbit_of.assign(n_points, -1);
  for (int x = 0; x < n_points; ++x) {
    if (out.orbit_of[x] >= 0) continue;
    std::set<int> orb;
    for (int g = 0; g < action.group()->order(); ++g) orb.insert(action(g, x));
    const int idx = static_cast<int>(out.orbits.size());
    for (int y : orb) out.orbit_of[y] = idx;
    out.orbits.emplace_back(orb.begin(), orb.end());
    out.representatives.push_back(x);
  }
  return out;
}

Subgroup stabilizer(const GroupAction& action, int x) {
  if (x < 0 || x >= action.base_size()) throw DomainError("point out of range");
  std::vector<int> elems;
  for (int g = 0; g < action.group()->order(); ++g)
    if (action(g, x) == x) elems.push_back(g);
  return Subgroup::make(action.group(), std::move(elems));
}

Subgroup preserving_subgroup(const GroupAction& action, const std::vector<int>& subset) {
  if (subset.empty()) throw DomainError("point set must be nonempty");
  std::vector<char> in(action.base_size(), 0);
  for (int x : subset) {
    if (x < 0 || x >= action.base_size()) throw DomainError("point out of range");
    in[x] = 1;
  }
  std::vector<int> elems;
  for (int g = 0; g < action.group()->order(); ++g) {
    bool keeps = true;
    for (int x : subset)
      if (!in[action(g, x)]) {
        keeps = false;
        break;
      }
    if (keeps) elems.push_back(g);
  }
  return Subgroup::make(action.group(), std::move(elems));
}

GroupAction restrict_action(const GroupAction& action, const Subgroup& k) {
  std::vector<std::vector<int>> act;
  act.reserve(k.elements.size());
  for (int g : k.elements) act.push_back(action.table()[g]);
  return GroupAction(k.group, action.base_size(), std::move(act));
}

}  // namespace clutchlab
