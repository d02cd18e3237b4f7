#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the library routine they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "clutchlab/bundle.hpp"
#include "clutchlab/group.hpp"
#include "clutchlab/homotopy.hpp"
#include "clutchlab/rep.hpp"

namespace oracle {

using clutchlab::FiniteGroup;
using clutchlab::GroupAction;
using clutchlab::IntMatrix;

/// Orbit of x by repeatedly applying every element until nothing new appears.
inline std::set<int> orbit(const GroupAction& action, int x) {
  std::set<int> seen{x};
  std::vector<int> frontier{x};
  while (!frontier.empty()) {
    const int y = frontier.back();
    frontier.pop_back();
    for (int g = 0; g < action.group()->order(); ++g)
      if (seen.insert(action(g, y)).second) frontier.push_back(action(g, y));
  }
  return seen;
}

/// Class sizes from centralizer orders |G| / |C(h)|, sorted by first element.
inline std::vector<int> class_sizes(const FiniteGroup& g) {
  std::vector<int> sizes;
  std::vector<char> done(g.order(), 0);
  for (int h = 0; h < g.order(); ++h) {
    if (done[h]) continue;
    int centralizer = 0;
    for (int x = 0; x < g.order(); ++x)
      if (g.mul(x, h) == g.mul(h, x)) ++centralizer;
    for (int x = 0; x < g.order(); ++x) done[g.mul(g.mul(x, h), g.inv(x))] = 1;
    sizes.push_back(g.order() / centralizer);
  }
  return sizes;
}

/// Order of the derived subgroup, by closing the set of commutators.
inline int derived_subgroup_order(const FiniteGroup& g) {
  std::set<int> sub{0};
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) sub.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<int> cur(sub.begin(), sub.end());
    for (int a : cur)
      for (int b : cur)
        if (sub.insert(g.mul(a, b)).second) grew = true;
  }
  return static_cast<int>(sub.size());
}

/// Degrees of the irreducibles forced by: k = number of classes,
/// |G/G'| linear characters, sum of squares |G|, every degree dividing |G|.
/// Returns every admissible sorted multiset (callers expect exactly one).
inline std::vector<std::vector<int>> admissible_degrees(const FiniteGroup& g) {
  const int k = static_cast<int>(class_sizes(g).size());
  const int linear = g.order() / derived_subgroup_order(g);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(linear, 1);
  std::function<void(int, int)> rec = [&](int min_d, int remaining) {
    if (static_cast<int>(cur.size()) == k) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int d = min_d; d * d <= remaining; ++d) {
      if (g.order() % d) continue;
      cur.push_back(d);
      rec(d, remaining - d * d);
      cur.pop_back();
    }
  };
  rec(2, g.order() - linear);
  return out;
}

inline std::int64_t gcd_all(const std::vector<std::int64_t>& v) {
  std::int64_t r = 0;
  for (auto x : v) r = std::gcd(r, x < 0 ? -x : x);
  return r;
}

inline std::int64_t minor_det(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) return 1;
  // Laplace expansion along the first row.
  std::int64_t det = 0;
  for (int j = 0; j < k; ++j) {
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols;
    for (int c = 0; c < k; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    const std::int64_t term = m[rows[0]][cols[j]] * minor_det(m, sub_rows, sub_cols);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

inline void subsets(int n, int k, std::vector<std::vector<int>>& out, std::vector<int>& cur, int start = 0) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

/// Invariant factors from determinantal divisors: d_k = gcd of k x k minors,
/// s_k = d_k / d_{k-1}. Zero factors are dropped.
inline std::vector<std::int64_t> invariant_factors(const IntMatrix& m, int rows, int cols) {
  std::vector<std::int64_t> factors;
  std::int64_t prev = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(rows, k, rs, cur);
    subsets(cols, k, cs, cur);
    std::vector<std::int64_t> minors;
    for (const auto& r : rs)
      for (const auto& c : cs) minors.push_back(minor_det(m, r, c));
    const std::int64_t dk = gcd_all(minors);
    if (dk == 0) break;
    factors.push_back(dk / prev);
    prev = dk;
  }
  return factors;
}

/// Cokernel of Z^cols -> Z^rows via determinantal divisors.
inline clutchlab::FgAbelianGroup cokernel(const IntMatrix& m, int rows, int cols) {
  const auto factors = invariant_factors(m, rows, cols);
  clutchlab::FgAbelianGroup g;
  g.free_rank = rows - static_cast<int>(factors.size());
  for (auto f : factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

using Pair = std::pair<int, int>;

/// Delta u B' u B'B' u ... with B' = G.B u G.B^-1, iterating the union of
/// powers until it stops growing.
inline std::set<Pair> closure_by_powers(const GroupAction& action, const std::set<Pair>& b) {
  const int n = action.base_size();
  std::set<Pair> prime;
  for (int g = 0; g < action.group()->order(); ++g)
    for (const auto& [x, y] : b) {
      prime.insert({action(g, x), action(g, y)});
      prime.insert({action(g, y), action(g, x)});
    }
  std::set<Pair> result;
  for (int x = 0; x < n; ++x) result.insert({x, x});
  std::set<Pair> power = prime;  // B'^k
  while (true) {
    const size_t before = result.size();
    result.insert(power.begin(), power.end());
    std::set<Pair> next;
    for (const auto& [x, y] : power)
      for (const auto& [y2, z] : prime)
        if (y2 == y) next.insert({x, z});
    if (result.size() == before && std::includes(result.begin(), result.end(), next.begin(), next.end())) break;
    power = std::move(next);
  }
  return result;
}

/// Checks reflexivity, symmetry, transitivity and G-invariance directly.
inline bool is_equivariant_equivalence(const GroupAction& action, const std::set<Pair>& r) {
  const int n = action.base_size();
  for (int x = 0; x < n; ++x)
    if (!r.count({x, x})) return false;
  for (const auto& [x, y] : r) {
    if (!r.count({y, x})) return false;
    for (int g = 0; g < action.group()->order(); ++g)
      if (!r.count({action(g, x), action(g, y)})) return false;
    for (int z = 0; z < n; ++z)
      if (r.count({y, z}) && !r.count({x, z})) return false;
  }
  return true;
}

/// Relabels a group by a random permutation fixing the identity.
inline std::shared_ptr<const FiniteGroup> relabel(const FiniteGroup& g, std::mt19937_64& rng,
                                                  std::vector<int>* perm_out = nullptr) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<std::vector<int>> table(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) table[perm[a]][perm[b]] = perm[g.mul(a, b)];
  if (perm_out) *perm_out = perm;
  return FiniteGroup::from_table(g.name() + "_relabelled", std::move(table));
}

/// Every multiplicity vector over the table rows of total degree r whose
/// character agrees with the fiber trace of every stabilizer element at
/// every point. Stabilizers are found by scanning the whole group.
inline std::vector<std::vector<int>> extensions(const clutchlab::EquivariantBundle& bundle,
                                                const clutchlab::CharacterTable& table) {
  const auto& action = bundle.action();
  const int order = action.group()->order();
  const int r = bundle.rank(0);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(table.size(), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == table.size()) {
      if (left != 0) return;
      for (int x = 0; x < bundle.base_size(); ++x)
        for (int g = 0; g < order; ++g) {
          if (action(g, x) != x) continue;
          clutchlab::Complex chi = 0.0;
          for (int k = 0; k < table.size(); ++k) chi += static_cast<double>(cur[k]) * table.rows[k].at(g);
          if (std::abs(chi - bundle.transport(g, x).trace()) > 1e-6) return;
        }
      out.push_back(cur);
      return;
    }
    for (int n = 0; n * table.dims[i] <= left; ++n) {
      cur[i] = n;
      rec(i + 1, left - n * table.dims[i]);
    }
    cur[i] = 0;
  };
  rec(0, r);
  return out;
}

/// Every action of g on n points, by trying all permutation images of a
/// greedy generating set and keeping the assignments that extend to a
/// well-defined homomorphism.
inline std::vector<GroupAction> all_actions(const std::shared_ptr<const FiniteGroup>& g, int n) {
  const int order = g->order();
  std::vector<int> gens;
  std::set<int> generated{0};
  while (static_cast<int>(generated.size()) < order) {
    int pick = 0;
    while (generated.count(pick)) ++pick;
    gens.push_back(pick);
    std::vector<int> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      const int e = frontier.back();
      frontier.pop_back();
      for (int s : gens)
        if (generated.insert(g->mul(s, e)).second) frontier.push_back(g->mul(s, e));
    }
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<GroupAction> out;
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    std::vector<std::vector<int>> img(order);
    img[0] = perms[0];
    std::vector<int> frontier{0};
    bool ok = true;
    while (ok && !frontier.empty()) {
      const int e = frontier.back();
      frontier.pop_back();
      for (size_t k = 0; k < gens.size() && ok; ++k) {
        const int se = g->mul(gens[k], e);
        std::vector<int> m(n);
        for (int x = 0; x < n; ++x) m[x] = perms[choice[k]][img[e][x]];
        if (img[se].empty()) {
          img[se] = m;
          frontier.push_back(se);
        } else if (img[se] != m) {
          ok = false;
        }
      }
    }
    if (ok) {
      try {
        out.emplace_back(g, n, img);
      } catch (const std::exception&) {
      }
    }
    size_t k = 0;
    while (k < choice.size() && ++choice[k] == static_cast<int>(perms.size())) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

}  // namespace oracle
