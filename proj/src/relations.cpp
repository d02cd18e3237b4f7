#include "clutchlab/relations.hpp"

#include <deque>
#include <optional>
#include <sstream>

#include "clutchlab/errors.hpp"

namespace clutchlab {

namespace {

void check_pair(int base_size, const PointPair& p) {
  if (p.first < 0 || p.first >= base_size || p.second < 0 || p.second >= base_size)
    throw DomainError("relation pair out of range");
}

void require_same_base(const BinaryRelation& a, const BinaryRelation& b) {
  if (a.base_size != b.base_size) throw DomainError("relations over different base sets");
}

std::string pair_string(const PointPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

BinaryRelation make_relation(int base_size, const std::vector<PointPair>& pairs) {
  BinaryRelation b{base_size, {}};
  for (const auto& p : pairs) {
    check_pair(base_size, p);
    b.pairs.insert(p);
  }
  return b;
}

BinaryRelation diagonal(int base_size) {
  BinaryRelation b{base_size, {}};
  for (int x = 0; x < base_size; ++x) b.pairs.insert({x, x});
  return b;
}

BinaryRelation full_relation(int base_size) {
  BinaryRelation b{base_size, {}};
  for (int x = 0; x < base_size; ++x)
    for (int y = 0; y < base_size; ++y) b.pairs.insert({x, y});
  return b;
}

BinaryRelation rel_inverse(const BinaryRelation& b) {
  BinaryRelation out{b.base_size, {}};
  for (const auto& [x, y] : b.pairs) out.pairs.insert({y, x});
  return out;
}

BinaryRelation rel_compose(const BinaryRelation& b_after, const BinaryRelation& b) {
  require_same_base(b_after, b);
  BinaryRelation out{b.base_size, {}};
  for (const auto& [x, y] : b.pairs)
    for (auto it = b_after.pairs.lower_bound({y, 0}); it != b_after.pairs.end() && it->first == y; ++it)
      out.pairs.insert({x, it->second});
  return out;
}

BinaryRelation rel_saturate(const GroupAction& action, const BinaryRelation& b) {
  if (action.base_size() != b.base_size) throw DomainError("relation and action over different base sets");
  BinaryRelation out{b.base_size, {}};
  for (int g = 0; g < action.group()->order(); ++g)
    for (const auto& [x, y] : b.pairs) out.pairs.insert({action(g, x), action(g, y)});
  return out;
}

BinaryRelation rel_union(const BinaryRelation& a, const BinaryRelation& b) {
  require_same_base(a, b);
  BinaryRelation out = a;
  out.pairs.insert(b.pairs.begin(), b.pairs.end());
  return out;
}

BinaryRelation equivariant_closure(const GroupAction& action, const BinaryRelation& b) {
  const int n = b.base_size;
  if (action.base_size() != n) throw DomainError("relation and action over different base sets");
  std::vector<char> in(static_cast<size_t>(n) * n, 0);
  std::deque<PointPair> work;
  auto add = [&](int x, int y) {
    if (in[x * n + y]) return;
    in[x * n + y] = 1;
    work.emplace_back(x, y);
  };
  for (int x = 0; x < n; ++x) add(x, x);
  for (const auto& [x, y] : b.pairs) add(x, y);
  while (!work.empty()) {
    const auto [x, y] = work.front();
    work.pop_front();
    add(y, x);
    for (int g = 0; g < action.group()->order(); ++g) add(action(g, x), action(g, y));
    for (int z = 0; z < n; ++z) {
      if (in[y * n + z]) add(x, z);
      if (in[z * n + x]) add(z, y);
    }
  }
  BinaryRelation out{n, {}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (in[x * n + y]) out.pairs.insert({x, y});
  return out;
}

bool determines_all(const GroupAction& action, const BinaryRelation& b) {
  return equivariant_closure(action, b).pairs.size() ==
         static_cast<size_t>(b.base_size) * static_cast<size_t>(b.base_size);
}

PartialClutchData evaluate(const PointwiseClutchingMap& psi, const BinaryRelation& b) {
  if (b.base_size != psi.base_size()) throw DomainError("relation and clutching map over different base sets");
  PartialClutchData data{b, {}};
  for (const auto& p : b.pairs) data.values.emplace(p, psi(p.first, p.second));
  return data;
}

namespace {

struct Derived {
  CMatrix value;
  std::string how;
};

}  // namespace

PointwiseClutchingMap reconstruct(const BundlePtr& bundle, const PartialClutchData& data,
                                  const Tolerances& tol) {
  const auto& action = bundle->action();
  const int n = bundle->base_size();
  if (data.relation.base_size != n) throw DomainError("data and bundle over different base sets");
  if (!bundle->constant_rank()) throw DomainError("clutching map needs fibers of equal rank at every point");
  for (const auto& p : data.relation.pairs) {
    auto it = data.values.find(p);
    if (it == data.values.end()) throw DomainError("no value for pair " + pair_string(p));
    if (it->second.rows() != bundle->rank(p.second) || it->second.cols() != bundle->rank(p.first))
      throw DomainError("value at pair " + pair_string(p) + " has wrong shape");
    if (smallest_singular_value(it->second) <= tol.eps_sing)
      throw DomainError("value at pair " + pair_string(p) + " is singular");
  }
  if (!determines_all(action, data.relation))
    throw DomainError("relation does not determine the clutching map");

  std::vector<std::optional<Derived>> known(static_cast<size_t>(n) * n);
  std::deque<PointPair> work;
  auto offer = [&](int x, int y, CMatrix value, std::string how) {
    auto& slot = known[x * n + y];
    if (!slot) {
      slot = Derived{std::move(value), std::move(how)};
      work.emplace_back(x, y);
      return;
    }
    const double r = rel_residual(value, slot->value);
    if (r > tol.eps_mat) {
      std::ostringstream msg;
      msg << "inconsistent data at pair " << pair_string({x, y}) << ": " << slot->how << " disagrees with "
          << how << " (residual " << r << ")";
      throw InconsistentDataError(msg.str());
    }
  };

  // Seeds in lexicographic order: the diagonal, then the data.
  std::set<PointPair> seeds = data.relation.pairs;
  for (int x = 0; x < n; ++x) seeds.insert({x, x});
  for (const auto& p : seeds) {
    if (p.first == p.second)
      offer(p.first, p.second, identity(bundle->rank(p.first)), "reflexivity at " + pair_string(p));
    if (data.relation.contains(p.first, p.second))
      offer(p.first, p.second, data.values.at(p), "data at " + pair_string(p));
  }

  while (!work.empty()) {
    const auto [x, y] = work.front();
    work.pop_front();
    const CMatrix m = known[x * n + y]->value;
    const std::string tag = pair_string({x, y});
    offer(y, x, m.inverse(), "inverse of " + tag);
    for (int g = 0; g < action.group()->order(); ++g)
      offer(action(g, x), action(g, y),
            bundle->transport(g, y) * m * bundle->transport(g, x).inverse(),
            "element " + std::to_string(g) + " acting on " + tag);
    for (int z = 0; z < n; ++z) {
      if (known[y * n + z])
        offer(x, z, known[y * n + z]->value * m,
              pair_string({y, z}) + " after " + tag);
      if (known[z * n + x])
        offer(z, y, m * known[z * n + x]->value,
              tag + " after " + pair_string({z, x}));
    }
  }

  std::vector<CMatrix> psi;
  psi.reserve(static_cast<size_t>(n) * n);
  for (auto& slot : known) psi.push_back(std::move(slot->value));
  PointwiseClutchingMap out(bundle, std::move(psi));
  const auto report = validate_clutch(out, tol);
  if (!report.ok()) throw InconsistentDataError("reconstructed map violates " + report.violations.front().kind);
  if (!is_equivariant(out, tol)) throw InconsistentDataError("reconstructed map is not equivariant");
  return out;
}

RestrictedClutch restrict_clutch(const PointwiseClutchingMap& psi, const std::vector<int>& subset,
                                 const Tolerances& tol) {
  if (subset.empty()) throw DomainError("cannot restrict to an empty point set");
  if (!is_equivariant(psi, tol)) throw DomainError("clutching map is not equivariant");
  auto restricted = restrict_bundle(*psi.bundle(), subset);
  const auto& points = restricted.points;
  std::vector<CMatrix> entries;
  for (int x : points)
    for (int y : points) entries.push_back(psi(x, y));
  PointwiseClutchingMap small(restricted.bundle, std::move(entries));

  const auto full_glued = glued_representation(psi, points.front(), tol);
  const auto small_glued = glued_representation(small, 0, tol);
  const double residual = max_abs_difference(
      restrict_character(character_of(full_glued.rep), restricted.subgroup), character_of(small_glued.rep));
  return {std::move(restricted), std::move(small), residual};
}

}  // namespace clutchlab
