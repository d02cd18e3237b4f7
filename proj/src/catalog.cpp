#include "clutchlab/catalog.hpp"

#include <algorithm>
#include <array>
#include <regex>

#include "clutchlab/errors.hpp"

namespace clutchlab {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::vector<std::array<int, 4>> permutations_of_four() {
  std::array<int, 4> p{0, 1, 2, 3};
  std::vector<std::array<int, 4>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

BuiltinGroup cyclic_group(int m) {
  if (m < 1) throw DomainError("cyclic group needs m >= 1");
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::vector<int>> act(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      table[a][b] = (a + b) % m;
      act[a][b] = (a + b) % m;
    }
  auto g = FiniteGroup::from_table("cyclic(" + std::to_string(m) + ")", std::move(table));
  return {g, GroupAction(g, m, std::move(act))};
}

BuiltinGroup dihedral_group(int m) {
  if (m < 1) throw DomainError("dihedral group needs m >= 1");
  const int n = 2 * m;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::vector<int>> act(n, std::vector<int>(m));
  for (int e1 = 0; e1 < n; ++e1) {
    const int k1 = e1 % m, s1 = e1 / m;
    for (int e2 = 0; e2 < n; ++e2) {
      const int k2 = e2 % m, s2 = e2 / m;
      // a^k1 b^s1 a^k2 b^s2 = a^(k1 + (-1)^s1 k2) b^(s1 + s2)
      table[e1][e2] = mod(k1 + (s1 ? -k2 : k2), m) + m * ((s1 + s2) % 2);
    }
    for (int i = 0; i < m; ++i) act[e1][i] = mod(k1 + (s1 ? -i : i), m);
  }
  auto g = FiniteGroup::from_table("dihedral(" + std::to_string(m) + ")", std::move(table));
  return {g, GroupAction(g, m, std::move(act))};
}

BuiltinGroup tetra_group() {
  const auto perms = permutations_of_four();
  const int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::array<int, 4>& p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 4> c{};
      for (int i = 0; i < 4; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = index_of(c);
    }
  auto g = FiniteGroup::from_table("tetra", std::move(table));

  std::vector<std::pair<int, int>> corners;  // (face, vertex), ordered by vertex then face
  for (int v = 0; v < 4; ++v)
    for (int f = 0; f < 4; ++f)
      if (f != v) corners.emplace_back(f, v);
  std::vector<std::vector<int>> act(n, std::vector<int>(corners.size()));
  for (int e = 0; e < n; ++e)
    for (size_t c = 0; c < corners.size(); ++c) {
      const std::pair<int, int> image{perms[e][corners[c].first], perms[e][corners[c].second]};
      act[e][c] = static_cast<int>(std::find(corners.begin(), corners.end(), image) - corners.begin());
    }
  return {g, GroupAction(g, static_cast<int>(corners.size()), std::move(act))};
}

BuiltinGroup builtin_group(const std::string& spec) {
  static const std::regex pattern(R"(^\s*(cyclic|dihedral)\s*(?:\(\s*(-?\d+)\s*\)|:\s*(-?\d+))\s*$)");
  std::smatch match;
  if (std::regex_match(spec, match, pattern)) {
    const int m = std::stoi(match[2].matched ? match[2].str() : match[3].str());
    return match[1] == "cyclic" ? cyclic_group(m) : dihedral_group(m);
  }
  if (spec == "tetra") return tetra_group();
  throw DomainError("unknown builtin group '" + spec + "'");
}

GroupAction klein_four_point_action() {
  const auto d2 = dihedral_group(2);
  std::vector<std::vector<int>> act(4, std::vector<int>(4));
  for (int e = 0; e < 4; ++e) {
    const int k = e % 2, s = e / 2;
    // b first, then a^k
    for (int i = 0; i < 4; ++i) act[e][i] = mod((s ? 1 - i : i) + 2 * k, 4);
  }
  return GroupAction(d2.group, 4, std::move(act));
}

Representation tetra_standard_rep(const GroupPtr& tetra) {
  const auto perms = permutations_of_four();
  if (tetra->order() != 24) throw DomainError("tetra_standard_rep needs the tetrahedral group");
  // Orthonormal basis of the sum-zero hyperplane of C^4.
  Eigen::MatrixXd basis(4, 3);
  basis << 1, 1, 1, -1, 1, 1, 0, -2, 1, 0, 0, -3;
  for (int j = 0; j < 3; ++j) basis.col(j).normalize();
  Representation rep{tetra, 3, {}};
  for (const auto& p : perms) {
    Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(4, 4);
    for (int i = 0; i < 4; ++i) perm(p[i], i) = 1.0;
    rep.mats.push_back((basis.transpose() * perm * basis).cast<Complex>());
  }
  return rep;
}

namespace fixtures {

BundlePtr swap_bundle() {
  const auto z2 = cyclic_group(2);
  return std::make_shared<const EquivariantBundle>(pullback_bundle(trivial_rep(z2.group), z2.action));
}

PointwiseClutchingMap swap_clutch(const BundlePtr& bundle, std::complex<double> z) {
  CMatrix one = identity(1), fwd(1, 1), back(1, 1);
  fwd(0, 0) = z;
  back(0, 0) = 1.0 / z;
  return PointwiseClutchingMap(bundle, {one, fwd, back, one});
}

BundlePtr s3_three_point() {
  const auto d3 = dihedral_group(3);
  return std::make_shared<const EquivariantBundle>(pullback_bundle(trivial_rep(d3.group), d3.action));
}

BundlePtr z4_two_point() {
  const auto z4 = cyclic_group(4);
  std::vector<std::vector<int>> act(4, std::vector<int>(2));
  for (int g = 0; g < 4; ++g)
    for (int x = 0; x < 2; ++x) act[g][x] = (x + g) % 2;
  Representation chi{z4.group, 1, {}};
  const Complex powers[4] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  for (int g = 0; g < 4; ++g) chi.mats.push_back(CMatrix::Constant(1, 1, powers[g]));
  return std::make_shared<const EquivariantBundle>(
      pullback_bundle(chi, GroupAction(z4.group, 2, std::move(act))));
}

RestrictedBundle tetra_vertex(const Representation& w) {
  const auto tetra = tetra_group();
  return restrict_bundle(pullback_bundle(w, tetra.action), {0, 1, 2});
}

RestrictedBundle tetra_vertex() { return tetra_vertex(tetra_standard_rep(tetra_group().group)); }

BundlePtr trivial_action(const Representation& v, int n) {
  std::vector<std::vector<int>> act(v.group->order(), std::vector<int>(n));
  for (auto& row : act)
    for (int x = 0; x < n; ++x) row[x] = x;
  return std::make_shared<const EquivariantBundle>(pullback_bundle(v, GroupAction(v.group, n, std::move(act))));
}

BundlePtr incompatible_fibers() {
  const auto z2 = cyclic_group(2);
  GroupAction trivial(z2.group, 2, {{0, 1}, {0, 1}});
  const CMatrix one = identity(1);
  const CMatrix minus = -identity(1);
  // element 1 acts by +1 on the fiber over 0 and by -1 on the fiber over 1
  return std::make_shared<const EquivariantBundle>(trivial, std::vector<int>{1, 1},
                                                   std::vector<CMatrix>{one, one, one, minus});
}

}  // namespace fixtures

}  // namespace clutchlab
