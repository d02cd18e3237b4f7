#include <doctest.h>

#include <algorithm>
#include <functional>

#include "clutchlab/catalog.hpp"
#include "clutchlab/errors.hpp"
#include "clutchlab/extensions.hpp"

using namespace clutchlab;

namespace {

// Every multiplicity vector of total dimension `rank` whose restriction
// passes at every point (not only orbit representatives).
std::vector<std::vector<int>> brute_force_extensions(const EquivariantBundle& bundle,
                                                     const CharacterTable& table) {
  const int rank = bundle.rank(0);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(table.size(), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == table.size()) {
      if (left != 0) return;
      const auto chi = character_from_multiplicities(cur, table);
      for (int x = 0; x < bundle.base_size(); ++x) {
        const auto res = restrict_character(chi, stabilizer(bundle.action(), x));
        if (max_abs_difference(res, character_of(fiber_representation(bundle, x))) > 1e-6) return;
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
  rec(0, rank);
  return out;
}

std::vector<std::vector<int>> mults(const std::vector<ExtensionClass>& ext) {
  std::vector<std::vector<int>> out;
  for (const auto& e : ext) out.push_back(e.multiplicities);
  return out;
}

}  // namespace

TEST_CASE("is_extension") {
  const auto swap = fixtures::swap_bundle();
  const auto z2 = character_table(swap->group());
  CHECK(is_extension(z2.rows[0], *swap));
  CHECK(is_extension(z2.rows[1], *swap));

  const auto s3 = fixtures::s3_three_point();
  const auto d3 = character_table(s3->group());
  CHECK(is_extension(d3.rows[0], *s3));
  CHECK_FALSE(is_extension(d3.rows[1], *s3));
  CHECK_FALSE(is_extension(d3.rows[2], *s3));  // wrong rank

  const auto tetra = tetra_group();
  const auto w = tetra_standard_rep(tetra.group);
  CHECK(is_extension(w, pullback_bundle(w, tetra.action)));

  const auto z3 = cyclic_group(3);
  CHECK_THROWS_AS(is_extension(d3.rows[0], pullback_bundle(trivial_rep(z3.group), z3.action)), DomainError);
}

TEST_CASE("enumerate_extensions") {
  using V = std::vector<std::vector<int>>;
  const auto swap = fixtures::swap_bundle();
  const auto z2 = character_table(swap->group());
  CHECK(mults(enumerate_extensions(*swap, z2)) == V{{0, 1}, {1, 0}});

  const auto s3 = fixtures::s3_three_point();
  CHECK(mults(enumerate_extensions(*s3, character_table(s3->group()))) == V{{1, 0, 0}});

  // Z4: the faithful characters are rows 1 and 2 (i and -i at the generator).
  const auto z4 = fixtures::z4_two_point();
  const auto t4 = character_table(z4->group());
  const auto ext4 = enumerate_extensions(*z4, t4);
  CHECK(mults(ext4) == V{{0, 0, 1, 0}, {0, 1, 0, 0}});
  for (const auto& e : ext4) CHECK(std::abs(e.character.at(2) - Complex(-1.0)) < 1e-12);

  CHECK(enumerate_extensions(*fixtures::incompatible_fibers(),
                             character_table(fixtures::incompatible_fibers()->group()))
            .empty());

  for (const auto& bundle : {swap, s3, z4, fixtures::tetra_vertex().bundle}) {
    const auto table = character_table(bundle->group());
    CHECK(mults(enumerate_extensions(*bundle, table)) == brute_force_extensions(*bundle, table));
  }

  // Tetrahedral vertex fiber: 2 triv + sign and triv + E (E the 2-dim irrep
  // of the order-6 preserving subgroup).
  const auto tv = fixtures::tetra_vertex();
  const auto ttable = character_table(tv.bundle->group());
  const auto text = enumerate_extensions(*tv.bundle, ttable);
  REQUIRE(text.size() == 2);
  for (const auto& e : text) CHECK(e.dim == 3);
}

TEST_CASE("trivial action has exactly one extension") {
  const auto d3 = dihedral_group(3);
  const auto table = character_table(d3.group);
  const auto irreps = irreducible_representations(table);
  const auto v = direct_sum(irreps[0], irreps[2]);
  const auto bundle = fixtures::trivial_action(v, 3);
  const auto ext = enumerate_extensions(*bundle, table);
  REQUIRE(ext.size() == 1);
  CHECK(ext[0].multiplicities == std::vector<int>{1, 0, 1});
}

TEST_CASE("empty Ext means no equivariant clutching map") {
  // Over a grid of candidate entries psi(0,1) = c, equivariance under the
  // non-trivial element forces -c = c.
  const auto bundle = fixtures::incompatible_fibers();
  int equivariant = 0;
  for (int re = -3; re <= 3; ++re)
    for (int im = -3; im <= 3; ++im) {
      const Complex c(re * 0.5, im * 0.5);
      if (c == Complex(0.0)) continue;
      const CMatrix m = CMatrix::Constant(1, 1, c);
      const CMatrix minv = CMatrix::Constant(1, 1, 1.0 / c);
      const PointwiseClutchingMap psi(bundle, {identity(1), m, minv, identity(1)});
      if (validate_clutch(psi).ok() && is_equivariant(psi)) ++equivariant;
    }
  CHECK(equivariant == 0);
}

TEST_CASE("build_fiberwise_iso and component_representative") {
  const auto swap = fixtures::swap_bundle();
  const auto table = character_table(swap->group());
  const auto irreps = irreducible_representations(table);
  const auto& triv = irreps[0];
  const auto& sign = irreps[1];
  for (std::uint64_t seed : {0u, 1u, 9u}) {
    const auto p = build_fiberwise_iso(*swap, sign, seed);
    CHECK(std::abs(p[1](0, 0) + p[0](0, 0)) < 1e-12);
    CHECK(std::abs(component_representative(swap, sign, seed)(0, 1)(0, 0) - Complex(-1.0)) < 1e-12);
    CHECK(std::abs(component_representative(swap, triv, seed)(0, 1)(0, 0) - Complex(1.0)) < 1e-12);
  }

  const auto tetra = tetra_group();
  const auto w = tetra_standard_rep(tetra.group);
  auto pulled = std::make_shared<const EquivariantBundle>(pullback_bundle(w, tetra.action));
  const auto psi = component_representative(pulled, w, 5);
  CHECK(validate_clutch(psi).ok());
  CHECK(is_equivariant(psi));
  CHECK(fiberwise_equivariance_residual(*pulled, w, build_fiberwise_iso(*pulled, w, 5)) < 1e-8);

  const auto s3 = fixtures::s3_three_point();
  const auto d3 = irreducible_representations(character_table(s3->group()));
  CHECK_THROWS_AS(build_fiberwise_iso(*s3, d3[1], 0), DomainError);
}

TEST_CASE("gl") {
  const auto swap = fixtures::swap_bundle();
  const auto table = character_table(swap->group());
  CHECK(gl(fixtures::swap_clutch(swap, 1.0), table).multiplicities == std::vector<int>{1, 0});
  CHECK(gl(fixtures::swap_clutch(swap, -1.0), table).multiplicities == std::vector<int>{0, 1});
  CHECK_THROWS_AS(gl(fixtures::swap_clutch(swap, 2.0), table), DomainError);

  const auto tetra = tetra_group();
  const auto ttable = character_table(tetra.group);
  const auto w = tetra_standard_rep(tetra.group);
  auto pulled = std::make_shared<const EquivariantBundle>(pullback_bundle(w, tetra.action));
  const PointwiseClutchingMap ones(pulled, std::vector<CMatrix>(144, identity(3)));
  CHECK(gl(ones, ttable) == extension_class(character_of(w), ttable));
}

TEST_CASE("pi0") {
  struct Case {
    BundlePtr bundle;
    size_t count;
  };
  const auto tv = fixtures::tetra_vertex();
  for (const auto& [bundle, count] : {Case{fixtures::swap_bundle(), 2}, Case{fixtures::s3_three_point(), 1},
                                      Case{fixtures::z4_two_point(), 2}, Case{tv.bundle, 2},
                                      Case{fixtures::incompatible_fibers(), 0}}) {
    const auto table = character_table(bundle->group());
    const auto irreps = irreducible_representations(table);
    const auto comps = pi0(bundle, table, irreps, 11);
    REQUIRE(comps.size() == count);
    const auto ext = enumerate_extensions(*bundle, table);
    for (size_t i = 0; i < comps.size(); ++i) {
      CHECK(comps[i].extension == ext[i]);
      CHECK(validate_clutch(comps[i].representative).ok());
      CHECK(is_equivariant(comps[i].representative));
      CHECK(gl(comps[i].representative, table) == ext[i]);
    }
  }
}

TEST_CASE("same_component") {
  const auto swap = fixtures::swap_bundle();
  const auto table = character_table(swap->group());
  const auto plus = fixtures::swap_clutch(swap, 1.0);
  CHECK(same_component(plus, plus, table));
  CHECK_FALSE(same_component(plus, fixtures::swap_clutch(swap, -1.0), table));

  const auto tv = fixtures::tetra_vertex();
  const auto ttable = character_table(tv.bundle->group());
  const auto irreps = irreducible_representations(ttable);
  for (const auto& w : enumerate_extensions(*tv.bundle, ttable)) {
    const auto rep = realize(w, irreps);
    CHECK(same_component(component_representative(tv.bundle, rep, 1), component_representative(tv.bundle, rep, 2),
                         ttable));
  }
  const auto z4 = fixtures::z4_two_point();
  const auto z4_table = character_table(z4->group());
  const auto other = pi0(z4, z4_table, irreducible_representations(z4_table))[0].representative;
  CHECK_THROWS_AS(same_component(plus, other, table), DomainError);
}
