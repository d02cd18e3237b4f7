#include <doctest.h>

#include "clutchlab/bundle.hpp"
#include "clutchlab/catalog.hpp"
#include "clutchlab/errors.hpp"

using namespace clutchlab;

TEST_CASE("validate_bundle") {
  const auto z2 = cyclic_group(2);
  GroupAction trivial(z2.group, 2, {{0, 1}, {0, 1}});
  CHECK(validate_bundle(pullback_bundle(trivial_rep(z2.group), trivial)).ok());
  CHECK(validate_bundle(*fixtures::swap_bundle()).ok());

  // A[1][0] = 2 and A[1][1] = 1: the element squares to the identity, so
  // A[1][1] A[1][0] would have to be 1.
  const CMatrix one = identity(1);
  const CMatrix two = 2.0 * identity(1);
  EquivariantBundle broken(z2.action, {1, 1}, {one, one, two, one});
  const auto report = validate_bundle(broken);
  CHECK_FALSE(report.ok());
  CHECK(report.has("cocycle"));
  CHECK(report.worst_residual == doctest::Approx(1.0));

  EquivariantBundle singular(z2.action, {1, 1}, {one, one, CMatrix::Zero(1, 1), one});
  CHECK(validate_bundle(singular).has("invertibility"));

  CHECK_THROWS_AS(EquivariantBundle(z2.action, {1, 2}, {one, one, one, one}), DomainError);
}

TEST_CASE("fiber_representation") {
  const auto z2 = cyclic_group(2);
  GroupAction trivial(z2.group, 2, {{0, 1}, {0, 1}});
  Representation sign{z2.group, 1, {identity(1), -identity(1)}};
  const auto bundle = pullback_bundle(sign, trivial);
  const auto fiber = fiber_representation(bundle, 1);
  CHECK(fiber.group->order() == 2);
  CHECK(fiber.mats[1](0, 0) == Complex(-1.0));

  const auto swap_fiber = fiber_representation(*fixtures::swap_bundle(), 0);
  CHECK(swap_fiber.group->order() == 1);
  CHECK(swap_fiber.dim == 1);
  CHECK_THROWS_AS(fiber_representation(bundle, 5), DomainError);

  // Corner stabilizer in the vertex fiber is a reflection; the standard
  // representation restricted to a reflection has trace 1.
  const auto tv = fixtures::tetra_vertex();
  const auto corner = fiber_representation(*tv.bundle, 0);
  REQUIRE(corner.group->order() == 2);
  CHECK(std::abs(corner.mats[1].trace() - Complex(1.0)) < 1e-12);
}

TEST_CASE("restrict_bundle") {
  const auto s3 = fixtures::s3_three_point();
  const auto all = restrict_bundle(*s3, {2, 0, 1});
  CHECK(all.points == std::vector<int>{0, 1, 2});
  CHECK(all.bundle->group()->table() == s3->group()->table());
  CHECK(all.bundle->action().table() == s3->action().table());
  CHECK(all.bundle->transport() == s3->transport());

  const auto single = restrict_bundle(*s3, {1});
  CHECK(single.bundle->base_size() == 1);
  CHECK(single.subgroup.elements == stabilizer(s3->action(), 1).elements);
  const auto fiber = fiber_representation(*s3, 1);
  for (int g = 0; g < single.subgroup.order(); ++g) CHECK(single.bundle->transport(g, 0) == fiber.mats[g]);

  const auto tv = fixtures::tetra_vertex();
  CHECK(tv.subgroup.order() == 6);
  CHECK(validate_bundle(*tv.bundle).ok());
  const auto pair = restrict_bundle(*tv.bundle, {0, 1});
  CHECK(pair.subgroup.order() == 2);
  CHECK(pair.bundle->action().is_transitive());  // the reflection exchanges the corners
  CHECK(validate_bundle(*pair.bundle).ok());
  CHECK_THROWS_AS(restrict_bundle(*s3, {}), DomainError);
}

TEST_CASE("pullback_bundle") {
  const auto z2 = cyclic_group(2);
  const auto trivial = pullback_bundle(trivial_rep(z2.group), z2.action);
  for (const auto& m : trivial.transport()) CHECK(m == identity(1));

  Representation sign{z2.group, 1, {identity(1), -identity(1)}};
  const auto signed_bundle = pullback_bundle(sign, z2.action);
  CHECK(signed_bundle.transport(1, 0)(0, 0) == Complex(-1.0));
  CHECK(signed_bundle.transport(1, 1)(0, 0) == Complex(-1.0));

  const auto tetra = tetra_group();
  const auto big = pullback_bundle(tetra_standard_rep(tetra.group), tetra.action);
  CHECK(validate_bundle(big).ok());
  for (int x = 0; x < big.base_size(); ++x) {
    const auto fiber = character_of(fiber_representation(big, x));
    const auto res = restrict_character(character_of(tetra_standard_rep(tetra.group)), stabilizer(tetra.action, x));
    CHECK(max_abs_difference(fiber, res) < 1e-12);
  }
}
