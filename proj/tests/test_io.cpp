#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "clutchlab/catalog.hpp"
#include "clutchlab/errors.hpp"
#include "clutchlab/io.hpp"

using namespace clutchlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("clutchlab_io_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    const auto p = path / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p) << text;
    return p;
  }
};

}  // namespace

TEST_CASE("canonical doubles and matrices") {
  CHECK(io::canonical_double(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(io::canonical_double(-0.0)));
  CHECK(io::canonical_double(1.0 + 1e-15) == 1.0);
  CHECK(io::canonical_double(0.1 + 0.2) == 0.3);
  CHECK_THROWS_AS(io::canonical_double(std::nan("")), NumericalError);
  CHECK(io::dump(io::to_json(Complex(-0.0, 2.5))) == "[\n  0.0,\n  2.5\n]\n");

  CMatrix m(2, 2);
  m << Complex(1, 2), Complex(0, -1), Complex(3, 0), Complex(-4, 0.5);
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
  CHECK(io::complex_from_json(nlohmann::json(3.0)) == Complex(3.0));
  CHECK_THROWS_AS(io::matrix_from_json(nlohmann::json::parse("[[[1,0]],[[1,0],[2,0]]]")), ParseError);
  CHECK_THROWS_AS(io::complex_from_json(nlohmann::json::parse("[1]")), ParseError);
  CHECK(io::parse_pair_key("3,11") == PointPair{3, 11});
  CHECK_THROWS_AS(io::parse_pair_key("3-11"), ParseError);
}

TEST_CASE("documents round trip") {
  const auto s3 = fixtures::s3_three_point();
  io::Workspace ws;
  const auto bundle = ws.bundle_from(io::bundle_document(*s3), ".");
  CHECK(same_bundle(*bundle, *s3));

  const auto swap = fixtures::swap_bundle();
  const auto psi = fixtures::swap_clutch(swap, Complex(0.5, -2));
  const auto back = ws.clutch_from(io::clutch_document(psi), ".");
  for (int i = 0; i < 4; ++i) CHECK(rel_residual(back.entries()[i], psi.entries()[i]) < 1e-11);

  const auto b = make_relation(4, {{0, 1}, {0, 3}});
  CHECK(io::relation_from(io::relation_document(b)) == b);
  PartialClutchData data{make_relation(2, {{0, 1}}), {{{0, 1}, identity(1)}}};
  const auto data_back = io::partial_from(io::partial_document(data));
  CHECK(data_back.relation == data.relation);
  CHECK(data_back.values.at({0, 1}) == identity(1));

  const auto tetra = tetra_group();
  const auto rep = ws.rep_from(io::rep_document(tetra_standard_rep(tetra.group)), ".");
  CHECK(homomorphism_residual(rep) < 1e-10);

  // Output is stable under a second serialization.
  CHECK(io::dump(io::clutch_document(back)) == io::dump(io::clutch_document(psi)));
}

TEST_CASE("references between files") {
  TempDir dir;
  dir.write("groups/z2.json", R"({"name": "Z2", "order": 2, "table": [[0, 1], [1, 0]]})");
  dir.write("swap_action.json", R"({"group": "groups/z2.json", "base_size": 2, "act": [[0, 1], [1, 0]]})");
  dir.write("swap.json", R"({"action": "swap_action.json", "ranks": [1, 1],
      "transport": {"0,0": [[[1,0]]], "0,1": [[[1,0]]], "1,0": [[[1,0]]], "1,1": [[[1,0]]]}})");
  const auto clutch = dir.write("sub/bad.json", R"({"bundle": "../swap.json",
      "psi": {"0,0": [[[1,0]]], "0,1": [[[2,0]]], "1,0": [[[2,0]]], "1,1": [[[1,0]]]}})");
  io::Workspace ws;
  const auto psi = ws.load_clutch(clutch);
  CHECK(same_bundle(*psi.bundle(), *fixtures::swap_bundle()));
  CHECK(validate_clutch(psi).has("symmetry"));

  dir.write("broken.json", "{\"name\": ");
  CHECK_THROWS_AS(ws.load_group(dir.path / "broken.json"), ParseError);
  CHECK_THROWS_AS(ws.load_group(dir.path / "missing.json"), ParseError);
  dir.write("no_table.json", R"({"name": "x"})");
  CHECK_THROWS_AS(ws.load_group(dir.path / "no_table.json"), ParseError);
  dir.write("bad_order.json", R"({"order": 3, "table": [[0, 1], [1, 0]]})");
  CHECK_THROWS_AS(ws.load_group(dir.path / "bad_order.json"), DomainError);
  dir.write("short.json", R"({"action": "swap_action.json", "ranks": [1, 1], "transport": {"0,0": [[[1,0]]]}})");
  CHECK_THROWS_AS(ws.load_bundle(dir.path / "short.json"), DomainError);
  dir.write("not_group.json", R"({"table": [[0, 1], [0, 1]]})");
  CHECK_THROWS_AS(ws.load_group(dir.path / "not_group.json"), DomainError);
}
