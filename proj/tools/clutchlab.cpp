// clutchlab: command-line front end. Every command prints one JSON document
// on stdout. Exit codes: 0 ok, 1 invalid object, 2 I/O or parse, 3 numerical.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "clutchlab/catalog.hpp"
#include "clutchlab/errors.hpp"
#include "clutchlab/extensions.hpp"
#include "clutchlab/homotopy.hpp"
#include "clutchlab/io.hpp"
#include "clutchlab/kernels.hpp"
#include "clutchlab/relations.hpp"

using namespace clutchlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kDomain = 1, kParse = 2, kNumerical = 3 };

struct Options {
  std::uint64_t seed = 0;
  Tolerances tol;
  int jobs = 0;
};

void emit(const json& j) { std::cout << io::dump(j); }

json point_matrices(const std::vector<CMatrix>& mats) {
  json out = json::array();
  for (const auto& m : mats) out.push_back(io::to_json(m));
  return out;
}

void write_file(const fs::path& path, const json& j) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << io::dump(j);
}

std::vector<int> parse_subset(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad point list '" + text + "'");
    }
  }
  return out;
}

// Structural problems found while loading count as an invalid object.
json structure_report(const std::string& message) {
  ValidationReport r;
  r.violations.push_back({"structure", {}, 0.0});
  json j = io::to_json(r);
  j["message"] = message;
  return j;
}

int cmd_validate(const std::string& kind, const std::vector<std::string>& paths, const Options& opt) {
  io::Workspace ws;
  json reports = json::array();
  bool all_valid = true;
  for (const auto& path : paths) {
    json report;
    try {
      if (kind == "group") {
        ws.load_group(path);
        report = io::to_json(ValidationReport{});
      } else if (kind == "action") {
        ws.load_action(path);
        report = io::to_json(ValidationReport{});
      } else if (kind == "rep") {
        const auto rep = ws.load_rep(path);
        ValidationReport r;
        const double res = homomorphism_residual(rep);
        r.worst_residual = res;
        if (res > opt.tol.eps_mat) r.violations.push_back({"homomorphism", {}, res});
        report = io::to_json(r);
      } else if (kind == "bundle") {
        report = io::to_json(validate_bundle(*ws.load_bundle(path), opt.tol));
      } else if (kind == "clutch") {
        const auto psi = ws.load_clutch(path);
        auto r = validate_clutch(psi, opt.tol);
        report = io::to_json(r);
        report["equivariant"] = r.ok() && is_equivariant(psi, opt.tol);
      } else {
        throw ParseError("unknown kind '" + kind + "'");
      }
    } catch (const DomainError& e) {
      report = structure_report(e.what());
    }
    report["path"] = path;
    all_valid = all_valid && report["valid"].get<bool>();
    reports.push_back(report);
  }
  emit({{"kind", kind}, {"reports", reports}, {"valid", all_valid}});
  return all_valid ? kOk : kDomain;
}

int cmd_extensions(const std::string& path, const Options& opt) {
  io::Workspace ws;
  const auto bundle = ws.load_bundle(path);
  const auto table = character_table(bundle->group(), opt.seed, opt.tol);
  json list = json::array();
  for (const auto& w : enumerate_extensions(*bundle, table, opt.tol)) list.push_back(io::extension_document(w));
  emit({{"extensions", list}, {"count", list.size()}});
  return kOk;
}

int cmd_pi0(const std::string& path, const std::string& out_dir, const Options& opt) {
  io::Workspace ws;
  const auto bundle = ws.load_bundle(path);
  const auto table = character_table(bundle->group(), opt.seed, opt.tol);
  const auto irreps = irreducible_representations(table, opt.seed, opt.tol);
  const auto comps = pi0(bundle, table, irreps, opt.seed, opt.tol);
  json list = json::array();
  for (size_t i = 0; i < comps.size(); ++i) {
    json c = io::extension_document(comps[i].extension);
    json doc = io::clutch_document(comps[i].representative);
    if (!out_dir.empty()) {
      const fs::path file = fs::path(out_dir) / ("component-" + std::to_string(i) + ".json");
      write_file(file, doc);
      c["representative"] = file.string();
    } else {
      c["representative"] = doc;
    }
    list.push_back(c);
  }
  emit({{"components", list}, {"count", list.size()}});
  return kOk;
}

int cmd_pi1(const std::string& path, int index, const Options& opt) {
  io::Workspace ws;
  const auto bundle = ws.load_bundle(path);
  const auto table = character_table(bundle->group(), opt.seed, opt.tol);
  const auto ext = enumerate_extensions(*bundle, table, opt.tol);
  if (index < 0 || index >= static_cast<int>(ext.size()))
    throw DomainError("extension index " + std::to_string(index) + " out of range (" +
                      std::to_string(ext.size()) + " extensions)");
  const auto cert = simply_connected_certificate(*bundle, ext[index].character, opt.tol);
  const auto& r = cert.computed;
  emit({{"pi1", io::to_json(r.group)},
        {"condition_I", r.condition_I},
        {"matrix", io::to_json(r.matrix)},
        {"derivation", to_string(r.derivation)},
        {"certified_trivial", cert.certified_trivial},
        {"extension", io::extension_document(ext[index])}});
  return kOk;
}

int cmd_glue(const std::string& path, int basepoint, const Options& opt) {
  io::Workspace ws;
  const auto psi = ws.load_clutch(path);
  const auto glued = glued_representation(psi, basepoint, opt.tol);
  const auto table = character_table(psi.bundle()->group(), opt.seed, opt.tol);
  const auto chi = character_of(glued.rep);
  emit({{"basepoint", basepoint},
        {"character", io::to_json(chi)},
        {"multiplicities", extension_class(chi, table, opt.tol).multiplicities},
        {"mats", point_matrices(glued.rep.mats)}});
  return kOk;
}

int cmd_quotient_map(const std::string& path, int basepoint, const Options& opt) {
  io::Workspace ws;
  const auto psi = ws.load_clutch(path);
  emit({{"basepoint", basepoint}, {"p", point_matrices(quotient_map(psi, basepoint, opt.tol))}});
  return kOk;
}

int cmd_clutch_from_iso(const std::string& bundle_path, const std::string& rep_path,
                        const std::string& iso_path, const Options& opt) {
  io::Workspace ws;
  const auto bundle = ws.load_bundle(bundle_path);
  const auto rep = ws.load_rep(rep_path);
  std::ifstream in(iso_path);
  if (!in) throw ParseError("cannot read " + iso_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(iso_path + ": " + e.what());
  }
  if (!j.contains("p") || !j["p"].is_array()) throw ParseError("iso file needs a \"p\" list of matrices");
  std::vector<CMatrix> p;
  for (const auto& m : j["p"]) p.push_back(io::matrix_from_json(m));
  emit(io::clutch_document(clutch_from_fiberwise_iso(bundle, rep, p, opt.tol)));
  return kOk;
}

int cmd_average(const std::string& path0, const std::string& path1, int basepoint, const Options& opt) {
  io::Workspace ws;
  const auto psi0 = ws.load_clutch(path0);
  const auto psi1 = ws.load_clutch(path1);
  const auto r = averaging_isomorphism(psi0, psi1, basepoint, opt.tol);
  emit({{"alpha", io::to_json(r.alpha)},
        {"invertible", r.invertible},
        {"smallest_singular_value", io::canonical_double(r.smallest_singular_value)}});
  return kOk;
}

int cmd_closure(const std::string& action_path, const std::string& rel_path, bool only_decide) {
  io::Workspace ws;
  const auto action = ws.load_action(action_path);
  const auto b = ws.load_relation(rel_path);
  const auto closed = equivariant_closure(action, b);
  const bool all = closed == full_relation(action.base_size());
  if (only_decide) {
    emit({{"determines_all", all}});
  } else {
    json doc = io::relation_document(closed);
    doc["size"] = closed.pairs.size();
    doc["determines_all"] = all;
    emit(doc);
  }
  return kOk;
}

int cmd_evaluate(const std::string& clutch_path, const std::string& rel_path) {
  io::Workspace ws;
  const auto psi = ws.load_clutch(clutch_path);
  emit(io::partial_document(evaluate(psi, ws.load_relation(rel_path))));
  return kOk;
}

int cmd_reconstruct(const std::string& bundle_path, const std::string& data_path, const Options& opt) {
  io::Workspace ws;
  const auto bundle = ws.load_bundle(bundle_path);
  emit(io::clutch_document(reconstruct(bundle, ws.load_partial(data_path), opt.tol)));
  return kOk;
}

int cmd_restrict(const std::string& path, const std::string& subset, const Options& opt) {
  io::Workspace ws;
  const auto psi = ws.load_clutch(path);
  const auto r = restrict_clutch(psi, parse_subset(subset), opt.tol);
  emit({{"points", r.restricted.points},
        {"subgroup", r.restricted.subgroup.elements},
        {"clutch", io::clutch_document(r.psi)},
        {"character_residual", io::canonical_double(r.character_residual)},
        {"character_identity", r.character_residual <= opt.tol.eps_char}});
  return kOk;
}

const std::vector<std::pair<std::string, std::function<json()>>>& catalog() {
  static const std::vector<std::pair<std::string, std::function<json()>>> entries{
      {"swap", [] { return io::bundle_document(*fixtures::swap_bundle()); }},
      {"swap-plus", [] { return io::clutch_document(fixtures::swap_clutch(fixtures::swap_bundle(), 1.0)); }},
      {"swap-minus", [] { return io::clutch_document(fixtures::swap_clutch(fixtures::swap_bundle(), -1.0)); }},
      {"s3-three-point", [] { return io::bundle_document(*fixtures::s3_three_point()); }},
      {"z4-two-point", [] { return io::bundle_document(*fixtures::z4_two_point()); }},
      {"tetra-vertex", [] { return io::bundle_document(*fixtures::tetra_vertex().bundle); }},
      {"incompatible", [] { return io::bundle_document(*fixtures::incompatible_fibers()); }},
      {"klein-action", [] { return io::action_document(klein_four_point_action()); }},
  };
  return entries;
}

int cmd_catalog(const std::string& name, const std::string& out) {
  json doc;
  if (name.empty()) {
    json names = json::array();
    for (const auto& [n, _] : catalog()) names.push_back(n);
    names.push_back("group:<spec>");
    names.push_back("action:<spec>");
    doc = {{"fixtures", names}};
  } else if (name.rfind("group:", 0) == 0) {
    doc = io::group_document(*builtin_group(name.substr(6)).group);
  } else if (name.rfind("action:", 0) == 0) {
    doc = io::action_document(builtin_group(name.substr(7)).action);
  } else {
    for (const auto& [n, make] : catalog())
      if (n == name) doc = make();
    if (doc.is_null()) throw ParseError("unknown fixture '" + name + "'");
  }
  if (out.empty()) emit(doc);
  else write_file(out, doc);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant clutching maps over finite G-sets"};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("CLUTCHLAB_SEED")) {
    try {
      opt.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "CLUTCHLAB_SEED is not an integer\n";
      return kParse;
    }
  }
  app.add_option("--seed", opt.seed, "Random seed (default: $CLUTCHLAB_SEED or 0)");
  app.add_option("--eps-mat", opt.tol.eps_mat, "Matrix identity tolerance")->check(CLI::PositiveNumber);
  app.add_option("--eps-char", opt.tol.eps_char, "Character tolerance")->check(CLI::PositiveNumber);
  app.add_option("--eps-sing", opt.tol.eps_sing, "Singular value tolerance")->check(CLI::PositiveNumber);
  app.add_option("--jobs", opt.jobs, "Threads for the residual kernels");

  std::function<int()> run;
  std::string kind, a, b, c, out_dir, subset;
  std::vector<std::string> paths;
  int basepoint = 0, index = 0;

  auto* validate = app.add_subcommand("validate", "Check a group, action, rep, bundle or clutch file");
  validate->add_option("kind", kind)->required()->check(CLI::IsMember({"group", "action", "rep", "bundle", "clutch"}));
  validate->add_option("paths", paths)->required();
  validate->callback([&] { run = [&] { return cmd_validate(kind, paths, opt); }; });

  auto* extensions = app.add_subcommand("extensions", "List the representation extensions of a bundle");
  extensions->add_option("bundle", a)->required();
  extensions->callback([&] { run = [&] { return cmd_extensions(a, opt); }; });

  auto* pi0_cmd = app.add_subcommand("pi0", "Path components with representatives");
  pi0_cmd->add_option("bundle", a)->required();
  pi0_cmd->add_option("--out-dir", out_dir, "Write representatives as clutch files here");
  pi0_cmd->callback([&] { run = [&] { return cmd_pi0(a, out_dir, opt); }; });

  auto* pi1_cmd = app.add_subcommand("pi1", "Fundamental group of one component");
  pi1_cmd->add_option("bundle", a)->required();
  pi1_cmd->add_option("--extension", index, "Index into the extensions list")->default_val(0);
  pi1_cmd->callback([&] { run = [&] { return cmd_pi1(a, index, opt); }; });

  auto* glue = app.add_subcommand("glue", "Glued representation of an equivariant clutching map");
  glue->add_option("clutch", a)->required();
  glue->add_option("--basepoint", basepoint)->default_val(0);
  glue->callback([&] { run = [&] { return cmd_glue(a, basepoint, opt); }; });

  auto* qmap = app.add_subcommand("quotient-map", "Fiberwise isomorphism onto the glued fiber");
  qmap->add_option("clutch", a)->required();
  qmap->add_option("--basepoint", basepoint)->default_val(0);
  qmap->callback([&] { run = [&] { return cmd_quotient_map(a, basepoint, opt); }; });

  auto* from_iso = app.add_subcommand("clutch-from-iso", "Clutching map from a fiberwise isomorphism");
  from_iso->add_option("bundle", a)->required();
  from_iso->add_option("rep", b)->required();
  from_iso->add_option("iso", c, "File {\"p\": [matrix per point]}")->required();
  from_iso->callback([&] { run = [&] { return cmd_clutch_from_iso(a, b, c, opt); }; });

  auto* average = app.add_subcommand("average", "Averaged isomorphism between two glued representations");
  average->add_option("clutch0", a)->required();
  average->add_option("clutch1", b)->required();
  average->add_option("--basepoint", basepoint)->default_val(0);
  average->callback([&] { run = [&] { return cmd_average(a, b, basepoint, opt); }; });

  auto* closure = app.add_subcommand("closure", "Equivariant equivalence closure of a relation");
  closure->add_option("action", a)->required();
  closure->add_option("relation", b)->required();
  closure->callback([&] { run = [&] { return cmd_closure(a, b, false); }; });

  auto* determines = app.add_subcommand("determines", "Whether a relation determines every clutching map");
  determines->add_option("action", a)->required();
  determines->add_option("relation", b)->required();
  determines->callback([&] { run = [&] { return cmd_closure(a, b, true); }; });

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Restrict a clutching map to a relation");
  evaluate_cmd->add_option("clutch", a)->required();
  evaluate_cmd->add_option("relation", b)->required();
  evaluate_cmd->callback([&] { run = [&] { return cmd_evaluate(a, b); }; });

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Rebuild a clutching map from partial data");
  reconstruct_cmd->add_option("bundle", a)->required();
  reconstruct_cmd->add_option("data", b)->required();
  reconstruct_cmd->callback([&] { run = [&] { return cmd_reconstruct(a, b, opt); }; });

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict an equivariant clutching map to a subset");
  restrict_cmd->add_option("clutch", a)->required();
  restrict_cmd->add_option("--subset", subset, "Comma-separated points")->required();
  restrict_cmd->callback([&] { run = [&] { return cmd_restrict(a, subset, opt); }; });

  auto* catalog_cmd = app.add_subcommand("catalog", "Emit a built-in fixture (no name: list them)");
  catalog_cmd->add_option("name", a);
  catalog_cmd->add_option("-o,--out", b, "Write to a file instead of stdout");
  catalog_cmd->callback([&] { run = [&] { return cmd_catalog(a, b); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  kernels::omp::set_threads(opt.jobs);
  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kDomain;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
}
