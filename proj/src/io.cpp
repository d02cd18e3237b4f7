#include "clutchlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "clutchlab/errors.hpp"

namespace clutchlab::io {

namespace fs = std::filesystem;

double canonical_double(double v) {
  if (!std::isfinite(v)) throw NumericalError("non-finite value in output");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json to_json(Complex z) { return json::array({canonical_double(z.real()), canonical_double(z.imag())}); }

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Character& chi) {
  json values = json::array();
  for (const auto& v : chi.values) values.push_back(to_json(v));
  return values;
}

json to_json(const FgAbelianGroup& g) { return {{"free_rank", g.free_rank}, {"torsion", g.torsion}}; }

json to_json(const IntMatrix& m) { return m; }

json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"kind", v.kind}, {"where", v.where}, {"residual", canonical_double(v.residual)}});
  return {{"valid", report.ok()},
          {"violations", violations},
          {"worst_residual", canonical_double(report.worst_residual)}};
}

std::string pair_key(int x, int y) { return std::to_string(x) + "," + std::to_string(y); }

PointPair parse_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(key);
    size_t used = 0;
    const int x = std::stoi(key.substr(0, comma), &used);
    const int y = std::stoi(key.substr(comma + 1), &used);
    return {x, y};
  } catch (const std::exception&) {
    throw ParseError("bad pair key '" + key + "'");
  }
}

json group_document(const FiniteGroup& group) {
  return {{"name", group.name()}, {"order", group.order()}, {"table", group.table()}};
}

json action_document(const GroupAction& action) {
  return {{"group", group_document(*action.group())}, {"base_size", action.base_size()}, {"act", action.table()}};
}

json rep_document(const Representation& rep) {
  json mats = json::array();
  for (const auto& m : rep.mats) mats.push_back(to_json(m));
  return {{"group", group_document(*rep.group)}, {"dim", rep.dim}, {"mats", mats}};
}

json bundle_document(const EquivariantBundle& bundle) {
  json transport = json::object();
  for (int g = 0; g < bundle.group()->order(); ++g)
    for (int x = 0; x < bundle.base_size(); ++x) transport[pair_key(g, x)] = to_json(bundle.transport(g, x));
  return {{"action", action_document(bundle.action())}, {"ranks", bundle.ranks()}, {"transport", transport}};
}

json clutch_document(const PointwiseClutchingMap& psi) {
  json entries = json::object();
  for (int x = 0; x < psi.base_size(); ++x)
    for (int y = 0; y < psi.base_size(); ++y) entries[pair_key(x, y)] = to_json(psi(x, y));
  return {{"bundle", bundle_document(*psi.bundle())}, {"psi", entries}};
}

json relation_document(const BinaryRelation& b) {
  json pairs = json::array();
  for (const auto& [x, y] : b.pairs) pairs.push_back({x, y});
  return {{"base_size", b.base_size}, {"pairs", pairs}};
}

json partial_document(const PartialClutchData& data) {
  json doc = relation_document(data.relation);
  json values = json::object();
  for (const auto& [p, m] : data.values) values[pair_key(p.first, p.second)] = to_json(m);
  doc["values"] = values;
  return doc;
}

json extension_document(const ExtensionClass& w) {
  return {{"multiplicities", w.multiplicities}, {"dim", w.dim}, {"character", to_json(w.character)}};
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be a list of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols)
      throw ParseError("matrix rows must have equal length");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

std::vector<PointPair> pairs_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("pairs must be a list of [x, x'] pairs");
  std::vector<PointPair> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw ParseError("pair must be [x, x']");
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

json Workspace::read(const fs::path& path) {
  std::error_code ec;
  fs::path canonical = fs::weakly_canonical(path, ec);
  const std::string key = ec ? path.string() : canonical.string();
  if (auto it = documents_.find(key); it != documents_.end()) return it->second;
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  documents_[key] = j;
  return j;
}

std::pair<json, fs::path> Workspace::deref(const json& ref, const fs::path& base) {
  if (ref.is_string()) {
    const fs::path p = base / ref.get<std::string>();
    return {read(p), p.parent_path()};
  }
  if (ref.is_object()) return {ref, base};
  throw ParseError("reference must be a path or an inline document");
}

GroupPtr Workspace::group_from(const json& j, const fs::path&) {
  auto table = get_as<std::vector<std::vector<int>>>(j, "table");
  if (j.contains("order") && j.at("order").get<size_t>() != table.size())
    throw DomainError("group order does not match the table");
  return FiniteGroup::from_table(j.value("name", std::string("group")), std::move(table));
}

GroupAction Workspace::action_from(const json& j, const fs::path& base) {
  auto [gdoc, gbase] = deref(field(j, "group"), base);
  return GroupAction(group_from(gdoc, gbase), get_as<int>(j, "base_size"),
                     get_as<std::vector<std::vector<int>>>(j, "act"));
}

Representation Workspace::rep_from(const json& j, const fs::path& base) {
  auto [gdoc, gbase] = deref(field(j, "group"), base);
  Representation rep{group_from(gdoc, gbase), get_as<int>(j, "dim"), {}};
  for (const auto& m : field(j, "mats")) rep.mats.push_back(matrix_from_json(m));
  if (static_cast<int>(rep.mats.size()) != rep.group->order())
    throw DomainError("representation needs one matrix per group element");
  return rep;
}

BundlePtr Workspace::bundle_from(const json& j, const fs::path& base) {
  auto [adoc, abase] = deref(field(j, "action"), base);
  GroupAction action = action_from(adoc, abase);
  auto ranks = get_as<std::vector<int>>(j, "ranks");
  const auto& tj = field(j, "transport");
  if (!tj.is_object()) throw ParseError("transport must be an object keyed by \"g,x\"");
  const int order = action.group()->order();
  const int n = action.base_size();
  std::vector<CMatrix> transport(static_cast<size_t>(order) * n);
  std::vector<char> seen(transport.size(), 0);
  for (const auto& [key, m] : tj.items()) {
    const auto [g, x] = parse_pair_key(key);
    if (g < 0 || g >= order || x < 0 || x >= n) throw DomainError("transport key out of range: " + key);
    transport[g * n + x] = matrix_from_json(m);
    seen[g * n + x] = 1;
  }
  for (size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw DomainError("missing transport matrix " + pair_key(static_cast<int>(i) / n, static_cast<int>(i) % n));
  return std::make_shared<const EquivariantBundle>(std::move(action), std::move(ranks), std::move(transport));
}

PointwiseClutchingMap Workspace::clutch_from(const json& j, const fs::path& base) {
  auto [bdoc, bbase] = deref(field(j, "bundle"), base);
  BundlePtr bundle = bundle_from(bdoc, bbase);
  const int n = bundle->base_size();
  const auto& pj = field(j, "psi");
  if (!pj.is_object()) throw ParseError("psi must be an object keyed by \"x,x'\"");
  std::vector<CMatrix> psi(static_cast<size_t>(n) * n);
  std::vector<char> seen(psi.size(), 0);
  for (const auto& [key, m] : pj.items()) {
    const auto [x, y] = parse_pair_key(key);
    if (x < 0 || x >= n || y < 0 || y >= n) throw DomainError("psi key out of range: " + key);
    psi[x * n + y] = matrix_from_json(m);
    seen[x * n + y] = 1;
  }
  for (size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw DomainError("missing psi entry " + pair_key(static_cast<int>(i) / n, static_cast<int>(i) % n));
  return PointwiseClutchingMap(std::move(bundle), std::move(psi));
}

GroupPtr Workspace::load_group(const fs::path& path) { return group_from(read(path), path.parent_path()); }
GroupAction Workspace::load_action(const fs::path& path) { return action_from(read(path), path.parent_path()); }
Representation Workspace::load_rep(const fs::path& path) { return rep_from(read(path), path.parent_path()); }
BundlePtr Workspace::load_bundle(const fs::path& path) { return bundle_from(read(path), path.parent_path()); }
PointwiseClutchingMap Workspace::load_clutch(const fs::path& path) {
  return clutch_from(read(path), path.parent_path());
}
BinaryRelation Workspace::load_relation(const fs::path& path) { return relation_from(read(path)); }
PartialClutchData Workspace::load_partial(const fs::path& path) { return partial_from(read(path)); }

BinaryRelation relation_from(const json& j) {
  return make_relation(get_as<int>(j, "base_size"), pairs_from_json(field(j, "pairs")));
}

PartialClutchData partial_from(const json& j) {
  PartialClutchData data{relation_from(j), {}};
  const auto& vj = field(j, "values");
  if (!vj.is_object()) throw ParseError("values must be an object keyed by \"x,x'\"");
  for (const auto& [key, m] : vj.items()) {
    const auto p = parse_pair_key(key);
    if (!data.relation.contains(p.first, p.second)) throw DomainError("value for pair outside the relation: " + key);
    data.values.emplace(p, matrix_from_json(m));
  }
  return data;
}

}  // namespace clutchlab::io
