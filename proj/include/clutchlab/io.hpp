#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "clutchlab/bundle.hpp"
#include "clutchlab/clutch.hpp"
#include "clutchlab/extensions.hpp"
#include "clutchlab/homotopy.hpp"
#include "clutchlab/relations.hpp"
#include "clutchlab/rep.hpp"

// JSON documents. Complex numbers are [re, im]; matrices are row-major
// lists of rows. A reference ("group", "action", "bundle") is either a path
// relative to the referring file or the referenced document inline.
namespace clutchlab::io {

using nlohmann::json;

/// Rounds to 12 significant digits so that output is byte-stable.
double canonical_double(double v);
json to_json(Complex z);
json to_json(const CMatrix& m);
json to_json(const Character& chi);
json to_json(const FgAbelianGroup& g);
json to_json(const IntMatrix& m);
json to_json(const ValidationReport& report);

json group_document(const FiniteGroup& group);
json action_document(const GroupAction& action);
json rep_document(const Representation& rep);
json bundle_document(const EquivariantBundle& bundle);
json clutch_document(const PointwiseClutchingMap& psi);
json relation_document(const BinaryRelation& b);
json partial_document(const PartialClutchData& data);
json extension_document(const ExtensionClass& w);

Complex complex_from_json(const json& j);
CMatrix matrix_from_json(const json& j);
std::vector<PointPair> pairs_from_json(const json& j);

/// "x,y" -> (x, y).
PointPair parse_pair_key(const std::string& key);
std::string pair_key(int x, int y);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

/// Loads documents and resolves references between them. Parse problems
/// raise ParseError; mathematically invalid objects raise DomainError.
class Workspace {
 public:
  GroupPtr load_group(const std::filesystem::path& path);
  GroupAction load_action(const std::filesystem::path& path);
  Representation load_rep(const std::filesystem::path& path);
  BundlePtr load_bundle(const std::filesystem::path& path);
  PointwiseClutchingMap load_clutch(const std::filesystem::path& path);
  BinaryRelation load_relation(const std::filesystem::path& path);
  PartialClutchData load_partial(const std::filesystem::path& path);

  GroupPtr group_from(const json& j, const std::filesystem::path& base);
  GroupAction action_from(const json& j, const std::filesystem::path& base);
  Representation rep_from(const json& j, const std::filesystem::path& base);
  BundlePtr bundle_from(const json& j, const std::filesystem::path& base);
  PointwiseClutchingMap clutch_from(const json& j, const std::filesystem::path& base);

 private:
  json read(const std::filesystem::path& path);
  // Resolves a reference: strings are file paths, objects are inline.
  std::pair<json, std::filesystem::path> deref(const json& ref, const std::filesystem::path& base);

  std::map<std::string, json> documents_;
};

BinaryRelation relation_from(const json& j);
PartialClutchData partial_from(const json& j);

}  // namespace clutchlab::io
