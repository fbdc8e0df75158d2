#include "tset/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tset/error.hpp"

namespace tset {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& why) {
  throw Error(Errc::malformed_document, "malformed relation document: " + why);
}

}  // namespace

std::string to_json(const FiniteTSet& tset) {
  std::string out = "{ \"elements\": [";
  for (std::size_t i = 0; i < tset.size(); ++i) {
    if (i != 0) out += ',';
    out += json(tset.label(i)).dump();
  }
  out += "], \"relation\": [";
  bool first = true;
  for (auto [i, j] : tset.pairs()) {
    if (!first) out += ',';
    first = false;
    out += '[' + json(tset.label(i)).dump() + ',' + json(tset.label(j)).dump() + ']';
  }
  out += "] }";
  return out;
}

FiniteTSet parse_tset(std::string_view text, bool close) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  for (const auto& item : doc.items()) {
    if (item.key() != "elements" && item.key() != "relation") {
      malformed("unknown top-level key '" + item.key() + "'");
    }
  }
  if (!doc.contains("elements")) malformed("missing \"elements\"");
  if (!doc.contains("relation")) malformed("missing \"relation\"");

  const json& elements = doc["elements"];
  if (!elements.is_array()) malformed("\"elements\" must be an array");
  std::vector<std::string> labels;
  for (const json& e : elements) {
    if (!e.is_string()) malformed("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }

  const json& relation = doc["relation"];
  if (!relation.is_array()) malformed("\"relation\" must be an array");
  std::vector<LabelPair> pairs;
  for (const json& p : relation) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      malformed("each relation entry must be a 2-element array of strings");
    }
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }

  return close ? transitive_closure(labels, pairs) : build(labels, pairs);
}

FiniteTSet load_tset(const std::string& path, bool close) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::malformed_document, "cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tset(buffer.str(), close);
}

}  // namespace tset
