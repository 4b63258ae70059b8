#include "dqwalk/graph_io.hpp"

#include "dqwalk/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dqw {

namespace {

using nlohmann::json;

int require_int(const json& value, const std::string& what) {
  if (!value.is_number_integer())
    throw ValidationError("graph JSON: " + what + " must be an integer");
  return value.get<int>();
}

}  // namespace

NamedGraph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("graph JSON: parse failure: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("graph JSON: top level must be an object");
  if (!doc.contains("n")) throw ValidationError("graph JSON: missing field \"n\"");
  if (!doc.contains("edges")) throw ValidationError("graph JSON: missing field \"edges\"");

  const int n = require_int(doc["n"], "\"n\"");
  if (!doc["edges"].is_array()) throw ValidationError("graph JSON: \"edges\" must be an array");

  std::vector<std::pair<int, int>> edges;
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw ValidationError("graph JSON: each edge must be a 2-element array");
    edges.emplace_back(require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint"));
  }

  NamedGraph named;
  if (doc.contains("family") && doc["family"].is_string())
    named.family = doc["family"].get<std::string>();
  named.graph = make_graph(n, edges);
  return named;
}

NamedGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return graph_from_json(buffer.str());
}

std::string graph_to_json(const Graph& g, const std::string& family) {
  json doc;
  json edges = json::array();
  for (const auto& [a, b] : edge_list(g)) edges.push_back(json::array({a, b}));
  doc["edges"] = std::move(edges);
  if (!family.empty()) doc["family"] = family;
  doc["n"] = g.n;
  return doc.dump(2) + "\n";
}

void save_graph(const Graph& g, const std::string& family, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write graph file: " + path.string());
  out << graph_to_json(g, family);
  if (!out) throw ValidationError("failed while writing graph file: " + path.string());
}

}  // namespace dqw
