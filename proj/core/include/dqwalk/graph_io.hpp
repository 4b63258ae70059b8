#pragma once

#include "dqwalk/graph.hpp"

#include <filesystem>
#include <string>

namespace dqw {

// A graph together with the optional family tag carried in its JSON file.
struct NamedGraph {
  Graph graph;
  std::string family;  // empty when unknown
};

// Graph JSON: {"n": <int>, "edges": [[a,b],...]} with 0-indexed vertices and
// each unordered pair listed once. An optional "family" string is kept as
// metadata. Duplicate edges, self-loops, out-of-range indices and
// non-regular graphs are rejected with a message.
NamedGraph graph_from_json(const std::string& text);
NamedGraph load_graph(const std::filesystem::path& path);

std::string graph_to_json(const Graph& g, const std::string& family = {});
void save_graph(const Graph& g, const std::string& family, const std::filesystem::path& path);

}  // namespace dqw
