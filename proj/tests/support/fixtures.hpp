#pragma once

#include <string>
#include <vector>

#include "cocompact/graph.hpp"

namespace fixtures {

using cocompact::Edge;
using cocompact::Graph;
using cocompact::Path;
using cocompact::RootedGraph;

inline RootedGraph make(std::vector<std::string> vertices, std::vector<Edge> edges, std::string root = "R") {
  return cocompact::validate_rooted(Graph(std::move(vertices), std::move(edges)), root);
}

// R -> a with a self-loop at a.
inline RootedGraph ray() {
  return make({"R", "a"}, {{"e", "R", "a"}, {"l", "a", "a"}});
}

// R with `root_edges` parallel edges to a, a with `loops` self-loops.
inline RootedGraph two_vertex(int root_edges = 3, int loops = 2) {
  std::vector<Edge> edges;
  for (int i = 1; i <= root_edges; ++i) edges.push_back({"r" + std::to_string(i), "R", "a"});
  for (int i = 1; i <= loops; ++i) edges.push_back({"l" + std::to_string(i), "a", "a"});
  return make({"R", "a"}, edges);
}

inline Path path(const RootedGraph& g, std::vector<std::string> edges) { return Path{g.root, std::move(edges)}; }

}  // namespace fixtures
