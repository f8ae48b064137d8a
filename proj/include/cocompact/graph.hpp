#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cocompact {

using VertexId = std::string;
using EdgeId = std::string;

enum class ErrorCode {
  kParse,
  kDuplicateVertex,
  kDuplicateEdge,
  kDanglingEndpoint,
  kMissingRoot,
  kReservedId,
  kUnknownVertex,
  kUnknownEdge,
  kUnreachable,
  kInvalidPath,
  kInvalidLabelling,
  kNotNec,
  kNotHomomorphism,
  kGuardExceeded,
  kInvalidArgument,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Edge {
  EdgeId id;
  VertexId src;
  VertexId dst;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable directed multigraph. Vertices and edges are stored sorted by id,
// so an index doubles as a position in the canonical order.
class Graph {
 public:
  using Index = std::size_t;

  Graph() = default;
  // Throws kDuplicateVertex, kDuplicateEdge or kDanglingEndpoint.
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }

  const VertexId& vertex(Index v) const { return vertices_[v]; }
  const Edge& edge(Index e) const { return edges_[e]; }
  Index src(Index e) const { return src_[e]; }
  Index dst(Index e) const { return dst_[e]; }

  std::optional<Index> find_vertex(std::string_view id) const;
  std::optional<Index> find_edge(std::string_view id) const;
  // Throw kUnknownVertex / kUnknownEdge.
  Index vertex_index(std::string_view id) const;
  Index edge_index(std::string_view id) const;
  bool has_vertex(std::string_view id) const { return find_vertex(id).has_value(); }

  // Out- and in-edges of a vertex, ascending by edge id.
  std::span<const Index> out_edges(Index v) const { return out_[v]; }
  std::span<const Index> in_edges(Index v) const { return in_[v]; }
  std::size_t out_degree(Index v) const { return out_[v].size(); }
  std::size_t in_degree(Index v) const { return in_[v].size(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<Index> src_, dst_;
  std::vector<std::vector<Index>> out_, in_;
  std::map<VertexId, Index, std::less<>> vertex_index_;
  std::map<EdgeId, Index, std::less<>> edge_index_;
};

// A graph with a distinguished root. Rootedness (every vertex reachable from
// the root) is only guaranteed for values returned by validate_rooted and by
// the constructions in this library.
struct RootedGraph {
  Graph graph;
  VertexId root;
  Graph::Index root_index() const { return graph.vertex_index(root); }
  friend bool operator==(const RootedGraph&, const RootedGraph&) = default;
};

struct Path {
  VertexId origin;
  std::vector<EdgeId> edges;
  std::size_t length() const { return edges.size(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

// "ε_<origin>" for the empty path, otherwise the edge ids joined by '.'.
std::string to_string(const Path& p);

// Throws kInvalidPath unless p starts at p.origin and its edges compose.
void check_path(const Graph& g, const Path& p);
bool is_valid_path(const Graph& g, const Path& p);
// Terminal vertex T(p).
VertexId terminal(const Graph& g, const Path& p);

RootedGraph validate_rooted(Graph g, const VertexId& root);

std::vector<VertexId> sinks(const Graph& g);
std::vector<VertexId> sources(const Graph& g);

std::vector<Graph::Index> reachable_from(const Graph& g, Graph::Index v);
Graph reachable_subgraph(const Graph& g, std::string_view v);
// Subgraph on the vertices with keep[v] set; edges need both endpoints kept.
Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep);
Graph without_vertex(const Graph& g, std::string_view v);

// Paths from the root with at most max_len edges, ordered by length and then
// lexicographically by edge id sequence.
std::vector<Path> enumerate_paths(const RootedGraph& g, std::size_t max_len);

// G^p together with the bookkeeping needed to tag the reversed chain.
struct Rerooting {
  RootedGraph graph;
  // prefixes[k] is the id of the vertex standing for the length-k prefix.
  std::vector<VertexId> prefixes;
  // Ids of the reversed edges (qe, q), sorted.
  std::vector<EdgeId> reversed_edges;
};

Rerooting reroot_detailed(const RootedGraph& g, const Path& p);
RootedGraph reroot(const RootedGraph& g, const Path& p);

// Root-preserving isomorphism respecting edge multiplicities, as a map from
// vertices of a to vertices of b. Backtracking; intended for small graphs.
std::optional<std::map<VertexId, VertexId>> find_isomorphism(
    const RootedGraph& a, const RootedGraph& b);
bool isomorphic(const RootedGraph& a, const RootedGraph& b);

}  // namespace cocompact
