#include "cocompact/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace cocompact {

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i > 0 && vertices_[i] == vertices_[i - 1])
      throw Error(ErrorCode::kDuplicateVertex, "duplicate vertex id '" + vertices_[i] + "'");
    vertex_index_.emplace(vertices_[i], i);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  src_.reserve(edges_.size());
  dst_.reserve(edges_.size());
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (i > 0 && e.id == edges_[i - 1].id)
      throw Error(ErrorCode::kDuplicateEdge, "duplicate edge id '" + e.id + "'");
    auto s = find_vertex(e.src);
    auto t = find_vertex(e.dst);
    if (!s) throw Error(ErrorCode::kDanglingEndpoint, "edge '" + e.id + "' has undeclared src '" + e.src + "'");
    if (!t) throw Error(ErrorCode::kDanglingEndpoint, "edge '" + e.id + "' has undeclared dst '" + e.dst + "'");
    edge_index_.emplace(e.id, i);
    src_.push_back(*s);
    dst_.push_back(*t);
    out_[*s].push_back(i);
    in_[*t].push_back(i);
  }
}

std::optional<Graph::Index> Graph::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Graph::Index> Graph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

Graph::Index Graph::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + std::string(id) + "'");
}

Graph::Index Graph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw Error(ErrorCode::kUnknownEdge, "unknown edge '" + std::string(id) + "'");
}

std::string to_string(const Path& p) {
  if (p.edges.empty()) return "ε_" + p.origin;
  std::string out;
  for (const auto& e : p.edges) {
    if (!out.empty()) out += '.';
    out += e;
  }
  return out;
}

void check_path(const Graph& g, const Path& p) {
  auto at = g.find_vertex(p.origin);
  if (!at) throw Error(ErrorCode::kInvalidPath, "path origin '" + p.origin + "' is not a vertex");
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    auto e = g.find_edge(p.edges[i]);
    if (!e) throw Error(ErrorCode::kInvalidPath, "path uses unknown edge '" + p.edges[i] + "'");
    if (g.src(*e) != *at)
      throw Error(ErrorCode::kInvalidPath, "path edge " + std::to_string(i) + " ('" + p.edges[i] +
                                               "') does not start at '" + g.vertex(*at) + "'");
    at = g.dst(*e);
  }
}

bool is_valid_path(const Graph& g, const Path& p) {
  try {
    check_path(g, p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

VertexId terminal(const Graph& g, const Path& p) {
  check_path(g, p);
  if (p.edges.empty()) return p.origin;
  return g.edge(g.edge_index(p.edges.back())).dst;
}

std::vector<Graph::Index> reachable_from(const Graph& g, Graph::Index v) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Graph::Index> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto e : g.out_edges(u)) {
      if (!seen[g.dst(e)]) {
        seen[g.dst(e)] = true;
        queue.push_back(g.dst(e));
      }
    }
  }
  std::vector<Graph::Index> out;
  for (Graph::Index i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

RootedGraph validate_rooted(Graph g, const VertexId& root) {
  auto r = g.find_vertex(root);
  if (!r) throw Error(ErrorCode::kMissingRoot, "root '" + root + "' is not a declared vertex");
  std::vector<bool> seen(g.vertex_count(), false);
  for (auto v : reachable_from(g, *r)) seen[v] = true;
  std::string missing;
  for (Graph::Index v = 0; v < seen.size(); ++v) {
    if (seen[v]) continue;
    if (!missing.empty()) missing += ", ";
    missing += g.vertex(v);
  }
  if (!missing.empty())
    throw Error(ErrorCode::kUnreachable, "vertices unreachable from root: {" + missing + "}");
  return RootedGraph{std::move(g), root};
}

std::vector<VertexId> sinks(const Graph& g) {
  std::vector<VertexId> out;
  for (Graph::Index v = 0; v < g.vertex_count(); ++v)
    if (g.out_degree(v) == 0) out.push_back(g.vertex(v));
  return out;
}

std::vector<VertexId> sources(const Graph& g) {
  std::vector<VertexId> out;
  for (Graph::Index v = 0; v < g.vertex_count(); ++v)
    if (g.in_degree(v) == 0) out.push_back(g.vertex(v));
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (Graph::Index v = 0; v < g.vertex_count(); ++v)
    if (keep[v]) vertices.push_back(g.vertex(v));
  for (Graph::Index e = 0; e < g.edge_count(); ++e)
    if (keep[g.src(e)] && keep[g.dst(e)]) edges.push_back(g.edge(e));
  return Graph(std::move(vertices), std::move(edges));
}

Graph reachable_subgraph(const Graph& g, std::string_view v) {
  std::vector<bool> keep(g.vertex_count(), false);
  for (auto u : reachable_from(g, g.vertex_index(v))) keep[u] = true;
  return induced_subgraph(g, keep);
}

Graph without_vertex(const Graph& g, std::string_view v) {
  std::vector<bool> keep(g.vertex_count(), true);
  keep[g.vertex_index(v)] = false;
  return induced_subgraph(g, keep);
}

std::vector<Path> enumerate_paths(const RootedGraph& g, std::size_t max_len) {
  const Graph& graph = g.graph;
  // Extending a lexicographically sorted level by out-edges in id order keeps
  // the next level sorted, so no explicit sort is needed.
  struct Frontier {
    std::size_t path;
    Graph::Index at;
  };
  std::vector<Path> out{Path{g.root, {}}};
  std::vector<Frontier> level{{0, g.root_index()}};
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<Frontier> next;
    for (const auto& f : level) {
      for (auto e : graph.out_edges(f.at)) {
        Path p = out[f.path];
        p.edges.push_back(graph.edge(e).id);
        out.push_back(std::move(p));
        next.push_back({out.size() - 1, graph.dst(e)});
      }
    }
    level = std::move(next);
  }
  return out;
}

namespace {

bool has_id_prefix(const Graph& g, std::string_view prefix) {
  for (const auto& v : g.vertices())
    if (v.starts_with(prefix)) return true;
  for (const auto& e : g.edges())
    if (e.id.starts_with(prefix)) return true;
  return false;
}

// "«p»" unless the graph already uses it (a graph that is itself a rerooting),
// then "«p2»", "«p3»", ...
std::string fresh_marker(const Graph& g) {
  for (int i = 1;; ++i) {
    std::string marker = i == 1 ? "«p»" : "«p" + std::to_string(i) + "»";
    if (!has_id_prefix(g, marker)) return marker;
  }
}

}  // namespace

Rerooting reroot_detailed(const RootedGraph& g, const Path& p) {
  const Graph& graph = g.graph;
  if (p.origin != g.root)
    throw Error(ErrorCode::kInvalidPath, "path must start at the root '" + g.root + "'");
  check_path(graph, p);

  const std::size_t n = p.length();
  const std::string marker = fresh_marker(graph);
  std::vector<Graph::Index> path_edges;
  for (const auto& id : p.edges) path_edges.push_back(graph.edge_index(id));

  Rerooting out;
  std::vector<VertexId> vertices(graph.vertices().begin(), graph.vertices().end());
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  Graph::Index at = g.root_index();
  for (std::size_t k = 0; k <= n; ++k) {
    const VertexId q = marker + ":" + std::to_string(k);
    out.prefixes.push_back(q);
    vertices.push_back(q);
    if (k > 0) {
      const EdgeId rev = q + ">" + std::to_string(k - 1);
      edges.push_back({rev, q, out.prefixes[k - 1]});
      out.reversed_edges.push_back(rev);
    }
    // Exit edges: every out-edge d of T(q) except the next path edge.
    for (auto d : graph.out_edges(at)) {
      if (k < n && d == path_edges[k]) continue;
      edges.push_back({q + "/" + graph.edge(d).id, q, graph.edge(d).dst});
    }
    if (k < n) at = graph.dst(path_edges[k]);
  }
  std::sort(out.reversed_edges.begin(), out.reversed_edges.end());

  Graph full(std::move(vertices), std::move(edges));
  std::vector<bool> keep(full.vertex_count(), false);
  for (auto v : reachable_from(full, full.vertex_index(out.prefixes.back()))) keep[v] = true;
  out.graph = RootedGraph{induced_subgraph(full, keep), out.prefixes.back()};
  return out;
}

RootedGraph reroot(const RootedGraph& g, const Path& p) {
  return reroot_detailed(g, p).graph;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const RootedGraph& a, const RootedGraph& b) : a_(a.graph), b_(b.graph) {
    ma_ = multiplicities(a_);
    mb_ = multiplicities(b_);
    // Map vertices in BFS order from the root so constraints bite early.
    std::vector<bool> seen(a_.vertex_count(), false);
    std::deque<Graph::Index> queue{a.root_index()};
    seen[a.root_index()] = true;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      order_.push_back(u);
      auto visit = [&](Graph::Index w) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      };
      for (auto e : a_.out_edges(u)) visit(a_.dst(e));
      for (auto e : a_.in_edges(u)) visit(a_.src(e));
    }
    for (Graph::Index v = 0; v < a_.vertex_count(); ++v)
      if (!seen[v]) order_.push_back(v);
    map_.assign(a_.vertex_count(), kUnset);
    used_.assign(b_.vertex_count(), false);
    root_b_ = b.root_index();
  }

  std::optional<std::vector<Graph::Index>> run() {
    if (a_.vertex_count() != b_.vertex_count() || a_.edge_count() != b_.edge_count())
      return std::nullopt;
    if (a_.vertex_count() == 0) return std::vector<Graph::Index>{};
    if (!assign(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr Graph::Index kUnset = static_cast<Graph::Index>(-1);

  static std::vector<std::vector<std::size_t>> multiplicities(const Graph& g) {
    std::vector<std::vector<std::size_t>> m(g.vertex_count(), std::vector<std::size_t>(g.vertex_count(), 0));
    for (Graph::Index e = 0; e < g.edge_count(); ++e) ++m[g.src(e)][g.dst(e)];
    return m;
  }

  bool compatible(Graph::Index u, Graph::Index w) const {
    if (a_.out_degree(u) != b_.out_degree(w) || a_.in_degree(u) != b_.in_degree(w)) return false;
    if (ma_[u][u] != mb_[w][w]) return false;
    for (Graph::Index x = 0; x < map_.size(); ++x) {
      if (map_[x] == kUnset) continue;
      if (ma_[u][x] != mb_[w][map_[x]] || ma_[x][u] != mb_[map_[x]][w]) return false;
    }
    return true;
  }

  bool assign(std::size_t pos) {
    if (pos == order_.size()) return true;
    const Graph::Index u = order_[pos];
    for (Graph::Index w = 0; w < b_.vertex_count(); ++w) {
      if (used_[w]) continue;
      if (pos == 0 && w != root_b_) continue;
      if (!compatible(u, w)) continue;
      map_[u] = w;
      used_[w] = true;
      if (assign(pos + 1)) return true;
      map_[u] = kUnset;
      used_[w] = false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::vector<std::size_t>> ma_, mb_;
  std::vector<Graph::Index> order_, map_;
  std::vector<bool> used_;
  Graph::Index root_b_ = 0;
};

}  // namespace

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const RootedGraph& a,
                                                             const RootedGraph& b) {
  auto m = IsoSearch(a, b).run();
  if (!m) return std::nullopt;
  std::map<VertexId, VertexId> out;
  for (Graph::Index v = 0; v < m->size(); ++v) out.emplace(a.graph.vertex(v), b.graph.vertex((*m)[v]));
  return out;
}

bool isomorphic(const RootedGraph& a, const RootedGraph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace cocompact
