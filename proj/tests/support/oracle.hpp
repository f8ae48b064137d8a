// Independent reference implementations used to derive expected values.
// Nothing here calls into the unfolding, nec or labelling modules.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cocompact/graph.hpp"

namespace oracle {

using cocompact::Edge;
using cocompact::Graph;
using cocompact::Path;
using cocompact::RootedGraph;

// Explicit finite tree; boundary nodes sit at the truncation depth.
struct Tree {
  struct Node {
    std::vector<std::pair<char, int>> kids;
    bool boundary = false;
  };
  std::vector<Node> nodes;
};

// Ball of radius `depth` around node p of T(G,R), built from explicit paths:
// a path's neighbours are its one-edge extensions ('+') and, unless empty,
// the path without its last edge ('-').
inline Tree rerooted_ball(const RootedGraph& g, const Path& p, std::size_t depth) {
  const Graph& graph = g.graph;
  auto end_vertex = [&](const std::vector<std::string>& path) {
    std::string v = g.root;
    for (const auto& e : path)
      for (const auto& edge : graph.edges())
        if (edge.id == e) v = edge.dst;
    return v;
  };
  struct Item {
    std::vector<std::string> path;
    int from;  // node index of the tree parent, -1 for the root
    std::size_t dist;
  };
  Tree t;
  std::vector<Item> items{{p.edges, -1, 0}};
  std::vector<std::vector<std::string>> seen_parent{{}};
  t.nodes.emplace_back();
  for (std::size_t i = 0; i < items.size(); ++i) {
    Item cur = items[i];
    if (cur.dist == depth) {
      t.nodes[i].boundary = true;
      continue;
    }
    auto add = [&](std::vector<std::string> next, char tag) {
      if (cur.from >= 0 && items[cur.from].path == next) return;
      t.nodes[i].kids.emplace_back(tag, static_cast<int>(items.size()));
      items.push_back({std::move(next), static_cast<int>(i), cur.dist + 1});
      t.nodes.emplace_back();
    };
    if (!cur.path.empty()) {
      auto up = cur.path;
      up.pop_back();
      add(up, '-');
    }
    const std::string v = end_vertex(cur.path);
    for (const auto& edge : graph.edges()) {
      if (edge.src != v) continue;
      auto down = cur.path;
      down.push_back(edge.id);
      add(down, '+');
    }
  }
  return t;
}

inline std::string encode(const Tree& t, int node, bool tags) {
  const auto& n = t.nodes[node];
  if (n.boundary) return "⊥";
  std::vector<std::string> parts;
  for (const auto& [tag, kid] : n.kids) parts.push_back((tags ? std::string(1, tag) : "+") + encode(t, kid, tags));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& x : parts) s += x;
  return s + ")";
}

// Rooted tree isomorphism by trying every matching of children.
inline bool isomorphic(const Tree& a, int x, const Tree& b, int y, bool tags) {
  const auto& na = a.nodes[x];
  const auto& nb = b.nodes[y];
  if (na.boundary != nb.boundary) return false;
  if (na.kids.size() != nb.kids.size()) return false;
  std::vector<bool> used(nb.kids.size(), false);
  auto match = [&](auto&& self, std::size_t i) -> bool {
    if (i == na.kids.size()) return true;
    for (std::size_t j = 0; j < nb.kids.size(); ++j) {
      if (used[j]) continue;
      if (tags && na.kids[i].first != nb.kids[j].first) continue;
      if (!isomorphic(a, na.kids[i].second, b, nb.kids[j].second, tags)) continue;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(match, 0);
}

// Number of root paths of each length 0..max_len, by dynamic programming.
inline std::vector<std::uint64_t> count_paths(const RootedGraph& g, std::size_t max_len) {
  std::map<std::string, std::uint64_t> at{{g.root, 1}};
  std::vector<std::uint64_t> out{1};
  for (std::size_t l = 1; l <= max_len; ++l) {
    std::map<std::string, std::uint64_t> next;
    for (const auto& e : g.graph.edges())
      if (auto it = at.find(e.src); it != at.end()) next[e.dst] += it->second;
    std::uint64_t total = 0;
    for (const auto& [v, c] : next) total += c;
    out.push_back(total);
    at = std::move(next);
  }
  return out;
}

// All set partitions of {0..n-1} as restricted growth strings.
inline std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int i, int max_block) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      cur[i] = b;
      self(self, i + 1, std::max(max_block, b));
    }
  };
  if (n == 0) return {{}};
  cur[0] = 0;
  rec(rec, 1, 0);
  return out;
}

// Direct reading of the non-edge-collapsing condition: equivalent vertices
// send equally many edges into every block.
inline bool nec_by_definition(const Graph& g, const std::vector<int>& block_of) {
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = v + 1; w < n; ++w) {
      if (block_of[v] != block_of[w]) continue;
      std::map<int, int> cv, cw;
      for (const auto& e : g.edges()) {
        if (e.src == g.vertex(v)) ++cv[block_of[g.vertex_index(e.dst)]];
        if (e.src == g.vertex(w)) ++cw[block_of[g.vertex_index(e.dst)]];
      }
      if (cv != cw) return false;
    }
  }
  return true;
}

// Whether the vertex partition, read as l (block = label), is an actual
// labelling: the root has no in-edges, each non-root vertex's predecessors
// share one label, and all vertices of a label class agree on
// targets + {l_p} (non-root) or targets (root) as a multiset.
inline bool actual_by_definition(const RootedGraph& g, const std::vector<int>& label) {
  const Graph& h = g.graph;
  const std::size_t n = h.vertex_count();
  const std::size_t r = h.vertex_index(g.root);
  std::vector<std::vector<int>> targets(n);
  std::vector<std::vector<int>> preds(n);
  for (const auto& e : h.edges()) {
    auto s = h.vertex_index(e.src), t = h.vertex_index(e.dst);
    targets[s].push_back(label[t]);
    preds[t].push_back(label[s]);
  }
  if (!preds[r].empty()) return false;
  std::map<int, std::vector<int>> m;
  for (std::size_t v = 0; v < n; ++v) {
    auto key = targets[v];
    if (v != r) {
      if (preds[v].empty()) return false;
      for (int x : preds[v])
        if (x != preds[v].front()) return false;
      key.push_back(preds[v].front());
    }
    std::sort(key.begin(), key.end());
    auto [it, fresh] = m.emplace(label[v], key);
    if (!fresh && it->second != key) return false;
  }
  return true;
}

// All actual labellings of g up to renaming, as restricted growth strings.
inline std::vector<std::vector<int>> actual_partitions(const RootedGraph& g) {
  std::vector<std::vector<int>> out;
  for (auto& p : set_partitions(static_cast<int>(g.graph.vertex_count())))
    if (actual_by_definition(g, p)) out.push_back(std::move(p));
  return out;
}

// Random rooted graph without sinks on at most max_vertices vertices
// ("R", "a", "b", ...), with at most max_edges edges when that is feasible.
struct RandomGraphOptions {
  int max_vertices = 5;
  int max_edges = 10;
  bool root_in_degree_zero = false;
  int min_root_out = 1;
};

inline RootedGraph random_sinkless(std::mt19937& rng, const RandomGraphOptions& opt) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = pick(opt.root_in_degree_zero ? 2 : 1, opt.max_vertices);
  std::vector<std::string> names{"R"};
  for (int i = 1; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(pick(0, i - 1), i);
  auto target = [&]() { return opt.root_in_degree_zero ? pick(1, n - 1) : pick(0, n - 1); };
  std::vector<int> out(n, 0);
  for (auto [s, t] : pairs) ++out[s];
  for (int v = 0; v < n; ++v)
    if (out[v] == 0) {
      pairs.emplace_back(v, target());
      ++out[v];
    }
  while (out[0] < opt.min_root_out) {
    pairs.emplace_back(0, target());
    ++out[0];
  }
  const int total = std::max<int>(pairs.size(), pick(static_cast<int>(pairs.size()), opt.max_edges));
  while (static_cast<int>(pairs.size()) < total) pairs.emplace_back(pick(0, n - 1), target());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    edges.push_back({"e" + std::to_string(i), names[pairs[i].first], names[pairs[i].second]});
  return cocompact::validate_rooted(Graph(names, edges), "R");
}

inline Path random_path(std::mt19937& rng, const RootedGraph& g, std::size_t max_len) {
  Path p{g.root, {}};
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  Graph::Index at = g.root_index();
  for (std::size_t i = 0; i < len && g.graph.out_degree(at) > 0; ++i) {
    auto outs = g.graph.out_edges(at);
    auto e = outs[std::uniform_int_distribution<std::size_t>(0, outs.size() - 1)(rng)];
    p.edges.push_back(g.graph.edge(e).id);
    at = g.graph.dst(e);
  }
  return p;
}

// Every rooted multigraph on n <= max_vertices vertices (root "0") with at
// most max_edges edges, as multisets of ordered vertex pairs.
inline std::vector<RootedGraph> all_small_rooted(int max_vertices, int max_edges) {
  std::vector<RootedGraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    const int kinds = n * n;
    std::vector<int> counts(kinds, 0);
    auto rec = [&](auto&& self, int kind, int left) -> void {
      if (kind == kinds) {
        std::vector<Edge> edges;
        for (int k = 0; k < kinds; ++k)
          for (int c = 0; c < counts[k]; ++c)
            edges.push_back({"e" + std::to_string(edges.size()), names[k / n], names[k % n]});
        Graph g(names, edges);
        if (cocompact::reachable_from(g, 0).size() == static_cast<std::size_t>(n))
          out.push_back(RootedGraph{std::move(g), "0"});
        return;
      }
      for (int c = 0; c <= left; ++c) {
        counts[kind] = c;
        self(self, kind + 1, left - c);
      }
      counts[kind] = 0;
    };
    rec(rec, 0, max_edges);
  }
  return out;
}

}  // namespace oracle
