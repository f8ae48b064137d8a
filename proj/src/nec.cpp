#include "cocompact/nec.hpp"

#include <algorithm>
#include <set>

namespace cocompact {

VertexPartition::VertexPartition(std::vector<std::size_t> block_of) {
  std::map<std::size_t, std::size_t> renumber;
  block_of_.reserve(block_of.size());
  for (auto b : block_of) {
    auto [it, inserted] = renumber.try_emplace(b, renumber.size());
    if (inserted) blocks_.emplace_back();
    block_of_.push_back(it->second);
    blocks_[it->second].push_back(block_of_.size() - 1);
  }
}

VertexPartition VertexPartition::identity(std::size_t n) {
  std::vector<std::size_t> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = i;
  return VertexPartition(std::move(b));
}

VertexPartition VertexPartition::from_blocks(const Graph& g,
                                             const std::vector<std::vector<VertexId>>& blocks) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> b(g.vertex_count(), kUnset);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) throw Error(ErrorCode::kInvalidArgument, "empty block");
    for (const auto& v : blocks[i]) {
      auto idx = g.vertex_index(v);
      if (b[idx] != kUnset)
        throw Error(ErrorCode::kInvalidArgument, "vertex '" + v + "' is in two blocks");
      b[idx] = i;
    }
  }
  for (Graph::Index v = 0; v < b.size(); ++v)
    if (b[v] == kUnset)
      throw Error(ErrorCode::kInvalidArgument, "vertex '" + g.vertex(v) + "' is in no block");
  return VertexPartition(std::move(b));
}

VertexPartition VertexPartition::merged(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out = block_of_;
  for (auto& x : out)
    if (x == b) x = a;
  return VertexPartition(std::move(out));
}

Graph::Index NecRelation::pair(Graph::Index e, Graph::Index w, const Graph& g) const {
  if (!partition.same_block(g.src(e), w))
    throw Error(ErrorCode::kInvalidArgument, "pair: vertices are not equivalent");
  return order[w][position[e]];
}

namespace {

std::vector<std::size_t> target_blocks(const Graph& g, const std::vector<std::size_t>& block_of,
                                       Graph::Index v) {
  std::vector<std::size_t> out;
  for (auto e : g.out_edges(v)) out.push_back(block_of[g.dst(e)]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VertexPartition coarsest_nec(const Graph& g, const std::vector<VertexId>& fixed) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> block_of(n, 0);
  std::size_t next = 1;
  for (const auto& v : fixed) block_of[g.vertex_index(v)] = next++;
  VertexPartition current(block_of);

  // Each round either splits some block or reaches the fixpoint.
  for (std::size_t round = 0; round <= n; ++round) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> signature;
    std::vector<std::size_t> refined(n);
    std::vector<std::size_t> blocks(n);
    for (Graph::Index v = 0; v < n; ++v) blocks[v] = current.block_of(v);
    for (Graph::Index v = 0; v < n; ++v) {
      auto key = std::make_pair(blocks[v], target_blocks(g, blocks, v));
      refined[v] = signature.try_emplace(std::move(key), signature.size()).first->second;
    }
    VertexPartition next_partition(std::move(refined));
    if (next_partition.block_count() == current.block_count()) return current;
    current = std::move(next_partition);
  }
  throw Error(ErrorCode::kInternal, "coarsest_nec did not stabilize");
}

bool is_nec(const Graph& g, const VertexPartition& p) {
  if (p.size() != g.vertex_count()) return false;
  std::vector<std::size_t> block_of(g.vertex_count());
  for (Graph::Index v = 0; v < g.vertex_count(); ++v) block_of[v] = p.block_of(v);
  for (const auto& block : p.blocks()) {
    auto reference = target_blocks(g, block_of, block.front());
    for (auto v : block)
      if (target_blocks(g, block_of, v) != reference) return false;
  }
  return true;
}

NecRelation build_pairings(const Graph& g, const VertexPartition& p) {
  if (!is_nec(g, p)) throw Error(ErrorCode::kNotNec, "partition is not non-edge-collapsing");
  NecRelation r;
  r.partition = p;
  r.order.resize(g.vertex_count());
  r.position.resize(g.edge_count());
  for (Graph::Index v = 0; v < g.vertex_count(); ++v) {
    auto& out = r.order[v];
    out.assign(g.out_edges(v).begin(), g.out_edges(v).end());
    std::stable_sort(out.begin(), out.end(), [&](Graph::Index a, Graph::Index b) {
      return p.block_of(g.dst(a)) < p.block_of(g.dst(b));
    });
    for (std::size_t k = 0; k < out.size(); ++k) r.position[out[k]] = k;
  }
  return r;
}

Quotient quotient(const Graph& g, const NecRelation& r) {
  const VertexPartition& p = r.partition;
  auto name = [&](std::size_t b) -> const VertexId& { return g.vertex(p.block(b).front()); };
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  Quotient q;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    vertices.push_back(name(b));
    for (auto e : r.order[p.block(b).front()])
      edges.push_back({g.edge(e).id, name(b), name(p.block_of(g.dst(e)))});
  }
  for (Graph::Index v = 0; v < g.vertex_count(); ++v)
    q.projection.vertices.emplace(g.vertex(v), name(p.block_of(v)));
  for (Graph::Index e = 0; e < g.edge_count(); ++e) {
    auto rep = p.block(p.block_of(g.src(e))).front();
    q.projection.edges.emplace(g.edge(e).id, g.edge(r.order[rep][r.position[e]]).id);
  }
  q.graph = Graph(std::move(vertices), std::move(edges));
  return q;
}

RootedGraph quotient_rooted(const RootedGraph& g, const NecRelation& r) {
  Quotient q = quotient(g.graph, r);
  VertexId root = q.projection.vertices.at(g.root);
  return RootedGraph{std::move(q.graph), std::move(root)};
}

RootedGraph coarsest_quotient(const RootedGraph& g, bool fix_root) {
  std::vector<VertexId> fixed;
  if (fix_root) fixed.push_back(g.root);
  auto p = coarsest_nec(g.graph, fixed);
  return quotient_rooted(g, build_pairings(g.graph, p));
}

bool is_non_redundant(const Graph& g, const std::vector<VertexId>& fixed) {
  return coarsest_nec(g, fixed).is_identity();
}

bool unfolding_equivalent(const RootedGraph& g, const RootedGraph& h) {
  RootedGraph qg = coarsest_quotient(g, false);
  RootedGraph qh = coarsest_quotient(h, false);
  for (const auto* q : {&qg, &qh})
    if (q->graph.vertex_count() > kEquivalenceGuard)
      throw Error(ErrorCode::kGuardExceeded,
                  "coarsest quotient has " + std::to_string(q->graph.vertex_count()) +
                      " vertices, more than " + std::to_string(kEquivalenceGuard));
  return isomorphic(qg, qh);
}

std::optional<std::string> covering_defect(const Graph& g, const Graph& h, const Homomorphism& phi) {
  auto image_vertex = [&](Graph::Index v) -> std::optional<Graph::Index> {
    auto it = phi.vertices.find(g.vertex(v));
    if (it == phi.vertices.end()) return std::nullopt;
    return h.find_vertex(it->second);
  };
  std::vector<Graph::Index> fv(g.vertex_count()), fe(g.edge_count());
  for (Graph::Index v = 0; v < g.vertex_count(); ++v) {
    auto w = image_vertex(v);
    if (!w) return "vertex '" + g.vertex(v) + "' has no image in the target graph";
    fv[v] = *w;
  }
  for (Graph::Index e = 0; e < g.edge_count(); ++e) {
    auto it = phi.edges.find(g.edge(e).id);
    if (it == phi.edges.end()) return "edge '" + g.edge(e).id + "' has no image";
    auto f = h.find_edge(it->second);
    if (!f) return "edge '" + g.edge(e).id + "' maps to unknown edge '" + it->second + "'";
    if (h.src(*f) != fv[g.src(e)] || h.dst(*f) != fv[g.dst(e)])
      return "edge '" + g.edge(e).id + "' is not mapped compatibly with its endpoints";
    fe[e] = *f;
  }
  std::vector<bool> hit(h.vertex_count(), false);
  for (auto w : fv) hit[w] = true;
  for (Graph::Index w = 0; w < h.vertex_count(); ++w)
    if (!hit[w]) return "vertex '" + h.vertex(w) + "' of the target is not in the image";
  for (Graph::Index v = 0; v < g.vertex_count(); ++v) {
    std::vector<Graph::Index> images;
    for (auto e : g.out_edges(v)) images.push_back(fe[e]);
    std::sort(images.begin(), images.end());
    std::vector<Graph::Index> expected(h.out_edges(fv[v]).begin(), h.out_edges(fv[v]).end());
    if (images != expected)
      return "out-edges of '" + g.vertex(v) + "' are not mapped bijectively onto those of '" +
             h.vertex(fv[v]) + "'";
  }
  return std::nullopt;
}

NecRelation hom_induced_relation(const Graph& g, const Graph& h, const Homomorphism& phi) {
  if (auto defect = covering_defect(g, h, phi)) throw Error(ErrorCode::kNotHomomorphism, *defect);
  std::vector<std::size_t> block_of(g.vertex_count());
  for (Graph::Index v = 0; v < g.vertex_count(); ++v)
    block_of[v] = h.vertex_index(phi.vertices.at(g.vertex(v)));
  NecRelation r;
  r.partition = VertexPartition(std::move(block_of));
  r.order.resize(g.vertex_count());
  r.position.resize(g.edge_count());
  for (Graph::Index v = 0; v < g.vertex_count(); ++v) {
    auto& out = r.order[v];
    out.assign(g.out_edges(v).begin(), g.out_edges(v).end());
    std::sort(out.begin(), out.end(), [&](Graph::Index a, Graph::Index b) {
      return h.edge_index(phi.edges.at(g.edge(a).id)) < h.edge_index(phi.edges.at(g.edge(b).id));
    });
    for (std::size_t k = 0; k < out.size(); ++k) r.position[out[k]] = k;
  }
  return r;
}

}  // namespace cocompact
