#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cocompact/graph.hpp"

namespace cocompact {

// Partition of a graph's vertices, addressed by vertex index. Block ids are
// normalized by first occurrence in vertex order, so block 0 contains vertex 0
// and equal partitions compare equal.
class VertexPartition {
 public:
  VertexPartition() = default;
  explicit VertexPartition(std::vector<std::size_t> block_of);

  static VertexPartition identity(std::size_t n);
  static VertexPartition from_blocks(const Graph& g, const std::vector<std::vector<VertexId>>& blocks);

  std::size_t size() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_of(Graph::Index v) const { return block_of_[v]; }
  const std::vector<Graph::Index>& block(std::size_t b) const { return blocks_[b]; }
  const std::vector<std::vector<Graph::Index>>& blocks() const { return blocks_; }
  bool same_block(Graph::Index u, Graph::Index v) const { return block_of_[u] == block_of_[v]; }
  bool is_identity() const { return blocks_.size() == block_of_.size(); }
  // Partition with blocks a and b joined.
  VertexPartition merged(std::size_t a, std::size_t b) const;

  friend bool operator==(const VertexPartition& x, const VertexPartition& y) {
    return x.block_of_ == y.block_of_;
  }

 private:
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<Graph::Index>> blocks_;
};

// A partition with its positional pairings: every vertex's out-edges are
// listed so that the k-th out-edges of equivalent vertices correspond, i.e.
// π_{v,w}(order[v][k]) = order[w][k].
struct NecRelation {
  VertexPartition partition;
  std::vector<std::vector<Graph::Index>> order;
  std::vector<std::size_t> position;  // position[e] = k with order[o(e)][k] = e

  Graph::Index pair(Graph::Index e, Graph::Index w, const Graph& g) const;
};

VertexPartition coarsest_nec(const Graph& g, const std::vector<VertexId>& fixed);
bool is_nec(const Graph& g, const VertexPartition& p);
NecRelation build_pairings(const Graph& g, const VertexPartition& p);

struct Homomorphism {
  std::map<VertexId, VertexId> vertices;
  std::map<EdgeId, EdgeId> edges;
};

struct Quotient {
  Graph graph;
  Homomorphism projection;
};

// Quotient vertices are named by the smallest vertex id of their block; a
// quotient edge carries the id of the corresponding out-edge of that vertex.
Quotient quotient(const Graph& g, const NecRelation& r);
RootedGraph quotient_rooted(const RootedGraph& g, const NecRelation& r);
// Quotient by the coarsest relation; with fix_root the root stays a singleton.
RootedGraph coarsest_quotient(const RootedGraph& g, bool fix_root);

bool is_non_redundant(const Graph& g, const std::vector<VertexId>& fixed);

inline constexpr std::size_t kEquivalenceGuard = 12;
// Throws kGuardExceeded when a coarsest quotient has more than
// kEquivalenceGuard vertices.
bool unfolding_equivalent(const RootedGraph& g, const RootedGraph& h);

// Empty when phi is a surjective homomorphism that is bijective on every
// out-neighbourhood; otherwise a description of the first defect found.
std::optional<std::string> covering_defect(const Graph& g, const Graph& h, const Homomorphism& phi);
NecRelation hom_induced_relation(const Graph& g, const Graph& h, const Homomorphism& phi);

}  // namespace cocompact
