#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cocompact/graph.hpp"

namespace cocompact {

// How child tags are rendered in a code. kRerooted treats a rerooted tree as
// the plain rooted tree it is, so every child reads '+'. kOriginal marks
// edges that run against their orientation in the original tree with '-'.
enum class Orientation { kRerooted, kOriginal };

enum class Tag : char { kForward = '+', kReverse = '-' };

struct TreeNode {
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  Graph::Index vertex = 0;              // underlying graph vertex
  std::optional<Graph::Index> edge;     // underlying graph edge to the parent
  Tag tag = Tag::kForward;              // orientation of that edge
  std::size_t depth = 0;
  std::vector<Graph::Index> path;       // the node as a path from the graph root
};

// Node 0 is the root. Every node is at depth <= `depth`; nodes at exactly
// `depth` are truncation leaves.
struct TruncatedTree {
  std::vector<TreeNode> nodes;
  std::size_t depth = 0;
};

struct TreeCode {
  std::string code;
  friend bool operator==(const TreeCode&, const TreeCode&) = default;
  friend auto operator<=>(const TreeCode&, const TreeCode&) = default;
};

inline constexpr const char* kTruncatedCode = "⊥";
inline constexpr const char* kLeafCode = "()";

TruncatedTree unfold(const RootedGraph& g, std::size_t depth);

// Re-roots an explicit truncated tree at one of its nodes. The source tree
// must reach at least `depth` beyond that node on every side:
// t.nodes[at].depth + depth <= t.depth.
TruncatedTree reroot_tree(const TruncatedTree& t, std::size_t at, std::size_t depth);

TreeCode code(const TruncatedTree& t, Orientation orientation = Orientation::kRerooted);

// Hash-consed code nodes. Two ids are equal exactly when the rendered codes
// are equal.
class CodeTable {
 public:
  using Id = std::uint32_t;
  static constexpr Id kTruncated = 0;
  static constexpr Id kLeaf = 1;

  CodeTable();
  Id intern(std::vector<std::pair<char, Id>> children);
  std::string render(Id id) const;
  std::size_t size() const { return nodes_.size(); }

 private:
  std::map<std::vector<std::pair<char, Id>>, Id> index_;
  std::vector<std::vector<std::pair<char, Id>>> nodes_;
};

// Code of the unfolding of g at v truncated at depth, with edges in
// `reversed` (indexed by edge) tagged '-' under kOriginal.
CodeTable::Id graph_code(CodeTable& table, const Graph& g, Graph::Index v, std::size_t depth,
                         const std::vector<bool>& reversed, Orientation orientation);

// The tree T(G,R)^p realized as the unfolding of G^p. Tags mark the reversed
// prefix chain.
TruncatedTree unfold_rerooted(const RootedGraph& g, const Path& p, std::size_t depth);

TreeCode rerooted_code(const RootedGraph& g, const Path& p, std::size_t depth,
                       Orientation orientation = Orientation::kRerooted);

// counts[L] = number of distinct rerooted codes among paths of length <= L.
std::vector<std::size_t> probe_classes(const RootedGraph& g, std::size_t max_len,
                                       std::size_t depth);

}  // namespace cocompact
