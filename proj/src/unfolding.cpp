#include "cocompact/unfolding.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace cocompact {

TruncatedTree unfold(const RootedGraph& g, std::size_t depth) {
  const Graph& graph = g.graph;
  TruncatedTree t;
  t.depth = depth;
  TreeNode root;
  root.vertex = g.root_index();
  t.nodes.push_back(std::move(root));
  // Nodes are appended level by level, so a parent always precedes its children.
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (t.nodes[i].depth == depth) continue;
    for (auto e : graph.out_edges(t.nodes[i].vertex)) {
      TreeNode child;
      child.parent = i;
      child.vertex = graph.dst(e);
      child.edge = e;
      child.depth = t.nodes[i].depth + 1;
      child.path = t.nodes[i].path;
      child.path.push_back(e);
      t.nodes[i].children.push_back(t.nodes.size());
      t.nodes.push_back(std::move(child));
    }
  }
  return t;
}

TruncatedTree reroot_tree(const TruncatedTree& t, std::size_t at, std::size_t depth) {
  if (at >= t.nodes.size())
    throw Error(ErrorCode::kInvalidArgument, "reroot_tree: node out of range");
  if (t.nodes[at].depth + depth > t.depth)
    throw Error(ErrorCode::kInvalidArgument, "reroot_tree: source tree is too shallow");

  TruncatedTree out;
  out.depth = depth;
  auto copy_of = [&](std::size_t src) {
    TreeNode n;
    n.vertex = t.nodes[src].vertex;
    n.path = t.nodes[src].path;
    return n;
  };
  out.nodes.push_back(copy_of(at));
  std::vector<std::size_t> origin{at};
  std::vector<std::optional<std::size_t>> visited_from{std::nullopt};

  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    if (out.nodes[i].depth == depth) continue;
    const std::size_t src = origin[i];
    auto add = [&](std::size_t neighbour, Tag tag, std::optional<Graph::Index> edge) {
      if (visited_from[i] && *visited_from[i] == neighbour) return;
      TreeNode n = copy_of(neighbour);
      n.parent = i;
      n.edge = edge;
      n.tag = tag;
      n.depth = out.nodes[i].depth + 1;
      out.nodes[i].children.push_back(out.nodes.size());
      out.nodes.push_back(std::move(n));
      origin.push_back(neighbour);
      visited_from.push_back(src);
    };
    // Moving to the old parent runs against the original tree edge.
    if (auto p = t.nodes[src].parent) add(*p, Tag::kReverse, t.nodes[src].edge);
    for (auto c : t.nodes[src].children) add(c, Tag::kForward, t.nodes[c].edge);
  }
  return out;
}

TreeCode code(const TruncatedTree& t, Orientation orientation) {
  std::vector<std::string> codes(t.nodes.size());
  for (std::size_t i = t.nodes.size(); i-- > 0;) {
    const TreeNode& n = t.nodes[i];
    if (n.depth == t.depth) {
      codes[i] = kTruncatedCode;
      continue;
    }
    std::vector<std::string> parts;
    for (auto c : n.children) {
      char tag = orientation == Orientation::kOriginal ? static_cast<char>(t.nodes[c].tag) : '+';
      parts.push_back(tag + std::move(codes[c]));
    }
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    s += ")";
    codes[i] = std::move(s);
  }
  return TreeCode{codes.empty() ? std::string(kTruncatedCode) : codes[0]};
}

CodeTable::CodeTable() {
  nodes_.emplace_back();  // kTruncated
  nodes_.emplace_back();  // kLeaf
  index_.emplace(std::vector<std::pair<char, Id>>{}, kLeaf);
}

CodeTable::Id CodeTable::intern(std::vector<std::pair<char, Id>> children) {
  std::sort(children.begin(), children.end());
  auto [it, inserted] = index_.try_emplace(children, static_cast<Id>(nodes_.size()));
  if (inserted) nodes_.push_back(std::move(children));
  return it->second;
}

std::string CodeTable::render(Id id) const {
  if (id == kTruncated) return kTruncatedCode;
  std::vector<std::string> parts;
  for (const auto& [tag, child] : nodes_.at(id)) parts.push_back(tag + render(child));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (auto& p : parts) s += p;
  return s + ")";
}

namespace {

class GraphCoder {
 public:
  GraphCoder(CodeTable& table, const Graph& g, const std::vector<bool>& reversed,
             Orientation orientation, std::size_t depth)
      : table_(table), g_(g), reversed_(reversed), orientation_(orientation),
        memo_(g.vertex_count() * (depth + 1), kUnset), stride_(depth + 1) {}

  CodeTable::Id at(Graph::Index v, std::size_t remaining) {
    if (remaining == 0) return CodeTable::kTruncated;
    auto& slot = memo_[v * stride_ + remaining];
    if (slot != kUnset) return slot;
    std::vector<std::pair<char, CodeTable::Id>> children;
    for (auto e : g_.out_edges(v)) {
      char tag = orientation_ == Orientation::kOriginal && reversed_[e] ? '-' : '+';
      children.emplace_back(tag, at(g_.dst(e), remaining - 1));
    }
    slot = table_.intern(std::move(children));
    return slot;
  }

 private:
  static constexpr CodeTable::Id kUnset = static_cast<CodeTable::Id>(-1);
  CodeTable& table_;
  const Graph& g_;
  const std::vector<bool>& reversed_;
  Orientation orientation_;
  std::vector<CodeTable::Id> memo_;
  std::size_t stride_;
};

std::vector<bool> reversed_mask(const Rerooting& r) {
  const Graph& g = r.graph.graph;
  std::vector<bool> mask(g.edge_count(), false);
  for (const auto& id : r.reversed_edges) mask[g.edge_index(id)] = true;
  return mask;
}

}  // namespace

CodeTable::Id graph_code(CodeTable& table, const Graph& g, Graph::Index v, std::size_t depth,
                         const std::vector<bool>& reversed, Orientation orientation) {
  GraphCoder coder(table, g, reversed, orientation, depth);
  return coder.at(v, depth);
}

TruncatedTree unfold_rerooted(const RootedGraph& g, const Path& p, std::size_t depth) {
  Rerooting r = reroot_detailed(g, p);
  TruncatedTree t = unfold(r.graph, depth);
  auto mask = reversed_mask(r);
  for (auto& n : t.nodes)
    if (n.edge && mask[*n.edge]) n.tag = Tag::kReverse;
  return t;
}

TreeCode rerooted_code(const RootedGraph& g, const Path& p, std::size_t depth,
                       Orientation orientation) {
  Rerooting r = reroot_detailed(g, p);
  CodeTable table;
  auto id = graph_code(table, r.graph.graph, r.graph.root_index(), depth, reversed_mask(r),
                       orientation);
  return TreeCode{table.render(id)};
}

std::vector<std::size_t> probe_classes(const RootedGraph& g, std::size_t max_len,
                                       std::size_t depth) {
  CodeTable table;
  std::set<CodeTable::Id> seen;
  std::vector<std::size_t> counts(max_len + 1, 0);
  std::size_t len = 0;
  for (const Path& p : enumerate_paths(g, max_len)) {
    while (len < p.length()) counts[len++] = seen.size();
    Rerooting r = reroot_detailed(g, p);
    seen.insert(graph_code(table, r.graph.graph, r.graph.root_index(), depth, reversed_mask(r),
                           Orientation::kRerooted));
  }
  while (len <= max_len) counts[len++] = seen.size();
  return counts;
}

}  // namespace cocompact
