#include "cocompact/families.hpp"

#include <string>

namespace cocompact {

namespace {

std::string v(int i) { return "v" + std::to_string(i); }
std::string w(int i) { return "w" + std::to_string(i); }
int mod(int a, int n) { return ((a % n) + n) % n; }

EdgeId edge_id(const std::string& s, const std::string& t, int j) {
  return s + ">" + t + "#" + std::to_string(j);
}

void check_ks(const KSequence& ks) {
  if (ks.empty()) throw Error(ErrorCode::kInvalidArgument, "k-sequence must be nonempty");
  for (int k : ks)
    if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k-sequence entries must be >= 1");
}

int multiplicity(const std::map<int, int>& heavy, int i) {
  auto it = heavy.find(i);
  return it == heavy.end() ? 1 : it->second;
}

void check_circular(int n, const std::map<int, int>& heavy) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "circular graph needs N >= 1");
  for (const auto& [i, m] : heavy) {
    if (i < 0 || i >= n) throw Error(ErrorCode::kInvalidArgument, "multiplicity index out of range");
    if (m < 1) throw Error(ErrorCode::kInvalidArgument, "multiplicities must be >= 1");
  }
}

}  // namespace

RootedGraph gen_focal_raw(const KSequence& ks, int root_multiplicity) {
  check_ks(ks);
  if (root_multiplicity < 0) throw Error(ErrorCode::kInvalidArgument, "root multiplicity must be >= 0");
  const int n = static_cast<int>(ks.size());
  std::vector<VertexId> vertices{"R"};
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    vertices.push_back(v(i));
    vertices.push_back(w(i));
  }
  for (int i = 0; i < n; ++i) {
    const auto next = mod(i + 1, n), prev = mod(i - 1, n);
    for (int j = 1; j <= ks[i]; ++j) edges.push_back({edge_id(v(i), v(next), j), v(i), v(next)});
    for (int j = 1; j <= ks[i] - 1; ++j) edges.push_back({edge_id(w(i), v(next), j), w(i), v(next)});
    edges.push_back({edge_id(w(i), w(prev), 0), w(i), w(prev)});
  }
  const auto first = mod(1, n), last = n - 1;
  for (int j = 1; j <= root_multiplicity; ++j) edges.push_back({edge_id("R", v(first), j), "R", v(first)});
  edges.push_back({edge_id("R", w(last), 1), "R", w(last)});
  return RootedGraph{Graph(std::move(vertices), std::move(edges)), "R"};
}

RootedGraph gen_focal(const KSequence& ks) {
  check_ks(ks);
  if (ks[0] <= 1) throw Error(ErrorCode::kInvalidArgument, "focal cycles require k_0 > 1");
  return gen_focal_raw(ks, ks[0]);
}

RootedGraph gen_circular_raw(int n, const std::map<int, int>& heavy, int root_multiplicity) {
  check_circular(n, heavy);
  if (root_multiplicity < 1) throw Error(ErrorCode::kInvalidArgument, "root multiplicity must be >= 1");
  std::vector<VertexId> vertices{"R"};
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    vertices.push_back(v(i));
    const auto next = mod(i + 1, n);
    for (int j = 1; j <= multiplicity(heavy, i); ++j)
      edges.push_back({edge_id(v(i), v(next), j), v(i), v(next)});
  }
  const auto first = mod(1, n);
  for (int j = 1; j <= root_multiplicity; ++j) edges.push_back({edge_id("R", v(first), j), "R", v(first)});
  return RootedGraph{Graph(std::move(vertices), std::move(edges)), "R"};
}

RootedGraph gen_circular(int n, const std::map<int, int>& heavy) {
  check_circular(n, heavy);
  return gen_circular_raw(n, heavy, multiplicity(heavy, 0) + 1);
}

std::optional<int> is_periodic(const KSequence& ks) {
  const int n = static_cast<int>(ks.size());
  for (int m = 1; m < n; ++m) {
    if (n % m != 0) continue;
    bool shift = true;
    for (int i = 0; i < n && shift; ++i) shift = ks[i] == ks[(i + m) % n];
    if (shift) return m;
  }
  return std::nullopt;
}

bool is_full_of_ones(const KSequence& ks) {
  const int n = static_cast<int>(ks.size());
  for (int i = 1; i < n; ++i) {
    if (n % 2 == 0 && i == n / 2) continue;
    if (ks[i] != 1) return false;
  }
  return true;
}

PeriodReduction reduce_focal_period(const KSequence& ks) {
  check_ks(ks);
  if (ks[0] <= 1) throw Error(ErrorCode::kInvalidArgument, "focal cycles require k_0 > 1");
  const int n = static_cast<int>(ks.size());
  const int m = is_periodic(ks).value_or(n);
  PeriodReduction out;
  out.reduced.assign(ks.begin(), ks.begin() + m);
  auto& phi = out.map;
  phi.vertices.emplace("R", "R");
  for (int i = 0; i < n; ++i) {
    phi.vertices.emplace(v(i), v(i % m));
    phi.vertices.emplace(w(i), w(i % m));
    const auto next = mod(i + 1, n), prev = mod(i - 1, n);
    const auto rnext = mod(i + 1, m), rprev = mod(i - 1, m), ri = i % m;
    for (int j = 1; j <= ks[i]; ++j) phi.edges.emplace(edge_id(v(i), v(next), j), edge_id(v(ri), v(rnext), j));
    for (int j = 1; j <= ks[i] - 1; ++j)
      phi.edges.emplace(edge_id(w(i), v(next), j), edge_id(w(ri), v(rnext), j));
    phi.edges.emplace(edge_id(w(i), w(prev), 0), edge_id(w(ri), w(rprev), 0));
  }
  for (int j = 1; j <= ks[0]; ++j) phi.edges.emplace(edge_id("R", v(mod(1, n)), j), edge_id("R", v(mod(1, m)), j));
  phi.edges.emplace(edge_id("R", w(n - 1), 1), edge_id("R", w(m - 1), 1));
  return out;
}

VertexPartition mirror_partition(const Graph& focal, const KSequence& ks) {
  const int n = static_cast<int>(ks.size());
  std::vector<std::vector<VertexId>> blocks{{"R"}};
  for (int i = 0; i < n; ++i) blocks.push_back({w(i), v(mod(n - i, n))});
  return VertexPartition::from_blocks(focal, blocks);
}

Labelling focal_labelling(const KSequence& ks) {
  check_ks(ks);
  if (ks[0] <= 1) throw Error(ErrorCode::kInvalidArgument, "focal cycles require k_0 > 1");
  const int n = static_cast<int>(ks.size());
  Labelling lab;
  lab.label["R"] = 0;
  for (int i = 0; i < n; ++i) {
    lab.label[v(i)] = i;
    lab.label[w(i)] = i;
    lab.pred[v(i)] = mod(i - 1, n);
    lab.pred[w(i)] = mod(i + 1, n);
    Multiset<Label> m;
    m.add(mod(i + 1, n), ks[i]);
    m.add(mod(i - 1, n), 1);
    lab.multisets[i] = std::move(m);
  }
  return lab;
}

Labelling circular_labelling(int n, const std::map<int, int>& heavy) {
  check_circular(n, heavy);
  Labelling lab;
  if (n == 1) {
    lab.label["R"] = 0;
    lab.label[v(0)] = 0;
    lab.pred[v(0)] = 0;
    lab.multisets[0] = Multiset<Label>{{0, multiplicity(heavy, 0) + 1}};
    return lab;
  }
  if (n % 2 != 0) throw Error(ErrorCode::kInvalidArgument, "shape mismatch: N must be even or 1");
  const int j = n / 2;
  for (int i = 0; i < n; ++i)
    if (i != 0 && i != j && multiplicity(heavy, i) != 1)
      throw Error(ErrorCode::kInvalidArgument,
                  "shape mismatch: multiplicity at " + std::to_string(i) + " must be 1");
  auto fold = [&](int i) { return std::min(i, n - i); };
  lab.label["R"] = 0;
  for (int i = 0; i < n; ++i) {
    lab.label[v(i)] = fold(i);
    lab.pred[v(i)] = fold(mod(i - 1, n));
  }
  lab.multisets[0] = Multiset<Label>{{1, multiplicity(heavy, 0) + 1}};
  lab.multisets[j] = Multiset<Label>{{j - 1, multiplicity(heavy, j) + 1}};
  for (int i = 1; i < j; ++i) lab.multisets[i] = Multiset<Label>{{i + 1, 1}, {i - 1, 1}};
  return lab;
}

bool is_circular(const RootedGraph& g) {
  const Graph& graph = g.graph;
  const Graph::Index r = g.root_index();
  if (graph.in_degree(r) > 0 || graph.out_degree(r) == 0) return false;
  const auto entry = graph.dst(graph.out_edges(r).front());
  for (auto e : graph.out_edges(r))
    if (graph.dst(e) != entry) return false;
  // Follow successors from the entry; every non-root vertex must be visited
  // once and each must point at a single successor.
  std::vector<bool> seen(graph.vertex_count(), false);
  Graph::Index at = entry;
  std::size_t steps = 0;
  while (!seen[at]) {
    seen[at] = true;
    ++steps;
    if (graph.out_degree(at) == 0) return false;
    const auto next = graph.dst(graph.out_edges(at).front());
    for (auto e : graph.out_edges(at))
      if (graph.dst(e) != next) return false;
    if (next == r) return false;
    at = next;
  }
  return at == entry && steps + 1 == graph.vertex_count();
}

}  // namespace cocompact
