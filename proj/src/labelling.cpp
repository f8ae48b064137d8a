#include "cocompact/labelling.hpp"

#include <algorithm>

namespace cocompact {

std::set<Label> Labelling::alphabet() const {
  std::set<Label> out;
  for (const auto& [v, x] : label) out.insert(x);
  for (const auto& [x, m] : multisets) out.insert(x);
  return out;
}

bool Labelling::has_placeholder() const {
  for (const auto& [v, x] : pred)
    if (x == kPlaceholder) return true;
  for (const auto& [x, m] : multisets)
    if (m.contains(kPlaceholder)) return true;
  return false;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kCocompact: return "Cocompact";
    case Verdict::kNotCocompact: return "NotCocompact";
    case Verdict::kUnsupported: return "Unsupported";
  }
  return "Unsupported";
}

namespace {

std::string label_name(Label x) { return x == kPlaceholder ? "ρ" : std::to_string(x); }

std::string describe(const Multiset<Label>& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [x, k] : m) {
    if (!first) s += ", ";
    first = false;
    s += "(" + label_name(x) + "," + std::to_string(k) + ")";
  }
  return s + "}";
}

// Domain checks shared by both verifiers. `root` is excluded from l_p.
void check_domains(const Graph& g, const Labelling& lab, const VertexId* root) {
  for (const auto& [v, x] : lab.label)
    if (!g.has_vertex(v))
      throw Error(ErrorCode::kInvalidLabelling, "labelling mentions unknown vertex '" + v + "'");
  for (const auto& [v, x] : lab.pred)
    if (!g.has_vertex(v))
      throw Error(ErrorCode::kInvalidLabelling, "l_p mentions unknown vertex '" + v + "'");
  for (const auto& v : g.vertices()) {
    if (!lab.label.contains(v))
      throw Error(ErrorCode::kInvalidLabelling, "vertex '" + v + "' has no label");
    bool is_root = root && v == *root;
    if (!is_root && !lab.pred.contains(v))
      throw Error(ErrorCode::kInvalidLabelling, "vertex '" + v + "' has no predecessor label");
    if (is_root && lab.pred.contains(v))
      throw Error(ErrorCode::kInvalidLabelling, "the root must not carry a predecessor label");
  }
  const auto alphabet = lab.alphabet();
  auto known = [&](Label x) { return x == kPlaceholder || alphabet.contains(x); };
  for (const auto& [v, x] : lab.label)
    if (x == kPlaceholder)
      throw Error(ErrorCode::kInvalidLabelling, "vertex '" + v + "' is labelled with the placeholder");
  for (const auto& [v, x] : lab.pred)
    if (!known(x))
      throw Error(ErrorCode::kInvalidLabelling, "l_p(" + v + ") = " + label_name(x) + " is not a label");
  for (const auto& [x, m] : lab.multisets)
    for (const auto& [y, k] : m)
      if (!known(y))
        throw Error(ErrorCode::kInvalidLabelling, "M_" + label_name(x) + " references unknown label " + label_name(y));
}

Multiset<Label> target_labels(const Graph& g, const Labelling& lab, Graph::Index v) {
  Multiset<Label> out;
  for (auto e : g.out_edges(v)) out.add(lab.label.at(g.vertex(g.dst(e))));
  return out;
}

const Multiset<Label>& multiset_of(const Labelling& lab, Label x) {
  static const Multiset<Label> kEmpty;
  auto it = lab.multisets.find(x);
  return it == lab.multisets.end() ? kEmpty : it->second;
}

// Conditions 1-3 at every vertex except `root`.
void check_local(const Graph& g, const Labelling& lab, std::optional<Graph::Index> root,
                 bool allow_placeholder, Verification& out) {
  auto fail = [&](const VertexId& v, int condition, std::string detail) {
    out.ok = false;
    out.violations.push_back({v, condition, std::move(detail)});
  };
  for (Graph::Index v = 0; v < g.vertex_count(); ++v) {
    if (root && v == *root) continue;
    const VertexId& id = g.vertex(v);
    const Label x = lab.label.at(id);
    const Label p = lab.pred.at(id);
    const auto& m = multiset_of(lab, x);
    if (p == kPlaceholder && (!allow_placeholder || g.in_degree(v) > 0))
      fail(id, 3, "predecessor label is the unresolved placeholder");
    if (!m.contains(p))
      fail(id, 1, "l_p = " + label_name(p) + " is not in M_" + label_name(x) + " = " + describe(m));
    auto expected = m - Multiset<Label>{{p, 1}};
    auto actual = target_labels(g, lab, v);
    if (actual != expected)
      fail(id, 2, "target labels " + describe(actual) + " differ from M_" + label_name(x) +
                      " minus l_p = " + describe(expected));
    for (auto e : g.in_edges(v)) {
      const Graph::Index u = g.src(e);
      const Label lu = lab.label.at(g.vertex(u));
      if (lu != p) {
        fail(id, 3, "predecessor '" + g.vertex(u) + "' has label " + label_name(lu) +
                        ", expected l_p = " + label_name(p));
        break;
      }
    }
  }
}

}  // namespace

Verification verify_actual(const RootedGraph& g, const Labelling& lab) {
  check_domains(g.graph, lab, &g.root);
  Verification out;
  const Graph::Index r = g.root_index();
  if (g.graph.in_degree(r) > 0) {
    out.ok = false;
    out.violations.push_back({g.root, 0, "root has incoming edges"});
    return out;
  }
  check_local(g.graph, lab, r, false, out);
  const auto& m = multiset_of(lab, lab.label.at(g.root));
  auto actual = target_labels(g.graph, lab, r);
  if (actual != m) {
    out.ok = false;
    out.violations.push_back({g.root, 4, "root target labels " + describe(actual) + " differ from M_" +
                                             label_name(lab.label.at(g.root)) + " = " + describe(m)});
  }
  return out;
}

Verification verify_preactual(const Graph& g, const Labelling& lab) {
  check_domains(g, lab, nullptr);
  Verification out;
  check_local(g, lab, std::nullopt, true, out);
  return out;
}

namespace {

// Shared refinement loop. Every vertex except `root` gets a predecessor slot;
// vertices without predecessors get kPlaceholder.
Outcome<Labelling> refine(const Graph& g, std::optional<Graph::Index> root) {
  const std::size_t n = g.vertex_count();
  std::vector<Label> label(n, 0);
  std::vector<Label> pred(n, kPlaceholder);
  std::size_t classes = n == 0 ? 0 : 1;

  for (std::size_t round = 0; round <= n + 1; ++round) {
    for (Graph::Index v = 0; v < n; ++v) {
      if (root && v == *root) continue;
      pred[v] = kPlaceholder;
      for (auto e : g.in_edges(v)) {
        const Label lu = label[g.src(e)];
        if (pred[v] == kPlaceholder) {
          pred[v] = lu;
        } else if (pred[v] != lu) {
          return Failure{g.vertex(v), "predecessors of '" + g.vertex(v) +
                                          "' carry different labels (" + std::to_string(pred[v]) +
                                          " and " + std::to_string(lu) + ")"};
        }
      }
    }
    std::map<std::vector<Label>, Label> keys;
    std::vector<Label> next(n);
    for (Graph::Index v = 0; v < n; ++v) {
      std::vector<Label> key;
      for (auto e : g.out_edges(v)) key.push_back(label[g.dst(e)]);
      if (!(root && v == *root)) key.push_back(pred[v]);
      std::sort(key.begin(), key.end());
      next[v] = keys.try_emplace(std::move(key), static_cast<Label>(keys.size())).first->second;
    }
    // The keys only depend on the previous labels, so the partitions refine
    // each other and an unchanged class count means a fixpoint.
    const bool stable = keys.size() == classes;
    classes = keys.size();
    if (stable) {
      Labelling out;
      for (Graph::Index v = 0; v < n; ++v) {
        out.label.emplace(g.vertex(v), label[v]);
        if (!(root && v == *root)) out.pred.emplace(g.vertex(v), pred[v]);
      }
      for (Graph::Index v = 0; v < n; ++v) {
        if (out.multisets.contains(label[v])) continue;
        Multiset<Label> m;
        for (auto e : g.out_edges(v)) m.add(label[g.dst(e)]);
        if (!(root && v == *root)) m.add(pred[v]);
        out.multisets.emplace(label[v], std::move(m));
      }
      return out;
    }
    label = std::move(next);
  }
  throw Error(ErrorCode::kInternal, "label refinement did not stabilize");
}

Labelling substitute_placeholder(Labelling lab, Label x) {
  for (auto& [v, p] : lab.pred)
    if (p == kPlaceholder) p = x;
  for (auto& [y, m] : lab.multisets) {
    auto k = m.multiplicity(kPlaceholder);
    if (k == 0) continue;
    m.remove(kPlaceholder, k);
    m.add(x, k);
  }
  return lab;
}

}  // namespace

Outcome<Labelling> preactual_refine(const Graph& g) { return refine(g, std::nullopt); }

Outcome<Labelling> find_actual_labelling(const RootedGraph& g) {
  const Graph::Index r = g.root_index();
  if (g.graph.in_degree(r) > 0) return Failure{g.root, "root has incoming edges"};
  return refine(g.graph, r);
}

Outcome<Labelling> extend_to_root(const RootedGraph& g, const Labelling& pre) {
  const Graph& graph = g.graph;
  const Graph::Index r = g.root_index();
  if (graph.in_degree(r) > 0) return Failure{g.root, "root has incoming edges"};

  Multiset<Label> root_targets;
  std::optional<Label> forced;
  for (auto e : graph.out_edges(r)) {
    const VertexId& t = graph.vertex(graph.dst(e));
    root_targets.add(pre.label.at(t));
    const Label p = pre.pred.at(t);
    if (p == kPlaceholder) continue;
    if (forced && *forced != p)
      return Failure{t, "out-neighbours of the root disagree on the predecessor label (" +
                            std::to_string(*forced) + " and " + std::to_string(p) + ")"};
    forced = p;
  }

  auto attempt = [&](Label x, bool fresh) -> std::optional<Labelling> {
    Labelling lab = substitute_placeholder(pre, x);
    lab.label[g.root] = x;
    if (fresh) lab.multisets[x] = root_targets;
    if (verify_actual(g, lab)) return lab;
    return std::nullopt;
  };

  if (forced) {
    if (auto lab = attempt(*forced, false)) return *lab;
    return Failure{g.root, "root target labels do not match M_" + std::to_string(*forced)};
  }
  // Unconstrained: reuse an existing label if one fits, else a fresh one.
  Label fresh = 0;
  for (Label x : pre.alphabet()) {
    if (auto lab = attempt(x, false)) return *lab;
    fresh = std::max(fresh, x + 1);
  }
  if (auto lab = attempt(fresh, true)) return *lab;
  return Failure{g.root, "no root label makes the labelling actual"};
}

std::optional<RootedGraph> strip_sinks(const RootedGraph& g, std::vector<VertexId>* removed) {
  Graph current = g.graph;
  for (;;) {
    auto s = sinks(current);
    if (s.empty()) break;
    std::vector<bool> keep(current.vertex_count(), true);
    for (const auto& v : s) {
      if (v == g.root) return std::nullopt;
      keep[current.vertex_index(v)] = false;
      if (removed) removed->push_back(v);
    }
    current = induced_subgraph(current, keep);
  }
  return RootedGraph{std::move(current), g.root};
}

Decision decide_cocompact(const RootedGraph& g, DecideOptions options) {
  Decision d;
  RootedGraph work = g;
  if (options.strip_sinks) {
    auto stripped = strip_sinks(g, &d.stripped);
    if (!stripped) {
      d.verdict = Verdict::kUnsupported;
      d.witness = "sink stripping removes the root";
      return d;
    }
    work = std::move(*stripped);
  } else if (auto s = sinks(g.graph); !s.empty()) {
    d.verdict = Verdict::kUnsupported;
    d.witness = "graph has sinks:";
    for (const auto& v : s) d.witness += " " + v;
    return d;
  }
  if (work.graph.in_degree(work.root_index()) > 0) {
    d.verdict = Verdict::kNotCocompact;
    d.witness = "root has incoming edges";
    return d;
  }
  auto outcome = find_actual_labelling(work);
  if (auto* f = std::get_if<Failure>(&outcome)) {
    d.verdict = Verdict::kNotCocompact;
    d.witness = "predecessor labels conflict at vertex " + f->vertex + ": " + f->reason;
    return d;
  }
  auto& lab = std::get<Labelling>(outcome);
  auto check = verify_actual(work, lab);
  if (!check.ok)
    throw Error(ErrorCode::kInternal, "refined labelling fails verification at " +
                                          check.violations.front().vertex);
  d.verdict = Verdict::kCocompact;
  d.labelling = std::move(lab);
  return d;
}

NecRelation relation_from_labelling(const RootedGraph& g, const Labelling& lab) {
  auto check = verify_actual(g, lab);
  if (!check.ok)
    throw Error(ErrorCode::kInvalidLabelling, "labelling is not actual: " + check.violations.front().detail +
                                                  " at " + check.violations.front().vertex);
  // Root gets a key no other vertex can have.
  std::map<std::pair<Label, Label>, std::size_t> keys;
  std::vector<std::size_t> block_of(g.graph.vertex_count());
  for (Graph::Index v = 0; v < g.graph.vertex_count(); ++v) {
    const VertexId& id = g.graph.vertex(v);
    std::pair<Label, Label> key =
        id == g.root ? std::pair<Label, Label>{kPlaceholder - 1, lab.label.at(id)}
                     : std::pair<Label, Label>{lab.pred.at(id), lab.label.at(id)};
    block_of[v] = keys.try_emplace(key, keys.size()).first->second;
  }
  return build_pairings(g.graph, VertexPartition(std::move(block_of)));
}

RootedGraph canonical_graph(const RootedGraph& g, const Labelling& lab) {
  return quotient_rooted(g, relation_from_labelling(g, lab));
}

Labelling lift_labelling(const RootedGraph& g, const NecRelation& r, const Labelling& on_quotient) {
  Quotient q = quotient(g.graph, r);
  RootedGraph qg{q.graph, q.projection.vertices.at(g.root)};
  auto check = verify_actual(qg, on_quotient);
  if (!check.ok)
    throw Error(ErrorCode::kInvalidLabelling, "labelling is not actual on the quotient");
  Labelling out;
  out.multisets = on_quotient.multisets;
  for (const auto& v : g.graph.vertices()) {
    const VertexId& image = q.projection.vertices.at(v);
    out.label.emplace(v, on_quotient.label.at(image));
    if (v != g.root) out.pred.emplace(v, on_quotient.pred.at(image));
  }
  if (!verify_actual(g, out))
    throw Error(ErrorCode::kInternal, "lifted labelling fails verification");
  return out;
}

}  // namespace cocompact
