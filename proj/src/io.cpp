#include "cocompact/io.hpp"

#include "json.hpp"
#include <sstream>

namespace cocompact {

using json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kReserved = "«";

std::string read_id(const json& j, const char* what) {
  if (!j.is_string()) throw Error(ErrorCode::kParse, std::string(what) + " must be a string");
  std::string s = j.get<std::string>();
  if (s.empty()) throw Error(ErrorCode::kParse, std::string(what) + " must be nonempty");
  if (s.find(kReserved) != std::string::npos)
    throw Error(ErrorCode::kReservedId, std::string(what) + " '" + s + "' contains the reserved character «");
  return s;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

json graph_json(const RootedGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.graph.vertices()) vertices.push_back(v);
  json edges = json::array();
  for (const auto& e : g.graph.edges()) edges.push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
  return json{{"vertices", vertices}, {"edges", edges}, {"root", g.root}};
}

json label_json(Label x) { return x == kPlaceholder ? json(nullptr) : json(x); }

json labelling_json(const Labelling& lab) {
  json labels = json::object(), lp = json::object(), m = json::object();
  for (const auto& [v, x] : lab.label) labels[v] = x;
  for (const auto& [v, x] : lab.pred) lp[v] = label_json(x);
  for (const auto& [x, ms] : lab.multisets) {
    json entries = json::array();
    for (const auto& [y, k] : ms) entries.push_back(json::array({label_json(y), k}));
    m[std::to_string(x)] = entries;
  }
  return json{{"labels", labels}, {"lp", lp}, {"M", m}};
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string path_string(const Graph& g, const std::vector<Graph::Index>& path) {
  if (path.empty()) return "ε";
  std::string s;
  for (auto e : path) {
    if (!s.empty()) s += '.';
    s += g.edge(e).id;
  }
  return s;
}

}  // namespace

RootedGraph parse_graph(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kParse, "graph must be a JSON object");
  if (!j.contains("root")) throw Error(ErrorCode::kMissingRoot, "missing root field");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw Error(ErrorCode::kParse, "missing vertices array");
  if (!j.contains("edges") || !j["edges"].is_array()) throw Error(ErrorCode::kParse, "missing edges array");

  std::vector<VertexId> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(read_id(v, "vertex id"));
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("src") || !e.contains("dst"))
      throw Error(ErrorCode::kParse, "edges need id, src and dst");
    edges.push_back({read_id(e["id"], "edge id"), read_id(e["src"], "edge src"), read_id(e["dst"], "edge dst")});
  }
  VertexId root = read_id(j["root"], "root");
  Graph g(std::move(vertices), std::move(edges));
  if (!g.has_vertex(root)) throw Error(ErrorCode::kMissingRoot, "root '" + root + "' is not a declared vertex");
  return RootedGraph{std::move(g), std::move(root)};
}

std::string graph_to_json(const RootedGraph& g) { return dump(graph_json(g)); }

std::string graph_to_dot(const RootedGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& v : g.graph.vertices())
    out << "  " << quote_dot(v) << (v == g.root ? " [shape=doublecircle];\n" : " [shape=circle];\n");
  for (const auto& e : g.graph.edges())
    out << "  " << quote_dot(e.src) << " -> " << quote_dot(e.dst) << " [label=" << quote_dot(e.id) << "];\n";
  out << "}\n";
  return out.str();
}

std::string labelling_to_json(const Labelling& lab) { return dump(labelling_json(lab)); }

Labelling parse_labelling(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
  auto read_label = [](const json& x) -> Label {
    if (x.is_null()) return kPlaceholder;
    if (!x.is_number_integer() || x.get<long long>() < 0)
      throw Error(ErrorCode::kParse, "labels must be nonnegative integers or null");
    return x.get<Label>();
  };
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_object())
    throw Error(ErrorCode::kParse, "labelling needs a labels object");
  Labelling lab;
  for (const auto& [v, x] : j["labels"].items()) lab.label[v] = read_label(x);
  if (j.contains("lp")) {
    if (!j["lp"].is_object()) throw Error(ErrorCode::kParse, "lp must be an object");
    for (const auto& [v, x] : j["lp"].items()) lab.pred[v] = read_label(x);
  }
  if (j.contains("M")) {
    if (!j["M"].is_object()) throw Error(ErrorCode::kParse, "M must be an object");
    for (const auto& [key, entries] : j["M"].items()) {
      Label x;
      try {
        std::size_t used = 0;
        x = std::stoi(key, &used);
        if (used != key.size() || x < 0) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParse, "M keys must be label ids");
      }
      Multiset<Label> m;
      if (!entries.is_array()) throw Error(ErrorCode::kParse, "M entries must be arrays");
      for (const auto& pair : entries) {
        if (!pair.is_array() || pair.size() != 2 || !pair[1].is_number_integer() || pair[1].get<long long>() < 1)
          throw Error(ErrorCode::kParse, "M entries must be [label, multiplicity >= 1]");
        m.add(read_label(pair[0]), pair[1].get<long long>());
      }
      lab.multisets[x] = std::move(m);
    }
  }
  return lab;
}

std::string decision_to_json(const Decision& d) {
  json j{{"verdict", to_string(d.verdict)}};
  if (d.labelling) {
    json body = labelling_json(*d.labelling);
    j["labels"] = body["labels"];
    j["lp"] = body["lp"];
    j["M"] = body["M"];
    j["witness"] = nullptr;
  } else {
    j["labels"] = json::object();
    j["lp"] = json::object();
    j["M"] = json::object();
    j["witness"] = d.witness;
  }
  if (!d.stripped.empty()) j["stripped"] = d.stripped;
  return dump(j);
}

std::string verification_to_json(const Verification& v) {
  json violations = json::array();
  for (const auto& x : v.violations)
    violations.push_back({{"vertex", x.vertex}, {"condition", x.condition}, {"detail", x.detail}});
  return dump(json{{"actual", v.ok}, {"violations", violations}});
}

std::string refine_outcome_to_json(const Outcome<Labelling>& outcome) {
  if (const auto* f = std::get_if<Failure>(&outcome))
    return dump(json{{"found", false}, {"vertex", f->vertex}, {"reason", f->reason}});
  json j = labelling_json(std::get<Labelling>(outcome));
  j["found"] = true;
  return dump(j);
}

std::string quotient_to_json(const RootedGraph& q, const Homomorphism& projection) {
  json blocks = json::object();
  for (const auto& [v, b] : projection.vertices) blocks[v] = b;
  return dump(json{{"graph", graph_json(q)}, {"blocks", blocks}});
}

std::string tree_to_json(const Graph& g, const TruncatedTree& t) {
  json nodes = json::array(), edges = json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    nodes.push_back({{"id", i}, {"path", path_string(g, n.path)}, {"vertex", g.vertex(n.vertex)},
                     {"depth", n.depth}, {"truncated", n.depth == t.depth}});
    if (n.parent)
      edges.push_back({{"parent", *n.parent}, {"child", i}, {"edge", g.edge(*n.edge).id},
                       {"tag", std::string(1, static_cast<char>(n.tag))}});
  }
  return dump(json{{"depth", t.depth}, {"nodes", nodes}, {"edges", edges}});
}

std::string tree_to_dot(const Graph& g, const TruncatedTree& t) {
  std::ostringstream out;
  out << "digraph T {\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    out << "  n" << i << " [label=" << quote_dot(g.vertex(n.vertex))
        << (i == 0 ? ", shape=doublecircle" : "") << (n.depth == t.depth ? ", style=dashed" : "")
        << "];\n";
  }
  for (std::size_t i = 1; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    out << "  n" << *n.parent << " -> n" << i << " [label="
        << quote_dot(std::string(1, static_cast<char>(n.tag)) + g.edge(*n.edge).id) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string probe_to_csv(const std::vector<std::size_t>& counts) {
  std::string out = "L,count\n";
  for (std::size_t l = 0; l < counts.size(); ++l) out += std::to_string(l) + "," + std::to_string(counts[l]) + "\n";
  return out;
}

}  // namespace cocompact
