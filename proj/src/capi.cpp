#include <cstring>
#include <exception>
#include <string>

#include "cocompact/cocompact.h"
#include "cocompact/families.hpp"
#include "cocompact/io.hpp"
#include "cocompact/labelling.hpp"
#include "cocompact/nec.hpp"
#include "cocompact/unfolding.hpp"

struct cc_graph {
  cocompact::RootedGraph g;
};

namespace {

thread_local std::string last_error;

cc_status status_of(cocompact::ErrorCode code) {
  using cocompact::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return CC_ERR_PARSE;
    case ErrorCode::kDuplicateVertex:
    case ErrorCode::kDuplicateEdge:
    case ErrorCode::kDanglingEndpoint:
    case ErrorCode::kMissingRoot:
    case ErrorCode::kReservedId:
    case ErrorCode::kUnknownVertex:
    case ErrorCode::kUnknownEdge: return CC_ERR_INVALID_GRAPH;
    case ErrorCode::kUnreachable: return CC_ERR_UNREACHABLE;
    case ErrorCode::kInvalidPath: return CC_ERR_INVALID_PATH;
    case ErrorCode::kInvalidLabelling: return CC_ERR_INVALID_LABELLING;
    case ErrorCode::kNotNec:
    case ErrorCode::kNotHomomorphism:
    case ErrorCode::kInvalidArgument: return CC_ERR_INVALID_ARGUMENT;
    case ErrorCode::kGuardExceeded: return CC_ERR_GUARD;
    case ErrorCode::kInternal: return CC_ERR_INTERNAL;
  }
  return CC_ERR_INTERNAL;
}

template <class F>
cc_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return CC_OK;
  } catch (const cocompact::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return CC_ERR_INTERNAL;
  }
}

cc_status null_argument() {
  last_error = "null argument";
  return CC_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cocompact::RootedGraph rooted(const cc_graph* g) {
  return cocompact::validate_rooted(g->g.graph, g->g.root);
}

cocompact::Path make_path(const cocompact::RootedGraph& g, const char* const* path, size_t len) {
  cocompact::Path p{g.root, {}};
  for (size_t i = 0; i < len; ++i) {
    if (!path[i]) throw cocompact::Error(cocompact::ErrorCode::kInvalidArgument, "null path entry");
    p.edges.emplace_back(path[i]);
  }
  return p;
}

}  // namespace

extern "C" {

const char* cc_version(void) { return "0.1.0"; }

const char* cc_last_error(void) { return last_error.c_str(); }

void cc_string_free(char* s) { delete[] s; }

cc_status cc_graph_parse(const char* text, size_t len, cc_graph** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new cc_graph{cocompact::parse_graph(std::string_view(text, len))}; });
}

void cc_graph_free(cc_graph* g) { delete g; }

size_t cc_graph_vertex_count(const cc_graph* g) { return g ? g->g.graph.vertex_count() : 0; }

size_t cc_graph_edge_count(const cc_graph* g) { return g ? g->g.graph.edge_count() : 0; }

cc_status cc_graph_validate(const cc_graph* g) {
  if (!g) return null_argument();
  return guarded([&] { rooted(g); });
}

cc_status cc_graph_render(const cc_graph* g, cc_format format, char** out) {
  if (!g || !out) return null_argument();
  return guarded([&] {
    *out = copy_string(format == CC_FORMAT_DOT ? cocompact::graph_to_dot(g->g) : cocompact::graph_to_json(g->g));
  });
}

cc_status cc_reroot(const cc_graph* g, const char* const* path, size_t path_len, cc_graph** out) {
  if (!g || !out || (path_len > 0 && !path)) return null_argument();
  return guarded([&] {
    auto r = rooted(g);
    *out = new cc_graph{cocompact::reroot(r, make_path(r, path, path_len))};
  });
}

cc_status cc_decide(const cc_graph* g, int strip_sinks, cc_verdict* verdict, char** json) {
  if (!g || !verdict || !json) return null_argument();
  return guarded([&] {
    auto d = cocompact::decide_cocompact(rooted(g), {.strip_sinks = strip_sinks != 0});
    *verdict = static_cast<cc_verdict>(d.verdict);
    *json = copy_string(cocompact::decision_to_json(d));
  });
}

cc_status cc_label(const cc_graph* g, int whole, int* found, char** json) {
  if (!g || !found || !json) return null_argument();
  return guarded([&] {
    auto r = rooted(g);
    auto outcome = cocompact::preactual_refine(whole ? r.graph : cocompact::without_vertex(r.graph, r.root));
    *found = std::holds_alternative<cocompact::Labelling>(outcome) ? 1 : 0;
    *json = copy_string(cocompact::refine_outcome_to_json(outcome));
  });
}

cc_status cc_verify_labelling(const cc_graph* g, const char* labelling, size_t len, int* is_actual,
                              char** report) {
  if (!g || !labelling || !is_actual || !report) return null_argument();
  return guarded([&] {
    auto lab = cocompact::parse_labelling(std::string_view(labelling, len));
    auto v = cocompact::verify_actual(rooted(g), lab);
    *is_actual = v.ok ? 1 : 0;
    *report = copy_string(cocompact::verification_to_json(v));
  });
}

cc_status cc_quotient(const cc_graph* g, int fix_root, cc_graph** quotient, char** blocks) {
  if (!g || !quotient || !blocks) return null_argument();
  return guarded([&] {
    auto r = rooted(g);
    std::vector<cocompact::VertexId> fixed;
    if (fix_root) fixed.push_back(r.root);
    auto rel = cocompact::build_pairings(r.graph, cocompact::coarsest_nec(r.graph, fixed));
    auto q = cocompact::quotient(r.graph, rel);
    cocompact::RootedGraph qg{q.graph, q.projection.vertices.at(r.root)};
    *blocks = copy_string(cocompact::quotient_to_json(qg, q.projection));
    *quotient = new cc_graph{std::move(qg)};
  });
}

cc_status cc_unfold(const cc_graph* g, const char* const* path, size_t path_len, uint32_t depth,
                    cc_format format, char** out) {
  if (!g || !out || (path_len > 0 && !path)) return null_argument();
  return guarded([&] {
    auto r = rooted(g);
    std::string text;
    if (path_len == 0) {
      auto t = cocompact::unfold(r, depth);
      text = format == CC_FORMAT_DOT ? cocompact::tree_to_dot(r.graph, t) : cocompact::tree_to_json(r.graph, t);
    } else {
      auto p = make_path(r, path, path_len);
      auto gp = cocompact::reroot(r, p);
      auto t = cocompact::unfold_rerooted(r, p, depth);
      text = format == CC_FORMAT_DOT ? cocompact::tree_to_dot(gp.graph, t) : cocompact::tree_to_json(gp.graph, t);
    }
    *out = copy_string(text);
  });
}

cc_status cc_rerooted_code(const cc_graph* g, const char* const* path, size_t path_len, uint32_t depth,
                           int original_orientation, char** code) {
  if (!g || !code || (path_len > 0 && !path)) return null_argument();
  return guarded([&] {
    auto r = rooted(g);
    auto orientation = original_orientation ? cocompact::Orientation::kOriginal : cocompact::Orientation::kRerooted;
    *code = copy_string(cocompact::rerooted_code(r, make_path(r, path, path_len), depth, orientation).code);
  });
}

cc_status cc_probe(const cc_graph* g, uint32_t max_len, uint32_t depth, uint64_t* counts) {
  if (!g || !counts) return null_argument();
  return guarded([&] {
    auto c = cocompact::probe_classes(rooted(g), max_len, depth);
    for (size_t i = 0; i < c.size(); ++i) counts[i] = c[i];
  });
}

cc_status cc_gen_focal(const uint32_t* ks, size_t n, int32_t root_mult, cc_graph** out) {
  if (!ks || !out) return null_argument();
  return guarded([&] {
    cocompact::KSequence seq(ks, ks + n);
    *out = new cc_graph{root_mult < 0 ? cocompact::gen_focal(seq) : cocompact::gen_focal_raw(seq, root_mult)};
  });
}

cc_status cc_gen_circular(uint32_t n, const uint32_t* mult, int32_t root_mult, cc_graph** out) {
  if (!out) return null_argument();
  return guarded([&] {
    std::map<int, int> heavy;
    if (mult)
      for (uint32_t i = 0; i < n; ++i) heavy[static_cast<int>(i)] = static_cast<int>(mult[i]);
    auto g = root_mult < 0 ? cocompact::gen_circular(static_cast<int>(n), heavy)
                           : cocompact::gen_circular_raw(static_cast<int>(n), heavy, root_mult);
    *out = new cc_graph{std::move(g)};
  });
}

}  // extern "C"
