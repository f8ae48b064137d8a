#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cocompact/graph.hpp"
#include "cocompact/labelling.hpp"
#include "cocompact/nec.hpp"
#include "cocompact/unfolding.hpp"

namespace cocompact {

// {"vertices":[...],"edges":[{"id","src","dst"}...],"root":...}. Rootedness
// is not checked. Throws kParse, kDuplicateVertex, kDuplicateEdge,
// kDanglingEndpoint, kMissingRoot or kReservedId.
RootedGraph parse_graph(std::string_view text);

// Serializations are deterministic; JSON output ends with a newline.
std::string graph_to_json(const RootedGraph& g);
std::string graph_to_dot(const RootedGraph& g);

// {"labels":{v:x},"lp":{v:x|null},"M":{"x":[[y,m]...]}}; null is the
// placeholder.
std::string labelling_to_json(const Labelling& lab);
Labelling parse_labelling(std::string_view text);

std::string decision_to_json(const Decision& d);
std::string verification_to_json(const Verification& v);
std::string refine_outcome_to_json(const Outcome<Labelling>& outcome);
std::string quotient_to_json(const RootedGraph& q, const Homomorphism& projection);

std::string tree_to_json(const Graph& g, const TruncatedTree& t);
std::string tree_to_dot(const Graph& g, const TruncatedTree& t);

std::string probe_to_csv(const std::vector<std::size_t>& counts);

}  // namespace cocompact
