#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cocompact/graph.hpp"
#include "cocompact/multiset.hpp"
#include "cocompact/nec.hpp"

namespace cocompact {

using Label = std::int32_t;

// Predecessor label of a vertex without predecessors before the root label is
// known. Compares equal only to itself.
inline constexpr Label kPlaceholder = -1;

struct Labelling {
  std::map<VertexId, Label> label;            // l
  std::map<VertexId, Label> pred;             // l_p
  std::map<Label, Multiset<Label>> multisets; // M

  // X: labels used by l together with the labels that own a multiset.
  std::set<Label> alphabet() const;
  std::size_t label_count() const { return alphabet().size(); }
  bool has_placeholder() const;
  friend bool operator==(const Labelling&, const Labelling&) = default;
};

struct Violation {
  VertexId vertex;
  int condition;  // 1: l_p in M, 2: targets, 3: predecessors, 4: root; 0: structural
  std::string detail;
};

struct Verification {
  bool ok = true;
  std::vector<Violation> violations;
  explicit operator bool() const { return ok; }
};

// Both throw kInvalidLabelling when the labelling mentions unknown vertices,
// misses a vertex, or references labels outside its alphabet.
Verification verify_actual(const RootedGraph& g, const Labelling& lab);
// Placeholder predecessor labels are accepted at vertices without
// predecessors.
Verification verify_preactual(const Graph& g, const Labelling& lab);

struct Failure {
  VertexId vertex;
  std::string reason;
};

template <class T>
using Outcome = std::variant<T, Failure>;

// Coarsest pre-actual labelling by fixpoint refinement; vertices without
// predecessors carry kPlaceholder.
Outcome<Labelling> preactual_refine(const Graph& g);
// Completes a pre-actual labelling of g minus its root.
Outcome<Labelling> extend_to_root(const RootedGraph& g, const Labelling& pre);
// Coarsest actual labelling of the whole rooted graph, refining with the root
// as the only vertex without a predecessor slot. Does not look at sinks.
Outcome<Labelling> find_actual_labelling(const RootedGraph& g);

enum class Verdict { kCocompact, kNotCocompact, kUnsupported };
const char* to_string(Verdict v);

struct Decision {
  Verdict verdict = Verdict::kUnsupported;
  std::optional<Labelling> labelling;
  std::string witness;
  // With strip_sinks: vertices removed, in removal order; the verdict refers
  // to the stripped graph.
  std::vector<VertexId> stripped;
};

struct DecideOptions {
  bool strip_sinks = false;
};

Decision decide_cocompact(const RootedGraph& g, DecideOptions options = {});

// Repeatedly deletes sinks. Returns nullopt when the root itself goes.
std::optional<RootedGraph> strip_sinks(const RootedGraph& g, std::vector<VertexId>* removed);

NecRelation relation_from_labelling(const RootedGraph& g, const Labelling& lab);
RootedGraph canonical_graph(const RootedGraph& g, const Labelling& lab);
Labelling lift_labelling(const RootedGraph& g, const NecRelation& r, const Labelling& on_quotient);

}  // namespace cocompact
