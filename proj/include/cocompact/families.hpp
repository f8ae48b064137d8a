#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cocompact/graph.hpp"
#include "cocompact/labelling.hpp"
#include "cocompact/nec.hpp"

namespace cocompact {

// k_0 ... k_{N-1}, all >= 1.
using KSequence = std::vector<int>;

// Focal unfolding cycle on R, v_0..v_{N-1}, w_0..w_{N-1}. Edge ids spell the
// (source, target, index) triples, e.g. "v0>v1#2". The root has k_0 edges to
// v_1 and one to w_{N-1}. Throws kInvalidArgument unless k_0 > 1.
RootedGraph gen_focal(const KSequence& ks);
// Same vertex and cycle edges with an arbitrary number of root edges to v_1.
RootedGraph gen_focal_raw(const KSequence& ks, int root_multiplicity);

// Cycle v_0..v_{N-1} with mult(i) parallel edges v_i -> v_{i+1}; indices not
// in `heavy` get multiplicity 1. The root has mult(0)+1 edges to v_1.
RootedGraph gen_circular(int n, const std::map<int, int>& heavy);
RootedGraph gen_circular_raw(int n, const std::map<int, int>& heavy, int root_multiplicity);

std::optional<int> is_periodic(const KSequence& ks);
bool is_full_of_ones(const KSequence& ks);

struct PeriodReduction {
  KSequence reduced;
  Homomorphism map;  // gen_focal(ks) -> gen_focal(reduced)
};
PeriodReduction reduce_focal_period(const KSequence& ks);

// The relation w_i ~ v_{N-i mod N} on gen_focal(ks), root a singleton.
VertexPartition mirror_partition(const Graph& focal, const KSequence& ks);

Labelling focal_labelling(const KSequence& ks);
// n = 1, or n even with heavy indices only at 0 and n/2.
Labelling circular_labelling(int n, const std::map<int, int>& heavy);

// Root without in-edges, all root edges into one vertex, and the other
// vertices forming one directed cycle.
bool is_circular(const RootedGraph& g);

}  // namespace cocompact
