#include <doctest.h>

#include "cocompact/families.hpp"
#include "cocompact/labelling.hpp"
#include "cocompact/nec.hpp"
#include "support/oracle.hpp"

using namespace cocompact;

namespace {

std::vector<KSequence> all_sequences(int max_n, int max_k, int min_k0) {
  std::vector<KSequence> out;
  for (int n = 1; n <= max_n; ++n) {
    KSequence ks(n, 1);
    ks[0] = min_k0;
    for (;;) {
      out.push_back(ks);
      int i = n - 1;
      while (i >= 0 && ks[i] == max_k) {
        ks[i] = i == 0 ? min_k0 : 1;
        --i;
      }
      if (i < 0) break;
      ++ks[i];
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("gen_focal shape") {
    auto fc = gen_focal({2, 3, 4});
    CHECK(fc.root == "R");
    CHECK(fc.graph.vertex_count() == 7);
    CHECK(fc.graph.edge_count() == 21);
    CHECK(gen_focal_raw({2, 3, 4}, 3).graph.edge_count() == 22);
    for (const char* id : {"v0>v1#1", "v0>v1#2", "w1>v2#2", "w1>w0#0", "w0>w2#0", "R>v1#2", "R>w2#1"})
      CHECK(fc.graph.has_vertex("R") == fc.graph.find_edge(id).has_value());
    CHECK_FALSE(fc.graph.find_edge("R>v1#3"));
    CHECK(fc.graph.out_degree(fc.root_index()) == 3);
    for (int i = 0; i < 3; ++i) {
      const int k = std::vector<int>{2, 3, 4}[i];
      CHECK(fc.graph.out_degree(fc.graph.vertex_index("v" + std::to_string(i))) == static_cast<std::size_t>(k));
      CHECK(fc.graph.out_degree(fc.graph.vertex_index("w" + std::to_string(i))) == static_cast<std::size_t>(k));
    }
    CHECK(validate_rooted(fc.graph, "R") == fc);
    CHECK_THROWS_AS(gen_focal({1, 2}), Error);
    CHECK_THROWS_AS(gen_focal({}), Error);
    CHECK_THROWS_AS(gen_focal({2, 0}), Error);
  }

  TEST_CASE("gen_focal with N = 1") {
    auto fc = gen_focal({3});
    CHECK(fc.graph.vertex_count() == 3);
    CHECK(fc.graph.find_edge("v0>v0#3"));
    CHECK(fc.graph.find_edge("w0>w0#0"));
    CHECK(fc.graph.find_edge("R>v0#3"));
    CHECK(fc.graph.find_edge("R>w0#1"));
  }

  TEST_CASE("gen_circular shape") {
    auto c = gen_circular(6, {{0, 3}, {3, 2}});
    CHECK(c.graph.vertex_count() == 7);
    CHECK(c.graph.edge_count() == 3 + 2 + 4 + 4);
    CHECK(c.graph.out_degree(c.root_index()) == 4);
    CHECK(is_circular(c));
    CHECK(gen_circular_raw(6, {{0, 3}}, 1).graph.out_degree(0) == 1);
    auto two = gen_circular(1, {{0, 2}});
    CHECK(two.graph.vertex_count() == 2);
    CHECK(is_circular(two));
    CHECK_FALSE(is_circular(gen_focal({2, 3})));
    CHECK_THROWS_AS(gen_circular(0, {}), Error);
    CHECK_THROWS_AS(gen_circular(3, {{3, 2}}), Error);
    CHECK_THROWS_AS(gen_circular(3, {{1, 0}}), Error);
  }

  TEST_CASE("is_periodic and is_full_of_ones") {
    CHECK(is_periodic({2, 3, 2, 3}) == 2);
    CHECK(is_periodic({2, 2, 2}) == 1);
    CHECK(is_periodic({2, 3, 2, 3, 2, 3}) == 2);
    CHECK(is_periodic({2, 1, 2, 2, 1, 2}) == 3);
    CHECK_FALSE(is_periodic({2, 3, 4}));
    CHECK_FALSE(is_periodic({2}));
    CHECK_FALSE(is_periodic({2, 3, 2}));

    CHECK(is_full_of_ones({2, 1, 1, 1}));
    CHECK(is_full_of_ones({2, 1, 5, 1}));
    CHECK(is_full_of_ones({2, 3}));
    CHECK(is_full_of_ones({4}));
    CHECK_FALSE(is_full_of_ones({2, 1, 2}));
    CHECK_FALSE(is_full_of_ones({2, 2, 1, 1}));
  }

  TEST_CASE("period reductions are coverings") {
    for (const auto& ks : all_sequences(6, 3, 2)) {
      auto m = is_periodic(ks);
      auto red = reduce_focal_period(ks);
      CHECK(static_cast<int>(red.reduced.size()) == m.value_or(static_cast<int>(ks.size())));
      auto g = gen_focal(ks);
      auto h = gen_focal(red.reduced);
      CHECK_FALSE(covering_defect(g.graph, h.graph, red.map).has_value());
    }
  }

  TEST_CASE("mirror relation on full-of-ones sequences") {
    for (const auto& ks : all_sequences(5, 3, 2)) {
      auto g = gen_focal(ks);
      auto p = mirror_partition(g.graph, ks);
      CHECK(p.block_count() == ks.size() + 1);
      CHECK(is_nec(g.graph, p) == is_full_of_ones(ks));
      if (!is_full_of_ones(ks)) continue;
      auto q = quotient_rooted(g, build_pairings(g.graph, p));
      CHECK(is_circular(q));
    }
  }

  TEST_CASE("focal_labelling is actual") {
    for (const auto& ks : all_sequences(4, 4, 2)) {
      auto g = gen_focal(ks);
      auto lab = focal_labelling(ks);
      CHECK(lab.label_count() == ks.size());
      CHECK(verify_actual(g, lab).ok);
      CHECK_FALSE(verify_actual(gen_focal_raw(ks, ks[0] + 1), lab).ok);
    }
    CHECK_THROWS_AS(focal_labelling({1, 2}), Error);
  }

  TEST_CASE("circular_labelling is actual on its shape") {
    CHECK(verify_actual(gen_circular(1, {{0, 3}}), circular_labelling(1, {{0, 3}})).ok);
    for (int n : {2, 4, 6})
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          std::map<int, int> heavy{{0, a}, {n / 2, b}};
          auto lab = circular_labelling(n, heavy);
          CHECK(lab.label_count() == static_cast<std::size_t>(n / 2 + 1));
          CHECK(verify_actual(gen_circular(n, heavy), lab).ok);
        }
    CHECK_THROWS_AS(circular_labelling(3, {{0, 2}}), Error);
    CHECK_THROWS_AS(circular_labelling(4, {{1, 2}}), Error);
  }

  TEST_CASE("circular verdicts match the definition-based oracle") {
    for (int n = 1; n <= 5; ++n) {
      const int combos = 1 << n;
      for (int mask = 0; mask < combos; ++mask) {
        std::map<int, int> heavy;
        for (int i = 0; i < n; ++i)
          if (mask & (1 << i)) heavy[i] = 2;
        const int expected_root = (heavy.contains(0) ? 2 : 1) + 1;
        for (int root = 1; root <= 4; ++root) {
          auto g = gen_circular_raw(n, heavy, root);
          auto d = decide_cocompact(g);
          CHECK((d.verdict == Verdict::kCocompact) == !oracle::actual_partitions(g).empty());
          if (root != expected_root) CHECK(d.verdict == Verdict::kNotCocompact);
          const bool shaped =
              n == 1 || (n % 2 == 0 && std::all_of(heavy.begin(), heavy.end(), [&](const auto& kv) {
                                         return kv.first == 0 || kv.first == n / 2;
                                       }));
          if (root == expected_root && shaped) CHECK(d.verdict == Verdict::kCocompact);
          if (root == expected_root && n % 2 == 1 && heavy.size() == 2)
            CHECK(d.verdict == Verdict::kNotCocompact);
        }
      }
    }
  }

  TEST_CASE("focal verdicts match the definition-based oracle") {
    for (const auto& ks : all_sequences(2, 3, 2)) {
      for (int root = 0; root <= 4; ++root) {
        auto g = gen_focal_raw(ks, root);
        auto d = decide_cocompact(g);
        CHECK((d.verdict == Verdict::kCocompact) == !oracle::actual_partitions(g).empty());
        if (root == ks[0]) CHECK(d.verdict == Verdict::kCocompact);
      }
    }
  }
}
