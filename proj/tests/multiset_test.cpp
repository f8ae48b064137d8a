#include <doctest.h>

#include "cocompact/multiset.hpp"

using cocompact::Multiset;

TEST_SUITE("multiset") {
  TEST_CASE("construction drops non-positive multiplicities") {
    Multiset<int> m{{1, 2}, {2, 0}, {3, -1}};
    CHECK(m.multiplicity(1) == 2);
    CHECK_FALSE(m.contains(2));
    CHECK_FALSE(m.contains(3));
    CHECK(m.size() == 2);
    CHECK(m.base_size() == 1);
  }

  TEST_CASE("union and difference") {
    Multiset<int> a{{1, 2}, {2, 1}};
    Multiset<int> b{{1, 1}, {3, 4}};
    CHECK(a + b == Multiset<int>{{1, 3}, {2, 1}, {3, 4}});
    CHECK(a - b == Multiset<int>{{1, 1}, {2, 1}});
    CHECK(b - a == Multiset<int>{{3, 4}});
    CHECK((a - a).empty());
  }

  TEST_CASE("subset relations") {
    Multiset<int> a{{1, 1}};
    Multiset<int> b{{1, 2}, {2, 1}};
    CHECK(a.is_subset_of(b));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(b.is_base_subset_of(Multiset<int>{{1, 1}, {2, 1}}));
    CHECK_FALSE(b.is_subset_of(Multiset<int>{{1, 1}, {2, 1}}));
  }

  TEST_CASE("multi-image adds colliding multiplicities") {
    Multiset<int> m{{1, 2}, {2, 3}, {5, 1}};
    auto img = m.image([](int x) { return x % 2; });
    CHECK(img == Multiset<int>{{1, 3}, {0, 3}});
    CHECK(img.size() == m.size());
  }

  TEST_CASE("equality is entrywise") {
    Multiset<int> a;
    a.add(4, 2);
    a.add(4);
    Multiset<int> b{{4, 3}};
    CHECK(a == b);
    b.remove(4);
    CHECK(a != b);
  }
}
