#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <type_traits>
#include <utility>

namespace cocompact {

// Finite multiset with strictly positive multiplicities. Elements iterate in
// ascending order.
template <class T>
class Multiset {
 public:
  using Count = std::int64_t;

  Multiset() = default;
  Multiset(std::initializer_list<std::pair<T, Count>> entries) {
    for (const auto& [x, m] : entries) add(x, m);
  }

  void add(const T& x, Count m = 1) {
    if (m <= 0) return;
    counts_[x] += m;
  }
  // Removes up to m copies of x.
  void remove(const T& x, Count m = 1) {
    auto it = counts_.find(x);
    if (it == counts_.end() || m <= 0) return;
    it->second -= m;
    if (it->second <= 0) counts_.erase(it);
  }

  Count multiplicity(const T& x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
  }
  bool contains(const T& x) const { return counts_.contains(x); }
  bool empty() const { return counts_.empty(); }
  // |M|, counted with multiplicity.
  Count size() const {
    Count n = 0;
    for (const auto& [x, m] : counts_) n += m;
    return n;
  }
  std::size_t base_size() const { return counts_.size(); }

  // M ⊆ N: every multiplicity of M is at most that of N.
  bool is_subset_of(const Multiset& other) const {
    for (const auto& [x, m] : counts_)
      if (other.multiplicity(x) < m) return false;
    return true;
  }
  // M ⊆_b N: base sets only.
  bool is_base_subset_of(const Multiset& other) const {
    for (const auto& [x, m] : counts_)
      if (!other.contains(x)) return false;
    return true;
  }

  // Multi-image under f, adding multiplicities of colliding images.
  template <class F>
  auto image(F&& f) const {
    Multiset<std::decay_t<decltype(f(std::declval<const T&>()))>> out;
    for (const auto& [x, m] : counts_) out.add(f(x), m);
    return out;
  }

  friend Multiset operator+(Multiset a, const Multiset& b) {
    for (const auto& [x, m] : b.counts_) a.add(x, m);
    return a;
  }
  friend Multiset operator-(Multiset a, const Multiset& b) {
    for (const auto& [x, m] : b.counts_) a.remove(x, m);
    return a;
  }
  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset&, const Multiset&) = default;

  auto begin() const { return counts_.begin(); }
  auto end() const { return counts_.end(); }

 private:
  std::map<T, Count> counts_;
};

}  // namespace cocompact
