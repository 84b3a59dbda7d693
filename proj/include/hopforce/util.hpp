#ifndef HOPFORCE_UTIL_HPP
#define HOPFORCE_UTIL_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopforce {

// Vertex sets are bitmasks over 0..n-1, so everything in the core library
// lives below 32 vertices.
using VertexSet = std::uint32_t;
constexpr int kMaxVertices = 32;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet full_set(int n) {
  return n == 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

template <class F>
inline void for_each_vertex(VertexSet s, F&& fn) {
  while (s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

inline std::vector<int> set_to_vector(VertexSet s) {
  std::vector<int> out;
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet vector_to_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

// Enumerates all k-subsets of {0..n-1} in lexicographic order of their sorted
// index sequences ({0,1} < {0,2} < ... < {1,2}); fn returns false to stop.
// Returns false if fn stopped the enumeration.
template <class F>
bool for_each_subset_lex(int n, int k, F&& fn) {
  if (k < 0 || k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet mask = 0;
    for (int i : idx) mask |= bit(i);
    if (!fn(mask)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Integer square root, exact for all x >= 0.
inline std::uint64_t isqrt(std::uint64_t x) {
  if (x == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// ceil(2*sqrt(x)) computed in exact integer arithmetic: the least j with
// j^2 >= 4x. Floating point mis-rounds near perfect squares, so avoid it.
inline long long ceil_two_sqrt(long long x) {
  if (x < 0) throw std::invalid_argument("ceil_two_sqrt: negative argument");
  std::uint64_t s = isqrt(4ull * static_cast<std::uint64_t>(x));
  if (s * s < 4ull * static_cast<std::uint64_t>(x)) ++s;
  return static_cast<long long>(s);
}

// Propagation time with an absorbing infinity (serialized as "inf").
struct PtValue {
  static constexpr int kInfRaw = std::numeric_limits<int>::max();
  int raw = kInfRaw;

  constexpr PtValue() = default;
  static constexpr PtValue inf() { return PtValue{}; }
  static constexpr PtValue of(int t) {
    PtValue p;
    p.raw = t;
    return p;
  }
  constexpr bool is_inf() const { return raw == kInfRaw; }
  int value() const {
    if (is_inf()) throw std::logic_error("PtValue: infinite");
    return raw;
  }
  constexpr PtValue operator+(int steps) const {
    return is_inf() ? inf() : of(raw + steps);
  }
  friend constexpr auto operator<=>(PtValue a, PtValue b) { return a.raw <=> b.raw; }
  friend constexpr bool operator==(PtValue a, PtValue b) { return a.raw == b.raw; }
  std::string str() const { return is_inf() ? "inf" : std::to_string(raw); }
};

// Thrown when a --limit-states / --limit-seconds budget is exhausted.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchLimits {
  std::uint64_t max_states = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
  bool unlimited() const {
    return max_states == std::numeric_limits<std::uint64_t>::max() &&
           max_seconds == std::numeric_limits<double>::infinity();
  }
};

}  // namespace hopforce

#endif
