#pragma once

#include <algorithm>
#include <compare>
#include <iterator>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turnpike {

using Value = std::uint64_t;

// Sorted, duplicate-free sequence of non-negative integers. The tag keeps
// positions and distances from being mixed up by accident.
template <typename Tag>
class OrderedSet {
 public:
  using value_type = Value;
  using const_iterator = std::vector<Value>::const_iterator;

  OrderedSet() = default;

  OrderedSet(std::initializer_list<Value> values) : OrderedSet(std::vector<Value>(values)) {}

  explicit OrderedSet(std::vector<Value> values) : elems_(std::move(values)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  // Caller guarantees `values` is already strictly ascending.
  static OrderedSet from_sorted(std::vector<Value> values) {
    OrderedSet s;
    s.elems_ = std::move(values);
    return s;
  }

  template <typename OtherTag>
  explicit OrderedSet(const OrderedSet<OtherTag>& other) : elems_(other.values()) {}

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const_iterator begin() const noexcept { return elems_.begin(); }
  const_iterator end() const noexcept { return elems_.end(); }
  Value operator[](std::size_t i) const { return elems_[i]; }
  Value front() const { return elems_.front(); }
  Value back() const { return elems_.back(); }
  const std::vector<Value>& values() const noexcept { return elems_; }
  std::span<const Value> view() const noexcept { return elems_; }

  bool contains(Value v) const { return std::binary_search(elems_.begin(), elems_.end(), v); }

  bool includes(const OrderedSet& sub) const {
    return std::includes(elems_.begin(), elems_.end(), sub.begin(), sub.end());
  }

  friend bool operator==(const OrderedSet&, const OrderedSet&) = default;
  friend auto operator<=>(const OrderedSet&, const OrderedSet&) = default;

 private:
  std::vector<Value> elems_;
};

struct IntegerTag {};
struct DistanceTag {};

/// Positions of the hidden points.
using IntegerSet = OrderedSet<IntegerTag>;
/// Deduplicated pairwise distances; contains 0 whenever it was produced from a
/// nonempty point set.
using DistanceSet = OrderedSet<DistanceTag>;

/// Ring size for the circular (beltway) variant.
class ModularParams {
 public:
  explicit ModularParams(Value n) : n_(n) {
    if (n == 0) throw std::domain_error("modulus must be positive");
  }
  Value n() const noexcept { return n_; }

  Value add(Value a, Value b) const noexcept { return a >= n_ - b ? a - (n_ - b) : a + b; }
  Value sub(Value a, Value b) const noexcept { return a >= b ? a - b : n_ - (b - a); }
  Value neg(Value a) const noexcept { return a == 0 ? 0 : n_ - a; }

 private:
  Value n_;
};

template <typename Tag>
void require_below_modulus(const OrderedSet<Tag>& s, const ModularParams& m, const char* what) {
  if (!s.empty() && s.back() >= m.n()) {
    throw std::domain_error(std::string(what) + " element " + std::to_string(s.back()) +
                            " is not below modulus " + std::to_string(m.n()));
  }
}

inline DistanceSet pairwise_distances(const IntegerSet& v) {
  std::vector<Value> out;
  if (v.empty()) return {};
  out.reserve(v.size() * (v.size() - 1) / 2 + 1);
  out.push_back(0);
  const auto& e = v.values();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) out.push_back(e[j] - e[i]);
  return DistanceSet(std::move(out));
}

inline DistanceSet circular_pairwise_distances(const IntegerSet& v, const ModularParams& m) {
  require_below_modulus(v, m, "position");
  if (v.empty()) return {};
  std::vector<Value> out;
  out.reserve(v.size() * (v.size() - 1) + 1);
  out.push_back(0);
  const auto& e = v.values();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      out.push_back(e[j] - e[i]);
      out.push_back(m.n() - (e[j] - e[i]));
    }
  return DistanceSet(std::move(out));
}

// Shift/reflection representative: starts at 0, first gap <= last gap.
// On a tie the shifted (non-reflected) copy is returned.
inline IntegerSet canonicalize(const IntegerSet& v) {
  if (v.empty()) return v;
  const auto& e = v.values();
  const Value lo = e.front();
  const Value hi = e.back();
  std::vector<Value> out(e.size());
  const std::size_t k = e.size();
  if (k < 2 || e[1] - e[0] <= e[k - 1] - e[k - 2]) {
    std::transform(e.begin(), e.end(), out.begin(), [lo](Value x) { return x - lo; });
  } else {
    std::transform(e.rbegin(), e.rend(), out.begin(), [hi](Value x) { return hi - x; });
  }
  return IntegerSet::from_sorted(std::move(out));
}

/// The mirror image `max - V`, normalized to start at 0.
inline IntegerSet reflect(const IntegerSet& v) {
  if (v.empty()) return v;
  const Value hi = v.back();
  std::vector<Value> out(v.size());
  std::transform(v.values().rbegin(), v.values().rend(), out.begin(), [hi](Value x) { return hi - x; });
  return IntegerSet::from_sorted(std::move(out));
}

inline IntegerSet shift_to_zero(const IntegerSet& v) {
  if (v.empty()) return v;
  const Value lo = v.front();
  std::vector<Value> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [lo](Value x) { return x - lo; });
  return IntegerSet::from_sorted(std::move(out));
}

// A == c + B or A == c - B for some integer c.
inline bool equivalent(const IntegerSet& a, const IntegerSet& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const IntegerSet a0 = shift_to_zero(a);
  return a0 == shift_to_zero(b) || a0 == reflect(b);
}

/// Rotation of `v` by `c` on the ring.
inline IntegerSet rotate(const IntegerSet& v, Value c, const ModularParams& m) {
  std::vector<Value> out;
  out.reserve(v.size());
  for (Value x : v) out.push_back(m.add(x, c));
  return IntegerSet(std::move(out));
}

inline IntegerSet negate(const IntegerSet& v, const ModularParams& m) {
  std::vector<Value> out;
  out.reserve(v.size());
  for (Value x : v) out.push_back(m.neg(x));
  return IntegerSet(std::move(out));
}

// A == (c + B) mod n or A == (c - B) mod n. Only rotations carrying some
// element of B (resp. -B) onto min(A) need checking.
inline bool circular_equivalent(const IntegerSet& a, const IntegerSet& b, const ModularParams& m) {
  require_below_modulus(a, m, "position");
  require_below_modulus(b, m, "position");
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (const IntegerSet& base : {b, negate(b, m)}) {
    for (Value x : base) {
      if (rotate(base, m.sub(a.front(), x), m) == a) return true;
    }
  }
  return false;
}

/// W + d, throwing on 64-bit overflow.
inline DistanceSet shifted(const DistanceSet& w, Value d) {
  if (!w.empty() && w.back() > std::numeric_limits<Value>::max() - d)
    throw std::overflow_error("distance shift overflows 64-bit range");
  std::vector<Value> out(w.size());
  std::transform(w.begin(), w.end(), out.begin(), [d](Value x) { return x + d; });
  return DistanceSet::from_sorted(std::move(out));
}

inline DistanceSet intersect(const DistanceSet& a, const DistanceSet& b) {
  std::vector<Value> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return DistanceSet::from_sorted(std::move(out));
}

/// W ∩ (W + d).
inline DistanceSet shift_intersect(const DistanceSet& w, Value d) {
  if (d == 0) return w;
  return intersect(w, shifted(w, d));
}

inline DistanceSet circular_shifted(const DistanceSet& w, Value d, const ModularParams& m) {
  std::vector<Value> out;
  out.reserve(w.size());
  for (Value x : w) out.push_back(m.add(x, d));
  // Adding d rotates the sorted order; one rotate restores it.
  auto wrap = std::find_if(out.begin(), out.end(), [d](Value x) { return x < d; });
  std::rotate(out.begin(), wrap, out.end());
  return DistanceSet::from_sorted(std::move(out));
}

/// W ∩ ((W + d) mod n).
inline DistanceSet circular_shift_intersect(const DistanceSet& w, Value d, const ModularParams& m) {
  require_below_modulus(w, m, "distance");
  if (d >= m.n()) throw std::domain_error("shift must be below modulus");
  if (d == 0) return w;
  return intersect(w, circular_shifted(w, d, m));
}

/// Elements of `a` not in `b`.
template <typename Tag>
std::vector<Value> difference(const OrderedSet<Tag>& a, const OrderedSet<Tag>& b) {
  std::vector<Value> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace turnpike
