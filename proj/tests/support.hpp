#pragma once

#include <functional>
#include <vector>

#include "naive.hpp"
#include "turnpike/turnpike.hpp"

namespace testing_support {

using turnpike::DistanceSet;
using turnpike::IntegerSet;
using turnpike::Value;

template <typename Tag>
naive::Set to_naive(const turnpike::OrderedSet<Tag>& s) {
  naive::Set out;
  for (Value v : s) out.insert(static_cast<std::int64_t>(v));
  return out;
}

template <typename SetT>
SetT from_naive(const naive::Set& s) {
  std::vector<Value> out;
  for (auto v : s) out.push_back(static_cast<Value>(v));
  return SetT(std::move(out));
}

// Every set with u0 = 0, k elements, diameter <= max_diameter and first gap
// <= last gap. Tied sets appear in both orientations.
inline void for_each_canonical(std::size_t k, Value max_diameter, const std::function<void(const IntegerSet&)>& visit) {
  if (k == 1) {
    visit(IntegerSet{0});
    return;
  }
  std::vector<Value> cur{0};
  std::function<void(Value)> rec = [&](Value next) {
    if (cur.size() == k) {
      const IntegerSet s = IntegerSet::from_sorted(cur);
      if (s[1] - s[0] <= s[k - 1] - s[k - 2]) visit(s);
      return;
    }
    for (Value x = next; x <= max_diameter; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

}  // namespace testing_support
