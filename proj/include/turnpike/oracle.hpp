#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "turnpike/distset.hpp"
#include "turnpike/solver_circular.hpp"
#include "turnpike/solver_linear.hpp"

// Reference solvers used to check the fast algorithms at desk scale. Every
// candidate position is drawn from W: with u0 = 0 in the solution, each
// other element is its own distance from 0.

namespace turnpike::oracle {

struct OracleOptions {
  std::uint64_t node_budget = 50'000'000;
  std::size_t size_slack = 2;  // subset sizes k̂ .. k̂ + slack for brute force
  std::size_t max_solutions = std::numeric_limits<std::size_t>::max();
};

struct OracleReport {
  std::vector<IntegerSet> solutions;  // one representative per class, ascending
  bool exhausted = true;
  std::uint64_t nodes_explored = 0;
};

// Representative of {c ± V}: the smaller of V - min and max - V, canonicalized.
// Unlike canonicalize alone this is unique even when first and last gaps tie.
inline IntegerSet class_representative(const IntegerSet& v) {
  if (v.empty()) return v;
  return canonicalize(std::min(shift_to_zero(v), reflect(v)));
}

inline IntegerSet circular_class_representative(const IntegerSet& v, const ModularParams& m) {
  if (v.empty()) return v;
  std::optional<IntegerSet> best;
  for (const IntegerSet& base : {v, negate(v, m)}) {
    for (Value x : base) {
      IntegerSet r = rotate(base, m.neg(x), m);
      if (!best || r < *best) best = std::move(r);
    }
  }
  return *best;
}

namespace detail {

// Visits every size-`r` combination of `pool` in lexicographic order.
// Returns false if the visitor asked to stop.
inline bool for_each_combination(const std::vector<Value>& pool, std::size_t r,
                                 const std::function<bool(const std::vector<Value>&)>& visit) {
  if (r > pool.size()) return true;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<Value> chosen(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) chosen[i] = pool[idx[i]];
    if (!visit(chosen)) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == pool.size() - r + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline OracleReport finish(std::set<IntegerSet> found, bool exhausted, std::uint64_t nodes) {
  return {std::vector<IntegerSet>(found.begin(), found.end()), exhausted, nodes};
}

}  // namespace detail

// Plain enumeration: every subset of W holding 0 and max(W) with a size in
// the slack window, tested for exact distance-set equality. No pruning.
inline OracleReport brute_force_solutions(const DistanceSet& w, const OracleOptions& opt = {}) {
  std::set<IntegerSet> found;
  if (w.empty()) return {};
  if (w.front() != 0) return {};
  if (w.size() == 1) return {{IntegerSet{0}}, true, 1};

  const Value diameter = w.back();
  const std::vector<Value> interior(w.begin() + 1, w.end() - 1);
  const std::size_t k_hat = std::max<std::size_t>(2, estimate_k(w));
  const std::size_t k_max = std::min(w.size(), k_hat + opt.size_slack);

  std::uint64_t nodes = 0;
  bool exhausted = true;
  for (std::size_t size = k_hat; size <= k_max && exhausted; ++size) {
    std::vector<Value> cand(size);
    exhausted = detail::for_each_combination(interior, size - 2, [&](const std::vector<Value>& chosen) {
      if (nodes >= opt.node_budget || found.size() >= opt.max_solutions) return false;
      ++nodes;
      cand.assign(1, 0);
      cand.insert(cand.end(), chosen.begin(), chosen.end());
      cand.push_back(diameter);
      const IntegerSet s = IntegerSet::from_sorted(cand);
      if (pairwise_distances(s) == w) found.insert(class_representative(s));
      return true;
    });
  }
  return detail::finish(std::move(found), exhausted, nodes);
}

// Depth-first search seeded with {0, max(W)}, adding positions in ascending
// order. A position is admissible only if its distance to every placed
// point is in W; a node is a solution once every element of W is covered.
inline OracleReport backtracking_solve(const DistanceSet& w, const OracleOptions& opt = {}) {
  if (w.empty() || w.front() != 0) return {};
  if (w.size() == 1) return {{IntegerSet{0}}, true, 1};

  const auto& wv = w.values();
  auto index_of = [&wv](Value d) -> std::ptrdiff_t {
    auto it = std::lower_bound(wv.begin(), wv.end(), d);
    return (it != wv.end() && *it == d) ? it - wv.begin() : -1;
  };

  std::vector<Value> placed{0, w.back()};
  std::vector<std::uint32_t> cover(wv.size(), 0);
  std::size_t covered = 2;  // 0 and the diameter
  cover[0] = 1;
  cover[wv.size() - 1] = 1;

  std::set<IntegerSet> found;
  std::uint64_t nodes = 0;
  bool exhausted = true;
  std::vector<std::ptrdiff_t> hits;

  std::function<void(std::size_t)> dfs = [&](std::size_t next) {
    if (!exhausted) return;
    if (nodes >= opt.node_budget || found.size() >= opt.max_solutions) {
      exhausted = false;
      return;
    }
    ++nodes;
    if (covered == wv.size()) found.insert(class_representative(IntegerSet(placed)));
    for (std::size_t j = next; j + 1 < wv.size(); ++j) {
      const Value x = wv[j];
      const std::size_t mark = hits.size();
      bool ok = true;
      for (Value p : placed) {
        const std::ptrdiff_t i = index_of(x > p ? x - p : p - x);
        if (i < 0) {
          ok = false;
          break;
        }
        hits.push_back(i);
      }
      if (ok) {
        for (std::size_t h = mark; h < hits.size(); ++h)
          if (cover[hits[h]]++ == 0) ++covered;
        placed.push_back(x);
        dfs(j + 1);
        placed.pop_back();
        for (std::size_t h = mark; h < hits.size(); ++h)
          if (--cover[hits[h]] == 0) --covered;
      }
      hits.resize(mark);
      if (!exhausted) return;
    }
  };
  dfs(1);
  return detail::finish(std::move(found), exhausted, nodes);
}

// Subsets of W containing 0, sizes k̂ .. k̂ + slack, deduplicated by
// rotation/reflection class.
inline OracleReport circular_brute_force(const DistanceSet& w, const ModularParams& m, const OracleOptions& opt = {}) {
  require_below_modulus(w, m, "distance");
  if (w.empty() || w.front() != 0) return {};
  if (w.size() == 1) return {{IntegerSet{0}}, true, 1};

  const std::vector<Value> rest(w.begin() + 1, w.end());
  const std::size_t k_hat = std::max<std::size_t>(2, estimate_k_circular(w));
  const std::size_t k_max = std::min(w.size(), k_hat + opt.size_slack);

  std::set<IntegerSet> found;
  std::uint64_t nodes = 0;
  bool exhausted = true;
  for (std::size_t size = k_hat; size <= k_max && exhausted; ++size) {
    std::vector<Value> cand;
    exhausted = detail::for_each_combination(rest, size - 1, [&](const std::vector<Value>& chosen) {
      if (nodes >= opt.node_budget || found.size() >= opt.max_solutions) return false;
      ++nodes;
      cand.assign(1, 0);
      cand.insert(cand.end(), chosen.begin(), chosen.end());
      const IntegerSet s = IntegerSet::from_sorted(cand);
      if (circular_pairwise_distances(s, m) == w) found.insert(circular_class_representative(s, m));
      return true;
    });
  }
  return detail::finish(std::move(found), exhausted, nodes);
}

struct CensusRow {
  Value diameter = 0;
  std::size_t instances = 0;
  std::size_t ambiguous = 0;
};

struct CensusStats {
  std::size_t k = 0;
  Value max_diameter = 0;
  std::size_t instances = 0;
  std::size_t ambiguous = 0;     // W with at least two inequivalent realizations
  std::size_t unexhausted = 0;   // oracle budget hit; counted in neither bucket above
  std::vector<CensusRow> rows;   // per exact diameter
  std::vector<DistanceSet> ambiguous_examples;
};

/// Visits one representative of every shift/reflection class of k-point sets
/// with diameter <= max_diameter.
inline void for_each_canonical_set(std::size_t k, Value max_diameter, const std::function<void(const IntegerSet&)>& visit) {
  if (k == 0) return;
  if (k == 1) {
    visit(IntegerSet{0});
    return;
  }
  for (Value d = k - 1; d <= max_diameter; ++d) {
    std::vector<Value> interior;
    for (Value x = 1; x < d; ++x) interior.push_back(x);
    std::vector<Value> cand;
    detail::for_each_combination(interior, k - 2, [&](const std::vector<Value>& chosen) {
      cand.assign(1, 0);
      cand.insert(cand.end(), chosen.begin(), chosen.end());
      cand.push_back(d);
      IntegerSet s = IntegerSet::from_sorted(cand);
      if (class_representative(s) == s) visit(s);
      return true;
    });
  }
}

inline CensusStats uniqueness_census(Value max_diameter, std::size_t k, std::size_t example_limit = 10) {
  CensusStats stats{k, max_diameter, 0, 0, 0, {}, {}};
  std::map<Value, CensusRow> rows;
  OracleOptions opt;
  opt.size_slack = std::numeric_limits<std::size_t>::max() / 2;
  for_each_canonical_set(k, max_diameter, [&](const IntegerSet& u) {
    const DistanceSet w = pairwise_distances(u);
    const OracleReport rep = brute_force_solutions(w, opt);
    CensusRow& row = rows[u.back()];
    row.diameter = u.back();
    ++row.instances;
    ++stats.instances;
    if (!rep.exhausted) {
      ++stats.unexhausted;
    } else if (rep.solutions.size() >= 2) {
      ++row.ambiguous;
      ++stats.ambiguous;
      if (stats.ambiguous_examples.size() < example_limit) stats.ambiguous_examples.push_back(w);
    }
  });
  for (auto& [d, row] : rows) stats.rows.push_back(row);
  return stats;
}

inline std::string format_census(const CensusStats& s) {
  std::string out = "diameter instances ambiguous\n";
  for (const CensusRow& r : s.rows)
    out += std::to_string(r.diameter) + ' ' + std::to_string(r.instances) + ' ' + std::to_string(r.ambiguous) + '\n';
  out += "total " + std::to_string(s.instances) + ' ' + std::to_string(s.ambiguous) + '\n';
  return out;
}

}  // namespace turnpike::oracle
