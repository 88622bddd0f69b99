#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "turnpike/distset.hpp"
#include "turnpike/errors.hpp"
#include "turnpike/unigraph.hpp"

namespace turnpike {

struct SolverConfig {
  std::optional<std::size_t> t_override;  // anchor count; derived from |W| when absent
  bool enable_fast_path = true;
  bool enable_forward_pass = true;
  bool enable_reverse_pass = true;
  std::size_t max_anchor_count = 64;
  bool collect_trace = false;
};

enum class SolveStatus { Recovered, Failed };

enum class SolvePath { None, Degenerate, Fast, ForwardUnion, ReversePass };

constexpr std::string_view to_string(SolvePath p) {
  switch (p) {
    case SolvePath::None: return "none";
    case SolvePath::Degenerate: return "degenerate";
    case SolvePath::Fast: return "fast";
    case SolvePath::ForwardUnion: return "forward-union";
    case SolvePath::ReversePass: return "reverse-pass";
  }
  return "unknown";
}

/// Intermediate artifacts of one solve, kept only when `collect_trace` is set.
struct SolveTrace {
  std::optional<IntegerSet> fast_candidate;
  std::optional<IntegerSet> candidate_pool;  // Z = {0} ∪ (W ∩ (W + u01))
  std::optional<UniquenessGraph> graph;
  std::optional<IntegerSet> certified;
  std::optional<DistanceSet> intersection;  // W ∩ ⋂ (W + anchor)
  std::optional<IntegerSet> forward_candidate;
  std::optional<IntegerSet> reverse_candidate;
};

struct SolveDiagnostics {
  std::optional<Value> u01;
  std::size_t estimated_k = 0;
  std::size_t anchor_count = 0;  // t
  IntegerSet anchors;
  SolvePath path = SolvePath::None;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Failed;
  IntegerSet result;  // canonical when Recovered
  SolveDiagnostics diagnostics;
  std::optional<FailureReason> failure_reason;
  std::string failure_detail;
  std::optional<SolveTrace> trace;

  bool recovered() const noexcept { return status == SolveStatus::Recovered; }
};

/// Largest minus second-largest distance: the first gap of the canonical set.
inline Value infer_u01(const DistanceSet& w) {
  if (w.size() < 2) throw SolveError(FailureReason::NotEnoughDistances, "need at least two distances");
  return w[w.size() - 1] - w[w.size() - 2];
}

// Smallest k with k(k-1)/2 + 1 >= |W|. Collisions only shrink |W|, so this
// never exceeds the true cardinality.
inline std::size_t estimate_k(const DistanceSet& w) {
  std::size_t k = 1;
  while (k * (k - 1) / 2 + 1 < w.size()) ++k;
  return k;
}

/// max(1, ceil(log2 k)).
inline std::size_t default_anchor_count(std::size_t k_hat) {
  if (k_hat <= 2) return 1;
  return static_cast<std::size_t>(std::bit_width(k_hat - 1));
}

struct AnchorSelection {
  IntegerSet pool;  // Z
  UniquenessGraph graph;
  IntegerSet certified;
  IntegerSet anchors;
};

inline AnchorSelection select_anchors_detailed(const DistanceSet& w, Value u01, std::size_t t) {
  if (u01 == 0 || !w.contains(u01)) throw std::domain_error("u01 must be a positive element of W");
  if (t == 0) throw std::domain_error("anchor count must be at least 1");

  const DistanceSet survivors = shift_intersect(w, u01);
  std::vector<Value> pool_values(survivors.values());
  pool_values.push_back(0);
  IntegerSet pool(std::move(pool_values));
  UniquenessGraph graph = build_uniqueness_graph(pool);
  IntegerSet certified = certified_members(graph, w);

  // u01 is known to be in U regardless of what the graph certifies.
  std::vector<Value> anchors{u01};
  for (Value c : certified) {
    if (anchors.size() >= t) break;
    if (c != 0 && c != u01) anchors.push_back(c);
  }
  return {std::move(pool), std::move(graph), std::move(certified), IntegerSet(std::move(anchors))};
}

inline IntegerSet select_anchors(const DistanceSet& w, Value u01, std::size_t t) {
  return select_anchors_detailed(w, u01, t).anchors;
}

/// W ∩ ⋂_a (W + a).
inline DistanceSet multi_intersect(const DistanceSet& w, const IntegerSet& anchors) {
  DistanceSet acc = w;
  for (Value a : anchors) {
    acc = intersect(acc, shifted(w, a));
    if (acc.empty()) break;
  }
  return acc;
}

inline IntegerSet assemble_forward(const IntegerSet& anchors, const DistanceSet& survivors) {
  std::vector<Value> out{0};
  out.insert(out.end(), anchors.begin(), anchors.end());
  out.insert(out.end(), survivors.begin(), survivors.end());
  return IntegerSet(std::move(out));
}

// Mirror the problem around the diameter M: the largest survivors s^1..s^t
// give anchors M - s^p of the reflected set, whose own intersection step
// recovers the elements the forward anchors may have cut off.
inline IntegerSet reverse_pass(const DistanceSet& w, const DistanceSet& survivors, std::size_t t) {
  if (survivors.size() < 2 || w.empty() || survivors.back() != w.back())
    throw SolveError(FailureReason::ReversePassUnderdetermined, "need the diameter and one more survivor");
  if (t == 0) throw std::domain_error("anchor count must be at least 1");
  const Value diameter = w.back();

  std::vector<Value> reversed_anchors;
  const auto& s = survivors.values();
  for (std::size_t p = 1; p <= t && p < s.size(); ++p) reversed_anchors.push_back(diameter - s[s.size() - 1 - p]);

  DistanceSet reflected_survivors = multi_intersect(w, IntegerSet(reversed_anchors));

  std::vector<Value> reflected{0};
  reflected.insert(reflected.end(), reversed_anchors.begin(), reversed_anchors.end() - 1);
  reflected.insert(reflected.end(), reflected_survivors.begin(), reflected_survivors.end());

  std::vector<Value> out;
  out.reserve(reflected.size());
  for (Value r : reflected) out.push_back(diameter - r);
  return IntegerSet(std::move(out));
}

inline bool realizes(const IntegerSet& candidate, const DistanceSet& w) { return pairwise_distances(candidate) == w; }

namespace detail {

inline SolveOutcome recovered(SolveOutcome out, const IntegerSet& candidate, SolvePath path) {
  out.status = SolveStatus::Recovered;
  out.result = canonicalize(candidate);
  out.diagnostics.path = path;
  return out;
}

inline SolveOutcome failed(SolveOutcome out, FailureReason reason, std::string detail) {
  out.status = SolveStatus::Failed;
  out.failure_reason = reason;
  out.failure_detail = std::move(detail);
  return out;
}

}  // namespace detail

// Fast path, then forward union, then reverse pass. Every candidate must
// reproduce W exactly before it is returned.
inline SolveOutcome solve(const DistanceSet& w, const SolverConfig& cfg = {}) {
  SolveOutcome out;
  if (cfg.collect_trace) out.trace.emplace();
  if (w.empty() || w.front() != 0) {
    return detail::failed(std::move(out), FailureReason::MalformedInput, "distance set must contain 0");
  }
  if (cfg.t_override && *cfg.t_override == 0)
    return detail::failed(std::move(out), FailureReason::MalformedInput, "anchor count must be at least 1");

  out.diagnostics.estimated_k = estimate_k(w);
  if (w.size() <= 2) {
    IntegerSet trivial = w.size() == 1 ? IntegerSet{0} : IntegerSet{0, w.back()};
    return detail::recovered(std::move(out), trivial, SolvePath::Degenerate);
  }

  const Value u01 = infer_u01(w);
  out.diagnostics.u01 = u01;
  if (!w.contains(u01))
    return detail::failed(std::move(out), FailureReason::NoValidatedSolution, "top gap is not itself a distance");

  if (cfg.enable_fast_path) {
    IntegerSet candidate = assemble_forward(IntegerSet{}, shift_intersect(w, u01));
    if (out.trace) out.trace->fast_candidate = candidate;
    if (realizes(candidate, w)) return detail::recovered(std::move(out), candidate, SolvePath::Fast);
  }

  if (!cfg.enable_forward_pass && !cfg.enable_reverse_pass)
    return detail::failed(std::move(out), FailureReason::NoValidatedSolution, "fast path did not validate");

  const std::size_t t =
      std::min(cfg.t_override.value_or(default_anchor_count(out.diagnostics.estimated_k)), cfg.max_anchor_count);
  out.diagnostics.anchor_count = t;

  AnchorSelection sel = select_anchors_detailed(w, u01, t);
  const DistanceSet survivors = multi_intersect(w, sel.anchors);
  out.diagnostics.anchors = sel.anchors;
  if (out.trace) {
    out.trace->candidate_pool = sel.pool;
    out.trace->graph = std::move(sel.graph);
    out.trace->certified = sel.certified;
    out.trace->intersection = survivors;
  }

  if (cfg.enable_forward_pass) {
    IntegerSet candidate = assemble_forward(sel.anchors, survivors);
    if (out.trace) out.trace->forward_candidate = candidate;
    if (realizes(candidate, w)) return detail::recovered(std::move(out), candidate, SolvePath::ForwardUnion);
  }

  if (cfg.enable_reverse_pass) {
    if (survivors.size() < 2 || survivors.back() != w.back()) {
      return detail::failed(std::move(out), FailureReason::NoValidatedSolution,
                            "intersection lost the diameter; reverse pass underdetermined");
    }
    try {
      IntegerSet candidate = reverse_pass(w, survivors, t);
      if (out.trace) out.trace->reverse_candidate = candidate;
      if (realizes(candidate, w)) return detail::recovered(std::move(out), candidate, SolvePath::ReversePass);
    } catch (const SolveError& e) {
      return detail::failed(std::move(out), e.reason(), e.what());
    }
  }

  return detail::failed(std::move(out), FailureReason::NoValidatedSolution, "no candidate reproduced the distance set");
}

}  // namespace turnpike
