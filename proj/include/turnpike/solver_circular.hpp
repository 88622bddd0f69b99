#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "turnpike/distset.hpp"
#include "turnpike/errors.hpp"
#include "turnpike/solver_linear.hpp"
#include "turnpike/unigraph.hpp"

namespace turnpike {

struct CircularSolveTrace {
  std::optional<DistanceSet> first_intersection;  // W ∩ W1
  std::optional<IntegerSet> candidate_pool;       // W ∩ W1 ∩ W2
  std::optional<UniquenessGraph> graph;
  std::optional<IntegerSet> certified;
  std::optional<IntegerSet> candidate;
};

struct CircularSolveDiagnostics {
  std::optional<Value> u01;
  std::optional<Value> u02;
  std::size_t estimated_k = 0;
  IntegerSet anchors;
};

struct CircularSolveOutcome {
  SolveStatus status = SolveStatus::Failed;
  IntegerSet result;  // starts at 0 when Recovered
  CircularSolveDiagnostics diagnostics;
  std::optional<FailureReason> failure_reason;
  std::string failure_detail;
  std::optional<CircularSolveTrace> trace;

  bool recovered() const noexcept { return status == SolveStatus::Recovered; }
};

/// Smallest k with k(k-1) + 1 >= |W| (ordered differences).
inline std::size_t estimate_k_circular(const DistanceSet& w) {
  std::size_t k = 1;
  while (k * (k - 1) + 1 < w.size()) ++k;
  return k;
}

/// Reason the set is not a valid circular distance set, or nullopt.
inline std::optional<std::string> circular_input_problem(const DistanceSet& w, const ModularParams& m) {
  if (w.empty() || w.front() != 0) return "distance set must contain 0";
  if (w.back() >= m.n()) return "element " + std::to_string(w.back()) + " is not below the modulus";
  for (Value d : w)
    if (!w.contains(m.neg(d))) return "not closed under negation: " + std::to_string(d);
  return std::nullopt;
}

inline Value infer_u01_circular(const DistanceSet& w, const ModularParams& m) {
  require_below_modulus(w, m, "distance");
  if (w.size() < 2) throw SolveError(FailureReason::NotEnoughDistances, "need at least two distances");
  return w.front() == 0 ? w[1] : w.front();
}

// Picks the orientation: the smallest c > u01 in W such that both {0, c}
// and {u01, u01 - c} survive W ∩ (W + u01).
inline Value infer_u02_circular(const DistanceSet& w, Value u01, const ModularParams& m) {
  const DistanceSet first = circular_shift_intersect(w, u01, m);
  if (first.contains(0) && first.contains(u01)) {
    for (auto it = std::upper_bound(w.begin(), w.end(), u01); it != w.end(); ++it) {
      const Value c = *it;
      if (first.contains(c) && first.contains(m.sub(u01, c))) return c;
    }
  }
  throw SolveError(FailureReason::OrientationUndetermined, "no admissible second element");
}

inline DistanceSet circular_multi_intersect(const DistanceSet& w, const IntegerSet& anchors, const ModularParams& m) {
  DistanceSet acc = w;
  for (Value a : anchors) {
    acc = intersect(acc, circular_shifted(w, a, m));
    if (acc.empty()) break;
  }
  return acc;
}

inline bool realizes_circular(const IntegerSet& candidate, const DistanceSet& w, const ModularParams& m) {
  return circular_pairwise_distances(candidate, m) == w;
}

inline CircularSolveOutcome solve_circular(const DistanceSet& w, const ModularParams& m, const SolverConfig& cfg = {}) {
  CircularSolveOutcome out;
  if (cfg.collect_trace) out.trace.emplace();
  auto fail = [&out](FailureReason r, std::string detail) {
    out.status = SolveStatus::Failed;
    out.failure_reason = r;
    out.failure_detail = std::move(detail);
    return std::move(out);
  };
  auto accept = [&out](IntegerSet u) {
    out.status = SolveStatus::Recovered;
    out.result = std::move(u);
    return std::move(out);
  };

  if (auto problem = circular_input_problem(w, m)) return fail(FailureReason::MalformedInput, *problem);
  if (cfg.t_override && *cfg.t_override == 0) return fail(FailureReason::MalformedInput, "anchor count must be at least 1");
  out.diagnostics.estimated_k = estimate_k_circular(w);
  if (w.size() == 1) return accept(IntegerSet{0});

  const Value u01 = infer_u01_circular(w, m);
  out.diagnostics.u01 = u01;
  if (w.size() <= 3) {
    IntegerSet pair{0, u01};
    if (realizes_circular(pair, w, m)) return accept(pair);
  }

  Value u02 = 0;
  try {
    u02 = infer_u02_circular(w, u01, m);
  } catch (const SolveError& e) {
    return fail(e.reason(), e.what());
  }
  out.diagnostics.u02 = u02;

  const DistanceSet first = circular_shift_intersect(w, u01, m);
  const IntegerSet pool(intersect(first, circular_shifted(w, u02, m)));
  UniquenessGraph graph = build_circular_uniqueness_graph(pool, m);
  IntegerSet certified = certified_members(graph, w);

  const std::size_t t = std::max<std::size_t>(
      2, std::min(cfg.t_override.value_or(default_anchor_count(out.diagnostics.estimated_k)), cfg.max_anchor_count));
  std::vector<Value> anchor_values{u01, u02};
  for (Value c : certified) {
    if (anchor_values.size() >= t) break;
    if (c != 0 && c != u01 && c != u02) anchor_values.push_back(c);
  }
  IntegerSet anchors(std::move(anchor_values));
  out.diagnostics.anchors = anchors;

  IntegerSet candidate(circular_multi_intersect(w, anchors, m));
  if (out.trace) {
    out.trace->first_intersection = first;
    out.trace->candidate_pool = pool;
    out.trace->graph = std::move(graph);
    out.trace->certified = certified;
    out.trace->candidate = candidate;
  }
  if (realizes_circular(candidate, w, m)) return accept(std::move(candidate));
  return fail(FailureReason::NoValidatedSolution, "intersection did not reproduce the distance set");
}

}  // namespace turnpike
