#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "turnpike/distset.hpp"
#include "turnpike/solver_circular.hpp"
#include "turnpike/solver_linear.hpp"

namespace turnpike {

enum class TrialMode { Linear, Circular };

enum class Sampling {
  UniformSubset,  // exactly k elements, uniform over all k-subsets
  Bernoulli,      // each integer independently with probability k/n
};

struct TrialGrid {
  std::vector<Value> ns;
  std::vector<Value> ks;
  std::size_t trials_per_cell = 1;
  std::uint64_t master_seed = 0;
  TrialMode mode = TrialMode::Linear;
  Sampling sampling = Sampling::UniformSubset;
};

struct TrialRecord {
  Value n = 0;
  Value k = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  double mean_solve_micros = 0.0;
  std::size_t soundness_violations = 0;
};

struct TrialResult {
  bool success = false;
  bool soundness_violation = false;
  double solve_micros = 0.0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t master, Value n, Value k, std::uint64_t index) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ n);
  h = splitmix64(h ^ k);
  return splitmix64(h ^ index);
}

// Unbiased draw from [0, bound) by rejection. std::uniform_int_distribution
// is implementation-defined, so it would not reproduce across standard libraries.
inline Value bounded_draw(std::mt19937_64& rng, Value bound) {
  if (bound == 0) throw std::domain_error("empty range");
  const Value limit = std::numeric_limits<Value>::max() - std::numeric_limits<Value>::max() % bound;
  Value x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Partial Fisher-Yates over {0..n-1}, storing only the displaced slots.
inline IntegerSet gen_instance(Value n, Value k, std::uint64_t seed) {
  if (k > n) throw std::domain_error("k must not exceed n");
  std::mt19937_64 rng(seed);
  std::unordered_map<Value, Value> moved;
  auto slot = [&moved](Value i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  std::vector<Value> out;
  out.reserve(k);
  for (Value i = 0; i < k; ++i) {
    const Value j = i + bounded_draw(rng, n - i);
    const Value vi = slot(i);
    const Value vj = slot(j);
    out.push_back(vj);
    moved[j] = vi;
  }
  return IntegerSet(std::move(out));
}

/// Each integer of {0..n-1} kept independently with probability k/n.
inline IntegerSet gen_bernoulli_instance(Value n, Value k, std::uint64_t seed) {
  if (k > n) throw std::domain_error("k must not exceed n");
  std::mt19937_64 rng(seed);
  const double p = static_cast<double>(k) / static_cast<double>(n);
  std::vector<Value> out;
  for (Value i = 0; i < n; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < p) out.push_back(i);
  }
  return IntegerSet::from_sorted(std::move(out));
}

inline TrialResult run_trial(Value n, Value k, std::uint64_t seed, TrialMode mode,
                             Sampling sampling = Sampling::UniformSubset) {
  const IntegerSet v = sampling == Sampling::UniformSubset ? gen_instance(n, k, seed) : gen_bernoulli_instance(n, k, seed);
  TrialResult r;
  if (v.empty()) return r;
  using clock = std::chrono::steady_clock;
  if (mode == TrialMode::Linear) {
    const DistanceSet w = pairwise_distances(v);
    const auto start = clock::now();
    const SolveOutcome out = solve(w);
    r.solve_micros = std::chrono::duration<double, std::micro>(clock::now() - start).count();
    if (out.recovered()) {
      r.soundness_violation = !realizes(out.result, w);
      r.success = !r.soundness_violation && equivalent(out.result, v);
    }
  } else {
    const ModularParams m(n);
    const DistanceSet w = circular_pairwise_distances(v, m);
    const auto start = clock::now();
    const CircularSolveOutcome out = solve_circular(w, m);
    r.solve_micros = std::chrono::duration<double, std::micro>(clock::now() - start).count();
    if (out.recovered()) {
      r.soundness_violation = !realizes_circular(out.result, w, m);
      r.success = !r.soundness_violation && circular_equivalent(out.result, v, m);
    }
  }
  return r;
}

inline void validate_grid(const TrialGrid& grid) {
  if (grid.ns.empty() || grid.ks.empty()) throw std::domain_error("grid needs at least one n and one k");
  if (grid.trials_per_cell == 0) throw std::domain_error("trials per cell must be at least 1");
  for (Value n : grid.ns)
    for (Value k : grid.ks)
      if (k == 0 || k >= n) throw std::domain_error("each k must satisfy 1 <= k < n");
}

// Trials are scheduled in any order across `threads` workers; each result is
// stored at its (cell, trial) slot and reduced sequentially afterwards, so
// the records do not depend on scheduling.
inline std::vector<TrialRecord> run_grid(const TrialGrid& grid, unsigned threads = 1) {
  validate_grid(grid);
  std::vector<Value> ns = grid.ns;
  std::vector<Value> ks = grid.ks;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  struct Cell {
    Value n, k;
  };
  std::vector<Cell> cells;
  for (Value n : ns)
    for (Value k : ks) cells.push_back({n, k});

  const std::size_t per = grid.trials_per_cell;
  std::vector<TrialResult> results(cells.size() * per);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < results.size(); i = next++) {
      const Cell& c = cells[i / per];
      results[i] = run_trial(c.n, c.k, trial_seed(grid.master_seed, c.n, c.k, i % per), grid.mode, grid.sampling);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<TrialRecord> records;
  records.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    TrialRecord rec{cells[c].n, cells[c].k, per, 0, 0.0, 0.0, 0};
    double micros = 0.0;
    for (std::size_t t = 0; t < per; ++t) {
      const TrialResult& r = results[c * per + t];
      rec.successes += r.success ? 1 : 0;
      rec.soundness_violations += r.soundness_violation ? 1 : 0;
      micros += r.solve_micros;
    }
    rec.success_rate = static_cast<double>(rec.successes) / static_cast<double>(per);
    rec.mean_solve_micros = micros / static_cast<double>(per);
    records.push_back(rec);
  }
  return records;
}

// Timing varies run to run; without `include_timing` the column holds NA so
// the CSV is a pure function of the grid.
inline std::string emit_csv(const std::vector<TrialRecord>& records, bool include_timing = false) {
  std::string out = "n,k,trials,successes,success_rate,mean_solve_micros\n";
  char buf[64];
  for (const TrialRecord& r : records) {
    out += std::to_string(r.n) + ',' + std::to_string(r.k) + ',' + std::to_string(r.trials) + ',' +
           std::to_string(r.successes) + ',';
    std::snprintf(buf, sizeof buf, "%.4f", r.success_rate);
    out += buf;
    out += ',';
    if (include_timing) {
      std::snprintf(buf, sizeof buf, "%.1f", r.mean_solve_micros);
      out += buf;
    } else {
      out += "NA";
    }
    out += '\n';
  }
  return out;
}

/// Gnuplot script drawing one success-rate curve per n from the CSV.
inline std::string emit_plot_script(const std::string& csv_path, const std::vector<Value>& ns,
                                    const std::string& output_path = "success_probability.png") {
  std::string out;
  out += "set datafile separator ','\n";
  out += "set terminal pngcairo size 800,600\n";
  out += "set output '" + output_path + "'\n";
  out += "set xlabel 'k'\n";
  out += "set ylabel 'Probability of successful recovery'\n";
  out += "set yrange [0:1.05]\n";
  out += "set key bottom left\n";
  out += "plot ";
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) out += ", \\\n     ";
    const std::string n = std::to_string(ns[i]);
    out += "'" + csv_path + "' every ::1 using 2:($1==" + n + "?$5:1/0) with linespoints title 'n=" + n + "'";
  }
  out += '\n';
  return out;
}

}  // namespace turnpike
