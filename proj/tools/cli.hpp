#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "turnpike/turnpike.hpp"

namespace turnpike::cli {

enum ExitCode : int { kOk = 0, kSolverFailure = 1, kUsage = 2 };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// Distance input without 0 is accepted and normalized.
inline DistanceSet read_distances(const std::string& path, Streams io) {
  std::vector<Value> values = parse_values(slurp(path, io.in));
  if (values.empty()) throw ParseError("empty distance set");
  DistanceSet w(std::move(values));
  if (w.front() != 0) {
    io.err << "note: 0 missing from distance set; inserted\n";
    std::vector<Value> with_zero{0};
    with_zero.insert(with_zero.end(), w.begin(), w.end());
    w = DistanceSet::from_sorted(std::move(with_zero));
  }
  return w;
}

inline void trace_line(std::ostream& os, const std::string& label, const std::string& body) {
  os << label << ":";
  if (!body.empty()) os << ' ' << body;
  os << '\n';
}

inline void write_graph(std::ostream& os, const UniquenessGraph& g) {
  os << "graph:\n";
  std::istringstream lines(format_adjacency(g));
  for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
}

inline void write_trace(std::ostream& os, const SolveOutcome& o) {
  const SolveDiagnostics& d = o.diagnostics;
  if (d.u01) trace_line(os, "u01", std::to_string(*d.u01));
  trace_line(os, "estimated_k", std::to_string(d.estimated_k));
  if (!o.trace) return;
  const SolveTrace& t = *o.trace;
  if (t.fast_candidate) trace_line(os, "fast_candidate", format_set(*t.fast_candidate));
  if (t.candidate_pool) trace_line(os, "Z", format_set(*t.candidate_pool));
  if (t.graph) write_graph(os, *t.graph);
  if (t.certified) trace_line(os, "certified", format_set(*t.certified));
  if (d.anchor_count) trace_line(os, "t", std::to_string(d.anchor_count));
  if (!d.anchors.empty()) trace_line(os, "anchors", format_set(d.anchors));
  if (t.intersection) {
    trace_line(os, "intersection", format_set(*t.intersection));
    trace_line(os, "survivors", format_values(difference(IntegerSet(*t.intersection), d.anchors)));
  }
  if (t.forward_candidate) trace_line(os, "forward_candidate", format_set(*t.forward_candidate));
  if (t.reverse_candidate) trace_line(os, "reverse_candidate", format_set(*t.reverse_candidate));
  trace_line(os, "path", std::string(to_string(d.path)));
}

inline void write_trace(std::ostream& os, const CircularSolveOutcome& o) {
  const CircularSolveDiagnostics& d = o.diagnostics;
  if (d.u01) trace_line(os, "u01", std::to_string(*d.u01));
  if (d.u02) trace_line(os, "u02", std::to_string(*d.u02));
  trace_line(os, "estimated_k", std::to_string(d.estimated_k));
  if (!o.trace) return;
  const CircularSolveTrace& t = *o.trace;
  if (t.first_intersection) trace_line(os, "W_cap_W1", format_set(*t.first_intersection));
  if (t.candidate_pool) trace_line(os, "Z", format_set(*t.candidate_pool));
  if (t.graph) write_graph(os, *t.graph);
  if (t.certified) trace_line(os, "certified", format_set(*t.certified));
  if (!d.anchors.empty()) trace_line(os, "anchors", format_set(d.anchors));
  if (t.candidate) trace_line(os, "candidate", format_set(*t.candidate));
}

inline std::vector<Value> parse_list(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  return parse_values(spaced);
}

}  // namespace detail

// Runs one CLI invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Recover integer sets from their pairwise-distance sets", "turnpike"};
  app.require_subcommand(1, 1);

  // gen
  auto* gen = app.add_subcommand("gen", "Draw a random k-subset of {0..n-1}");
  Value gen_n = 0, gen_k = 0;
  std::optional<std::uint64_t> gen_seed;
  bool gen_bernoulli = false;
  gen->add_option("--n", gen_n, "Ambient size")->required();
  gen->add_option("--k", gen_k, "Number of elements")->required();
  gen->add_option("--seed", gen_seed, "RNG seed (random and reported when omitted)");
  gen->add_flag("--bernoulli", gen_bernoulli, "Keep each integer with probability k/n instead");

  // dist
  auto* dist = app.add_subcommand("dist", "Pairwise-distance set of an integer set");
  std::string dist_input;
  std::optional<Value> dist_modulus;
  dist->add_option("input", dist_input, "Integer set file (default stdin)");
  dist->add_option("--modulus", dist_modulus, "Ring size for circular distances");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Recover the canonical set from linear distances");
  std::string solve_input;
  bool solve_trace = false, solve_fast_only = false, solve_no_reverse = false;
  std::optional<std::size_t> solve_t;
  solve_cmd->add_option("input", solve_input, "Distance set file (default stdin)");
  solve_cmd->add_flag("--trace", solve_trace, "Print intermediate sets to stderr");
  solve_cmd->add_option("--t", solve_t, "Anchor count override")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--fast-only", solve_fast_only, "Only try W ∩ (W + u01)");
  solve_cmd->add_flag("--no-reverse", solve_no_reverse, "Skip the reverse pass");

  // solve-circular
  auto* csolve = app.add_subcommand("solve-circular", "Recover a set from circular distances mod n");
  std::string csolve_input;
  Value csolve_modulus = 0;
  bool csolve_trace = false;
  std::optional<std::size_t> csolve_t;
  csolve->add_option("input", csolve_input, "Distance set file (default stdin)");
  csolve->add_option("--modulus", csolve_modulus, "Ring size n")->required()->check(CLI::PositiveNumber);
  csolve->add_flag("--trace", csolve_trace, "Print intermediate sets to stderr");
  csolve->add_option("--t", csolve_t, "Anchor count override")->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "Check that a set realizes a distance set");
  std::string verify_set, verify_dist;
  std::optional<Value> verify_modulus;
  verify->add_option("set", verify_set, "Integer set file")->required();
  verify->add_option("distances", verify_dist, "Distance set file")->required();
  verify->add_option("--modulus", verify_modulus, "Ring size for circular distances");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference solutions");
  std::string oracle_input;
  std::optional<Value> oracle_modulus;
  std::uint64_t oracle_budget = oracle::OracleOptions{}.node_budget;
  std::size_t oracle_slack = oracle::OracleOptions{}.size_slack;
  bool oracle_backtrack = false, oracle_census = false;
  std::size_t census_k = 3;
  Value census_diameter = 12;
  oracle_cmd->add_option("input", oracle_input, "Distance set file (default stdin)");
  oracle_cmd->add_option("--modulus", oracle_modulus, "Ring size for circular distances");
  oracle_cmd->add_option("--budget", oracle_budget, "Node budget");
  oracle_cmd->add_option("--slack", oracle_slack, "Extra subset sizes beyond the estimate");
  oracle_cmd->add_flag("--backtrack", oracle_backtrack, "Use depth-first search instead of enumeration");
  oracle_cmd->add_flag("--census", oracle_census, "Count ambiguous instances instead of solving");
  oracle_cmd->add_option("--k", census_k, "Census set size");
  oracle_cmd->add_option("--max-diameter", census_diameter, "Census diameter bound");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo success rates over an (n, k) grid");
  std::string sim_ns, sim_ks, sim_mode = "linear", sim_sampling = "uniform", sim_plot, sim_output;
  std::size_t sim_trials = 0;
  std::uint64_t sim_seed = 0;
  unsigned sim_threads = 1;
  bool sim_timing = false;
  sim->add_option("--ns", sim_ns, "Comma-separated ambient sizes")->required();
  sim->add_option("--ks", sim_ks, "Comma-separated sparsities")->required();
  sim->add_option("--trials", sim_trials, "Trials per cell")->required()->check(CLI::PositiveNumber);
  sim->add_option("--seed", sim_seed, "Master seed")->required();
  sim->add_option("--mode", sim_mode, "linear or circular")->check(CLI::IsMember({"linear", "circular"}));
  sim->add_option("--sampling", sim_sampling, "uniform or bernoulli")->check(CLI::IsMember({"uniform", "bernoulli"}));
  sim->add_option("--threads", sim_threads, "Worker threads")->check(CLI::PositiveNumber);
  sim->add_option("--output", sim_output, "Write the CSV here instead of stdout");
  sim->add_option("--emit-plot", sim_plot, "Also write a gnuplot script to this path");
  sim->add_flag("--timing", sim_timing, "Fill mean_solve_micros (output no longer reproducible)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen) {
      if (gen_k > gen_n) {
        io.err << "error: k (" << gen_k << ") exceeds n (" << gen_n << ")\n";
        return kUsage;
      }
      if (!gen_seed) {
        gen_seed = std::random_device{}();
        io.err << "seed: " << *gen_seed << '\n';
      }
      const IntegerSet v = gen_bernoulli ? gen_bernoulli_instance(gen_n, gen_k, *gen_seed) : gen_instance(gen_n, gen_k, *gen_seed);
      io.out << format_set(v) << '\n';
      return kOk;
    }

    if (*dist) {
      const IntegerSet v = parse_set<IntegerSet>(detail::slurp(dist_input, io.in));
      const DistanceSet w = dist_modulus ? circular_pairwise_distances(v, ModularParams(*dist_modulus)) : pairwise_distances(v);
      io.out << format_set(w) << '\n';
      return kOk;
    }

    if (*solve_cmd) {
      const DistanceSet w = detail::read_distances(solve_input, io);
      SolverConfig cfg;
      cfg.collect_trace = solve_trace;
      cfg.t_override = solve_t;
      if (solve_fast_only) cfg.enable_forward_pass = cfg.enable_reverse_pass = false;
      if (solve_no_reverse) cfg.enable_reverse_pass = false;
      const SolveOutcome o = solve(w, cfg);
      if (solve_trace) detail::write_trace(io.err, o);
      if (!o.recovered()) {
        io.out << "FAILED: " << to_string(*o.failure_reason) << '\n';
        return kSolverFailure;
      }
      io.out << format_set(o.result) << '\n';
      return kOk;
    }

    if (*csolve) {
      const ModularParams m(csolve_modulus);
      const DistanceSet w = detail::read_distances(csolve_input, io);
      SolverConfig cfg;
      cfg.collect_trace = csolve_trace;
      cfg.t_override = csolve_t;
      const CircularSolveOutcome o = solve_circular(w, m, cfg);
      if (csolve_trace) detail::write_trace(io.err, o);
      if (!o.recovered()) {
        io.out << "FAILED: " << to_string(*o.failure_reason) << '\n';
        return o.failure_reason == FailureReason::MalformedInput ? kUsage : kSolverFailure;
      }
      io.out << format_set(o.result) << '\n';
      return kOk;
    }

    if (*verify) {
      const IntegerSet v = parse_set<IntegerSet>(detail::slurp(verify_set, io.in));
      const DistanceSet w = parse_set<DistanceSet>(detail::slurp(verify_dist, io.in));
      const DistanceSet actual = verify_modulus ? circular_pairwise_distances(v, ModularParams(*verify_modulus)) : pairwise_distances(v);
      if (actual == w) {
        io.out << "ok\n";
        return kOk;
      }
      auto list = [](const std::vector<Value>& xs) { return xs.empty() ? std::string() : " " + format_values(xs); };
      io.out << "missing:" << list(difference(actual, w)) << " / extra:" << list(difference(w, actual)) << '\n';
      return kSolverFailure;
    }

    if (*oracle_cmd) {
      if (oracle_census) {
        io.out << oracle::format_census(oracle::uniqueness_census(census_diameter, census_k));
        return kOk;
      }
      const DistanceSet w = parse_set<DistanceSet>(detail::slurp(oracle_input, io.in));
      oracle::OracleOptions opt;
      opt.node_budget = oracle_budget;
      opt.size_slack = oracle_slack;
      oracle::OracleReport rep;
      if (oracle_modulus) {
        rep = oracle::circular_brute_force(w, ModularParams(*oracle_modulus), opt);
      } else if (oracle_backtrack) {
        rep = oracle::backtracking_solve(w, opt);
      } else {
        rep = oracle::brute_force_solutions(w, opt);
      }
      for (const IntegerSet& s : rep.solutions) io.out << format_set(s) << '\n';
      io.out << "exhausted: " << (rep.exhausted ? "yes" : "no") << '\n';
      return rep.solutions.empty() ? kSolverFailure : kOk;
    }

    if (*sim) {
      TrialGrid grid;
      grid.ns = detail::parse_list(sim_ns);
      grid.ks = detail::parse_list(sim_ks);
      grid.trials_per_cell = sim_trials;
      grid.master_seed = sim_seed;
      grid.mode = sim_mode == "circular" ? TrialMode::Circular : TrialMode::Linear;
      grid.sampling = sim_sampling == "bernoulli" ? Sampling::Bernoulli : Sampling::UniformSubset;
      const std::string csv = emit_csv(run_grid(grid, sim_threads), sim_timing);
      if (sim_output.empty()) {
        io.out << csv;
      } else {
        std::ofstream f(sim_output);
        if (!f) throw ParseError("cannot write " + sim_output);
        f << csv;
      }
      if (!sim_plot.empty()) {
        std::ofstream f(sim_plot);
        if (!f) throw ParseError("cannot write " + sim_plot);
        std::vector<Value> ns = grid.ns;
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        f << emit_plot_script(sim_output.empty() ? "simulate.csv" : sim_output, ns);
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace turnpike::cli
