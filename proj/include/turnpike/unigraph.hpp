#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "turnpike/distset.hpp"
#include "turnpike/text_format.hpp"

namespace turnpike {

// Graph over a candidate set Z with an edge {a, b} whenever the difference
// between a and b is realized by no other pair of Z. Linear graphs compare
// unordered distances; circular graphs compare ordered differences mod n.
struct UniquenessGraph {
  IntegerSet vertices;
  std::vector<std::pair<Value, Value>> edges;  // (lo, hi), sorted
  std::optional<ModularParams> modulus;

  Value edge_difference(const std::pair<Value, Value>& e) const {
    return modulus ? modulus->sub(e.second, e.first) : e.second - e.first;
  }

  std::map<Value, std::vector<Value>> adjacency() const {
    std::map<Value, std::vector<Value>> adj;
    for (Value v : vertices) adj[v];
    for (const auto& [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
  }
};

/// One line per vertex: `v: n1 n2 ...`.
inline std::string format_adjacency(const UniquenessGraph& g) {
  std::string out;
  for (const auto& [v, nbrs] : g.adjacency()) {
    out += std::to_string(v) + ":";
    if (!nbrs.empty()) out += " " + format_values(nbrs);
    out += '\n';
  }
  return out;
}

inline UniquenessGraph build_uniqueness_graph(const IntegerSet& z) {
  UniquenessGraph g{z, {}, std::nullopt};
  const auto& e = z.values();
  std::unordered_map<Value, std::uint32_t> count;
  count.reserve(e.size() * (e.size() - 1) / 2 + 1);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) ++count[e[j] - e[i]];
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (count[e[j] - e[i]] == 1) g.edges.emplace_back(e[i], e[j]);
  return g;
}

// Both ordered differences (b - a) and (a - b) mod n must have multiplicity 1.
inline UniquenessGraph build_circular_uniqueness_graph(const IntegerSet& z, const ModularParams& m) {
  require_below_modulus(z, m, "vertex");
  UniquenessGraph g{z, {}, m};
  const auto& e = z.values();
  std::unordered_map<Value, std::uint32_t> count;
  count.reserve(e.size() * (e.size() - 1) + 1);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const Value d = e[j] - e[i];
      ++count[d];
      ++count[m.n() - d];
    }
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const Value d = e[j] - e[i];
      if (count[d] == 1 && count[m.n() - d] == 1) g.edges.emplace_back(e[i], e[j]);
    }
  return g;
}

// Endpoints of every edge whose difference lies in W. When the graph was
// built over some Z with U ⊆ Z ⊆ W, each returned vertex belongs to U:
// the difference must be realized inside U ⊆ Z, and the edge says only
// this pair of Z realizes it.
inline IntegerSet certified_members(const UniquenessGraph& g, const DistanceSet& w) {
  std::vector<Value> out;
  for (const auto& edge : g.edges) {
    if (w.contains(g.edge_difference(edge))) {
      out.push_back(edge.first);
      out.push_back(edge.second);
    }
  }
  return IntegerSet(std::move(out));
}

}  // namespace turnpike
