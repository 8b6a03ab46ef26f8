#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace backnet {

using AgentId = int;

/// Fixed-size serialization of a network's edge set: the upper adjacency
/// triangle read in lexicographic pair order, pair k stored at bit k of
/// words[k / 64]. Keys of networks with equal agent counts are equal exactly
/// when the edge sets are identical.
struct CanonicalKey {
  std::uint32_t n_agents = 0;
  std::array<std::uint64_t, 32> words{};

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

  /// Lowercase hex, two digits per pair-bit byte, pair 0 in the low bit of
  /// the first byte. An empty network maps to all zeros.
  std::string hex() const;
};

/// Number of unordered agent pairs on n agents.
int pair_count(int n_agents);

/// Index of pair (i, j), i < j, in lexicographic order (0,1), (0,2), ...
int pair_index(int n_agents, int i, int j);

/// All unordered pairs in lexicographic order.
std::vector<std::pair<int, int>> all_pairs(int n_agents);

/// Undirected simple graph over a fixed set of agents. Adjacency is kept
/// symmetric and irreflexive by construction.
class Network {
 public:
  static constexpr int kMaxAgents = 64;

  /// Empty network (no links) on n agents.
  explicit Network(int n_agents);

  static Network complete(int n_agents);
  static Network from_edges(int n_agents,
                            const std::vector<std::pair<int, int>>& edges);

  /// Builds a network from pair bits (bit k <-> lexicographic pair k).
  /// Limited to networks whose pair count fits one word.
  static Network from_pair_bits(int n_agents, std::uint64_t bits);

  /// Bernoulli(p_edge) on each pair independently, drawn in lexicographic
  /// pair order from a seeded generator; identical seeds give identical
  /// networks on every platform.
  static Network random(int n_agents, double p_edge, std::uint64_t seed);

  int n_agents() const { return n_; }
  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  /// Neighborhood size of agent i.
  int degree(int i) const;

  int edge_count() const;

  /// Edge list as (i, j) with i < j, ascending lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  CanonicalKey canonical_key() const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  void check_agent(int i) const;
  void check_distinct_pair(int i, int j) const;

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

inline CanonicalKey canonical_key(const Network& net) {
  return net.canonical_key();
}

}  // namespace backnet
