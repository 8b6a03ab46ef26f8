#include "backnet/network.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace backnet {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

double canonical_unit_double(std::mt19937_64& eng) {
  // Top 53 bits -> [0, 1). Avoids std::uniform_real_distribution, whose
  // output is implementation-defined.
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::string CanonicalKey::hex() const {
  const int bits = pair_count(static_cast<int>(n_agents));
  const int bytes = (bits + 7) / 8;
  std::string out;
  out.reserve(2 * static_cast<std::size_t>(bytes));
  for (int b = 0; b < bytes; ++b) {
    const unsigned byte =
        static_cast<unsigned>(words[static_cast<std::size_t>(b / 8)] >>
                              (8 * (b % 8))) &
        0xffu;
    out.push_back(kHexDigits[byte >> 4]);
    out.push_back(kHexDigits[byte & 0xf]);
  }
  return out;
}

int pair_count(int n_agents) { return n_agents * (n_agents - 1) / 2; }

int pair_index(int n_agents, int i, int j) {
  if (i > j) std::swap(i, j);
  // Pairs (0,1)..(0,n-1) come first, then (1,2)..(1,n-1), and so on.
  return i * n_agents - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::pair<int, int>> all_pairs(int n_agents) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(pair_count(n_agents)));
  for (int i = 0; i < n_agents; ++i) {
    for (int j = i + 1; j < n_agents; ++j) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

Network::Network(int n_agents) : n_(n_agents) {
  if (n_agents < 1 || n_agents > kMaxAgents) {
    throw std::invalid_argument("Network: agent count must be in [1, 64]");
  }
  rows_.assign(static_cast<std::size_t>(n_agents), 0);
}

Network Network::complete(int n_agents) {
  Network net(n_agents);
  for (int i = 0; i < n_agents; ++i) {
    for (int j = i + 1; j < n_agents; ++j) {
      net.add_edge(i, j);
    }
  }
  return net;
}

Network Network::from_edges(int n_agents,
                            const std::vector<std::pair<int, int>>& edges) {
  Network net(n_agents);
  for (const auto& [i, j] : edges) {
    net.add_edge(i, j);
  }
  return net;
}

Network Network::from_pair_bits(int n_agents, std::uint64_t bits) {
  if (pair_count(n_agents) > 64) {
    throw std::invalid_argument(
        "Network::from_pair_bits: pair count exceeds one word");
  }
  Network net(n_agents);
  int k = 0;
  for (int i = 0; i < n_agents; ++i) {
    for (int j = i + 1; j < n_agents; ++j, ++k) {
      if (bits >> k & 1) net.add_edge(i, j);
    }
  }
  return net;
}

Network Network::random(int n_agents, double p_edge, std::uint64_t seed) {
  if (!(p_edge >= 0.0) || !(p_edge <= 1.0)) {
    throw std::invalid_argument("Network::random: p_edge must be in [0, 1]");
  }
  Network net(n_agents);
  std::mt19937_64 eng(seed);
  for (int i = 0; i < n_agents; ++i) {
    for (int j = i + 1; j < n_agents; ++j) {
      if (canonical_unit_double(eng) < p_edge) net.add_edge(i, j);
    }
  }
  return net;
}

bool Network::has_edge(int i, int j) const {
  check_distinct_pair(i, j);
  return rows_[static_cast<std::size_t>(i)] >> j & 1;
}

void Network::add_edge(int i, int j) {
  check_distinct_pair(i, j);
  if (has_edge(i, j)) {
    throw std::logic_error("Network::add_edge: edge already present");
  }
  rows_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  rows_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
}

void Network::remove_edge(int i, int j) {
  check_distinct_pair(i, j);
  if (!has_edge(i, j)) {
    throw std::logic_error("Network::remove_edge: edge not present");
  }
  rows_[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
  rows_[static_cast<std::size_t>(j)] &= ~(std::uint64_t{1} << i);
}

int Network::degree(int i) const {
  check_agent(i);
  return std::popcount(rows_[static_cast<std::size_t>(i)]);
}

int Network::edge_count() const {
  int total = 0;
  for (const std::uint64_t row : rows_) total += std::popcount(row);
  return total / 2;
}

std::vector<std::pair<int, int>> Network::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    std::uint64_t upper = rows_[static_cast<std::size_t>(i)] >> (i + 1);
    for (int j = i + 1; upper != 0; ++j, upper >>= 1) {
      if (upper & 1) out.emplace_back(i, j);
    }
  }
  return out;
}

CanonicalKey Network::canonical_key() const {
  CanonicalKey key;
  key.n_agents = static_cast<std::uint32_t>(n_);
  int k = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++k) {
      if (rows_[static_cast<std::size_t>(i)] >> j & 1) {
        key.words[static_cast<std::size_t>(k / 64)] |= std::uint64_t{1}
                                                       << (k % 64);
      }
    }
  }
  return key;
}

void Network::check_agent(int i) const {
  if (i < 0 || i >= n_) {
    throw std::out_of_range("Network: agent index out of range");
  }
}

void Network::check_distinct_pair(int i, int j) const {
  check_agent(i);
  check_agent(j);
  if (i == j) {
    throw std::invalid_argument("Network: self-links are not representable");
  }
}

}  // namespace backnet
