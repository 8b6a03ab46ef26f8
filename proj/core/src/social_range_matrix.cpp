#include "backnet/social_range_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace backnet {

SocialRangeMatrix::SocialRangeMatrix(int n_agents, std::vector<double> values,
                                     bool strict_dominance)
    : n_(n_agents), values_(std::move(values)) {
  if (n_agents < 1 || n_agents > 64) {
    throw std::invalid_argument(
        "SocialRangeMatrix: agent count must be in [1, 64]");
  }
  if (values_.size() != static_cast<std::size_t>(n_agents) *
                            static_cast<std::size_t>(n_agents)) {
    throw std::invalid_argument(
        "SocialRangeMatrix: expected n*n row-major values");
  }
  for (int i = 0; i < n_; ++i) {
    if (!(at(i, i) > 0.0)) {
      throw std::invalid_argument(
          "SocialRangeMatrix: diagonal entry (" + std::to_string(i) + "," +
          std::to_string(i) + ") must be positive");
    }
    for (int j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i)) {
        throw std::invalid_argument(
            "SocialRangeMatrix: asymmetric entries at (" + std::to_string(i) +
            "," + std::to_string(j) + ")");
      }
    }
  }
  if (strict_dominance && !satisfies_strict_dominance()) {
    throw std::invalid_argument(
        "SocialRangeMatrix: strict dominance violated (f_ii must be below "
        "|f_ij| for every nonzero off-diagonal entry)");
  }
}

SocialRangeMatrix SocialRangeMatrix::friends_all(int n_agents,
                                                 double diagonal) {
  std::vector<double> values(
      static_cast<std::size_t>(n_agents) * static_cast<std::size_t>(n_agents),
      1.0);
  for (int i = 0; i < n_agents; ++i) {
    values[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_agents) +
           static_cast<std::size_t>(i)] = diagonal;
  }
  return SocialRangeMatrix(n_agents, std::move(values));
}

SocialRangeMatrix SocialRangeMatrix::from_sign_pattern(
    double diagonal, const std::vector<std::vector<int>>& signs) {
  const int n = static_cast<int>(signs.size());
  std::vector<double> values(static_cast<std::size_t>(n) *
                             static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(signs[static_cast<std::size_t>(i)].size()) != n) {
      throw std::invalid_argument(
          "SocialRangeMatrix::from_sign_pattern: pattern must be square");
    }
    for (int j = 0; j < n; ++j) {
      const int s = signs[static_cast<std::size_t>(i)]
                         [static_cast<std::size_t>(j)];
      if (s < -1 || s > 1) {
        throw std::invalid_argument(
            "SocialRangeMatrix::from_sign_pattern: entries must be -1, 0 or "
            "+1");
      }
      values[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)] =
          (i == j) ? diagonal : static_cast<double>(s);
    }
  }
  return SocialRangeMatrix(n, std::move(values));
}

double SocialRangeMatrix::at(int i, int j) const {
  check_agent(i);
  check_agent(j);
  return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(j)];
}

bool SocialRangeMatrix::satisfies_strict_dominance() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      const double f = at(i, j);
      if (f != 0.0 && !(at(i, i) < std::abs(f))) return false;
    }
  }
  return true;
}

void SocialRangeMatrix::check_agent(int i) const {
  if (i < 0 || i >= n_) {
    throw std::out_of_range("SocialRangeMatrix: agent index out of range");
  }
}

}  // namespace backnet
