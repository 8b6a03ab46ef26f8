#pragma once

#include <vector>

namespace backnet {

/// Symmetric matrix of relationship weights. Entry (i, j) is positive when i
/// and j are friends, negative when enemies, zero when they do not care
/// about each other; the diagonal weights an agent's own raw utility and
/// must be positive.
class SocialRangeMatrix {
 public:
  /// Builds from row-major values. Rejects asymmetric input and non-positive
  /// diagonal entries. With `strict_dominance` set, additionally rejects
  /// matrices where some |f_ij| with f_ij != 0 fails to exceed f_ii (agents
  /// are required to weight others' utilities above their own; neutral
  /// entries are exempt).
  SocialRangeMatrix(int n_agents, std::vector<double> values,
                    bool strict_dominance = false);

  /// All pairs friends with weight 1, own-utility weight `diagonal`.
  static SocialRangeMatrix friends_all(int n_agents, double diagonal);

  /// Off-diagonal weights from a symmetric sign pattern (entries -1, 0, +1;
  /// the pattern's diagonal is ignored), own-utility weight `diagonal`.
  static SocialRangeMatrix from_sign_pattern(
      double diagonal, const std::vector<std::vector<int>>& signs);

  int n_agents() const { return n_; }

  double at(int i, int j) const;

  /// True when f_ii < |f_ij| holds for every nonzero off-diagonal entry of
  /// row i, for all i.
  bool satisfies_strict_dominance() const;

  const std::vector<double>& values() const { return values_; }

  friend bool operator==(const SocialRangeMatrix&,
                         const SocialRangeMatrix&) = default;

 private:
  void check_agent(int i) const;

  int n_ = 0;
  std::vector<double> values_;
};

}  // namespace backnet
