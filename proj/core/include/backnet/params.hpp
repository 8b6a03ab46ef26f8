#pragma once

#include <stdexcept>

namespace backnet {

/// Economic parameters of the backup game: per-link maintenance cost `c`,
/// data-backup benefit `beta`, and disk failure probability `lambda`.
/// All three must lie strictly inside (0, 1).
class Params {
 public:
  Params(double c, double beta, double lambda)
      : c_(c), beta_(beta), lambda_(lambda) {
    check_open_unit(c, "c");
    check_open_unit(beta, "beta");
    check_open_unit(lambda, "lambda");
  }

  /// Builds params from a cost/benefit ratio. Link decisions depend on the
  /// parameters only through c/beta and lambda, so `beta_anchor` merely has
  /// to keep c = ratio * beta_anchor inside (0, 1).
  static Params from_ratio(double ratio, double beta_anchor, double lambda) {
    if (!(ratio > 0.0)) {
      throw std::invalid_argument("Params: ratio must be positive");
    }
    const double c = ratio * beta_anchor;
    if (!(c > 0.0) || !(c < 1.0)) {
      throw std::invalid_argument(
          "Params: ratio * beta_anchor leaves the open interval (0, 1)");
    }
    return Params(c, beta_anchor, lambda);
  }

  double c() const { return c_; }
  double beta() const { return beta_; }
  double lambda() const { return lambda_; }

  /// Cost/benefit ratio c / beta.
  double ratio() const { return c_ / beta_; }

 private:
  static void check_open_unit(double v, const char* name) {
    if (!(v > 0.0) || !(v < 1.0)) {
      throw std::invalid_argument(std::string("Params: ") + name +
                                  " must lie strictly between 0 and 1");
    }
  }

  double c_;
  double beta_;
  double lambda_;
};

}  // namespace backnet
