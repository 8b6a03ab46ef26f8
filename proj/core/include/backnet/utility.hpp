#pragma once

#include "backnet/network.hpp"
#include "backnet/params.hpp"
#include "backnet/social_range_matrix.hpp"

namespace backnet {

namespace detail {

/// base^exp for non-negative integer exponents by binary exponentiation.
/// Deterministic across platforms, unlike std::pow.
double pow_int(double base, int exp);

}  // namespace detail

/// Raw utility of agent i: beta * (1 - lambda^degree(i)) - c * degree(i).
/// Expected backup benefit minus linear link maintenance cost; an isolated
/// agent has utility exactly zero.
double utility(const Network& net, const Params& p, AgentId i);

/// Perceived utility of agent i: the relationship-weighted sum of all raw
/// utilities, sum_j f_ij * u_j (the i-th term weighted by f_ii).
double perceived_utility(const Network& net, const SocialRangeMatrix& matrix,
                         const Params& p, AgentId i);

/// Change in an agent's raw utility when its degree rises from n to n+1:
/// beta * (1 - lambda) * lambda^n - c.
double marginal_utility_add(const Params& p, int degree);

/// Change in an agent's raw utility when its degree falls from n to n-1:
/// c - beta * (1 - lambda) * lambda^(n-1). Requires degree >= 1. Exact
/// negation of marginal_utility_add at degree n-1.
double marginal_utility_delete(const Params& p, int degree);

}  // namespace backnet
