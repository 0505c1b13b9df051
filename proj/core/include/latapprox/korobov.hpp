#pragma once

#include <cstdint>
#include <span>

#include "latapprox/types.hpp"

namespace latapprox {

/// Decay function r_{alpha,gamma}(h) = prod_{j: h_j != 0} |h_j|^alpha / gamma_j.
/// r(0) = 1 (empty product). Returns +infinity when some gamma_j = 0 meets
/// h_j != 0; downstream code relies on 1/inf == 0.
double decay(std::span<const std::int64_t> h, const Smoothness& alpha,
             const Weights& gamma);

/// r^2_{alpha,gamma}(h), the quantity the space's norm and all index-set
/// thresholds are stated in.
double decay_sq(std::span<const std::int64_t> h, const Smoothness& alpha,
                const Weights& gamma);

/// r^2 in extended precision; the arbiter for index-set boundary membership.
long double decay_sq_ld(std::span<const std::int64_t> h, const Smoothness& alpha,
                        const Weights& gamma);

/// Bernoulli polynomial B_{2*alpha}(x) for x in [0,1], by explicit
/// coefficients. Supported degrees: alpha in {1, 2, 3} (B_2, B_4, B_6).
double bernoulli_even(int alpha, double x);

/// (-1)^(alpha+1) * (2*pi)^(2*alpha) / (2*alpha)!, the factor that turns
/// B_{2*alpha} into sum_{k != 0} exp(2*pi*i*k*x)/|k|^(2*alpha).
double bernoulli_fourier_scale(int alpha);

/// Truncated series sum_{0 < |k| <= K} exp(2*pi*i*k*x) / |k|^(2*alpha)
/// = 2 * sum_{k=1..K} cos(2*pi*k*x) / k^(2*alpha). The general-alpha route
/// where the Bernoulli closed form does not apply.
double decay_fourier_sum(double alpha, double x, std::int64_t K = 100000);

/// Tail bound for decay_fourier_sum: 2 * sum_{k > K} k^(-2*alpha).
double decay_fourier_tail(double alpha, std::int64_t K);

/// Riemann zeta(s) for s > 1 to absolute accuracy well below 1e-12
/// (Euler-Maclaurin tail). Throws for s <= 1.
double riemann_zeta(double s);

}  // namespace latapprox
