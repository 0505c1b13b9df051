#include "latapprox/korobov.hpp"

#include <cmath>
#include <iterator>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace latapprox {

namespace {

template <typename Real>
Real decay_sq_impl(std::span<const std::int64_t> h, const Smoothness& alpha,
                   const Weights& gamma) {
    gamma.require_dim(h.size());
    const Real two_alpha = Real(2) * Real(alpha.value());
    Real prod = 1;
    for (std::size_t j = 0; j < h.size(); ++j) {
        if (h[j] == 0) continue;
        const Real g = Real(gamma[j]);
        if (g == 0) return std::numeric_limits<Real>::infinity();
        const Real a = std::pow(Real(std::abs(h[j])), two_alpha);
        prod *= a / (g * g);
    }
    return prod;
}

}  // namespace

double decay_sq(std::span<const std::int64_t> h, const Smoothness& alpha,
                const Weights& gamma) {
    return decay_sq_impl<double>(h, alpha, gamma);
}

long double decay_sq_ld(std::span<const std::int64_t> h, const Smoothness& alpha,
                        const Weights& gamma) {
    return decay_sq_impl<long double>(h, alpha, gamma);
}

double decay(std::span<const std::int64_t> h, const Smoothness& alpha,
             const Weights& gamma) {
    return std::sqrt(decay_sq(h, alpha, gamma));
}

double bernoulli_even(int alpha, double x) {
    if (!(x >= 0.0) || x > 1.0)
        throw std::invalid_argument("bernoulli_even: x must lie in [0,1]");
    switch (alpha) {
        case 1:  // B_2
            return (x - 1.0) * x + 1.0 / 6.0;
        case 2:  // B_4
            return ((x - 2.0) * x + 1.0) * x * x - 1.0 / 30.0;
        case 3:  // B_6
            return ((((x - 3.0) * x + 2.5) * x) * x - 0.5) * x * x + 1.0 / 42.0;
        default:
            throw std::invalid_argument(
                "bernoulli_even: supported degrees are alpha in {1,2,3}; use "
                "decay_fourier_sum beyond that");
    }
}

double bernoulli_fourier_scale(int alpha) {
    double fact = 1.0;
    for (int i = 2; i <= 2 * alpha; ++i) fact *= double(i);
    const double sign = (alpha % 2 == 0) ? -1.0 : 1.0;
    return sign * std::pow(2.0 * std::numbers::pi, 2.0 * alpha) / fact;
}

double decay_fourier_sum(double alpha, double x, std::int64_t K) {
    if (K < 1) throw std::invalid_argument("decay_fourier_sum: K >= 1 required");
    const double two_alpha = 2.0 * alpha;
    const double tau = 2.0 * std::numbers::pi * x;
    long double sum = 0;
    for (std::int64_t k = K; k >= 1; --k)  // ascending magnitudes
        sum += std::cos(tau * double(k)) / std::pow(double(k), two_alpha);
    return 2.0 * double(sum);
}

double decay_fourier_tail(double alpha, std::int64_t K) {
    // 2 * sum_{k>K} k^(-2a) <= 2 * K^(1-2a) / (2a-1)
    const double two_alpha = 2.0 * alpha;
    return 2.0 * std::pow(double(K), 1.0 - two_alpha) / (two_alpha - 1.0);
}

namespace {

// B_{2j}/(2j)! for the Euler-Maclaurin correction terms.
constexpr double kEvenBernoulliOverFactorial[] = {
    0.0,
    8.3333333333333333e-02,   // B_2/2!
    -1.3888888888888889e-03,  // B_4/4!
    3.3068783068783069e-05,   // B_6/6!
    -8.2671957671957672e-07,  // B_8/8!
    2.0876756987868099e-08,   // B_10/10!
    -5.2841901386874932e-10,  // B_12/12!
    1.3382536530684679e-11,   // B_14/14!
    -3.3896802963225829e-13,  // B_16/16!
    8.5860620562778446e-15,   // B_18/18!
    -2.1748686985580619e-16,  // B_20/20!
    5.5090028283602295e-18,   // B_22/22!
    -1.3954464685812523e-19,  // B_24/24!
};

}  // namespace

double riemann_zeta(double s) {
    if (!(s > 1.0)) throw std::domain_error("riemann_zeta: s > 1 required");
    if (s > 55.0) return 1.0 + std::pow(2.0, -s);  // remaining terms < 2^-87
    if (s > 30.0) {
        long double sum = 0;
        for (int k = 40; k >= 1; --k) sum += std::pow((long double)k, -(long double)s);
        return double(sum);
    }
    // Euler-Maclaurin: sum to K-1, integral term, half term, corrections.
    constexpr int K = 32;
    long double sum = 0;
    for (int k = K - 1; k >= 1; --k) sum += std::pow((long double)k, -(long double)s);
    const long double Kl = K;
    sum += std::pow(Kl, 1.0L - s) / (s - 1.0L);
    sum += 0.5L * std::pow(Kl, -(long double)s);
    long double rising = s;                          // s (s+1) ... (s+2j-2)
    long double kpow = std::pow(Kl, -(long double)s - 1.0L);
    for (std::size_t j = 1; j < std::size(kEvenBernoulliOverFactorial); ++j) {
        sum += kEvenBernoulliOverFactorial[j] * rising * kpow;
        rising *= (s + 2.0L * j - 1.0L) * (s + 2.0L * j);
        kpow /= Kl * Kl;
    }
    return double(sum);
}

}  // namespace latapprox
