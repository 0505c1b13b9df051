#include "latapprox/test_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "latapprox/korobov.hpp"

namespace latapprox {

KernelFunction::KernelFunction(int dim, const Smoothness& alpha, Weights gamma)
    : dim_(dim), alpha_(alpha.integer()), gamma_(std::move(gamma)),
      scale_(bernoulli_fourier_scale(alpha_)) {
    if (dim < 1) throw std::invalid_argument("KernelFunction: dimension must be >= 1");
    gamma_.require_dim(static_cast<std::size_t>(dim));
}

double KernelFunction::eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("KernelFunction::eval: dimension mismatch");
    double prod = 1.0;
    for (int j = 0; j < dim_; ++j) {
        const double frac = x[j] - std::floor(x[j]);
        const double g = gamma_[j];
        prod *= 1.0 + g * g * scale_ * bernoulli_even(alpha_, frac);
    }
    return prod;
}

FourierPolynomial truncated_kernel_poly(int dim, const Smoothness& alpha,
                                        const Weights& gamma, std::int64_t radius) {
    if (radius < 0) throw std::invalid_argument("truncated_kernel_poly: radius >= 0");
    FourierPolynomial f(dim);
    MultiIndex h(dim, 0);
    // Odometer over the box, skipping infinite-decay frequencies.
    for (int j = 0; j < dim; ++j) h[j] = -radius;
    while (true) {
        const double r2 = decay_sq(h, alpha, gamma);
        if (!std::isinf(r2)) f.set(h, {1.0 / r2, 0.0});
        int j = dim - 1;
        while (j >= 0 && h[j] == radius) h[j--] = -radius;
        if (j < 0) break;
        ++h[j];
    }
    return f;
}

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    auto r = static_cast<std::int64_t>(std::sqrt(double(n)));
    while ((r + 1) * (r + 1) <= n) ++r;
    while (r * r > n) --r;
    return r;
}

std::vector<MultiIndex> fooling_support(std::int64_t M, int dim) {
    if (M < 4) throw std::invalid_argument("fooling_support: M >= 4 required");
    if (dim < 2) throw std::invalid_argument("fooling_support: dimension >= 2 required");
    const std::int64_t K = isqrt(M);
    std::vector<MultiIndex> support;
    support.reserve(std::size_t(2 * K + 1) * std::size_t(2 * K + 1));
    for (std::int64_t h1 = -K; h1 <= K; ++h1)
        for (std::int64_t h2 = -K; h2 <= K; ++h2) {
            MultiIndex h(dim, 0);
            h[0] = h1;
            h[1] = h2;
            support.push_back(std::move(h));
        }
    return support;
}

FourierPolynomial fooling_polynomial(std::int64_t M, int dim,
                                     const Smoothness& alpha, const Weights& gamma) {
    gamma.require_dim(2);
    if (gamma[0] == 0.0 || gamma[1] == 0.0)
        throw std::invalid_argument(
            "fooling_polynomial: gamma_1 and gamma_2 must be positive");
    const auto support = fooling_support(M, dim);
    const double inv_card = 1.0 / double(support.size());
    FourierPolynomial p(dim);
    for (const auto& h : support) {
        const double r2 = decay_sq(h, alpha, gamma);
        p.set(h, {std::sqrt(inv_card / r2), 0.0});
    }
    return p;
}

}  // namespace latapprox
