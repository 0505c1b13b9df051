#include "latapprox/fourier_polynomial.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "latapprox/index_set.hpp"
#include "latapprox/korobov.hpp"
#include "latapprox/rng.hpp"

namespace latapprox {

std::complex<double> FourierPolynomial::eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("eval: point dimension mismatch");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [h, c] : terms_) {
        double dot = 0.0;
        for (int j = 0; j < dim_; ++j) dot += double(h[j]) * x[j];
        const double ang = 2.0 * std::numbers::pi * (dot - std::floor(dot));
        acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

double korobov_norm_sq(const FourierPolynomial& f, const Smoothness& alpha,
                       const Weights& gamma) {
    double acc = 0.0;
    for (const auto& [h, c] : f.terms()) {
        const double r2 = decay_sq(h, alpha, gamma);
        if (std::isinf(r2)) return r2;
        acc += r2 * std::norm(c);
    }
    return acc;
}

double l2_norm_sq(const FourierPolynomial& f) {
    double acc = 0.0;
    for (const auto& [h, c] : f.terms()) acc += std::norm(c);
    return acc;
}

FourierPolynomial random_unit_norm_poly(std::uint64_t seed,
                                        std::span<const MultiIndex> support,
                                        const Smoothness& alpha,
                                        const Weights& gamma) {
    if (support.empty())
        throw std::invalid_argument("random_unit_norm_poly: empty support");
    const int d = static_cast<int>(support.front().size());
    FourierPolynomial f(d);
    SplitMix64 rng(seed);
    double norm_sq = 0.0;
    for (const auto& h : support) {
        const double r2 = decay_sq(h, alpha, gamma);
        if (std::isinf(r2))
            throw std::invalid_argument(
                "random_unit_norm_poly: support hits an infinite-decay frequency");
        auto [re, im] = rng.next_normal_pair();
        f.set(h, {re, im});
        norm_sq += r2 * std::norm(std::complex<double>(re, im));
    }
    FourierPolynomial scaled(d);
    const double s = 1.0 / std::sqrt(norm_sq);
    for (const auto& [h, c] : f.terms()) scaled.set(h, c * s);
    return scaled;
}

FourierPolynomial random_unit_norm_poly(std::uint64_t seed, const IndexSet& support,
                                        const Smoothness& alpha,
                                        const Weights& gamma) {
    return random_unit_norm_poly(seed, support.members(), alpha, gamma);
}

}  // namespace latapprox
