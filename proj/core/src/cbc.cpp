#include "latapprox/cbc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "latapprox/fft.hpp"
#include "latapprox/korobov.hpp"

namespace latapprox {

namespace {

// R^2 values slightly below zero are floating cancellation in the
// difference-of-products representation; anything lower is a bug.
constexpr double kNegClamp = -1e-9;

double clamped_sqrt(long double r_sq) {
    if (r_sq < kNegClamp)
        throw std::runtime_error("criterion: R^2 below the cancellation clamp");
    return r_sq <= 0.0L ? 0.0 : double(std::sqrt(r_sq));
}

std::vector<double> bernoulli_table(std::int64_t N, int alpha) {
    std::vector<double> b(static_cast<std::size_t>(N));
    for (std::int64_t m = 0; m < N; ++m)
        b[static_cast<std::size_t>(m)] = bernoulli_even(alpha, double(m) / double(N));
    return b;
}

// theta_k = prod_{j < s} (1 + gamma_j^2 c B({k z_j / N}))^2 for k = 0..N-1.
std::vector<double> theta_table(std::int64_t N, std::span<const std::int64_t> prefix,
                                int alpha, const Weights& gamma,
                                const std::vector<double>& b) {
    const double c = bernoulli_fourier_scale(alpha);
    std::vector<double> theta(static_cast<std::size_t>(N), 1.0);
    for (std::size_t j = 0; j < prefix.size(); ++j) {
        const double g2 = gamma[j] * gamma[j];
        for (std::int64_t k = 0; k < N; ++k) {
            const double f =
                1.0 + g2 * c * b[static_cast<std::size_t>((k * prefix[j]) % N)];
            theta[static_cast<std::size_t>(k)] *= f * f;
        }
    }
    return theta;
}

long double invariant_product(std::span<const double> gammas, int alpha,
                              std::size_t s) {
    const long double z4a = riemann_zeta(4.0 * alpha);
    long double p = 1.0L;
    for (std::size_t j = 0; j < s; ++j) {
        const long double g = gammas[j];
        p *= 1.0L + 2.0L * z4a * g * g * g * g;
    }
    return p;
}

}  // namespace

double criterion_formula(const LatticeRule& rule, const Smoothness& alpha,
                         const Weights& gamma) {
    const int a = alpha.integer();
    const std::int64_t N = rule.n_points;
    const std::size_t d = rule.z.size();
    gamma.require_dim(d);
    const auto b = bernoulli_table(N, a);
    const double c = bernoulli_fourier_scale(a);
    long double sum = 0.0L;
    for (std::int64_t k = 0; k < N; ++k) {
        long double prod = 1.0L;
        for (std::size_t j = 0; j < d; ++j) {
            const double g2 = gamma[j] * gamma[j];
            const double f =
                1.0 + g2 * c * b[static_cast<std::size_t>((k * rule.z[j]) % N)];
            prod *= (long double)f * (long double)f;
        }
        sum += prod;
    }
    const long double r_sq = sum / N - invariant_product(gamma.values(), a, d);
    return clamped_sqrt(r_sq);
}

TruncatedCriterion criterion_direct(const LatticeRule& rule, double alpha,
                                    const Weights& gamma, std::int64_t radius) {
    if (!(alpha > 0.5)) throw std::invalid_argument("criterion_direct: alpha > 1/2");
    if (radius < 2) throw std::invalid_argument("criterion_direct: radius >= 2");
    if (radius > (std::int64_t(1) << 20))
        throw std::invalid_argument("criterion_direct: radius too large to materialize");
    const std::int64_t N = rule.n_points;
    const std::size_t d = rule.z.size();
    gamma.require_dim(d);
    const double two_alpha = 2.0 * alpha;
    const std::int64_t R = radius;

    // Per coordinate: 1-D sums S_j(l) = sum_{|h| <= R} a(h) a(h+l) with
    // a(m) = 1/r^2(m), all lags at once via an FFT correlation, then the
    // character transform C_j(m) = sum_l S_j(l) cos(2 pi m l / N).
    std::vector<std::vector<double>> cval(d);
    std::vector<long double> s_zero(d);
    for (std::size_t j = 0; j < d; ++j) {
        const double g = gamma[j];
        auto a_of = [&](std::int64_t m) -> double {
            if (m == 0) return 1.0;
            if (g == 0.0) return 0.0;
            return g * g / std::pow(double(std::llabs(m)), two_alpha);
        };
        const std::size_t wlen = static_cast<std::size_t>(2 * R + 1);
        const std::size_t flen = static_cast<std::size_t>(4 * R + 1);
        std::vector<fft::cdouble> w(wlen), af(flen);
        for (std::size_t i = 0; i < wlen; ++i)
            w[i] = fft::cdouble(a_of(std::int64_t(i) - R), 0.0);
        for (std::size_t m = 0; m < flen; ++m)
            af[m] = fft::cdouble(a_of(std::int64_t(m) - 2 * R), 0.0);
        const std::size_t P = std::bit_ceil(wlen + flen - 1);
        std::vector<fft::cdouble> fw(P), ff(P);
        for (std::size_t i = 0; i < wlen; ++i) fw[wlen - 1 - i] = w[i];  // reversed
        for (std::size_t m = 0; m < flen; ++m) ff[m] = af[m];
        fft::radix2(fw, false);
        fft::radix2(ff, false);
        for (std::size_t i = 0; i < P; ++i) fw[i] *= ff[i];
        fft::radix2(fw, true);
        // S(l) for l in [-R, R] sits at conv index (l + R) + 2R.
        std::vector<double> S(wlen);
        for (std::int64_t l = -R; l <= R; ++l)
            S[static_cast<std::size_t>(l + R)] =
                fw[static_cast<std::size_t>(l + 3 * R)].real();
        s_zero[j] = S[static_cast<std::size_t>(R)];

        std::vector<double>& C = cval[j];
        C.assign(static_cast<std::size_t>(N), 0.0);
        const double w0 = 2.0 * std::numbers::pi / double(N);
        for (std::int64_t m = 0; m < N; ++m) {
            long double acc = S[static_cast<std::size_t>(R)];
            for (std::int64_t l = 1; l <= R; ++l) {
                const double cs = std::cos(w0 * double((m * l) % N));
                acc += 2.0L * (long double)(S[static_cast<std::size_t>(l + R)] * cs);
            }
            C[static_cast<std::size_t>(m)] = double(acc);
        }
    }

    long double sum = 0.0L;
    for (std::int64_t k = 0; k < N; ++k) {
        long double prod = 1.0L;
        for (std::size_t j = 0; j < d; ++j)
            prod *= cval[j][static_cast<std::size_t>((k * rule.z[j]) % N)];
        sum += prod;
    }
    long double zero_term = 1.0L;
    for (std::size_t j = 0; j < d; ++j) zero_term *= s_zero[j];
    const long double r_sq = sum / N - zero_term;

    // Tail of the box truncation, by a union bound over the coordinate that
    // leaves the box first (in h or in h+l).
    const double z2a = riemann_zeta(two_alpha);
    std::vector<double> G(d), F(d);
    for (std::size_t j = 0; j < d; ++j) {
        G[j] = 1.0 + 2.0 * gamma[j] * gamma[j] * z2a;
        F[j] = G[j] * G[j];
    }
    double tail = 0.0;
    const double K = double(std::max<std::int64_t>(1, R / 2));
    for (std::size_t j = 0; j < d; ++j) {
        const double tj =
            2.0 * gamma[j] * gamma[j] * std::pow(K, 1.0 - two_alpha) / (two_alpha - 1.0);
        double rest = 1.0;
        for (std::size_t j2 = 0; j2 < d; ++j2)
            if (j2 != j) rest *= F[j2];
        tail += 3.0 * tj * G[j] * rest;
    }
    return {clamped_sqrt(r_sq), tail};
}

std::vector<double> candidate_scores_naive(std::int64_t N,
                                           std::span<const std::int64_t> prefix,
                                           const Smoothness& alpha,
                                           const Weights& gamma) {
    if (N < 2) throw std::invalid_argument("candidate_scores: N >= 2 required");
    const int a = alpha.integer();
    const std::size_t s = prefix.size() + 1;
    gamma.require_dim(s);
    for (std::int64_t zj : prefix)
        if (zj < 1 || zj >= N)
            throw std::invalid_argument("candidate_scores: prefix out of range");
    const auto b = bernoulli_table(N, a);
    const auto theta = theta_table(N, prefix, a, gamma, b);
    const double c = bernoulli_fourier_scale(a);
    const double gs2 = gamma[s - 1] * gamma[s - 1];
    const long double P = invariant_product(gamma.values(), a, s);
    std::vector<double> scores(static_cast<std::size_t>(N - 1));
    for (std::int64_t zs = 1; zs < N; ++zs) {
        long double acc = 0.0L;
        for (std::int64_t k = 0; k < N; ++k) {
            const double f =
                1.0 + gs2 * c * b[static_cast<std::size_t>((k * zs) % N)];
            acc += theta[static_cast<std::size_t>(k)] * (long double)(f * f);
        }
        scores[static_cast<std::size_t>(zs - 1)] = clamped_sqrt(acc / N - P);
    }
    return scores;
}

std::int64_t primitive_root(std::int64_t prime) {
    if (prime == 2) return 1;
    if (!is_prime(prime)) throw std::invalid_argument("primitive_root: prime required");
    std::vector<std::int64_t> factors;
    std::int64_t m = prime - 1;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        factors.push_back(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) factors.push_back(m);
    auto pow_mod = [&](std::int64_t base, std::int64_t e) {
        unsigned __int128 acc = 1, b = static_cast<unsigned __int128>(base);
        while (e) {
            if (e & 1) acc = acc * b % static_cast<unsigned __int128>(prime);
            b = b * b % static_cast<unsigned __int128>(prime);
            e >>= 1;
        }
        return static_cast<std::int64_t>(acc);
    };
    for (std::int64_t g = 2; g < prime; ++g) {
        bool ok = true;
        for (std::int64_t q : factors)
            if (pow_mod(g, (prime - 1) / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: search failed");
}

std::vector<double> candidate_scores(std::int64_t N,
                                     std::span<const std::int64_t> prefix,
                                     const Smoothness& alpha, const Weights& gamma) {
    if (!is_prime(N))
        throw std::invalid_argument("candidate_scores: fast path requires prime N");
    const int a = alpha.integer();
    const std::size_t s = prefix.size() + 1;
    gamma.require_dim(s);
    for (std::int64_t zj : prefix)
        if (zj < 1 || zj >= N)
            throw std::invalid_argument("candidate_scores: prefix out of range");
    const auto b = bernoulli_table(N, a);
    const auto theta = theta_table(N, prefix, a, gamma, b);
    const double c = bernoulli_fourier_scale(a);
    const double gs2 = gamma[s - 1] * gamma[s - 1];
    const long double P = invariant_product(gamma.values(), a, s);

    const std::size_t L = static_cast<std::size_t>(N - 1);
    const std::int64_t g = primitive_root(N);
    std::vector<std::int64_t> pw(L);
    pw[0] = 1;
    for (std::size_t i = 1; i < L; ++i) pw[i] = (pw[i - 1] * g) % N;

    std::vector<double> u(L), v1(L), v2(L);
    long double theta_rest = 0.0L;
    for (std::size_t i = 0; i < L; ++i) {
        const auto k = static_cast<std::size_t>(pw[i]);
        u[i] = theta[k];
        v1[i] = b[k];
        v2[i] = b[k] * b[k];
        theta_rest += theta[k];
    }
    const auto corr1 = fft::circular_correlation(u, v1);
    const auto corr2 = fft::circular_correlation(u, v2);

    const double f0 = 1.0 + gs2 * c * b[0];
    const long double k0_term = (long double)theta[0] * (long double)(f0 * f0);
    std::vector<double> scores(L);
    for (std::size_t i = 0; i < L; ++i) {
        const long double acc = k0_term + theta_rest +
                                2.0L * (long double)(gs2 * c) * (long double)corr1[i] +
                                (long double)(gs2 * gs2 * c * c) * (long double)corr2[i];
        scores[static_cast<std::size_t>(pw[i] - 1)] = clamped_sqrt(acc / N - P);
    }
    return scores;
}

std::int64_t candidate_set_size(double tau, std::int64_t n) {
    if (!(tau > 0.0) || !(tau < 1.0))
        throw std::invalid_argument("tau must lie in (0,1)");
    long double p = (long double)tau * (long double)n;
    const long double nearest = std::roundl(p);
    if (std::fabsl(p - nearest) < 1e-9L * std::max<long double>(1.0L, p)) p = nearest;
    auto m = static_cast<std::int64_t>(std::ceill(p));
    return std::clamp<std::int64_t>(m, 1, n);
}

std::vector<std::int64_t> select_candidate_set(std::span<const double> scores,
                                               double tau) {
    const auto L = static_cast<std::int64_t>(scores.size());
    if (L < 1) throw std::invalid_argument("select_candidate_set: empty scores");
    const std::int64_t m = candidate_set_size(tau, L);
    std::vector<std::int64_t> order(static_cast<std::size_t>(L));
    std::iota(order.begin(), order.end(), std::int64_t(1));
    std::stable_sort(order.begin(), order.end(),
                     [&](std::int64_t x, std::int64_t y) {
                         const double sx = scores[static_cast<std::size_t>(x - 1)];
                         const double sy = scores[static_cast<std::size_t>(y - 1)];
                         if (sx != sy) return sx < sy;
                         return x < y;
                     });
    order.resize(static_cast<std::size_t>(m));
    std::sort(order.begin(), order.end());
    return order;
}

void CbcConfig::validate() const {
    if (budget < 4) throw std::invalid_argument("CbcConfig: M >= 4 required");
    if (dim < 1) throw std::invalid_argument("CbcConfig: dimension must be >= 1");
    if (!(tau > 0.0) || !(tau < 1.0))
        throw std::invalid_argument("CbcConfig: tau must lie in (0,1)");
    gamma.require_dim(static_cast<std::size_t>(dim));
    (void)alpha.integer();  // construction needs the closed-form score
}

namespace {

double first_step_score(std::int64_t N, int alpha, const Weights& gamma) {
    const auto b = bernoulli_table(N, alpha);
    const double c = bernoulli_fourier_scale(alpha);
    const double g2 = gamma[0] * gamma[0];
    long double acc = 0.0L;
    for (std::int64_t k = 0; k < N; ++k) {
        const double f = 1.0 + g2 * c * b[static_cast<std::size_t>(k)];
        acc += (long double)f * (long double)f;
    }
    return clamped_sqrt(acc / N - invariant_product(gamma.values(), alpha, 1));
}

}  // namespace

CbcResult randomized_cbc(const CbcConfig& cfg, SplitMix64& rng) {
    cfg.validate();
    const auto primes = primes_in_range(cfg.budget);
    const std::int64_t N =
        primes[static_cast<std::size_t>(rng.next_below(primes.size()))];
    std::vector<std::int64_t> z{1};
    std::vector<double> step_scores{first_step_score(N, cfg.alpha.integer(), cfg.gamma)};
    std::vector<std::int64_t> set_sizes;
    for (int s = 2; s <= cfg.dim; ++s) {
        const auto scores = candidate_scores(N, z, cfg.alpha, cfg.gamma);
        const auto zs_set = select_candidate_set(scores, cfg.tau);
        const std::int64_t pick =
            zs_set[static_cast<std::size_t>(rng.next_below(zs_set.size()))];
        z.push_back(pick);
        step_scores.push_back(scores[static_cast<std::size_t>(pick - 1)]);
        set_sizes.push_back(static_cast<std::int64_t>(zs_set.size()));
    }
    return CbcResult{LatticeRule(N, std::move(z)), std::move(step_scores),
                     std::move(set_sizes), cfg.tau, cfg.seed};
}

CbcResult randomized_cbc(const CbcConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    return randomized_cbc(cfg, rng);
}

}  // namespace latapprox
