#include "latapprox/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "latapprox/cbc.hpp"
#include "latapprox/korobov.hpp"
#include "latapprox/parallel.hpp"
#include "latapprox/test_functions.hpp"

namespace latapprox {

std::vector<double> lambda_grid(const Smoothness& alpha, int n) {
    const double lo = 0.5 + 1e-3;
    const double hi = alpha.value() - 1e-3;
    if (n < 1) throw std::invalid_argument("lambda_grid: n >= 1 required");
    if (!(hi > lo))
        throw std::invalid_argument("lambda_grid: alpha too close to 1/2 for a grid");
    std::vector<double> grid(static_cast<std::size_t>(n));
    if (n == 1) {
        grid[0] = std::sqrt(lo * hi);
        return grid;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        grid[static_cast<std::size_t>(i)] =
            std::exp(llo + (lhi - llo) * double(i) / double(n - 1));
    return grid;
}

namespace {

// log of prod_j (1 + 2^(2a+2) gamma_j^(1/lambda) zeta(alpha/lambda))^2,
// over the first s coordinates.
double log_weight_product(const Smoothness& alpha, const Weights& gamma,
                          std::size_t s, double lambda) {
    const double pow2 = std::pow(2.0, 2.0 * alpha.value() + 2.0);
    const double zeta = riemann_zeta(alpha.value() / lambda);
    double acc = 0.0;
    for (std::size_t j = 0; j < s; ++j)
        acc += 2.0 * std::log1p(pow2 * std::pow(gamma[j], 1.0 / lambda) * zeta);
    return acc;
}

double grid_min_bracket(double log_base, const Smoothness& alpha,
                        const Weights& gamma, std::size_t s,
                        std::span<const double> grid, bool raise_to_lambda) {
    if (grid.empty()) throw std::invalid_argument("empty lambda grid");
    double best = std::numeric_limits<double>::infinity();
    for (double lambda : grid) {
        if (!(lambda > 0.5) || !(lambda < alpha.value()))
            throw std::invalid_argument("lambda grid point outside (1/2, alpha)");
        const double lg = log_base + log_weight_product(alpha, gamma, s, lambda);
        best = std::min(best, std::exp(raise_to_lambda ? lambda * lg : lg));
    }
    return best;
}

}  // namespace

double construction_score_cap(std::int64_t M, const Smoothness& alpha,
                              const Weights& gamma, double tau,
                              std::span<const double> grid) {
    if (M < 1) throw std::invalid_argument("construction_score_cap: M >= 1");
    if (!(tau > 0.0) || !(tau < 1.0))
        throw std::invalid_argument("construction_score_cap: tau in (0,1)");
    const double log_base = std::log(2.0 / ((1.0 - tau) * double(M)));
    return grid_min_bracket(log_base, alpha, gamma, gamma.size(), grid, true);
}

double min_budget_for_unit_cap(const Smoothness& alpha, const Weights& gamma,
                               double tau, int dim, std::span<const double> grid) {
    if (!(tau > 0.0) || !(tau < 1.0))
        throw std::invalid_argument("min_budget_for_unit_cap: tau in (0,1)");
    gamma.require_dim(static_cast<std::size_t>(dim));
    const double log_base = std::log(2.0 / (1.0 - tau));
    return grid_min_bracket(log_base, alpha, gamma, static_cast<std::size_t>(dim),
                            grid, false);
}

double cbc_score_bound(std::int64_t N, int s, const Smoothness& alpha,
                       const Weights& gamma, double tau,
                       std::span<const double> grid) {
    if (N < 3) throw std::invalid_argument("cbc_score_bound: N >= 3 required");
    if (s < 1) throw std::invalid_argument("cbc_score_bound: s >= 1 required");
    if (!(tau > 0.0) || !(tau < 1.0))
        throw std::invalid_argument("cbc_score_bound: tau in (0,1)");
    gamma.require_dim(static_cast<std::size_t>(s));
    const double log_base = -std::log((1.0 - tau) * double(N - 1));
    return grid_min_bracket(log_base, alpha, gamma, static_cast<std::size_t>(s),
                            grid, true);
}

double pair_sum_truncated(const Smoothness& alpha, const Weights& gamma,
                          const MultiIndex& ell, std::int64_t radius) {
    gamma.require_dim(ell.size());
    if (radius < 1) throw std::invalid_argument("pair_sum_truncated: radius >= 1");
    const double two_alpha = 2.0 * alpha.value();
    double prod = 1.0;
    for (std::size_t j = 0; j < ell.size(); ++j) {
        const double g = gamma[j];
        auto a_of = [&](std::int64_t m) -> double {
            if (m == 0) return 1.0;
            if (g == 0.0) return 0.0;
            return g * g / std::pow(double(std::llabs(m)), two_alpha);
        };
        long double s = 0.0L;
        for (std::int64_t h = -radius; h <= radius; ++h)
            s += (long double)(a_of(h) * a_of(h + ell[j]));
        prod *= double(s);
        if (prod == 0.0) return 0.0;
    }
    return prod;
}

namespace {

// Per-N candidate sets for d = 2: z = (1, z2) with z2 in the selected set.
struct StepTwoSets {
    std::vector<std::int64_t> primes;
    std::vector<std::vector<std::int64_t>> z2;  // aligned with primes
};

StepTwoSets step_two_sets(std::int64_t M, double tau, const Smoothness& alpha,
                          const Weights& gamma) {
    gamma.require_dim(2);
    StepTwoSets out;
    out.primes = primes_in_range(M);
    out.z2.resize(out.primes.size());
    const std::int64_t prefix[1] = {1};
    for (std::size_t i = 0; i < out.primes.size(); ++i) {
        const auto scores = candidate_scores(out.primes[i], prefix, alpha, gamma);
        out.z2[i] = select_candidate_set(scores, tau);
    }
    return out;
}

double omega_from_sets(const StepTwoSets& sets, const MultiIndex& ell) {
    double acc = 0.0;
    for (std::size_t i = 0; i < sets.primes.size(); ++i) {
        const std::int64_t N = sets.primes[i];
        std::int64_t hits = 0;
        for (std::int64_t z2 : sets.z2[i]) {
            const LatticeRule rule(N, {1, z2});
            if (dual_contains(rule, ell)) ++hits;
        }
        acc += double(hits) / double(sets.z2[i].size());
    }
    return acc / double(sets.primes.size());
}

}  // namespace

double dual_hit_probability(std::int64_t M, double tau, const Smoothness& alpha,
                            const Weights& gamma, const MultiIndex& ell) {
    if (ell.size() != 2)
        throw std::invalid_argument("dual_hit_probability: d = 2 enumeration only");
    return omega_from_sets(step_two_sets(M, tau, alpha, gamma), ell);
}

bool dual_hit_excluded(std::int64_t M, double tau, const Smoothness& alpha,
                       const Weights& gamma, const MultiIndex& ell,
                       std::int64_t radius) {
    const auto grid = lambda_grid(alpha);
    const double cap = construction_score_cap(M, alpha, gamma, tau, grid);
    return pair_sum_truncated(alpha, gamma, ell, radius) > cap * cap;
}

std::vector<OmegaEntry> build_omega_table(std::int64_t M, double tau,
                                          const Smoothness& alpha,
                                          const Weights& gamma, std::int64_t lmax,
                                          std::int64_t radius) {
    if (lmax < 0) throw std::invalid_argument("build_omega_table: lmax >= 0");
    const auto sets = step_two_sets(M, tau, alpha, gamma);
    const auto grid = lambda_grid(alpha);
    const double cap = construction_score_cap(M, alpha, gamma, tau, grid);
    const double cap_sq = cap * cap;
    const std::int64_t side = 2 * lmax + 1;
    std::vector<OmegaEntry> table(static_cast<std::size_t>(side * side));
    parallel_for(table.size(), [&](std::size_t idx) {
        const std::int64_t l1 = std::int64_t(idx) / side - lmax;
        const std::int64_t l2 = std::int64_t(idx) % side - lmax;
        const MultiIndex ell{l1, l2};
        table[idx] = OmegaEntry{
            l1, l2, omega_from_sets(sets, ell),
            pair_sum_truncated(alpha, gamma, ell, radius) > cap_sq};
    });
    return table;
}

double rmse_lower_bound(std::int64_t M, const Smoothness& alpha,
                        const Weights& gamma) {
    if (M < 4) throw std::invalid_argument("rmse_lower_bound: M >= 4 required");
    gamma.require_dim(2);
    const double g = std::min(gamma[0], gamma[1]);
    return std::sqrt(2.0) * g /
           (3.0 * std::pow(double(M), alpha.value() / 2.0 + 0.5));
}

bool fooling_lemma_holds(std::int64_t N) {
    if (!is_prime(N)) throw std::invalid_argument("fooling_lemma_holds: prime N required");
    const std::int64_t K = isqrt(N);
    for (std::int64_t z1 = 1; z1 < N; ++z1) {
        for (std::int64_t z2 = 1; z2 < N; ++z2) {
            bool found = false;
            for (std::int64_t h1 = -K; h1 <= K && !found; ++h1) {
                if (h1 == 0) continue;
                for (std::int64_t h2 = -K; h2 <= K; ++h2) {
                    if (h2 == 0) continue;
                    const std::int64_t r = ((h1 * z1 + h2 * z2) % N + N) % N;
                    if (r == 0) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

double truncation_threshold(std::int64_t M, const Smoothness& alpha, double lambda,
                            double beta) {
    if (M < 1) throw std::invalid_argument("truncation_threshold: M >= 1");
    const double a = alpha.value();
    if (!(lambda > 0.5) || !(lambda < a))
        throw std::invalid_argument("truncation_threshold: lambda must lie in (1/2, alpha)");
    const double beta_cap = std::min(a * (1.0 - 1.0 / (2.0 * lambda)), 1.0);
    if (!(beta > 0.0) || !(beta < beta_cap))
        throw std::invalid_argument(
            "truncation_threshold: beta must lie in (0, min(alpha(1-1/(2 lambda)), 1))");
    return std::pow(double(M), lambda - lambda * beta / (2.0 * a) + 0.25);
}

double rmse_rate_exponent(const Smoothness& alpha, double lambda, double beta) {
    return -(lambda / 2.0 - lambda * beta / (4.0 * alpha.value()) + 0.125);
}

double exhaustive_expected_sq_error(const FourierPolynomial& f, std::int64_t M,
                                    double tau, const Smoothness& alpha,
                                    const Weights& gamma, const IndexSet& A) {
    if (f.dim() != 2 || A.dim() != 2)
        throw std::invalid_argument("exhaustive_expected_sq_error: d = 2 only");
    const auto sets = step_two_sets(M, tau, alpha, gamma);
    double acc = 0.0;
    for (std::size_t i = 0; i < sets.primes.size(); ++i) {
        double per_n = 0.0;
        for (std::int64_t z2 : sets.z2[i]) {
            const LatticeRule rule(sets.primes[i], {1, z2});
            per_n += exact_expected_sq_error_given_rule(f, rule, A);
        }
        acc += per_n / double(sets.z2[i].size());
    }
    return acc / double(sets.primes.size());
}

BoundReport build_bound_report(std::int64_t M, int dim, const Smoothness& alpha,
                               const Weights& gamma, double tau, int grid_points) {
    BoundReport report;
    report.M = M;
    report.dim = dim;
    report.alpha = alpha.value();
    report.gamma.assign(gamma.values().begin(),
                        gamma.values().begin() + dim);
    report.tau = tau;
    report.grid = lambda_grid(alpha, grid_points);
    report.score_cap = construction_score_cap(M, alpha, gamma, tau, report.grid);
    report.min_budget = min_budget_for_unit_cap(alpha, gamma, tau, dim, report.grid);
    const auto primes = primes_in_range(M);
    for (int s = 1; s <= dim; ++s)
        report.step_bounds.push_back(
            cbc_score_bound(primes.front(), s, alpha, gamma, tau, report.grid));
    return report;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2)
        throw std::invalid_argument("fit_line: need two equal-length samples");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate x");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (intercept + slope * x[i]);
        ss_res += r * r;
    }
    const double sigma_sq = n > 2 ? ss_res / double(n - 2) : 0.0;
    return {slope, std::sqrt(sigma_sq / sxx), intercept};
}

ConvergenceResult convergence_experiment(const FourierPolynomial& f,
                                         std::span<const std::int64_t> budgets,
                                         const CbcConfig& cfg, double lambda,
                                         double beta, std::int64_t n_trials) {
    if (budgets.empty())
        throw std::invalid_argument("convergence_experiment: empty budget list");
    if (n_trials < 2)
        throw std::invalid_argument("convergence_experiment: n_trials >= 2 required");
    ConvergenceResult result;
    for (std::size_t bi = 0; bi < budgets.size(); ++bi) {
        const std::int64_t M = budgets[bi];
        const double T = truncation_threshold(M, cfg.alpha, lambda, beta);
        const IndexSet A = build_index_set(cfg.dim, cfg.alpha, cfg.gamma, T);
        CbcConfig local = cfg;
        local.budget = M;
        std::vector<double> errors(static_cast<std::size_t>(n_trials));
        std::vector<double> drawn_n(static_cast<std::size_t>(n_trials));
        parallel_for(static_cast<std::size_t>(n_trials), [&](std::size_t t) {
            SplitMix64 rng(
                SplitMix64::derive(SplitMix64::derive(cfg.seed, bi), t));
            CbcResult cbc = randomized_cbc(local, rng);
            drawn_n[t] = double(cbc.rule.n_points);
            std::vector<double> shift(static_cast<std::size_t>(cfg.dim));
            for (auto& dj : shift) dj = rng.next_unit();
            const ShiftedLatticeRule rule(std::move(cbc.rule), std::move(shift));
            errors[t] = exact_sq_error_fixed(f, rule, A);
        });
        double mean = 0.0, nmean = 0.0;
        for (std::int64_t t = 0; t < n_trials; ++t) {
            mean += errors[static_cast<std::size_t>(t)];
            nmean += drawn_n[static_cast<std::size_t>(t)];
        }
        mean /= double(n_trials);
        nmean /= double(n_trials);
        double var = 0.0;
        for (double e : errors) var += (e - mean) * (e - mean);
        var /= double(n_trials - 1);
        result.points.push_back(ConvergencePoint{
            M, nmean, T, mean, std::sqrt(var / double(n_trials)),
            rmse_lower_bound(M, cfg.alpha, cfg.gamma)});
    }
    std::vector<double> lx, ly;
    for (const auto& p : result.points) {
        lx.push_back(std::log(double(p.M)));
        ly.push_back(0.5 * std::log(p.mse_mean));
    }
    const LineFit fit = fit_line(lx, ly);
    result.slope = fit.slope;
    result.slope_stderr = fit.slope_stderr;
    result.intercept = fit.intercept;
    return result;
}

ConvergenceResult convergence_fooling(std::span<const std::int64_t> budgets,
                                      const Smoothness& alpha, const Weights& gamma,
                                      double tau, double lambda, double beta) {
    if (budgets.empty())
        throw std::invalid_argument("convergence_fooling: empty budget list");
    ConvergenceResult result;
    for (const std::int64_t M : budgets) {
        const double T = truncation_threshold(M, alpha, lambda, beta);
        const IndexSet A = build_index_set(2, alpha, gamma, T);
        const FourierPolynomial p = fooling_polynomial(M, 2, alpha, gamma);
        const double mse = exhaustive_expected_sq_error(p, M, tau, alpha, gamma, A);
        double nmean = 0.0;
        const auto primes = primes_in_range(M);
        for (std::int64_t n : primes) nmean += double(n);
        nmean /= double(primes.size());
        result.points.push_back(ConvergencePoint{M, nmean, T, mse, 0.0,
                                                 rmse_lower_bound(M, alpha, gamma)});
    }
    std::vector<double> lx, ly;
    for (const auto& p : result.points) {
        lx.push_back(std::log(double(p.M)));
        ly.push_back(0.5 * std::log(p.mse_mean));
    }
    const LineFit fit = fit_line(lx, ly);
    result.slope = fit.slope;
    result.slope_stderr = fit.slope_stderr;
    result.intercept = fit.intercept;
    return result;
}

}  // namespace latapprox
