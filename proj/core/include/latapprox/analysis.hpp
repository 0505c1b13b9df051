#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "latapprox/approx.hpp"
#include "latapprox/fourier_polynomial.hpp"
#include "latapprox/index_set.hpp"
#include "latapprox/types.hpp"

namespace latapprox {

/// Log-spaced grid of n points in (1/2 + 1e-3, alpha - 1e-3). Every bound
/// below holds pointwise in lambda, so minimizing over any grid is sound
/// (an upper bound of the true infimum).
std::vector<double> lambda_grid(const Smoothness& alpha, int n = 64);

/// Grid-minimized cap on the construction score for any output at budget M:
///   min_lambda [ (2 / ((1-tau) M)) prod_j (1 + 2^(2a+2) gamma_j^(1/l)
///                zeta(a/l))^2 ]^lambda.
double construction_score_cap(std::int64_t M, const Smoothness& alpha,
                              const Weights& gamma, double tau,
                              std::span<const double> grid);

/// Smallest budget for which the cap drops to 1:
///   min_lambda (2/(1-tau)) prod_j (1 + 2^(2a+2) gamma_j^(1/l) zeta(a/l))^2.
double min_budget_for_unit_cap(const Smoothness& alpha, const Weights& gamma,
                               double tau, int dim, std::span<const double> grid);

/// Per-step guarantee for every constructed vector:
///   min_lambda [ (1/((1-tau)(N-1))) prod_{j<=s} (...)^2 ]^lambda.
double cbc_score_bound(std::int64_t N, int s, const Smoothness& alpha,
                       const Weights& gamma, double tau,
                       std::span<const double> grid);

/// Truncated pair sum sum_{|h_j| <= radius} 1/(r^2(h) r^2(h+ell)); factors
/// across coordinates. Underestimates the full sum, which keeps the
/// exclusion test below conservative.
double pair_sum_truncated(const Smoothness& alpha, const Weights& gamma,
                          const MultiIndex& ell, std::int64_t radius = 1000);

/// d = 2 enumeration of the probability that ell lands in the dual lattice
/// under the construction's randomness: average over N in the prime range
/// and z = (1, z2) over the candidate set.
double dual_hit_probability(std::int64_t M, double tau, const Smoothness& alpha,
                            const Weights& gamma, const MultiIndex& ell);

/// True when the truncated pair sum already exceeds the squared score cap,
/// which forces the hit probability to zero.
bool dual_hit_excluded(std::int64_t M, double tau, const Smoothness& alpha,
                       const Weights& gamma, const MultiIndex& ell,
                       std::int64_t radius = 1000);

struct OmegaEntry {
    std::int64_t l1;
    std::int64_t l2;
    double omega;
    bool flagged_vanishing;
};

/// Full table over |l1|, |l2| <= lmax (d = 2), sharing the per-N candidate
/// sets across entries.
std::vector<OmegaEntry> build_omega_table(std::int64_t M, double tau,
                                          const Smoothness& alpha,
                                          const Weights& gamma, std::int64_t lmax,
                                          std::int64_t radius = 1000);

/// Closed-form lower bound on the worst-case RMSE of the randomized
/// algorithm: sqrt(2) min(gamma_1, gamma_2) / (3 M^(alpha/2 + 1/2)).
double rmse_lower_bound(std::int64_t M, const Smoothness& alpha,
                        const Weights& gamma);

/// Exhaustive check that for every z in {1..N-1}^2 some h with
/// |h_1|, |h_2| <= floor(sqrt(N)), both nonzero, lies in the dual lattice.
/// Must hold for every prime N.
bool fooling_lemma_holds(std::int64_t N);

/// The threshold choice T = M^(lambda - lambda*beta/(2*alpha) + 1/4) that
/// balances truncation against aliasing. Parameter ranges are enforced:
/// lambda in (1/2, alpha), beta in (0, min(alpha(1 - 1/(2 lambda)), 1)).
double truncation_threshold(std::int64_t M, const Smoothness& alpha, double lambda,
                            double beta);

/// RMSE rate exponent -(lambda/2 - lambda*beta/(4*alpha) + 1/8) implied by
/// that threshold choice. The multiplying constant is not constructive; only
/// the exponent is asserted anywhere.
double rmse_rate_exponent(const Smoothness& alpha, double lambda, double beta);

/// d = 2 exhaustive mean of the shift-integrated squared error over the
/// prime range and the step-2 candidate set.
double exhaustive_expected_sq_error(const FourierPolynomial& f, std::int64_t M,
                                    double tau, const Smoothness& alpha,
                                    const Weights& gamma, const IndexSet& A);

/// Bundle of the theoretical quantities for one configuration.
struct BoundReport {
    std::int64_t M;
    int dim;
    double alpha;
    std::vector<double> gamma;
    double tau;
    std::vector<double> grid;
    double score_cap;          // cap on R for any construction output
    double min_budget;         // budget making the cap <= 1
    std::vector<double> step_bounds;  // per s = 1..d at N = smallest prime
};

BoundReport build_bound_report(std::int64_t M, int dim, const Smoothness& alpha,
                               const Weights& gamma, double tau, int grid_points = 64);

struct ConvergencePoint {
    std::int64_t M;
    double n_mean;      // mean of the drawn N
    double threshold;   // T used
    double mse_mean;
    double mse_stderr;
    double lower_bound; // closed-form RMSE lower bound at this M
};

struct ConvergenceResult {
    std::vector<ConvergencePoint> points;
    double slope;        // least-squares slope of log RMSE vs log M
    double slope_stderr;
    double intercept;
};

/// Monte Carlo convergence experiment for a fixed polynomial: per budget M,
/// n_trials independent construction draws, T from truncation_threshold,
/// exact per-draw errors. cfg supplies dim/alpha/gamma/tau/seed; cfg.budget
/// is ignored.
ConvergenceResult convergence_experiment(const FourierPolynomial& f,
                                         std::span<const std::int64_t> budgets,
                                         const CbcConfig& cfg, double lambda,
                                         double beta, std::int64_t n_trials);

/// Exhaustive (d = 2) convergence of the fooling family: per budget M the
/// exact expectation replaces sampling, so mse_stderr is zero.
ConvergenceResult convergence_fooling(std::span<const std::int64_t> budgets,
                                      const Smoothness& alpha, const Weights& gamma,
                                      double tau, double lambda, double beta);

/// Ordinary least squares of y on x; returns slope, its standard error,
/// and the intercept.
struct LineFit {
    double slope;
    double slope_stderr;
    double intercept;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace latapprox
