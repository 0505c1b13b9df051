#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "latapprox/cbc.hpp"
#include "latapprox/fourier_polynomial.hpp"
#include "latapprox/index_set.hpp"
#include "latapprox/lattice.hpp"
#include "latapprox/types.hpp"

namespace latapprox {

/// Black-box integrand on [0,1)^d.
using Evaluable = std::function<std::complex<double>(std::span<const double>)>;

/// How an approximant was produced, enough to reproduce it bit for bit.
struct Provenance {
    std::int64_t budget = 0;  // M (0 when the rule was supplied directly)
    std::int64_t n_points = 0;
    std::vector<std::int64_t> z;
    std::vector<double> shift;
    std::uint64_t seed = 0;
    double tau = 0.0;
    double threshold = 0.0;  // T
};

/// Estimated Fourier coefficients on an index set, with provenance.
struct Approximant {
    IndexSet index_set;
    std::map<MultiIndex, std::complex<double>> coeffs;
    Provenance provenance;

    /// The approximant as an explicit trigonometric polynomial.
    FourierPolynomial to_polynomial() const;

    std::complex<double> eval(std::span<const double> x) const;
};

/// Values f({k z / N + Delta}) for k = 0..N-1.
std::vector<std::complex<double>> sample_function(const Evaluable& f,
                                                  const ShiftedLatticeRule& rule);

/// Coefficient estimates for every h in A from the N samples:
///   est(h) = exp(-2 pi i h.Delta) * F[(h.z) mod N],
/// where F is the length-N DFT of the samples divided by N. Multiple h may
/// read the same bin; each keeps its own phase, no deduplication.
Approximant estimate_coeffs(std::span<const std::complex<double>> samples,
                            const ShiftedLatticeRule& rule, const IndexSet& A);

/// The exact estimation error of a trigonometric polynomial:
///   f_hat(h) - est(h) = sum_{l in dual \ 0} f_hat(h+l) exp(2 pi i l.Delta),
/// evaluated by scanning f's support. No truncation.
std::complex<double> alias_expansion(const FourierPolynomial& f,
                                     const ShiftedLatticeRule& rule,
                                     const MultiIndex& h);

/// Full randomized approximation: CBC construction, uniform shift, index
/// set A_d(T), sampling, coefficient estimation. Stream order: the CBC
/// draws, then one unit draw per shift coordinate.
Approximant approximate(const Evaluable& f, const CbcConfig& cfg, double threshold);

/// Exact squared L2 error of the approximant defined by (rule, A) applied
/// to a trigonometric polynomial:
///   sum_{h not in A} |f_hat(h)|^2 + sum_{h in A} |f_hat(h) - est(h)|^2,
/// with the second term through the alias identity (machine precision, no
/// sampling). Support is bucketed by DFT bin, so the cost is
/// O(|support| + |A| * mean bucket size).
double exact_sq_error_fixed(const FourierPolynomial& f, const ShiftedLatticeRule& rule,
                            const IndexSet& A);

/// The same error integrated exactly over the shift:
///   sum_{h not in A} |f_hat(h)|^2
///   + sum_{h in A} sum_{l in dual \ 0} |f_hat(h+l)|^2.
double exact_expected_sq_error_given_rule(const FourierPolynomial& f,
                                          const LatticeRule& rule, const IndexSet& A);

struct MonteCarloEstimate {
    double mean_sq_error;
    double std_error;
};

/// Mean of exact_sq_error_fixed over n_trials independent (N, z, Delta)
/// draws; trial t runs on the substream derive(seed, t), so a longer run
/// reproduces a shorter one's prefix. Trials may execute in parallel.
MonteCarloEstimate rmse_monte_carlo(const FourierPolynomial& f, const CbcConfig& cfg,
                                    double threshold, std::int64_t n_trials);

}  // namespace latapprox
