#pragma once

#include <cstdint>
#include <span>

#include "latapprox/fourier_polynomial.hpp"
#include "latapprox/types.hpp"

namespace latapprox {

/// Closed-form evaluation of the space's kernel section K(x, 0): the
/// function whose Fourier coefficients are 1/r^2(h). Requires integer alpha
/// (Bernoulli form):
///   prod_j (1 + gamma_j^2 * (-1)^(alpha+1) (2 pi)^(2 alpha) / (2 alpha)! *
///           B_{2 alpha}({x_j})).
class KernelFunction {
public:
    KernelFunction(int dim, const Smoothness& alpha, Weights gamma);

    int dim() const { return dim_; }
    double eval(std::span<const double> x) const;

private:
    int dim_;
    int alpha_;
    Weights gamma_;
    double scale_;  // (-1)^(alpha+1) (2 pi)^(2 alpha) / (2 alpha)!
};

/// The kernel section truncated to the box |h_j| <= radius, as an explicit
/// polynomial: coeff(h) = 1/r^2(h). Frequencies with infinite decay are
/// omitted (zero-weight coordinates force h_j = 0).
FourierPolynomial truncated_kernel_poly(int dim, const Smoothness& alpha,
                                        const Weights& gamma, std::int64_t radius);

/// Support of the lower-bound witness: {(h1, h2, 0, ..., 0) : |h1|, |h2| <=
/// floor(sqrt(M))}.
std::vector<MultiIndex> fooling_support(std::int64_t M, int dim);

/// The unit-norm fooling polynomial witnessing the lower bound:
/// coeff(h) = (r^2(h) * |support|)^(-1/2) on fooling_support(M, d).
/// Requires M >= 4, d >= 2 and positive gamma_1, gamma_2.
FourierPolynomial fooling_polynomial(std::int64_t M, int dim,
                                     const Smoothness& alpha, const Weights& gamma);

/// floor(sqrt(n)) in exact integer arithmetic.
std::int64_t isqrt(std::int64_t n);

}  // namespace latapprox
