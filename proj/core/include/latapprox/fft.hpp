#pragma once

#include <complex>
#include <vector>

namespace latapprox::fft {

using cdouble = std::complex<double>;

/// In-place iterative radix-2 transform; size must be a power of two.
/// inverse applies the conjugate kernel and the 1/n scale.
void radix2(std::vector<cdouble>& a, bool inverse);

/// Discrete Fourier transform of arbitrary length:
/// X[k] = sum_n x[n] exp(-+2*pi*i*n*k/L). Power-of-two sizes go through
/// radix2 directly, everything else through Bluestein's chirp-z reduction.
std::vector<cdouble> dft(const std::vector<cdouble>& x, bool inverse = false);

/// Circular cross-correlation c[j] = sum_i a[i] * b[(i+j) mod L] of two
/// equal-length real sequences.
std::vector<double> circular_correlation(const std::vector<double>& a,
                                         const std::vector<double>& b);

}  // namespace latapprox::fft
