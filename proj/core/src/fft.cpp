#include "latapprox/fft.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace latapprox::fft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(std::size_t n) { return n && (n & (n - 1)) == 0; }

}  // namespace

void radix2(std::vector<cdouble>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("radix2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? kTwoPi : -kTwoPi) / double(len);
        const cdouble wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cdouble w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cdouble u = a[i + k];
                cdouble v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / double(n);
        for (auto& x : a) x *= inv;
    }
}

namespace {

// Bluestein: nk = (n^2 + k^2 - (k-n)^2) / 2 turns the length-L transform
// into a linear convolution, done at the next power of two >= 2L-1.
// Chirp exponents are reduced mod 2L in integer arithmetic so the phase
// stays accurate for large L.
std::vector<cdouble> bluestein(const std::vector<cdouble>& x, bool inverse) {
    const std::size_t L = x.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cdouble> chirp(L);
    for (std::size_t n = 0; n < L; ++n) {
        const std::uint64_t e = (std::uint64_t(n) * n) % (2 * L);
        const double ang = sign * std::numbers::pi * double(e) / double(L);
        chirp[n] = cdouble(std::cos(ang), std::sin(ang));
    }
    const std::size_t m = std::bit_ceil(2 * L - 1);
    std::vector<cdouble> a(m, cdouble(0.0, 0.0));
    std::vector<cdouble> b(m, cdouble(0.0, 0.0));
    for (std::size_t n = 0; n < L; ++n) a[n] = x[n] * chirp[n];
    for (std::size_t n = 0; n < L; ++n) {
        b[n] = std::conj(chirp[n]);
        if (n) b[m - n] = b[n];
    }
    radix2(a, false);
    radix2(b, false);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    radix2(a, true);
    std::vector<cdouble> out(L);
    for (std::size_t k = 0; k < L; ++k) out[k] = a[k] * chirp[k];
    if (inverse) {
        const double inv = 1.0 / double(L);
        for (auto& v : out) v *= inv;
    }
    return out;
}

}  // namespace

std::vector<cdouble> dft(const std::vector<cdouble>& x, bool inverse) {
    if (x.empty()) return {};
    if (x.size() == 1) return x;
    if (is_pow2(x.size())) {
        std::vector<cdouble> a = x;
        radix2(a, inverse);
        return a;
    }
    return bluestein(x, inverse);
}

std::vector<double> circular_correlation(const std::vector<double>& a,
                                         const std::vector<double>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("circular_correlation: length mismatch");
    const std::size_t L = a.size();
    if (L == 0) return {};
    std::vector<cdouble> fa(L), fb(L);
    for (std::size_t i = 0; i < L; ++i) {
        fa[i] = cdouble(a[i], 0.0);
        fb[i] = cdouble(b[i], 0.0);
    }
    fa = dft(fa, false);
    fb = dft(fb, false);
    // c[j] = sum_i a[i] b[i+j]  <=>  C = conj(A) .* B in frequency domain
    for (std::size_t i = 0; i < L; ++i) fa[i] = std::conj(fa[i]) * fb[i];
    fa = dft(fa, true);
    std::vector<double> c(L);
    for (std::size_t i = 0; i < L; ++i) c[i] = fa[i].real();
    return c;
}

}  // namespace latapprox::fft
