#include "latapprox/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace latapprox {

LatticeRule::LatticeRule(std::int64_t n, std::vector<std::int64_t> gen)
    : n_points(n), z(std::move(gen)) {
    if (n_points < 2) throw std::invalid_argument("LatticeRule: N >= 2 required");
    if (z.empty()) throw std::invalid_argument("LatticeRule: empty generating vector");
    for (std::int64_t zj : z)
        if (zj < 1 || zj >= n_points)
            throw std::invalid_argument("LatticeRule: components must lie in {1,...,N-1}");
}

ShiftedLatticeRule::ShiftedLatticeRule(LatticeRule r, std::vector<double> delta)
    : rule(std::move(r)), shift(std::move(delta)) {
    if (static_cast<int>(shift.size()) != rule.dim())
        throw std::invalid_argument("ShiftedLatticeRule: shift dimension mismatch");
    for (double d : shift)
        if (!(d >= 0.0) || d >= 1.0)
            throw std::invalid_argument("ShiftedLatticeRule: shift must lie in [0,1)");
}

std::vector<std::vector<double>> lattice_points(const LatticeRule& rule) {
    const std::int64_t N = rule.n_points;
    std::vector<std::vector<double>> pts(static_cast<std::size_t>(N));
    for (std::int64_t n = 0; n < N; ++n) {
        std::vector<double> x(rule.z.size());
        for (std::size_t j = 0; j < rule.z.size(); ++j)
            x[j] = double((n * rule.z[j]) % N) / double(N);
        pts[static_cast<std::size_t>(n)] = std::move(x);
    }
    return pts;
}

std::int64_t dot_mod(const LatticeRule& rule, const MultiIndex& h) {
    if (h.size() != rule.z.size())
        throw std::invalid_argument("dot_mod: dimension mismatch");
    const std::int64_t N = rule.n_points;
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < h.size(); ++j) {
        const std::int64_t hj = ((h[j] % N) + N) % N;
        acc = (acc + hj * (rule.z[j] % N)) % N;
    }
    return acc;
}

bool dual_contains(const LatticeRule& rule, const MultiIndex& ell) {
    return dot_mod(rule, ell) == 0;
}

std::complex<double> character_sum(const LatticeRule& rule, const MultiIndex& h) {
    if (h.size() != rule.z.size())
        throw std::invalid_argument("character_sum: dimension mismatch");
    const std::int64_t N = rule.n_points;
    std::complex<double> acc(0.0, 0.0);
    for (std::int64_t n = 0; n < N; ++n) {
        // h . x_n is rational with denominator N; reduce exactly before the
        // trig call so large frequencies lose no precision.
        std::int64_t num = 0;
        for (std::size_t j = 0; j < h.size(); ++j) {
            const std::int64_t frac = (n * rule.z[j]) % N;
            const std::int64_t hj = ((h[j] % N) + N) % N;
            num = (num + hj * frac) % N;
        }
        const double ang = 2.0 * std::numbers::pi * double(num) / double(N);
        acc += std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc / double(N);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t i = 3; i * i <= n; i += 2)
        if (n % i == 0) return false;
    return true;
}

std::vector<std::int64_t> primes_in_range(std::int64_t M) {
    if (M < 4) throw std::invalid_argument("primes_in_range: M >= 4 required");
    const std::int64_t lo = (M + 1) / 2;  // ceil(M/2)
    std::vector<bool> composite(static_cast<std::size_t>(M + 1), false);
    for (std::int64_t p = 2; p * p <= M; ++p)
        if (!composite[static_cast<std::size_t>(p)])
            for (std::int64_t q = p * p; q <= M; q += p)
                composite[static_cast<std::size_t>(q)] = true;
    std::vector<std::int64_t> primes;
    for (std::int64_t n = lo + 1; n <= M; ++n)
        if (n >= 2 && !composite[static_cast<std::size_t>(n)]) primes.push_back(n);
    return primes;
}

}  // namespace latapprox
