#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "latapprox/types.hpp"

namespace latapprox {

/// Rank-1 lattice rule: N points generated by z, points {n*z/N} for
/// n = 0..N-1.
struct LatticeRule {
    std::int64_t n_points;       // N >= 2
    std::vector<std::int64_t> z; // each in {1, ..., N-1}

    LatticeRule(std::int64_t n, std::vector<std::int64_t> gen);

    int dim() const { return static_cast<int>(z.size()); }
};

/// Lattice rule plus a shift Delta in [0,1)^d applied to every point.
struct ShiftedLatticeRule {
    LatticeRule rule;
    std::vector<double> shift;

    ShiftedLatticeRule(LatticeRule r, std::vector<double> delta);
};

/// All N lattice points in index order; coordinates in [0, 1).
std::vector<std::vector<double>> lattice_points(const LatticeRule& rule);

/// Dual-lattice membership ell . z == 0 (mod N), exact integer arithmetic.
bool dual_contains(const LatticeRule& rule, const MultiIndex& ell);

/// (h . z) mod N in [0, N), exact integer arithmetic.
std::int64_t dot_mod(const LatticeRule& rule, const MultiIndex& h);

/// (1/N) sum_n exp(2*pi*i*h.x_n). Equals 1 on the dual lattice and 0 off it
/// (character property); computed by direct summation.
std::complex<double> character_sum(const LatticeRule& rule, const MultiIndex& h);

/// All primes N with ceil(M/2) < N <= M, ascending. Nonempty for M >= 4.
std::vector<std::int64_t> primes_in_range(std::int64_t M);

bool is_prime(std::int64_t n);

}  // namespace latapprox
