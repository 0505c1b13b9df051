#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "latapprox/lattice.hpp"
#include "latapprox/rng.hpp"
#include "latapprox/types.hpp"

namespace latapprox {

/// Parameters of the randomized component-by-component construction.
/// budget is the sample ceiling M; N is drawn from the primes in
/// (ceil(M/2), M].
struct CbcConfig {
    std::int64_t budget;  // M >= 4
    int dim;
    Smoothness alpha;     // integer alpha required by the score formula
    Weights gamma;
    double tau;           // candidate-set fraction in (0,1)
    std::uint64_t seed;

    void validate() const;
};

/// Output of one construction run. step_scores[s-1] is the quality score
/// R_{N,s} of the chosen prefix (z_1,...,z_s); candidate_set_sizes holds
/// ceil(tau*(N-1)) for the drawn steps s = 2..d.
struct CbcResult {
    LatticeRule rule;
    std::vector<double> step_scores;
    std::vector<std::int64_t> candidate_set_sizes;
    double tau;
    std::uint64_t seed;
};

/// Closed-form score: R with
///   R^2 = -prod_j (1 + 2 zeta(4 alpha) gamma_j^4)
///         + (1/N) sum_k prod_j (1 + gamma_j^2 c_alpha B_{2 alpha}({k z_j / N}))^2.
/// Integer alpha only. R^2 values in [-1e-9, 0) from floating cancellation
/// are clamped to 0; anything more negative throws.
double criterion_formula(const LatticeRule& rule, const Smoothness& alpha,
                         const Weights& gamma);

/// Truncated double sum over |h_j|, |ell_j| <= radius with ell restricted to
/// the dual lattice. value is the truncated R; tail_bound bounds the R^2
/// mass outside the box. Works for any real alpha. The box sum factorizes
/// across coordinates; the dual indicator is expanded by the exact character
/// identity over k = 0..N-1, so this is the literal truncated sum, just
/// rearranged.
struct TruncatedCriterion {
    double value;
    double tail_bound;
};
TruncatedCriterion criterion_direct(const LatticeRule& rule, double alpha,
                                    const Weights& gamma, std::int64_t radius);

/// Scores R_{N,s}(prefix, z_s) for every candidate z_s = 1..N-1
/// (entry [z_s - 1]). Plain O(N^2) accumulation; accepts any N >= 2.
std::vector<double> candidate_scores_naive(std::int64_t N,
                                           std::span<const std::int64_t> prefix,
                                           const Smoothness& alpha,
                                           const Weights& gamma);

/// Same scores in O(N log N): keep theta_k over the prefix, reindex
/// k and z_s by a primitive root of N, and evaluate the two length-(N-1)
/// circular correlations (sum_k theta_k B(k z_s) and sum_k theta_k B^2(k z_s))
/// with the FFT. N must be prime.
std::vector<double> candidate_scores(std::int64_t N,
                                     std::span<const std::int64_t> prefix,
                                     const Smoothness& alpha, const Weights& gamma);

/// The ceil(tau*(N-1)) best-scoring candidates, ties broken by ascending
/// integer; returned in ascending integer order.
std::vector<std::int64_t> select_candidate_set(std::span<const double> scores,
                                               double tau);

/// Ceil(tau * n) with a snap for decimal tau inputs that land on integers.
std::int64_t candidate_set_size(double tau, std::int64_t n);

/// One run of the randomized construction. Draw order on the seed's stream:
/// one draw for N, then one draw per step s = 2..d for z_s.
CbcResult randomized_cbc(const CbcConfig& cfg);

/// Same, consuming draws from an external stream (the approximation
/// operator continues the stream with its shift draws).
CbcResult randomized_cbc(const CbcConfig& cfg, SplitMix64& rng);

/// Smallest primitive root modulo a prime.
std::int64_t primitive_root(std::int64_t prime);

}  // namespace latapprox
