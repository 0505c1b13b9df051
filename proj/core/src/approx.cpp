#include "latapprox/approx.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "latapprox/fft.hpp"
#include "latapprox/parallel.hpp"

namespace latapprox {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> unit_phase(double turns) {
    const double frac = turns - std::floor(turns);
    return {std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)};
}

double dot(const MultiIndex& h, std::span<const double> x) {
    double acc = 0.0;
    for (std::size_t j = 0; j < h.size(); ++j) acc += double(h[j]) * x[j];
    return acc;
}

}  // namespace

FourierPolynomial Approximant::to_polynomial() const {
    FourierPolynomial p(index_set.dim());
    for (const auto& [h, c] : coeffs) p.set(h, c);
    return p;
}

std::complex<double> Approximant::eval(std::span<const double> x) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [h, c] : coeffs) acc += c * unit_phase(dot(h, x));
    return acc;
}

std::vector<std::complex<double>> sample_function(const Evaluable& f,
                                                  const ShiftedLatticeRule& rule) {
    const std::int64_t N = rule.rule.n_points;
    const int d = rule.rule.dim();
    std::vector<std::complex<double>> samples(static_cast<std::size_t>(N));
    std::vector<double> x(static_cast<std::size_t>(d));
    for (std::int64_t k = 0; k < N; ++k) {
        for (int j = 0; j < d; ++j) {
            const double v =
                double((k * rule.rule.z[static_cast<std::size_t>(j)]) % N) / double(N) +
                rule.shift[static_cast<std::size_t>(j)];
            x[static_cast<std::size_t>(j)] = v - std::floor(v);
        }
        samples[static_cast<std::size_t>(k)] = f(x);
    }
    return samples;
}

Approximant estimate_coeffs(std::span<const std::complex<double>> samples,
                            const ShiftedLatticeRule& rule, const IndexSet& A) {
    const std::int64_t N = rule.rule.n_points;
    if (static_cast<std::int64_t>(samples.size()) != N)
        throw std::invalid_argument("estimate_coeffs: sample count differs from N");
    if (A.dim() != rule.rule.dim())
        throw std::invalid_argument("estimate_coeffs: index set dimension mismatch");
    std::vector<fft::cdouble> spectrum(samples.begin(), samples.end());
    spectrum = fft::dft(spectrum, false);
    const double inv_n = 1.0 / double(N);

    Approximant out{A, {}, {}};
    out.provenance.n_points = N;
    out.provenance.z = rule.rule.z;
    out.provenance.shift = rule.shift;
    for (const auto& h : A.members()) {
        const std::int64_t bin = dot_mod(rule.rule, h);
        const double hd = dot(h, rule.shift);
        out.coeffs.emplace(h, spectrum[static_cast<std::size_t>(bin)] * inv_n *
                                  unit_phase(-hd));
    }
    return out;
}

std::complex<double> alias_expansion(const FourierPolynomial& f,
                                     const ShiftedLatticeRule& rule,
                                     const MultiIndex& h) {
    if (f.dim() != rule.rule.dim())
        throw std::invalid_argument("alias_expansion: dimension mismatch");
    std::complex<double> acc(0.0, 0.0);
    MultiIndex ell(h.size());
    for (const auto& [m, c] : f.terms()) {
        if (m == h) continue;
        for (std::size_t j = 0; j < h.size(); ++j) ell[j] = m[j] - h[j];
        if (!dual_contains(rule.rule, ell)) continue;
        acc += c * unit_phase(dot(ell, rule.shift));
    }
    return acc;
}

namespace {

// Support of f bucketed by DFT bin (m . z mod N); the exact alias partners
// of h in A are the support points sharing h's bin.
using Buckets =
    std::unordered_map<std::int64_t, std::vector<const std::pair<const MultiIndex, std::complex<double>>*>>;

Buckets bucket_support(const FourierPolynomial& f, const LatticeRule& rule) {
    Buckets buckets;
    for (const auto& term : f.terms())
        buckets[dot_mod(rule, term.first)].push_back(&term);
    return buckets;
}

}  // namespace

double exact_sq_error_fixed(const FourierPolynomial& f, const ShiftedLatticeRule& rule,
                            const IndexSet& A) {
    if (f.dim() != rule.rule.dim() || f.dim() != A.dim())
        throw std::invalid_argument("exact_sq_error_fixed: dimension mismatch");
    double truncated = 0.0;
    for (const auto& [m, c] : f.terms())
        if (!A.contains(m)) truncated += std::norm(c);

    const auto buckets = bucket_support(f, rule.rule);
    double aliased = 0.0;
    for (const auto& h : A.members()) {
        const auto it = buckets.find(dot_mod(rule.rule, h));
        if (it == buckets.end()) continue;
        const double hd = dot(h, rule.shift);
        std::complex<double> err(0.0, 0.0);
        for (const auto* term : it->second) {
            if (term->first == h) continue;
            err += term->second * unit_phase(dot(term->first, rule.shift) - hd);
        }
        aliased += std::norm(err);
    }
    return truncated + aliased;
}

double exact_expected_sq_error_given_rule(const FourierPolynomial& f,
                                          const LatticeRule& rule, const IndexSet& A) {
    if (f.dim() != rule.dim() || f.dim() != A.dim())
        throw std::invalid_argument("exact_expected_sq_error_given_rule: dimension mismatch");
    double truncated = 0.0;
    for (const auto& [m, c] : f.terms())
        if (!A.contains(m)) truncated += std::norm(c);

    const auto buckets = bucket_support(f, rule);
    double aliased = 0.0;
    for (const auto& h : A.members()) {
        const auto it = buckets.find(dot_mod(rule, h));
        if (it == buckets.end()) continue;
        for (const auto* term : it->second)
            if (term->first != h) aliased += std::norm(term->second);
    }
    return truncated + aliased;
}

Approximant approximate(const Evaluable& f, const CbcConfig& cfg, double threshold) {
    if (!(threshold > 0.0))
        throw std::invalid_argument("approximate: threshold must be positive");
    SplitMix64 rng(cfg.seed);
    CbcResult cbc = randomized_cbc(cfg, rng);
    std::vector<double> shift(static_cast<std::size_t>(cfg.dim));
    for (auto& dj : shift) dj = rng.next_unit();
    const ShiftedLatticeRule rule(std::move(cbc.rule), std::move(shift));
    const IndexSet A = build_index_set(cfg.dim, cfg.alpha, cfg.gamma, threshold);
    const auto samples = sample_function(f, rule);
    Approximant out = estimate_coeffs(samples, rule, A);
    out.provenance.budget = cfg.budget;
    out.provenance.seed = cfg.seed;
    out.provenance.tau = cfg.tau;
    out.provenance.threshold = threshold;
    return out;
}

MonteCarloEstimate rmse_monte_carlo(const FourierPolynomial& f, const CbcConfig& cfg,
                                    double threshold, std::int64_t n_trials) {
    if (n_trials < 1)
        throw std::invalid_argument("rmse_monte_carlo: n_trials >= 1 required");
    const IndexSet A = build_index_set(cfg.dim, cfg.alpha, cfg.gamma, threshold);
    std::vector<double> errors(static_cast<std::size_t>(n_trials));
    parallel_for(static_cast<std::size_t>(n_trials), [&](std::size_t t) {
        SplitMix64 rng(SplitMix64::derive(cfg.seed, t));
        CbcResult cbc = randomized_cbc(cfg, rng);
        std::vector<double> shift(static_cast<std::size_t>(cfg.dim));
        for (auto& dj : shift) dj = rng.next_unit();
        const ShiftedLatticeRule rule(std::move(cbc.rule), std::move(shift));
        errors[t] = exact_sq_error_fixed(f, rule, A);
    });
    double mean = 0.0;
    for (double e : errors) mean += e;
    mean /= double(n_trials);
    double var = 0.0;
    for (double e : errors) var += (e - mean) * (e - mean);
    var = n_trials > 1 ? var / double(n_trials - 1) : 0.0;
    return {mean, std::sqrt(var / double(n_trials))};
}

}  // namespace latapprox
