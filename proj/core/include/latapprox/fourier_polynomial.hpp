#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>

#include "latapprox/types.hpp"

namespace latapprox {

class IndexSet;

/// Trigonometric polynomial: a finite map from frequencies h in Z^d to
/// complex coefficients. The workhorse test-function representation; all
/// approximation errors against it are computable exactly.
class FourierPolynomial {
public:
    using TermMap = std::map<MultiIndex, std::complex<double>>;

    explicit FourierPolynomial(int dim) : dim_(dim) {
        if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    }

    int dim() const { return dim_; }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void set(MultiIndex h, std::complex<double> c) {
        check_dim(h);
        terms_[std::move(h)] = c;
    }

    void add(const MultiIndex& h, std::complex<double> c) {
        check_dim(h);
        terms_[h] += c;
    }

    std::complex<double> coeff(const MultiIndex& h) const {
        auto it = terms_.find(h);
        return it == terms_.end() ? std::complex<double>(0.0, 0.0) : it->second;
    }

    /// Pointwise value sum_h c_h exp(2*pi*i*h.x).
    std::complex<double> eval(std::span<const double> x) const;

private:
    void check_dim(const MultiIndex& h) const {
        if (static_cast<int>(h.size()) != dim_)
            throw std::invalid_argument("frequency dimension mismatch");
    }

    int dim_;
    TermMap terms_;
};

/// Squared Korobov norm sum_h r^2(h) |c_h|^2; +infinity if a stored term
/// sits on an infinite-decay frequency.
double korobov_norm_sq(const FourierPolynomial& f, const Smoothness& alpha,
                       const Weights& gamma);

/// Plain squared L2 norm sum_h |c_h|^2 (Parseval).
double l2_norm_sq(const FourierPolynomial& f);

/// Polynomial with the given support and pseudo-random complex coefficients
/// scaled to unit Korobov norm. Deterministic in seed. Every support
/// frequency must have finite decay.
FourierPolynomial random_unit_norm_poly(std::uint64_t seed,
                                        std::span<const MultiIndex> support,
                                        const Smoothness& alpha,
                                        const Weights& gamma);
FourierPolynomial random_unit_norm_poly(std::uint64_t seed, const IndexSet& support,
                                        const Smoothness& alpha,
                                        const Weights& gamma);

}  // namespace latapprox
