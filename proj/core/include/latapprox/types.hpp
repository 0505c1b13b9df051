#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace latapprox {

/// Frequency vector h in Z^d. Lexicographic ordering is the vector's
/// built-in operator<.
using MultiIndex = std::vector<std::int64_t>;

inline MultiIndex negated(const MultiIndex& h) {
    MultiIndex m(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) m[j] = -h[j];
    return m;
}

/// Smoothness parameter alpha > 1/2 of the weighted Korobov space.
/// Integer alpha unlocks the closed-form (Bernoulli polynomial) paths.
class Smoothness {
public:
    explicit Smoothness(double value) : value_(value) {
        if (!(value > 0.5))
            throw std::invalid_argument("smoothness alpha must exceed 1/2");
        if (value_ < 1e9 && std::floor(value_) == value_)
            integer_ = static_cast<int>(value_);
    }

    double value() const { return value_; }
    bool is_integer() const { return integer_ != 0; }

    int integer() const {
        if (!integer_)
            throw std::invalid_argument("operation requires integer alpha");
        return integer_;
    }

private:
    double value_;
    int integer_ = 0;
};

/// Product weights gamma_1, gamma_2, ... in [0,1] (coordinate importance).
class Weights {
public:
    Weights(std::vector<double> gammas) : g_(std::move(gammas)) {
        for (double g : g_)
            if (!(g >= 0.0) || g > 1.0)
                throw std::invalid_argument("weights must lie in [0,1]");
    }

    Weights(std::initializer_list<double> gammas)
        : Weights(std::vector<double>(gammas)) {}

    static Weights uniform(double g, std::size_t d) {
        return Weights(std::vector<double>(d, g));
    }

    double operator[](std::size_t j) const { return g_[j]; }
    std::size_t size() const { return g_.size(); }
    const std::vector<double>& values() const { return g_; }

    void require_dim(std::size_t d) const {
        if (g_.size() < d)
            throw std::invalid_argument("weight sequence shorter than dimension");
    }

private:
    std::vector<double> g_;
};

}  // namespace latapprox
