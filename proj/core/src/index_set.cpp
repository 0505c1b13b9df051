#include "latapprox/index_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "latapprox/korobov.hpp"

namespace latapprox {

IndexSet::IndexSet(int dim, double threshold, std::vector<MultiIndex> members)
    : dim_(dim), threshold_(threshold), members_(std::move(members)) {
    if (dim < 1) throw std::invalid_argument("IndexSet: dimension must be >= 1");
    for (const auto& h : members_)
        if (static_cast<int>(h.size()) != dim)
            throw std::invalid_argument("IndexSet: member dimension mismatch");
    if (!std::is_sorted(members_.begin(), members_.end()))
        std::sort(members_.begin(), members_.end());
}

bool IndexSet::contains(const MultiIndex& h) const {
    return std::binary_search(members_.begin(), members_.end(), h);
}

namespace {

struct Enumerator {
    int dim;
    double two_alpha;
    const Weights* gamma;
    long double threshold;
    std::size_t cap;
    bool materialize;

    std::size_t count = 0;
    std::vector<MultiIndex> out;
    MultiIndex current;

    // Coordinate factor |h|^{2a} / g^2 in extended precision.
    long double factor(std::int64_t h, double g) const {
        if (h == 0) return 1.0L;
        return std::pow((long double)std::llabs(h), (long double)two_alpha) /
               ((long double)g * (long double)g);
    }

    // Largest |h_j| whose factor fits the residual budget.
    std::int64_t coord_max(std::size_t j, long double budget) const {
        const double g = (*gamma)[j];
        if (g == 0.0 || budget < 1.0L) return 0;
        double est = std::pow(double(std::sqrt(budget)) * g, 1.0 / (two_alpha / 2.0));
        auto m = static_cast<std::int64_t>(est);
        while (factor(m + 1, g) <= budget) ++m;
        while (m > 0 && factor(m, g) > budget) --m;
        return m;
    }

    void recurse(std::size_t j, long double prod) {
        if (j == static_cast<std::size_t>(dim)) {
            if (prod > threshold) return;
            if (++count > cap)
                throw std::length_error("index set cardinality exceeds cap of " +
                                        std::to_string(cap));
            if (materialize) out.push_back(current);
            return;
        }
        const long double budget = threshold / prod;
        const std::int64_t m = coord_max(j, budget);
        const double g = (*gamma)[j];
        for (std::int64_t h = -m; h <= m; ++h) {
            const long double p = prod * factor(h, g);
            if (p > threshold) continue;
            if (materialize) current[j] = h;
            recurse(j + 1, p);
        }
    }
};

}  // namespace

IndexSet build_index_set(int dim, const Smoothness& alpha, const Weights& gamma,
                         double threshold, std::size_t cap) {
    if (dim < 1) throw std::invalid_argument("build_index_set: dimension must be >= 1");
    if (!(threshold > 0.0))
        throw std::invalid_argument("build_index_set: threshold must be positive");
    gamma.require_dim(static_cast<std::size_t>(dim));
    Enumerator e{dim, 2.0 * alpha.value(), &gamma, (long double)threshold,
                 cap,  true};
    e.current.assign(dim, 0);
    e.recurse(0, 1.0L);
    return IndexSet(dim, threshold, std::move(e.out));
}

std::size_t index_set_cardinality(int dim, const Smoothness& alpha,
                                  const Weights& gamma, double threshold) {
    if (dim < 1) throw std::invalid_argument("index_set_cardinality: dimension must be >= 1");
    if (!(threshold > 0.0)) return 0;
    gamma.require_dim(static_cast<std::size_t>(dim));
    Enumerator e{dim,
                 2.0 * alpha.value(),
                 &gamma,
                 (long double)threshold,
                 std::numeric_limits<std::size_t>::max(),
                 false};
    e.recurse(0, 1.0L);
    return e.count;
}

}  // namespace latapprox
