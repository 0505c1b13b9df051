#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latapprox/types.hpp"

namespace latapprox {

/// The truncation set {h in Z^d : r^2_{alpha,gamma}(h) <= T}, materialized
/// and sorted lexicographically. Contains 0 whenever T >= 1 and is closed
/// under negation.
class IndexSet {
public:
    IndexSet(int dim, double threshold, std::vector<MultiIndex> members);

    int dim() const { return dim_; }
    double threshold() const { return threshold_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<MultiIndex>& members() const { return members_; }

    bool contains(const MultiIndex& h) const;

private:
    int dim_;
    double threshold_;
    std::vector<MultiIndex> members_;  // lexicographic
};

/// Enumerates the truncation set by per-coordinate recursion on the residual
/// budget. Membership at the boundary is decided on the extended-precision
/// r^2. Throws std::length_error when the set would exceed cap.
IndexSet build_index_set(int dim, const Smoothness& alpha, const Weights& gamma,
                         double threshold, std::size_t cap = 10'000'000);

/// |A_d(T)| by the same recursion, counting only.
std::size_t index_set_cardinality(int dim, const Smoothness& alpha,
                                  const Weights& gamma, double threshold);

}  // namespace latapprox
