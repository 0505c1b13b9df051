#pragma once

#include <string>

#include "latapprox/approx.hpp"
#include "latapprox/cbc.hpp"
#include "latapprox/fourier_polynomial.hpp"
#include "latapprox/index_set.hpp"

namespace latapprox {

/// JSON object {"dim": d, "terms": [{"h": [...], "re": x, "im": y}, ...]}
/// with terms in lexicographic frequency order.
std::string to_json(const FourierPolynomial& f);
FourierPolynomial polynomial_from_json(const std::string& text);

/// JSON object {"N": n, "z": [...], "scores": [...], "seed": s, "tau": t}.
/// When bounds is non-empty it is attached together with the per-step
/// margins bound - score.
std::string to_json(const CbcResult& result,
                    const std::vector<double>& bounds = {});

/// Approximant with its provenance block and coefficient terms.
std::string to_json(const Approximant& a);
Approximant approximant_from_json(const std::string& text);

/// Index set exported as a JSON list of integer vectors.
std::string to_json(const IndexSet& set);

/// Parse failures raise std::runtime_error with the parser diagnostic.

}  // namespace latapprox
