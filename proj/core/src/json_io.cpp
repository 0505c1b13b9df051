#include "latapprox/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace latapprox {

namespace {

using nlohmann::json;

json poly_to_obj(int dim, const FourierPolynomial::TermMap& terms) {
    json jterms = json::array();
    for (const auto& [h, c] : terms) {
        json t;
        t["h"] = h;
        t["re"] = c.real();
        t["im"] = c.imag();
        jterms.push_back(std::move(t));
    }
    json obj;
    obj["dim"] = dim;
    obj["terms"] = std::move(jterms);
    return obj;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("JSON parse error: ") + e.what());
    }
}

MultiIndex index_from(const json& v) {
    if (!v.is_array()) throw std::runtime_error("JSON: frequency must be an array");
    MultiIndex h;
    for (const auto& c : v) h.push_back(c.get<std::int64_t>());
    return h;
}

}  // namespace

std::string to_json(const FourierPolynomial& f) {
    return poly_to_obj(f.dim(), f.terms()).dump();
}

FourierPolynomial polynomial_from_json(const std::string& text) {
    const json obj = parse(text);
    try {
        FourierPolynomial f(obj.at("dim").get<int>());
        for (const auto& t : obj.at("terms"))
            f.set(index_from(t.at("h")),
                  {t.at("re").get<double>(), t.at("im").get<double>()});
        return f;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("JSON: bad polynomial object: ") +
                                 e.what());
    }
}

std::string to_json(const CbcResult& result, const std::vector<double>& bounds) {
    json obj;
    obj["N"] = result.rule.n_points;
    obj["z"] = result.rule.z;
    obj["scores"] = result.step_scores;
    obj["seed"] = result.seed;
    obj["tau"] = result.tau;
    if (!bounds.empty()) {
        obj["bounds"] = bounds;
        std::vector<double> margins;
        for (std::size_t s = 0; s < bounds.size() && s < result.step_scores.size(); ++s)
            margins.push_back(bounds[s] - result.step_scores[s]);
        obj["margins"] = margins;
    }
    return obj.dump();
}

std::string to_json(const Approximant& a) {
    json obj = poly_to_obj(a.index_set.dim(), a.coeffs);
    json prov;
    prov["M"] = a.provenance.budget;
    prov["N"] = a.provenance.n_points;
    prov["z"] = a.provenance.z;
    prov["delta"] = a.provenance.shift;
    prov["seed"] = a.provenance.seed;
    prov["tau"] = a.provenance.tau;
    prov["T"] = a.provenance.threshold;
    obj["provenance"] = std::move(prov);
    return obj.dump();
}

Approximant approximant_from_json(const std::string& text) {
    const json obj = parse(text);
    try {
        const int dim = obj.at("dim").get<int>();
        const json& prov = obj.at("provenance");
        Provenance p;
        p.budget = prov.at("M").get<std::int64_t>();
        p.n_points = prov.at("N").get<std::int64_t>();
        p.z = prov.at("z").get<std::vector<std::int64_t>>();
        p.shift = prov.at("delta").get<std::vector<double>>();
        p.seed = prov.at("seed").get<std::uint64_t>();
        p.tau = prov.at("tau").get<double>();
        p.threshold = prov.at("T").get<double>();
        std::vector<MultiIndex> members;
        std::map<MultiIndex, std::complex<double>> coeffs;
        for (const auto& t : obj.at("terms")) {
            MultiIndex h = index_from(t.at("h"));
            coeffs.emplace(h, std::complex<double>(t.at("re").get<double>(),
                                                   t.at("im").get<double>()));
            members.push_back(std::move(h));
        }
        return Approximant{IndexSet(dim, p.threshold, std::move(members)),
                           std::move(coeffs), std::move(p)};
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("JSON: bad approximant object: ") +
                                 e.what());
    }
}

std::string to_json(const IndexSet& set) {
    json arr = json::array();
    for (const auto& h : set.members()) arr.push_back(h);
    return arr.dump();
}

}  // namespace latapprox
