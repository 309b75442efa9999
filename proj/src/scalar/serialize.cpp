#include "hcs/scalar/serialize.hpp"

#include <bit>
#include <stdexcept>

namespace hcs {

namespace {

mpz_class parse_int(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected an integer encoded as a decimal string");
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("malformed decimal integer");
    return z;
}

mpq_class parse_rat(const Json& n, const Json& d) {
    mpz_class den = parse_int(d);
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in rational");
    mpq_class q(parse_int(n), den);
    q.canonicalize();
    return q;
}

Json poly_terms(const Polynomial& p, int shift) {
    Json out = Json::array();
    for (int d = 0; d <= p.degree(); ++d)
        if (!p[d].is_zero()) out.push_back(Json::array({d + shift, to_json(p[d])}));
    return out;
}

// Reads [[e, c], ...] into a polynomial times q^lowest-exponent.
std::pair<Polynomial, int> parse_terms(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a term list");
    if (j.empty()) return {Polynomial(), 0};
    int lo = j[0].at(0).get<int>();
    for (const auto& t : j) lo = std::min(lo, t.at(0).get<int>());
    std::vector<GaussianRational> c;
    for (const auto& t : j) {
        auto idx = static_cast<size_t>(t.at(0).get<int>() - lo);
        if (c.size() <= idx) c.resize(idx + 1);
        c[idx] += gaussian_from_json(t.at(1));
    }
    return {Polynomial(std::move(c)), lo};
}

}  // namespace

Json to_json(const GaussianRational& c) {
    return Json::array({c.re().get_num().get_str(), c.re().get_den().get_str(), c.im().get_num().get_str(),
                        c.im().get_den().get_str()});
}

GaussianRational gaussian_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("GaussianRational: expected 4 entries");
    return {parse_rat(j[0], j[1]), parse_rat(j[2], j[3])};
}

Json to_json(const RationalFunction& r) {
    Json j;
    j["num"] = poly_terms(r.num(), r.shift());
    j["den"] = poly_terms(r.den(), 0);
    return j;
}

RationalFunction rational_from_json(const Json& j) {
    auto [num, ns] = parse_terms(j.at("num"));
    auto [den, ds] = parse_terms(j.at("den"));
    if (den.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    return RationalFunction(std::move(num), std::move(den), ns - ds);
}

Json to_json(const TowerScalar& t) {
    Json j;
    j["level"] = t.level();
    Json terms = Json::array();
    for (const auto& [s, c] : t.terms()) {
        Json term;
        Json subset = Json::array();
        for (TowerScalar::Mask rest = s; rest; rest &= rest - 1) subset.push_back(std::countr_zero(rest) + 2);
        term["subset"] = std::move(subset);
        Json rf = to_json(c);
        term["num"] = std::move(rf["num"]);
        term["den"] = std::move(rf["den"]);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

TowerScalar tower_from_json(const Json& j) {
    const int level = j.at("level").get<int>();
    std::vector<std::pair<TowerScalar::Mask, RationalFunction>> terms;
    for (const auto& term : j.at("terms")) {
        TowerScalar::Mask s = 0;
        for (const auto& m : term.at("subset")) {
            int v = m.get<int>();
            if (v < 2 || v > level) throw std::invalid_argument("TowerScalar: subset index out of range");
            s |= TowerScalar::Mask(1) << (v - 2);
        }
        Json rf;
        rf["num"] = term.at("num");
        rf["den"] = term.at("den");
        terms.emplace_back(s, rational_from_json(rf));
    }
    return TowerScalar(level, std::move(terms));
}

}  // namespace hcs
