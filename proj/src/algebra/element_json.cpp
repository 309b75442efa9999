#include "hcs/algebra/element_json.hpp"

#include <stdexcept>

namespace hcs {

Json to_json(const AlgebraElement& a) {
    const auto& b = a.basis();
    Json terms = Json::array();
    for (const auto& [key, c] : a.terms()) {
        Json cl = Json::array();
        for (int l = 1; l <= a.n(); ++l)
            if (b.mask_of(key) & (1u << (l - 1))) cl.push_back(l);
        terms.push_back({{"perm", b.perm(b.perm_of(key)).images()}, {"clifford", cl}, {"coeff", to_json(c)}});
    }
    return {{"n", a.n()}, {"terms", terms}};
}

AlgebraElement element_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    if (n < 1 || n > HeckeCliffordBasis::kMaxN) throw std::invalid_argument("element_from_json: bad n");
    const auto& b = HeckeCliffordBasis::get(n);
    std::vector<AlgebraElement::Term> terms;
    for (const auto& t : j.at("terms")) {
        const Permutation w(t.at("perm").get<std::vector<int>>());
        if (w.n() != n) throw std::invalid_argument("element_from_json: permutation size");
        AlgebraElement::Mask mask = 0;
        for (int l : t.at("clifford").get<std::vector<int>>()) {
            if (l < 1 || l > n) throw std::invalid_argument("element_from_json: Clifford index");
            mask |= 1u << (l - 1);
        }
        terms.emplace_back(b.key(b.index_of(w), mask), tower_from_json(t.at("coeff")));
    }
    return AlgebraElement::from_terms(n, std::move(terms));
}

}  // namespace hcs
