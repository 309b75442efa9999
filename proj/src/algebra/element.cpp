#include "hcs/algebra/element_impl.hpp"

namespace hcs {

TowerScalar ScalarDomain<TowerScalar>::eps_poly(const EpsPoly& p) {
    RationalFunction r, e = epsilon();
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * e + RationalFunction(*it);
    return TowerScalar(std::move(r));
}

std::complex<double> ScalarDomain<std::complex<double>>::eps_poly(const EpsPoly& p) const {
    std::complex<double> r = 0.0, e = eps();
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * e + static_cast<double>(*it);
    return r;
}

std::string clifford_to_string(std::uint32_t mask) {
    if (mask == 0) return "{}";
    std::string s = "{";
    bool first = true;
    for (int l = 1; mask >> (l - 1); ++l) {
        if (mask & (1u << (l - 1))) {
            s += (first ? "" : ",") + std::to_string(l);
            first = false;
        }
    }
    return s + "}";
}

template class Element<TowerScalar>;
template class Element<std::complex<double>>;
template class Accumulator<TowerScalar>;
template class Accumulator<std::complex<double>>;

}  // namespace hcs
