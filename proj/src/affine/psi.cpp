#include "hcs/affine/psi.hpp"

#include <stdexcept>

namespace hcs {

namespace {

template <class S>
using D = ScalarDomain<S>;

template <class S>
void require_regular(const S& x, const S& y, const char* who) {
    const S xi = D<S>::inverse(x);
    if (D<S>::negligible(xi * y - S(1)) || D<S>::negligible(x * y - S(1)))
        throw std::domain_error(std::string(who) + ": singular pair (x^{-1}y = 1 or xy = 1)");
}

void require_index(int k, int span, int n, const char* who) {
    if (k < 1 || k + span > n) throw std::invalid_argument(std::string(who) + ": index out of range");
}

}  // namespace

template <class S>
Element<S> clifford_pair(int a, int b, int n, ScalarDomain<S> dom) {
    if (a == b) throw std::invalid_argument("clifford_pair: equal indices");
    return Element<S>::one(n, dom).right_C(a).right_C(b);
}

template <class S>
S psi_bracket(const S& x, const S& y, ScalarDomain<S> dom) {
    (void)dom;
    require_regular(x, y, "psi_bracket");
    const S u = D<S>::inverse(x) * y, v = x * y;
    const S um = u - S(1), vm = v - S(1);
    return u * D<S>::inverse(um * um) + v * D<S>::inverse(vm * vm);
}

template <class S>
Element<S> psi_factor(int k, const S& x, const S& y, int n, ScalarDomain<S> dom) {
    require_index(k, 1, n, "psi_factor");
    require_regular(x, y, "psi_factor");
    const S eps = dom.eps();
    const S a = eps * D<S>::inverse(D<S>::inverse(x) * y - S(1));
    const S b = eps * D<S>::inverse(x * y - S(1));
    return Element<S>::T(k, n, dom) + Element<S>::scalar(n, a, dom) + clifford_pair<S>(k, k + 1, n, dom).scaled(b);
}

template <class S>
Element<S> psi_factor_inverse(int k, const S& x, const S& y, int n, ScalarDomain<S> dom) {
    if (D<S>::same(x, y) || D<S>::same(x * y, S(1)))
        throw std::domain_error("psi_factor_inverse: y = x or y = x^{-1}");
    const S eps = dom.eps();
    const S c = S(1) - eps * eps * psi_bracket(x, y, dom);
    if (D<S>::negligible(c)) throw std::domain_error("psi_factor_inverse: the pair satisfies the idempotency condition");
    return psi_factor(k, y, x, n, dom).scaled(D<S>::inverse(c));
}

template <class S>
bool idempotency_holds(const S& x, const S& y, ScalarDomain<S> dom) {
    const S eps = dom.eps();
    return D<S>::negligible(eps * eps * psi_bracket(x, y, dom) - S(1));
}

template <class S>
bool idempotency_holds_symmetric(const S& s, const S& t, ScalarDomain<S> dom) {
    const S eps = dom.eps();
    const S diff = s - t;
    return D<S>::negligible(diff * diff - eps * eps * (s * t - S(4)));
}

template <class S>
Element<S> theta_regular(int k, const S& x, const S& y, const S& z, int n, ScalarDomain<S> dom) {
    require_index(k, 2, n, "theta_regular");
    if (D<S>::same(x, y) || D<S>::same(x * y, S(1))) throw std::domain_error("theta_regular: y = x or y = x^{-1}");
    if (!idempotency_holds(x, y, dom)) throw std::domain_error("theta_regular: (x,y) is not idempotent");
    require_regular(x, z, "theta_regular");
    const S eps = dom.eps();
    const S xi = D<S>::inverse(x);
    const S a = xi * y - S(1), b = x * y - S(1), c = xi * z - S(1), d = x * z - S(1);
    const Element<S> pxy = psi_factor(k, x, y, n, dom);
    Element<S> bracket = Element<S>::scalar(n, xi * z * D<S>::inverse(a * c), dom);
    bracket -= clifford_pair<S>(k, k + 1, n, dom).scaled(x * z * D<S>::inverse(b * d));
    bracket += clifford_pair<S>(k + 1, k + 2, n, dom).scaled(D<S>::inverse(b * c));
    bracket += clifford_pair<S>(k + 2, k, n, dom).scaled(D<S>::inverse(d * a));
    return pxy * Element<S>::T(k + 1, n, dom) * psi_factor(k, z, x, n, dom) - (pxy * bracket).scaled(eps * eps);
}

template <class S>
Element<S> theta_factor(int k, const S& x, const S& y, int n, ScalarDomain<S> dom) {
    return theta_regular(k, x, y, y, n, dom);
}

template <class S>
S d_scalar(const S& x, const S& y, ScalarDomain<S> dom) {
    require_regular(x, y, "d_scalar");
    const S eps = dom.eps();
    const S xi = D<S>::inverse(x);
    const S b = x * y - S(1), a = xi * y - S(1);
    const S b4 = D<S>::inverse(b * b * b * b), a4 = D<S>::inverse(a * a * a * a);
    const S x3 = x * x * x, xi3 = xi * xi * xi;
    const S body = (y * y - S(1)) * (x3 * b4 + xi3 * a4) + (x3 - x) * b4 + (xi3 - xi) * a4;
    return eps * eps * eps * y * body;
}

#define HCS_INSTANTIATE_PSI(S)                                                                         \
    template Element<S> clifford_pair<S>(int, int, int, ScalarDomain<S>);                              \
    template S psi_bracket<S>(const S&, const S&, ScalarDomain<S>);                                    \
    template Element<S> psi_factor<S>(int, const S&, const S&, int, ScalarDomain<S>);                  \
    template Element<S> psi_factor_inverse<S>(int, const S&, const S&, int, ScalarDomain<S>);          \
    template bool idempotency_holds<S>(const S&, const S&, ScalarDomain<S>);                           \
    template bool idempotency_holds_symmetric<S>(const S&, const S&, ScalarDomain<S>);                 \
    template Element<S> theta_regular<S>(int, const S&, const S&, const S&, int, ScalarDomain<S>);     \
    template Element<S> theta_factor<S>(int, const S&, const S&, int, ScalarDomain<S>);                \
    template S d_scalar<S>(const S&, const S&, ScalarDomain<S>);

HCS_INSTANTIATE_PSI(TowerScalar)
HCS_INSTANTIATE_PSI(std::complex<double>)

}  // namespace hcs
