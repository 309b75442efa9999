#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace hcs {

// Value at t = 0 of the polynomial interpolating (t_i, v_i) (Neville's scheme). V needs
// + and scaled(complex<double>) or * double; both elements and plain scalars work.
template <class V, class Scale>
V neville_at_zero(const std::vector<double>& t, std::vector<V> v, Scale scale) {
    if (t.empty() || t.size() != v.size()) throw std::invalid_argument("neville_at_zero: bad samples");
    const std::size_t m = t.size();
    for (std::size_t len = 1; len < m; ++len) {
        for (std::size_t i = 0; i + len < m; ++i) {
            const double ti = t[i], tj = t[i + len];
            // P_{i..i+len} = (t_i P_{i+1..i+len} - t_j P_{i..i+len-1}) / (t_i - t_j)
            v[i] = scale(v[i + 1], ti / (ti - tj)) + scale(v[i], -tj / (ti - tj));
        }
    }
    return v[0];
}

inline std::complex<double> neville_at_zero(const std::vector<double>& t, std::vector<std::complex<double>> v) {
    return neville_at_zero(t, std::move(v), [](const std::complex<double>& a, double s) { return a * s; });
}

}  // namespace hcs
