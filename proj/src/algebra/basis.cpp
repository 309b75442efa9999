#include "hcs/algebra/basis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hcs {

namespace {

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void eps_add(EpsPoly& a, const EpsPoly& b, long scale, int shift) {
    if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] += scale * b[i];
}

bool eps_zero(const EpsPoly& p) {
    return std::all_of(p.begin(), p.end(), [](long v) { return v == 0; });
}

void eps_trim(EpsPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

CliffordProduct clifford_left(int l, std::uint32_t mask) {
    const std::uint32_t bit = 1u << (l - 1);
    int sign = (std::popcount(mask & (bit - 1)) & 1) ? -1 : 1;
    if (mask & bit) sign = -sign;
    return {sign, mask ^ bit};
}

CliffordProduct clifford_right(std::uint32_t mask, int l) {
    const std::uint32_t bit = 1u << (l - 1);
    int sign = (std::popcount(mask & ~((bit << 1) - 1)) & 1) ? -1 : 1;
    if (mask & bit) sign = -sign;
    return {sign, mask ^ bit};
}

CliffordProduct clifford_mul(std::uint32_t a, std::uint32_t b) {
    // Move the letters of a, last one first, into b.
    int sign = 1;
    std::uint32_t m = b;
    for (std::uint32_t rest = a; rest;) {
        int top = 31 - std::countl_zero(rest);
        rest &= ~(1u << top);
        auto p = clifford_left(top + 1, m);
        sign *= p.sign;
        m = p.mask;
    }
    return {sign, m};
}

const HeckeCliffordBasis& HeckeCliffordBasis::get(int n) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("HeckeCliffordBasis: n out of supported range");
    static std::array<std::once_flag, kMaxN + 1> flags;
    static std::array<std::unique_ptr<HeckeCliffordBasis>, kMaxN + 1> tables;
    std::call_once(flags[static_cast<std::size_t>(n)],
                   [n] { tables[static_cast<std::size_t>(n)].reset(new HeckeCliffordBasis(n)); });
    return *tables[static_cast<std::size_t>(n)];
}

int HeckeCliffordBasis::index_of(const Permutation& w) const {
    if (w.n() != n_) throw std::invalid_argument("HeckeCliffordBasis::index_of: size mismatch");
    // Lexicographic rank via the Lehmer code.
    long rank = 0;
    const auto& v = w.images();
    for (int i = 0; i < n_; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n_; ++j)
            if (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(i)]) ++smaller;
        rank += smaller * factorial(n_ - 1 - i);
    }
    return static_cast<int>(rank);
}

HeckeCliffordBasis::HeckeCliffordBasis(int n) : n_(n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        perms_.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    const int count = perm_count();
    lengths_.resize(static_cast<std::size_t>(count));
    words_.resize(static_cast<std::size_t>(count));
    left_.resize(static_cast<std::size_t>(count * std::max(n - 1, 0)));
    for (int i = 0; i < count; ++i) {
        lengths_[static_cast<std::size_t>(i)] = perms_[static_cast<std::size_t>(i)].length();
        words_[static_cast<std::size_t>(i)] = perms_[static_cast<std::size_t>(i)].reduced_word();
        for (int k = 1; k < n; ++k)
            left_[static_cast<std::size_t>(i * (n - 1) + k - 1)] = index_of(perms_[static_cast<std::size_t>(i)].left_simple(k));
    }

    // C_l T_w by induction on length, peeling the first letter k of the reduced word:
    // C_l T_k T_w' = T_k C_{sigma(l)} T_w'  (+ eps (C_k - C_{k+1}) T_w' when l = k).
    past_.resize(static_cast<std::size_t>(count * n));
    std::vector<int> order(static_cast<std::size_t>(count));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return length(a) < length(b); });
    for (int idx : order) {
        if (idx == identity_index()) {
            for (int l = 1; l <= n; ++l) past_[static_cast<std::size_t>(idx * n + l - 1)] = {{idx, l, {1}}};
            continue;
        }
        const int k = words_[static_cast<std::size_t>(idx)].front();
        const int rest = left_mul(idx, k);  // s_k w, one shorter
        for (int l = 1; l <= n; ++l) {
            std::map<std::pair<int, int>, EpsPoly> acc;
            const int sl = (l == k) ? k + 1 : (l == k + 1) ? k : l;
            // T_k applied to each T_u C_m of C_sl T_rest.
            for (const auto& t : clifford_past(sl, rest)) {
                const int up = left_mul(t.perm, k);
                eps_add(acc[{up, t.gen}], t.coeff, 1, 0);
                if (!left_grows(t.perm, k)) eps_add(acc[{t.perm, t.gen}], t.coeff, 1, 1);
            }
            if (l == k) {
                for (const auto& t : clifford_past(k, rest)) eps_add(acc[{t.perm, t.gen}], t.coeff, 1, 1);
                for (const auto& t : clifford_past(k + 1, rest)) eps_add(acc[{t.perm, t.gen}], t.coeff, -1, 1);
            }
            auto& out = past_[static_cast<std::size_t>(idx * n + l - 1)];
            for (auto& [pg, c] : acc) {
                eps_trim(c);
                if (!eps_zero(c)) out.push_back({pg.first, pg.second, std::move(c)});
            }
        }
    }
}

}  // namespace hcs
