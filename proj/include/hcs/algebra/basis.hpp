#pragma once

#include "hcs/combinat/permutation.hpp"

#include <cstdint>
#include <vector>

namespace hcs {

// Integer polynomial in eps = q - 1/q, coefficient of eps^j at index j.
using EpsPoly = std::vector<long>;

// Structure tables of G_n(q) on the basis T_w C_S (Clifford word on the right).
//
// Permutations are indexed by their rank in lexicographic order of one-line notation and
// Clifford words by bitmask (bit l-1 <-> C_l). A basis element is keyed as rank << n | mask,
// so key order is the canonical (permutation, subset) order. Tables are built once per n
// and never modified afterwards.
class HeckeCliffordBasis {
public:
    using Key = std::uint32_t;
    using Mask = std::uint32_t;
    static constexpr int kMaxN = 7;

    static const HeckeCliffordBasis& get(int n);

    int n() const { return n_; }
    int perm_count() const { return static_cast<int>(perms_.size()); }
    Mask clifford_count() const { return Mask(1) << n_; }
    std::size_t dimension() const { return perms_.size() << n_; }

    Key key(int perm, Mask mask) const { return (static_cast<Key>(perm) << n_) | mask; }
    int perm_of(Key k) const { return static_cast<int>(k >> n_); }
    Mask mask_of(Key k) const { return k & (clifford_count() - 1); }

    const Permutation& perm(int idx) const { return perms_[static_cast<std::size_t>(idx)]; }
    int index_of(const Permutation& w) const;
    int identity_index() const { return 0; }
    int length(int idx) const { return lengths_[static_cast<std::size_t>(idx)]; }
    const std::vector<int>& reduced_word(int idx) const { return words_[static_cast<std::size_t>(idx)]; }
    // Index of s_k w and whether the length grows.
    int left_mul(int idx, int k) const { return left_[static_cast<std::size_t>(idx * (n_ - 1) + k - 1)]; }
    bool left_grows(int idx, int k) const { return length(left_mul(idx, k)) > length(idx); }

    // C_l T_w = sum over entries of p(eps) T_u C_m.
    struct CliffordTerm {
        int perm;
        int gen;
        EpsPoly coeff;
    };
    const std::vector<CliffordTerm>& clifford_past(int l, int idx) const {
        return past_[static_cast<std::size_t>(idx * n_ + l - 1)];
    }

private:
    explicit HeckeCliffordBasis(int n);
    int n_;
    std::vector<Permutation> perms_;
    std::vector<int> lengths_;
    std::vector<std::vector<int>> words_;
    std::vector<int> left_;
    std::vector<std::vector<CliffordTerm>> past_;
};

// C_l * C_mask = sign * C_result (sign = +1 or -1).
struct CliffordProduct {
    int sign;
    std::uint32_t mask;
};
CliffordProduct clifford_left(int l, std::uint32_t mask);
CliffordProduct clifford_right(std::uint32_t mask, int l);
// Product of two Clifford words, C_a * C_b.
CliffordProduct clifford_mul(std::uint32_t a, std::uint32_t b);

}  // namespace hcs
