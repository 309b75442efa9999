#include "hcs/combinat/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace hcs {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n() || seen[static_cast<size_t>(v)]) throw std::invalid_argument("Permutation: not a bijection");
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::simple(int k, int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("Permutation::simple: index out of range");
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<size_t>(k - 1)], p.images_[static_cast<size_t>(k)]);
    return p;
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) v[static_cast<size_t>(k - 1)] = n + 1 - k;
    return Permutation(std::move(v));
}

Permutation Permutation::from_word(const std::vector<int>& word, int n) {
    // s_{w_1}(s_{w_2}(...)): apply the letters to the identity from the right end.
    Permutation p = identity(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) p = p.left_simple(*it);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) v[static_cast<size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    Permutation p;
    p.images_ = std::move(v);
    return p;
}

int Permutation::length() const {
    int inv = 0;
    for (size_t i = 0; i < images_.size(); ++i)
        for (size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

bool Permutation::has_left_descent(int k) const {
    for (int v : images_) {
        if (v == k) return false;
        if (v == k + 1) return true;
    }
    throw std::invalid_argument("Permutation::has_left_descent: index out of range");
}

Permutation Permutation::left_simple(int k) const {
    if (k < 1 || k >= n()) throw std::invalid_argument("Permutation::left_simple: index out of range");
    Permutation p = *this;
    for (int& v : p.images_) {
        if (v == k) {
            v = k + 1;
        } else if (v == k + 1) {
            v = k;
        }
    }
    return p;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    while (!w.is_identity()) {
        for (int k = 1; k < n(); ++k) {
            if (w.has_left_descent(k)) {
                word.push_back(k);
                w = w.left_simple(k);
                break;
            }
        }
    }
    return word;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
    if (s.n() != t.n()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> v(static_cast<size_t>(s.n()));
    for (int k = 1; k <= s.n(); ++k) v[static_cast<size_t>(k - 1)] = s(t(k));
    Permutation p;
    p.images_ = std::move(v);
    return p;
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < images_.size(); ++i) s += (i ? " " : "") + std::to_string(images_[i]);
    return s + "]";
}

std::string word_to_string(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) s += (i ? " " : "") + ("s" + std::to_string(word[i]));
    return s;
}

}  // namespace hcs
