#pragma once

#include <string>
#include <vector>

namespace hcs {

// A permutation of {1..n} in one-line notation. Composition is (st)(k) = s(t(k)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // The simple transposition s_k = (k, k+1).
    static Permutation simple(int k, int n);
    // The longest element k -> n+1-k.
    static Permutation longest(int n);
    // s_{w_1} s_{w_2} ... s_{w_r}.
    static Permutation from_word(const std::vector<int>& word, int n);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_[static_cast<size_t>(k - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    int length() const;  // number of inversions
    bool is_identity() const;
    // True when l(s_k w) < l(w), i.e. k+1 precedes k in one-line notation.
    bool has_left_descent(int k) const;
    // s_k * w (swaps the values k and k+1).
    Permutation left_simple(int k) const;
    // A reduced word, built by peeling off the smallest left descent each time.
    std::vector<int> reduced_word() const;

    friend Permutation operator*(const Permutation& s, const Permutation& t);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

    std::string to_string() const;

private:
    std::vector<int> images_;
};

std::string word_to_string(const std::vector<int>& word);

}  // namespace hcs
