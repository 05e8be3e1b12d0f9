#pragma once

#include <vector>

#include "shufflelab/word.hpp"

namespace shufflelab {

/// Permutation of {1..n} in one-line notation (stored 0-based).
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n);
    /// One-line notation with 1-based images; validates bijectivity.
    static Permutation from_one_line(const std::vector<int>& images_one_based);
    /// Transposition (a b) inside S_n, a and b 1-based.
    static Permutation transposition(int n, int a, int b);

    int size() const { return static_cast<int>(img_.size()); }
    /// Image of 0-based point i.
    int map0(int i) const { return img_[static_cast<std::size_t>(i)]; }
    /// Image of 1-based point i.
    int map1(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }

    /// (this o other)(x) = this(other(x)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    /// +1 or -1, via the parity of the cycle decomposition.
    int sign() const;

    bool is_identity() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    const std::vector<int>& images0() const { return img_; }

    std::string str() const;  // cycle notation, e.g. "(1 3)(2 4)" or "id"

private:
    explicit Permutation(std::vector<int> img0) : img_(std::move(img0)) {}

    std::vector<int> img_;
};

/// All n! permutations of {1..n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// Position action: the letter at position l moves to position sigma(l),
/// i.e. result[sigma(l)] = w[l]. Left action: act(s o t) = act(s) . act(t).
Word permute_positions(const Permutation& sigma, const Word& w);

}  // namespace shufflelab
