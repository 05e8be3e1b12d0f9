#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shufflelab/permutation.hpp"
#include "shufflelab/rational.hpp"
#include "shufflelab/word.hpp"

namespace shufflelab {

/// Sparse formal linear combination of words over a fixed alphabet {1..d}
/// with exact rational coefficients. Stored terms never have coefficient
/// zero. Treated as an immutable value once built; all operations below are
/// pure and values may be shared freely between threads.
class FormalSum {
public:
    using TermMap = std::unordered_map<Word, Rational, WordHash>;

    explicit FormalSum(int alphabet_size);

    static FormalSum zero(int d) { return FormalSum(d); }
    /// The empty word with coefficient 1 (the unit of both products).
    static FormalSum unit(int d);
    static FormalSum from_word(int d, const Word& w);
    static FormalSum from_term(int d, const Word& w, const Rational& c);

    int alphabet_size() const { return d_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Stored coefficient, or zero when w is absent.
    Rational coefficient(const Word& w) const;

    /// Merge c*w into the sum, keeping the no-zero-terms invariant.
    /// Builder API: used while constructing a value, not on shared ones.
    void add_term(const Word& w, const Rational& c);
    void add_term(Word&& w, const Rational& c);
    /// Merge a whole sum in place (builder API, same caveat as add_term).
    void absorb(const FormalSum& o);

    FormalSum add(const FormalSum& o) const;
    FormalSum subtract(const FormalSum& o) const { return add(o.negate()); }
    FormalSum scale(const Rational& c) const;
    FormalSum negate() const;

    /// Bilinear extension of word juxtaposition.
    FormalSum concat(const FormalSum& o) const;

    /// Degree when every word has the same length; nullopt for mixed or zero.
    std::optional<int> homogeneous_degree() const;
    int max_word_length() const;
    /// Sum of all coefficients (the image under "every letter -> 1").
    Rational coefficient_mass() const;

    const TermMap& terms() const { return terms_; }
    /// Terms in canonical order: words sorted by (length, lexicographic).
    std::vector<std::pair<Word, Rational>> sorted_terms() const;

    /// Canonical text form, e.g. "1122 - 1221 - 2112 + 2211" or "1/2*12".
    std::string str() const;

    bool operator==(const FormalSum& o) const;
    bool operator!=(const FormalSum& o) const { return !(*this == o); }

private:
    void check_word(const Word& w) const;

    int d_;
    TermMap terms_;
};

/// Throws std::invalid_argument unless both sums share one alphabet.
void require_same_alphabet(const FormalSum& a, const FormalSum& b);

/// Inverse of str(): signed terms `c*w` or `w`, words as digit strings
/// (letters > 9 bracketed, `e` for the empty word), coefficients integer or
/// p/q. alphabet_size <= 0 infers the alphabet from the largest letter seen.
FormalSum parse_formal_sum(std::string_view text, int alphabet_size = 0);

/// Linear extension of the position action to formal sums; every word must
/// have length |sigma|.
FormalSum act(const Permutation& sigma, const FormalSum& s);

/// Smallest word (canonical order) whose coefficients in a and b differ,
/// with both coefficients; nullopt when a == b.
struct SumDifference {
    Word word;
    Rational lhs;
    Rational rhs;
};
std::optional<SumDifference> first_difference(const FormalSum& a, const FormalSum& b);

}  // namespace shufflelab
