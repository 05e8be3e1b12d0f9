#include "shufflelab/formal_sum.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace shufflelab {

FormalSum::FormalSum(int alphabet_size) : d_(alphabet_size) {
    if (alphabet_size < 1)
        throw std::invalid_argument("FormalSum: alphabet size must be >= 1");
}

FormalSum FormalSum::unit(int d) {
    FormalSum s(d);
    s.add_term(Word(), Rational(1));
    return s;
}

FormalSum FormalSum::from_word(int d, const Word& w) {
    return from_term(d, w, Rational(1));
}

FormalSum FormalSum::from_term(int d, const Word& w, const Rational& c) {
    FormalSum s(d);
    s.check_word(w);
    s.add_term(w, c);
    return s;
}

Rational FormalSum::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational() : it->second;
}

void FormalSum::add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FormalSum::add_term(Word&& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FormalSum::absorb(const FormalSum& o) {
    require_same_alphabet(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
}

FormalSum FormalSum::add(const FormalSum& o) const {
    require_same_alphabet(*this, o);
    FormalSum out(*this);
    out.absorb(o);
    return out;
}

FormalSum FormalSum::scale(const Rational& c) const {
    FormalSum out(d_);
    if (c.is_zero()) return out;
    for (const auto& [w, q] : terms_) out.terms_.emplace(w, q * c);
    return out;
}

FormalSum FormalSum::negate() const {
    FormalSum out(d_);
    for (const auto& [w, q] : terms_) out.terms_.emplace(w, -q);
    return out;
}

FormalSum FormalSum::concat(const FormalSum& o) const {
    require_same_alphabet(*this, o);
    FormalSum out(d_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) out.add_term(w1.concat(w2), c1 * c2);
    return out;
}

std::optional<int> FormalSum::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int n = static_cast<int>(terms_.begin()->first.length());
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.length()) != n) return std::nullopt;
    return n;
}

int FormalSum::max_word_length() const {
    std::size_t m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.length());
    return static_cast<int>(m);
}

Rational FormalSum::coefficient_mass() const {
    Rational m;
    for (const auto& [w, c] : terms_) m += c;
    return m;
}

std::vector<std::pair<Word, Rational>> FormalSum::sorted_terms() const {
    std::vector<std::pair<Word, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

std::string FormalSum::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : sorted_terms()) {
        const bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational a = neg ? -c : c;
        if (a == Rational(1)) {
            out += w.str();
        } else {
            out += a.str() + "*" + w.str();
        }
    }
    return out;
}

bool FormalSum::operator==(const FormalSum& o) const {
    return d_ == o.d_ && terms_ == o.terms_;
}

void FormalSum::check_word(const Word& w) const {
    if (static_cast<int>(w.max_letter()) > d_)
        throw std::invalid_argument("FormalSum: word \"" + w.str() +
                                    "\" leaves the alphabet {1.." + std::to_string(d_) + "}");
}

void require_same_alphabet(const FormalSum& a, const FormalSum& b) {
    if (a.alphabet_size() != b.alphabet_size())
        throw std::invalid_argument("FormalSum: alphabet size mismatch (" +
                                    std::to_string(a.alphabet_size()) + " vs " +
                                    std::to_string(b.alphabet_size()) + ")");
}

FormalSum act(const Permutation& sigma, const FormalSum& s) {
    FormalSum out(s.alphabet_size());
    for (const auto& [w, c] : s.terms()) out.add_term(permute_positions(sigma, w), c);
    return out;
}

std::optional<SumDifference> first_difference(const FormalSum& a, const FormalSum& b) {
    require_same_alphabet(a, b);
    std::optional<Word> best;
    for (const auto& [w, c] : a.terms()) {
        if (b.coefficient(w) != c && (!best || w < *best)) best = w;
    }
    for (const auto& [w, c] : b.terms()) {
        if (a.coefficient(w) != c && (!best || w < *best)) best = w;
    }
    if (!best) return std::nullopt;
    return SumDifference{*best, a.coefficient(*best), b.coefficient(*best)};
}

namespace {

bool is_word_char(char c) { return (c >= '0' && c <= '9') || c == '[' || c == ']' || c == 'e'; }

}  // namespace

FormalSum parse_formal_sum(std::string_view text, int alphabet_size) {
    struct Term {
        Rational coeff;
        Word word;
    };
    std::vector<Term> parsed;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("parse_formal_sum: empty expression");
    if (text.substr(i) == "0") {
        i = text.size();
    }
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("parse_formal_sum: expected '+' or '-' between terms");
        }
        first = false;
        // Longest run of coefficient/word characters forms one term.
        std::size_t start = i;
        while (i < text.size() && (is_word_char(text[i]) || text[i] == '*' || text[i] == '/'))
            ++i;
        if (i == start) throw std::invalid_argument("parse_formal_sum: expected a term");
        std::string_view term = text.substr(start, i - start);
        Rational coeff(sign);
        std::string_view word_part = term;
        if (auto star = term.find('*'); star != std::string_view::npos) {
            coeff = coeff * Rational::from_string(std::string(term.substr(0, star)));
            word_part = term.substr(star + 1);
        }
        parsed.push_back({coeff, Word::parse(word_part)});
        skip_ws();
    }
    int d = alphabet_size;
    if (d <= 0) {
        d = 1;
        for (const auto& t : parsed) d = std::max(d, static_cast<int>(t.word.max_letter()));
    }
    FormalSum out(d);
    for (auto& t : parsed) {
        if (static_cast<int>(t.word.max_letter()) > d)
            throw std::invalid_argument("parse_formal_sum: word \"" + t.word.str() +
                                        "\" leaves the alphabet {1.." + std::to_string(d) + "}");
        out.add_term(std::move(t.word), t.coeff);
    }
    return out;
}

}  // namespace shufflelab
