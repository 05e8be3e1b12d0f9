#include "shufflelab/shuffle.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shufflelab/parallel.hpp"

namespace shufflelab {

namespace {

/// Adds c times every order-preserving interleaving of u and v to acc,
/// appending `tail` (when nonzero) to each interleaved word. Enumerates the
/// C(|u|+|v|, |u|) position choices for u's letters directly.
void interleave_into(FormalSum& acc, const Word& u, const Word& v, Letter tail,
                     const Rational& c) {
    const std::size_t m = u.length();
    const std::size_t n = v.length();
    const std::size_t total = m + n + (tail ? 1 : 0);
    if (m == 0 || n == 0) {
        std::string buf;
        buf.reserve(total);
        buf += u.bytes();
        buf += v.bytes();
        if (tail) buf.push_back(static_cast<char>(tail));
        acc.add_term(Word(std::move(buf)), c);
        return;
    }
    std::vector<std::size_t> pos(m);
    std::iota(pos.begin(), pos.end(), 0);
    const std::string& ub = u.bytes();
    const std::string& vb = v.bytes();
    std::string buf(total, '\0');
    if (tail) buf[m + n] = static_cast<char>(tail);
    while (true) {
        std::size_t k = 0;
        std::size_t vi = 0;
        for (std::size_t t = 0; t < m + n; ++t) {
            if (k < m && pos[k] == t) {
                buf[t] = ub[k];
                ++k;
            } else {
                buf[t] = vb[vi++];
            }
        }
        acc.add_term(Word(buf), c);
        // Advance to the next combination (positions ascending, slot k tops
        // out at n + k).
        std::size_t idx = m;
        while (idx > 0 && pos[idx - 1] == n + idx - 1) --idx;
        if (idx == 0) break;
        --idx;
        ++pos[idx];
        for (std::size_t j = idx + 1; j < m; ++j) pos[j] = pos[j - 1] + 1;
    }
}

std::vector<std::pair<Word, Rational>> term_vector(const FormalSum& s) {
    return {s.terms().begin(), s.terms().end()};
}

void require_no_unit_terms(const FormalSum& s, const char* who) {
    if (s.coefficient(Word()) != Rational())
        throw std::invalid_argument(std::string(who) + ": defined for non-empty words only");
}

}  // namespace

FormalSum shuffle_serial(const FormalSum& a, const FormalSum& b) {
    require_same_alphabet(a, b);
    FormalSum out(a.alphabet_size());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) interleave_into(out, wa, wb, 0, ca * cb);
    return out;
}

FormalSum shuffle(const FormalSum& a, const FormalSum& b) {
    require_same_alphabet(a, b);
    const std::size_t pairs = a.term_count() * b.term_count();
    if (pairs < 16) return shuffle_serial(a, b);
    const auto ta = term_vector(a);
    const auto tb = term_vector(b);
    return par::parallel_reduce<FormalSum>(
        pairs, [&] { return FormalSum::zero(a.alphabet_size()); },
        [&](FormalSum& acc, std::size_t i) {
            const auto& [wa, ca] = ta[i / tb.size()];
            const auto& [wb, cb] = tb[i % tb.size()];
            interleave_into(acc, wa, wb, 0, ca * cb);
        },
        [](FormalSum& into, FormalSum&& part) { into.absorb(part); });
}

namespace {

FormalSum shuffle_words_recursive(int d, const Word& u, const Word& v) {
    if (u.empty()) return FormalSum::from_word(d, v);
    if (v.empty()) return FormalSum::from_word(d, u);
    FormalSum out(d);
    const FormalSum left = shuffle_words_recursive(d, u.dropped_last(), v);
    for (const auto& [w, c] : left.terms()) out.add_term(w.appended(u.last()), c);
    const FormalSum right = shuffle_words_recursive(d, u, v.dropped_last());
    for (const auto& [w, c] : right.terms()) out.add_term(w.appended(v.last()), c);
    return out;
}

}  // namespace

FormalSum shuffle_recursive(const FormalSum& a, const FormalSum& b) {
    require_same_alphabet(a, b);
    FormalSum out(a.alphabet_size());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            out.absorb(shuffle_words_recursive(a.alphabet_size(), wa, wb).scale(ca * cb));
    return out;
}

FormalSum half_shuffle(const FormalSum& a, const FormalSum& b) {
    require_same_alphabet(a, b);
    require_no_unit_terms(a, "half_shuffle");
    require_no_unit_terms(b, "half_shuffle");
    FormalSum out(a.alphabet_size());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            // wa > (v . i) = (wa ? v) . i with v . i = wb
            interleave_into(out, wa, wb.dropped_last(), wb.last(), ca * cb);
        }
    }
    return out;
}

FormalSum half_shuffle_chain(std::span<const FormalSum> ws) {
    if (ws.empty()) throw std::invalid_argument("half_shuffle_chain: empty list");
    FormalSum acc = ws[0];
    for (std::size_t i = 1; i < ws.size(); ++i) acc = half_shuffle(acc, ws[i]);
    return acc;
}

FormalSum shuffle_many(std::span<const FormalSum> ws, int alphabet_size_if_empty) {
    if (ws.empty()) return FormalSum::unit(alphabet_size_if_empty);
    FormalSum acc = ws[0];
    for (std::size_t i = 1; i < ws.size(); ++i) acc = shuffle(acc, ws[i]);
    return acc;
}

FormalSum shuffle_power(const FormalSum& a, int k) {
    if (k < 0) throw std::invalid_argument("shuffle_power: negative exponent");
    if (k == 0) return FormalSum::unit(a.alphabet_size());
    if (k < 4) {
        FormalSum acc = a;
        for (int i = 1; i < k; ++i) acc = shuffle(acc, a);
        return acc;
    }
    FormalSum result = FormalSum::unit(a.alphabet_size());
    FormalSum base = a;
    int e = k;
    while (true) {
        if (e & 1) result = shuffle(result, base);
        e >>= 1;
        if (e == 0) break;
        base = shuffle(base, base);
    }
    return result;
}

}  // namespace shufflelab
