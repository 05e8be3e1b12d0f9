#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "shufflelab/parallel.hpp"
#include "shufflelab/permutation.hpp"
#include "shufflelab/ring.hpp"

namespace shufflelab {

/// Square matrix over a commutative coefficient ring R.
template <RingPolicy R>
class AlgMatrix {
public:
    using Element = typename R::Element;

    AlgMatrix(R ring, int n)
        : ring_(std::move(ring)), n_(n),
          e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), ring_.zero()) {
        if (n < 0) throw std::invalid_argument("AlgMatrix: negative size");
    }

    int size() const { return n_; }
    const R& ring() const { return ring_; }

    Element& at(int i, int j) { return e_[idx(i, j)]; }
    const Element& at(int i, int j) const { return e_[idx(i, j)]; }

    AlgMatrix transpose() const {
        AlgMatrix t(ring_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool is_skew() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j <= i; ++j)
                if (!ring_.eq(at(i, j), ring_.neg(at(j, i)))) return false;
        return true;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    R ring_;
    int n_;
    std::vector<Element> e_;
};

template <RingPolicy R>
bool equal(const AlgMatrix<R>& a, const AlgMatrix<R>& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (!a.ring().eq(a.at(i, j), b.at(i, j))) return false;
    return true;
}

namespace detail {

template <RingPolicy R>
typename R::Element leibniz_term(const AlgMatrix<R>& m, const Permutation& sigma) {
    const R& ring = m.ring();
    typename R::Element prod = m.at(0, sigma.map0(0));
    for (int i = 1; i < m.size(); ++i) prod = ring.mul(prod, m.at(i, sigma.map0(i)));
    return sigma.sign() < 0 ? ring.neg(prod) : prod;
}

}  // namespace detail

/// Leibniz determinant, serial reference.
template <RingPolicy R>
typename R::Element det_serial(const AlgMatrix<R>& m) {
    const R& ring = m.ring();
    if (m.size() == 0) return ring.one();
    typename R::Element acc = ring.zero();
    const auto perms = all_permutations(m.size());
    for (const auto& sigma : perms) ring.accumulate(acc, detail::leibniz_term(m, sigma));
    return acc;
}

/// Leibniz determinant, parallel across the n! permutations. Exact rings
/// give bit-identical results for any thread count; for floating-point use
/// det_serial when reproducibility across thread counts matters.
template <RingPolicy R>
typename R::Element det(const AlgMatrix<R>& m) {
    const R& ring = m.ring();
    if (m.size() == 0) return ring.one();
    const auto perms = all_permutations(m.size());
    if (perms.size() < 24) return det_serial(m);
    using Element = typename R::Element;
    return par::parallel_reduce<Element>(
        perms.size(), [&] { return ring.zero(); },
        [&](Element& acc, std::size_t i) { ring.accumulate(acc, detail::leibniz_term(m, perms[i])); },
        [&](Element& into, Element&& part) { ring.accumulate(into, part); });
}

/// 1/2 (M + M^T).
template <RingPolicy R>
AlgMatrix<R> sym_part(const AlgMatrix<R>& m) {
    const R& ring = m.ring();
    AlgMatrix<R> s(ring, m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            s.at(i, j) = ring.scale(Rational(1, 2), ring.add(m.at(i, j), m.at(j, i)));
    return s;
}

/// 1/2 (M - M^T).
template <RingPolicy R>
AlgMatrix<R> anti_part(const AlgMatrix<R>& m) {
    const R& ring = m.ring();
    AlgMatrix<R> a(ring, m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            a.at(i, j) = ring.scale(Rational(1, 2), ring.add(m.at(i, j), ring.neg(m.at(j, i))));
    return a;
}

namespace detail {

// Signed perfect-matching sum: pair the first live index with each later
// one; pairing it with the k-th later index (k = 0,1,...) carries (-1)^k.
template <RingPolicy R>
typename R::Element pfaffian_rec(const AlgMatrix<R>& m, std::vector<int>& live) {
    const R& ring = m.ring();
    if (live.empty()) return ring.one();
    typename R::Element acc = ring.zero();
    const int i = live[0];
    for (std::size_t k = 1; k < live.size(); ++k) {
        const int j = live[k];
        std::vector<int> rest;
        rest.reserve(live.size() - 2);
        for (std::size_t t = 1; t < live.size(); ++t)
            if (t != k) rest.push_back(live[t]);
        typename R::Element term = ring.mul(m.at(i, j), pfaffian_rec(m, rest));
        if (k % 2 == 0) term = ring.neg(term);
        ring.accumulate(acc, term);
    }
    return acc;
}

template <RingPolicy R>
void require_skew_even(const AlgMatrix<R>& m, const char* who) {
    if (m.size() % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": matrix size must be even");
    if (!m.is_skew())
        throw std::invalid_argument(std::string(who) + ": matrix is not skew-symmetric");
}

}  // namespace detail

/// Pfaffian of an even skew-symmetric matrix as the signed sum over perfect
/// matchings ((n-1)!! terms).
template <RingPolicy R>
typename R::Element pfaffian(const AlgMatrix<R>& m) {
    detail::require_skew_even(m, "pfaffian");
    std::vector<int> live(static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i) live[static_cast<std::size_t>(i)] = i;
    return detail::pfaffian_rec(m, live);
}

/// Normalized permutation-sum form, kept as an oracle for pfaffian():
/// 1/(2^{n/2} (n/2)!) sum_{pi in S_n} sign(pi) prod_i a_{pi(2i-1),pi(2i)}.
template <RingPolicy R>
typename R::Element pfaffian_perm_sum(const AlgMatrix<R>& m) {
    detail::require_skew_even(m, "pfaffian_perm_sum");
    const R& ring = m.ring();
    const int n = m.size();
    if (n == 0) return ring.one();
    typename R::Element acc = ring.zero();
    for (const auto& pi : all_permutations(n)) {
        typename R::Element prod = m.at(pi.map0(0), pi.map0(1));
        for (int i = 1; i < n / 2; ++i)
            prod = ring.mul(prod, m.at(pi.map0(2 * i), pi.map0(2 * i + 1)));
        ring.accumulate(acc, pi.sign() < 0 ? ring.neg(prod) : prod);
    }
    const Rational norm = Rational(1) / (Rational::pow2(n / 2) * Rational::factorial(static_cast<unsigned>(n / 2)));
    return ring.scale(norm, acc);
}

enum class Rank1Replace { Rows, Cols };

template <RingPolicy R>
struct DetRank1Result {
    typename R::Element direct;     // det(A + lambda v v^T), expanded directly
    typename R::Element via_lemma;  // det(A) for even n, sum_i det(R_i) for odd n
    bool agree = false;
};

/// det(A + lambda v v^T) for skew A, both directly and through the
/// skew-plus-rank-1 lemma (even: det A; odd: sum of determinants with one
/// row -- or column, per `replace` -- swapped for that slice of lambda v v^T).
template <RingPolicy R>
DetRank1Result<R> det_skew_plus_rank1(const AlgMatrix<R>& a,
                                      const std::vector<typename R::Element>& v,
                                      const typename R::Element& lambda,
                                      Rank1Replace replace = Rank1Replace::Rows) {
    const R& ring = a.ring();
    const int n = a.size();
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("det_skew_plus_rank1: vector length mismatch");
    if (!a.is_skew())
        throw std::invalid_argument("det_skew_plus_rank1: matrix is not skew-symmetric");

    auto vv = [&](int i, int j) {
        return ring.mul(lambda, ring.mul(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]));
    };

    AlgMatrix<R> full(ring, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) full.at(i, j) = ring.add(a.at(i, j), vv(i, j));

    DetRank1Result<R> res{det(full), ring.zero(), false};
    if (n % 2 == 0) {
        res.via_lemma = det(a);
    } else {
        for (int i = 0; i < n; ++i) {
            AlgMatrix<R> ri = a;
            for (int j = 0; j < n; ++j) {
                if (replace == Rank1Replace::Rows)
                    ri.at(i, j) = vv(i, j);
                else
                    ri.at(j, i) = vv(j, i);
            }
            ring.accumulate(res.via_lemma, det(ri));
        }
    }
    res.agree = ring.eq(res.direct, res.via_lemma);
    return res;
}

}  // namespace shufflelab
