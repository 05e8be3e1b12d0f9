#pragma once

#include <concepts>

#include "shufflelab/formal_sum.hpp"
#include "shufflelab/rational.hpp"
#include "shufflelab/shuffle.hpp"

namespace shufflelab {

/// Commutative-ring policy: the matrix code is written once against this
/// interface and instantiated with exact rationals, the shuffle algebra, and
/// (for the numeric side) plain doubles.
template <typename R>
concept RingPolicy = requires(const R r, const typename R::Element a,
                              const typename R::Element b,
                              typename R::Element& m, const Rational& q) {
    { r.zero() } -> std::same_as<typename R::Element>;
    { r.one() } -> std::same_as<typename R::Element>;
    { r.add(a, b) } -> std::same_as<typename R::Element>;
    { r.mul(a, b) } -> std::same_as<typename R::Element>;
    { r.neg(a) } -> std::same_as<typename R::Element>;
    { r.scale(q, a) } -> std::same_as<typename R::Element>;
    { r.accumulate(m, a) } -> std::same_as<void>;
    { r.eq(a, b) } -> std::same_as<bool>;
};

struct RationalRing {
    using Element = Rational;
    Element zero() const { return Rational(); }
    Element one() const { return Rational(1); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element scale(const Rational& q, const Element& a) const { return q * a; }
    void accumulate(Element& into, const Element& x) const { into += x; }
    bool eq(const Element& a, const Element& b) const { return a == b; }
};

/// T(R^d) with the shuffle product; carries the alphabet size d.
struct ShuffleRing {
    int alphabet = 1;
    using Element = FormalSum;
    Element zero() const { return FormalSum::zero(alphabet); }
    Element one() const { return FormalSum::unit(alphabet); }
    Element add(const Element& a, const Element& b) const { return a.add(b); }
    Element mul(const Element& a, const Element& b) const { return shuffle(a, b); }
    Element neg(const Element& a) const { return a.negate(); }
    Element scale(const Rational& q, const Element& a) const { return a.scale(q); }
    void accumulate(Element& into, const Element& x) const { into.absorb(x); }
    bool eq(const Element& a, const Element& b) const { return a == b; }
};

struct DoubleRing {
    using Element = double;
    Element zero() const { return 0.0; }
    Element one() const { return 1.0; }
    Element add(Element a, Element b) const { return a + b; }
    Element mul(Element a, Element b) const { return a * b; }
    Element neg(Element a) const { return -a; }
    Element scale(const Rational& q, Element a) const { return q.to_double() * a; }
    void accumulate(Element& into, const Element& x) const { into += x; }
    bool eq(Element a, Element b) const { return a == b; }
};

static_assert(RingPolicy<RationalRing>);
static_assert(RingPolicy<ShuffleRing>);
static_assert(RingPolicy<DoubleRing>);

}  // namespace shufflelab
