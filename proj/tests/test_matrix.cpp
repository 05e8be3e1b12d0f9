#include <random>
#include <stdexcept>

#include "doctest.h"
#include "shufflelab/matrix.hpp"
#include "shufflelab/special_matrices.hpp"
#include "shufflelab/tableau.hpp"

using namespace shufflelab;

namespace {

Rational rr(std::mt19937& rng) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 9);
    return Rational(num, den);
}

AlgMatrix<RationalRing> random_rational(std::mt19937& rng, int n) {
    AlgMatrix<RationalRing> m(RationalRing{}, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rr(rng);
    return m;
}

AlgMatrix<RationalRing> random_skew(std::mt19937& rng, int n) {
    AlgMatrix<RationalRing> m(RationalRing{}, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m.at(i, j) = rr(rng);
            m.at(j, i) = -m.at(i, j);
        }
    return m;
}

}  // namespace

TEST_CASE("determinant golden values over the rationals") {
    AlgMatrix<RationalRing> m(RationalRing{}, 2);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(3);
    m.at(1, 0) = Rational(-1);
    m.at(1, 1) = Rational(4);
    CHECK(det(m) == Rational(5));  // 1/2*4 - 3*(-1)

    AlgMatrix<RationalRing> v(RationalRing{}, 3);  // Vandermonde on 1, 2, 4
    long pts[3] = {1, 2, 4};
    for (int i = 0; i < 3; ++i) {
        long p = 1;
        for (int j = 0; j < 3; ++j) {
            v.at(i, j) = Rational(p);
            p *= pts[i];
        }
    }
    CHECK(det(v) == Rational((2 - 1) * (4 - 1) * (4 - 2)));

    AlgMatrix<RationalRing> empty(RationalRing{}, 0);
    CHECK(det(empty) == Rational(1));
}

TEST_CASE("parallel determinant matches the serial reference") {
    std::mt19937 rng(20260815u);
    for (int trial = 0; trial < 5; ++trial) {
        auto m = random_rational(rng, 5);  // 120 permutations: parallel path
        CHECK(det(m) == det_serial(m));
    }
}

TEST_CASE("symmetric and antisymmetric parts decompose the matrix") {
    std::mt19937 rng(99u);
    auto m = random_rational(rng, 4);
    auto s = sym_part(m);
    auto a = anti_part(m);
    CHECK(a.is_skew());
    CHECK(!m.is_skew());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(s.at(i, j) == s.at(j, i));
            CHECK(s.at(i, j) + a.at(i, j) == m.at(i, j));
        }
    CHECK(equal(m.transpose().transpose(), m));
}

TEST_CASE("pfaffian golden values") {
    AlgMatrix<RationalRing> m(RationalRing{}, 2);
    m.at(0, 1) = Rational(5, 3);
    m.at(1, 0) = Rational(-5, 3);
    CHECK(pfaffian(m) == Rational(5, 3));

    // 4 x 4: Pf = a01 a23 - a02 a13 + a03 a12.
    std::mt19937 rng(3u);
    auto s = random_skew(rng, 4);
    Rational expect = s.at(0, 1) * s.at(2, 3) - s.at(0, 2) * s.at(1, 3) +
                      s.at(0, 3) * s.at(1, 2);
    CHECK(pfaffian(s) == expect);

    AlgMatrix<RationalRing> zero(RationalRing{}, 0);
    CHECK(pfaffian(zero) == Rational(1));
}

TEST_CASE("pfaffian squared is the determinant") {
    std::mt19937 rng(17u);
    for (int n : {2, 4, 6}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto m = random_skew(rng, n);
            Rational pf = pfaffian(m);
            CHECK(pf * pf == det(m));
            CHECK(pf == pfaffian_perm_sum(m));
        }
    }
}

TEST_CASE("pfaffian rejects invalid input") {
    AlgMatrix<RationalRing> odd(RationalRing{}, 3);
    CHECK_THROWS_AS(pfaffian(odd), std::invalid_argument);  // odd size (and zero is skew)

    AlgMatrix<RationalRing> notskew(RationalRing{}, 2);
    notskew.at(0, 0) = Rational(1);
    CHECK_THROWS_AS(pfaffian(notskew), std::invalid_argument);
    CHECK_THROWS_AS(pfaffian_perm_sum(notskew), std::invalid_argument);
}

TEST_CASE("skew plus rank one: even size keeps the determinant") {
    std::mt19937 rng(23u);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + 2 * static_cast<int>(rng() % 2);
        auto a = random_skew(rng, n);
        std::vector<Rational> v(static_cast<std::size_t>(n));
        for (auto& x : v) x = rr(rng);
        auto res = det_skew_plus_rank1(a, v, rr(rng));
        CHECK(res.agree);
        CHECK(res.via_lemma == det(a));
    }
}

TEST_CASE("skew plus rank one: odd size expands into row replacements") {
    AlgMatrix<RationalRing> a1(RationalRing{}, 1);  // the 1 x 1 zero matrix
    auto res1 = det_skew_plus_rank1(a1, {Rational(3)}, Rational(2));
    CHECK(res1.agree);
    CHECK(res1.direct == Rational(18));  // det [lambda v v^T] = 2 * 9

    std::mt19937 rng(29u);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + 2 * static_cast<int>(rng() % 2);
        auto a = random_skew(rng, n);
        std::vector<Rational> v(static_cast<std::size_t>(n));
        for (auto& x : v) x = rr(rng);
        Rational lambda = rr(rng);
        CHECK(det_skew_plus_rank1(a, v, lambda, Rank1Replace::Rows).agree);
        CHECK(det_skew_plus_rank1(a, v, lambda, Rank1Replace::Cols).agree);
    }
}

TEST_CASE("skew plus rank one validates its input") {
    AlgMatrix<RationalRing> notskew(RationalRing{}, 2);
    notskew.at(0, 0) = Rational(1);
    CHECK_THROWS_AS(det_skew_plus_rank1(notskew, {Rational(1), Rational(1)}, Rational(1)),
                    std::invalid_argument);
    AlgMatrix<RationalRing> a(RationalRing{}, 2);
    CHECK_THROWS_AS(det_skew_plus_rank1(a, {Rational(1)}, Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("the letter-pair matrix and its determinant") {
    auto w1 = build_W(1);
    CHECK(w1.size() == 1);
    CHECK(w1.at(0, 0) == parse_formal_sum("11", 1));
    CHECK(det(w1) == parse_formal_sum("11", 1));

    auto w2 = build_W(2);
    CHECK(w2.at(0, 0) == parse_formal_sum("11", 2));
    CHECK(w2.at(0, 1) == parse_formal_sum("12", 2));
    CHECK(w2.at(1, 0) == parse_formal_sum("21", 2));
    CHECK(w2.at(1, 1) == parse_formal_sum("22", 2));

    FormalSum by_hand = shuffle(w2.at(0, 0), w2.at(1, 1))
                            .subtract(shuffle(w2.at(0, 1), w2.at(1, 0)));
    CHECK(det(w2) == by_hand);
    CHECK(det(w2) == det_serial(w2));
}

TEST_CASE("the bordered skew matrix") {
    auto z1 = build_Z(1);
    REQUIRE(z1.size() == 2);
    CHECK(z1.at(0, 0).is_zero());
    CHECK(z1.at(0, 1) == parse_formal_sum("1", 1));
    CHECK(z1.at(1, 0) == parse_formal_sum("-1", 1));
    CHECK(z1.at(1, 1).is_zero());
    CHECK(z1.is_skew());

    auto z3 = build_Z(3);
    REQUIRE(z3.size() == 4);
    CHECK(z3.is_skew());
    CHECK(z3.at(0, 1) == parse_formal_sum("12 - 21", 3));
    CHECK(z3.at(1, 2) == parse_formal_sum("23 - 32", 3));
    CHECK(z3.at(0, 3) == parse_formal_sum("1", 3));
    CHECK(z3.at(3, 1) == parse_formal_sum("-2", 3));

    CHECK_THROWS_AS(build_Z(2), std::invalid_argument);
    CHECK_THROWS_AS(build_Z(0), std::invalid_argument);
}

TEST_CASE("the double permutation chain sum equals the determinant") {
    CHECK(andreief_rhs(1) == parse_formal_sum("11", 1));
    CHECK(andreief_rhs(2) == det_serial(build_W(2)));
    CHECK(andreief_rhs(2) == andreief_rhs_serial(2));
    CHECK(andreief_rhs(3) == andreief_rhs_serial(3));
}

TEST_CASE("the concatenation form of the determinant") {
    CHECK(block_concat_form(1) == parse_formal_sum("11", 1));
    CHECK(block_concat_form(2) ==
          parse_formal_sum("1122 + 2211 - 1221 - 2112", 2));
}
