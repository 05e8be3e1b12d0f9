#include <stdexcept>

#include "doctest.h"
#include "shufflelab/formal_sum.hpp"

using namespace shufflelab;

TEST_CASE("formal sum construction and coefficients") {
    CHECK_THROWS_AS(FormalSum(0), std::invalid_argument);

    FormalSum z = FormalSum::zero(2);
    CHECK(z.is_zero());
    CHECK(z.term_count() == 0);
    CHECK(z.coefficient(Word({1})) == Rational(0));

    FormalSum u = FormalSum::unit(2);
    CHECK(u.coefficient(Word()) == Rational(1));
    CHECK(u.term_count() == 1);

    FormalSum w = FormalSum::from_term(3, Word({1, 3}), Rational(2, 5));
    CHECK(w.coefficient(Word({1, 3})) == Rational(2, 5));
    CHECK(w.alphabet_size() == 3);

    CHECK_THROWS_AS(FormalSum::from_word(2, Word({3})), std::invalid_argument);
}

TEST_CASE("add_term keeps the no-zero invariant") {
    FormalSum s(2);
    s.add_term(Word({1, 1}), Rational(1));
    s.add_term(Word({1, 1}), Rational(-1));
    CHECK(s.is_zero());
    s.add_term(Word({2}), Rational(0));
    CHECK(s.is_zero());
    s.add_term(Word({2}), Rational(1, 2));
    s.add_term(Word({2}), Rational(1, 2));
    CHECK(s.coefficient(Word({2})) == Rational(1));
    CHECK(s.term_count() == 1);
}

TEST_CASE("linear operations") {
    FormalSum a = parse_formal_sum("12 - 21", 2);
    FormalSum b = parse_formal_sum("21 + 11", 2);
    CHECK(a.add(b) == parse_formal_sum("12 + 11", 2));
    CHECK(a.subtract(a).is_zero());
    CHECK(a.negate() == parse_formal_sum("21 - 12", 2));
    CHECK(a.scale(Rational(-3, 2)) == parse_formal_sum("-3/2*12 + 3/2*21", 2));
    CHECK(a.scale(Rational(0)).is_zero());
    CHECK_THROWS_AS(a.add(FormalSum::unit(3)), std::invalid_argument);
}

TEST_CASE("concatenation is bilinear with the empty word as unit") {
    FormalSum a = parse_formal_sum("1 + 2", 2);
    CHECK(a.concat(FormalSum::from_word(2, Word({1}))) == parse_formal_sum("11 + 21", 2));
    CHECK(a.concat(FormalSum::unit(2)) == a);
    CHECK(FormalSum::unit(2).concat(a) == a);
    FormalSum half = FormalSum::from_term(2, Word({2}), Rational(1, 2));
    CHECK(a.concat(half) == parse_formal_sum("1/2*12 + 1/2*22", 2));
}

TEST_CASE("degree and mass queries") {
    CHECK(FormalSum::unit(2).homogeneous_degree() == 0);
    CHECK(parse_formal_sum("12 + 21", 2).homogeneous_degree() == 2);
    CHECK(!parse_formal_sum("1 + 12", 2).homogeneous_degree().has_value());
    CHECK(!FormalSum::zero(2).homogeneous_degree().has_value());
    CHECK(parse_formal_sum("1 + 123", 3).max_word_length() == 3);
    CHECK(FormalSum::zero(2).max_word_length() == 0);
    CHECK(parse_formal_sum("2*11 - 1/2*12", 2).coefficient_mass() == Rational(3, 2));
}

TEST_CASE("sorted terms and canonical printing") {
    FormalSum s(2);
    s.add_term(Word({2, 1}), Rational(1));
    s.add_term(Word({2}), Rational(-1, 2));
    s.add_term(Word({1, 2}), Rational(-1));
    auto terms = s.sorted_terms();
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].first == Word({2}));   // shorter words first
    CHECK(terms[1].first == Word({1, 2}));
    CHECK(terms[2].first == Word({2, 1}));
    CHECK(s.str() == "-1/2*2 - 12 + 21");

    CHECK(FormalSum::zero(3).str() == "0");
    CHECK(FormalSum::unit(3).str() == "e");
    CHECK(parse_formal_sum("1122 - 1221 - 2112 + 2211", 2).str() ==
          "1122 - 1221 - 2112 + 2211");
}

TEST_CASE("parsing round-trips the canonical form") {
    for (const char* text : {"0", "e", "-e", "12 - 21", "1/2*12", "-3*112 + 2/7*[10]1",
                             "11 + 12 + 21 + 22"}) {
        FormalSum s = parse_formal_sum(text);
        CHECK(parse_formal_sum(s.str(), s.alphabet_size()) == s);
    }
}

TEST_CASE("parsing infers or checks the alphabet") {
    CHECK(parse_formal_sum("12").alphabet_size() == 2);
    CHECK(parse_formal_sum("e").alphabet_size() == 1);
    CHECK(parse_formal_sum("12", 5).alphabet_size() == 5);
    CHECK_THROWS_AS(parse_formal_sum("13", 2), std::invalid_argument);
}

TEST_CASE("parsing rejects malformed expressions") {
    CHECK_THROWS_AS(parse_formal_sum(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_formal_sum("   "), std::invalid_argument);
    CHECK_THROWS_AS(parse_formal_sum("12 21"), std::invalid_argument);
    CHECK_THROWS_AS(parse_formal_sum("+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_formal_sum("*12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_formal_sum("x + 1"), std::invalid_argument);
}

TEST_CASE("parsing merges repeated words") {
    CHECK(parse_formal_sum("11 + 11", 1) == parse_formal_sum("2*11", 1));
    CHECK(parse_formal_sum("12 - 12", 2).is_zero());
}

TEST_CASE("position action extends linearly and respects composition") {
    FormalSum s = parse_formal_sum("12 - 21", 2);
    Permutation t = Permutation::transposition(2, 1, 2);
    CHECK(act(t, s) == s.negate());

    Permutation c = Permutation::from_one_line({2, 3, 1});
    FormalSum v = parse_formal_sum("112 + 2*121", 2);
    CHECK(act(c, v) == parse_formal_sum("211 + 2*112", 2));

    Permutation t3 = Permutation::transposition(3, 1, 3);
    CHECK(act(t3.compose(c), v) == act(t3, act(c, v)));
}

TEST_CASE("first_difference reports the canonically smallest discrepancy") {
    FormalSum a = parse_formal_sum("12 + 21 + 112", 2);
    FormalSum b = parse_formal_sum("12 + 2*21 + 111", 2);
    auto diff = first_difference(a, b);
    REQUIRE(diff.has_value());
    CHECK(diff->word == Word({2, 1}));
    CHECK(diff->lhs == Rational(1));
    CHECK(diff->rhs == Rational(2));
    CHECK(!first_difference(a, a).has_value());

    auto missing = first_difference(parse_formal_sum("11", 2), FormalSum::zero(2));
    REQUIRE(missing.has_value());
    CHECK(missing->word == Word({1, 1}));
    CHECK(missing->rhs == Rational(0));
}
