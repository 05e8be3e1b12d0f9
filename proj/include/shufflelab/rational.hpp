#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shufflelab {

/// Exact rational number, always reduced to lowest terms with a positive
/// denominator. Thin wrapper over GMP's mpq_class that enforces
/// canonicalization at construction (GMP keeps it canonical afterwards).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, enables `q == 0`
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    /// 2^k for any integer k (negative k gives 1/2^|k|).
    static Rational pow2(int k) {
        Rational r(1);
        mpq_mul_2exp(r.v_.get_mpq_t(), r.v_.get_mpq_t(), static_cast<mp_bitcnt_t>(k >= 0 ? k : 0));
        if (k < 0) mpq_div_2exp(r.v_.get_mpq_t(), r.v_.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
        return r;
    }

    static Rational factorial(unsigned n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        Rational r;
        r.v_ = mpq_class(f);
        return r;
    }

    /// Parse "p" or "p/q" with optional sign, arbitrary precision.
    static Rational from_string(const std::string& text) {
        Rational r;
        if (text.empty() || mpq_set_str(r.v_.get_mpq_t(), text.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
        if (sgn(r.v_.get_den()) == 0)
            throw std::invalid_argument("Rational: zero denominator");
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return wrap(-v_); }
    Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return wrap(v_ / o.v_);
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    /// "p" when the denominator is 1, else "p/q".
    std::string str() const { return v_.get_str(); }
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    double to_double() const { return v_.get_d(); }

private:
    static Rational wrap(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    mpq_class v_;
};

}  // namespace shufflelab
