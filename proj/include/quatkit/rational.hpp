#pragma once

#include <gmpxx.h>

#include <string>

#include "quatkit/errors.hpp"

namespace quatkit {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Wraps GMP's mpq and canonicalizes on every construction
/// path, so two equal values always compare equal componentwise.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "n" or "n/d" with optional leading '-'.
    static Rational from_string(const std::string& text);

    const mpq_class& raw() const noexcept { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), NoCanon{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), NoCanon{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), NoCanon{}); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
        return Rational(mpq_class(v_ / o.v_), NoCanon{});
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    int sign() const noexcept { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// "n" when the denominator is 1, else "n/d".
    std::string to_string() const;

    double to_double() const { return v_.get_d(); }

private:
    // GMP's rational arithmetic keeps canonical inputs canonical.
    struct NoCanon {};
    Rational(mpq_class v, NoCanon) : v_(std::move(v)) {}

    mpq_class v_;
};

} // namespace quatkit
