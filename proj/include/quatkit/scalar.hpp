#pragma once

#include <string>

#include "quatkit/errors.hpp"
#include "quatkit/rational.hpp"

namespace quatkit {

enum class Mode { ExactRational, Float64 };

inline const char* mode_name(Mode m) {
    return m == Mode::ExactRational ? "exact" : "float";
}

/// Tagged-mode scalar: an exact rational or a binary64 float. The two modes
/// never mix implicitly; conversion to Float64 is an explicit lossy step.
class Scalar {
public:
    Scalar() : mode_(Mode::ExactRational) {}

    static Scalar rational(long num, long den = 1) { return Scalar(Rational(num, den)); }
    static Scalar rational(Rational r) { return Scalar(std::move(r)); }
    static Scalar float64(double v) { return Scalar(v); }
    static Scalar zero(Mode m) { return m == Mode::ExactRational ? rational(0) : float64(0.0); }
    static Scalar one(Mode m) { return m == Mode::ExactRational ? rational(1) : float64(1.0); }

    Mode mode() const noexcept { return mode_; }
    bool is_exact() const noexcept { return mode_ == Mode::ExactRational; }

    const Rational& rat() const {
        require_mode(Mode::ExactRational, "rational access");
        return rat_;
    }
    double flt() const {
        require_mode(Mode::Float64, "float access");
        return flt_;
    }

    /// Explicit lossy conversion; identity on Float64 values.
    double to_double() const { return is_exact() ? rat_.to_double() : flt_; }

    bool is_zero() const { return is_exact() ? rat_.is_zero() : flt_ == 0.0; }
    int sign() const {
        if (is_exact()) return rat_.sign();
        return flt_ > 0.0 ? 1 : (flt_ < 0.0 ? -1 : 0);
    }

    Scalar operator-() const { return is_exact() ? Scalar(-rat_) : Scalar(-flt_); }

    Scalar operator+(const Scalar& o) const {
        check_same_mode(o, "+");
        return is_exact() ? Scalar(rat_ + o.rat_) : Scalar(flt_ + o.flt_);
    }
    Scalar operator-(const Scalar& o) const {
        check_same_mode(o, "-");
        return is_exact() ? Scalar(rat_ - o.rat_) : Scalar(flt_ - o.flt_);
    }
    Scalar operator*(const Scalar& o) const {
        check_same_mode(o, "*");
        return is_exact() ? Scalar(rat_ * o.rat_) : Scalar(flt_ * o.flt_);
    }
    Scalar operator/(const Scalar& o) const {
        check_same_mode(o, "/");
        if (o.is_zero()) throw DivisionByZeroError("scalar division by zero");
        return is_exact() ? Scalar(rat_ / o.rat_) : Scalar(flt_ / o.flt_);
    }

    /// Exact equality: componentwise rationals, bit equality for floats.
    bool operator==(const Scalar& o) const {
        check_same_mode(o, "==");
        return is_exact() ? rat_ == o.rat_ : flt_ == o.flt_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const {
        check_same_mode(o, "<");
        return is_exact() ? rat_ < o.rat_ : flt_ < o.flt_;
    }

    std::string to_string() const;

private:
    explicit Scalar(Rational r) : mode_(Mode::ExactRational), rat_(std::move(r)) {}
    explicit Scalar(double v) : mode_(Mode::Float64), flt_(v) {}

    void require_mode(Mode m, const char* what) const {
        if (mode_ != m)
            throw ModeMismatchError(std::string(what) + " requires " + mode_name(m) +
                                    " mode, value is " + mode_name(mode_));
    }
    void check_same_mode(const Scalar& o, const char* op) const {
        if (mode_ != o.mode_)
            throw ModeMismatchError(std::string("scalar '") + op + "' between " +
                                    mode_name(mode_) + " and " + mode_name(o.mode_));
    }

    Mode mode_;
    Rational rat_;
    double flt_ = 0.0;
};

} // namespace quatkit
