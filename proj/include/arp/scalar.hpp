#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arp {

/// Exact rational quantity. Always canonical (lowest terms, positive denominator).
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : q_(value) {}  // NOLINT: integers convert implicitly
    explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Accepts "12", "-3.25", "961.8" and the rational form "7/3".
    static Scalar parse(std::string_view text);

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_terminating_decimal() const;
    /// Shortest exact decimal when terminating ("961.8", "4"), otherwise "p/q".
    std::string to_string() const;
    /// Correctly rounded (half away from zero) to `significant` digits; fixed
    /// notation for moderate exponents, scientific otherwise.
    std::string to_decimal(int significant) const;
    double to_double() const { return q_.get_d(); }

    int sign() const { return sgn(q_); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.q_ + b.q_)); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.q_ - b.q_)); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.q_ * b.q_)); }
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

/// Exact non-negative integer of unbounded size (counts and bounds).
class BigCount {
public:
    BigCount() = default;
    explicit BigCount(mpz_class z);
    BigCount(unsigned long value) : BigCount(mpz_class(value)) {}  // NOLINT

    const mpz_class& value() const { return z_; }
    std::string to_string() const { return z_.get_str(); }
    /// Normalized scientific notation, e.g. "2.68e300".
    std::string scientific(int significant = 3) const;

    friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
        const int c = cmp(a.z_, b.z_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpz_class z_{0};
};

/// Decimal mantissa/exponent of |x| rounded half away from zero to `significant` digits.
struct DecimalDigits {
    bool negative = false;
    std::string digits;  // exactly `significant` characters, first non-zero (unless x == 0)
    long exponent = 0;   // value ~ 0.d1d2... * 10^(exponent+1), i.e. d1.d2... * 10^exponent
};
DecimalDigits round_significant(const mpq_class& x, int significant);

/// "2.68e300" style; "0" for zero.
std::string scientific(const mpq_class& x, int significant = 3);

}  // namespace arp
