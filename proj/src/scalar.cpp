#include "arp/scalar.hpp"

#include <cctype>

#include "arp/error.hpp"

namespace arp {

namespace {

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

// 10^e as a rational, e may be negative.
mpq_class pow10q(long e) {
    if (e >= 0) return mpq_class(pow10(static_cast<unsigned long>(e)));
    return mpq_class(mpz_class(1), pow10(static_cast<unsigned long>(-e)));
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    const std::string_view original = text;
    auto fail = [&] { return parse_error("not an exact decimal: '" + std::string(original) + "'"); };
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    mpq_class q;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw fail();
        mpz_class d(std::string(den), 10);
        if (d == 0) throw fail();
        q = mpq_class(mpz_class(std::string(num), 10), d);
    } else {
        auto dot = text.find('.');
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
        if (dot != std::string_view::npos && frac.empty() && whole.empty()) throw fail();
        if (!whole.empty() && !all_digits(whole)) throw fail();
        if (!frac.empty() && !all_digits(frac)) throw fail();
        if (whole.empty() && frac.empty()) throw fail();
        std::string digits = std::string(whole) + std::string(frac);
        q = mpq_class(mpz_class(digits, 10), pow10(frac.size()));
    }
    q.canonicalize();
    if (negative) q = -q;
    return Scalar(q);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.sign() == 0) throw invalid_argument("division by zero");
    return Scalar(mpq_class(a.q_ / b.q_));
}

bool Scalar::is_terminating_decimal() const {
    mpz_class d = q_.get_den();
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) d /= 2;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) d /= 5;
    return d == 1;
}

std::string Scalar::to_string() const {
    if (!is_terminating_decimal()) return q_.get_str();
    const mpz_class& den = q_.get_den();
    if (den == 1) return q_.get_num().get_str();
    // smallest k with den | 10^k
    unsigned long k = 0;
    mpz_class p = 1;
    while (!mpz_divisible_p(p.get_mpz_t(), den.get_mpz_t())) {
        p *= 10;
        ++k;
    }
    mpz_class scaled = abs(q_.get_num()) * (p / den);
    std::string s = scaled.get_str();
    if (s.size() <= k) s.insert(0, k - s.size() + 1, '0');
    s.insert(s.size() - k, ".");
    return (sgn(q_) < 0 ? "-" : "") + s;
}

DecimalDigits round_significant(const mpq_class& x, int significant) {
    if (significant < 1) throw invalid_argument("significant digits must be >= 1");
    DecimalDigits out;
    if (sgn(x) == 0) {
        out.digits = std::string(static_cast<std::size_t>(significant), '0');
        return out;
    }
    out.negative = sgn(x) < 0;
    const mpq_class a = abs(x);
    long e = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 10));
    while (a >= pow10q(e + 1)) ++e;
    while (a < pow10q(e)) --e;
    mpq_class scaled = a * pow10q(significant - 1 - e) + mpq_class(1, 2);
    mpz_class mant = scaled.get_num() / scaled.get_den();  // floor, positive
    if (mant == pow10(static_cast<unsigned long>(significant))) {
        mant /= 10;
        ++e;
    }
    out.digits = mant.get_str();
    out.exponent = e;
    return out;
}

std::string scientific(const mpq_class& x, int significant) {
    if (sgn(x) == 0) return "0";
    const DecimalDigits d = round_significant(x, significant);
    std::string s = d.negative ? "-" : "";
    s += d.digits.substr(0, 1);
    if (d.digits.size() > 1) s += "." + d.digits.substr(1);
    return s + "e" + std::to_string(d.exponent);
}

std::string Scalar::to_decimal(int significant) const {
    if (sign() == 0) return "0";
    const DecimalDigits d = round_significant(q_, significant);
    if (d.exponent <= -7 || d.exponent >= 21) return scientific(q_, significant);
    const auto n = static_cast<long>(d.digits.size());
    std::string s;
    if (d.exponent >= n - 1) {
        s = d.digits + std::string(static_cast<std::size_t>(d.exponent - n + 1), '0');
    } else if (d.exponent >= 0) {
        s = d.digits.substr(0, static_cast<std::size_t>(d.exponent + 1)) + "." +
            d.digits.substr(static_cast<std::size_t>(d.exponent + 1));
    } else {
        s = "0." + std::string(static_cast<std::size_t>(-d.exponent - 1), '0') + d.digits;
    }
    return (d.negative ? "-" : "") + s;
}

BigCount::BigCount(mpz_class z) : z_(std::move(z)) {
    if (sgn(z_) < 0) throw invalid_argument("BigCount must be non-negative");
}

std::string BigCount::scientific(int significant) const {
    return arp::scientific(mpq_class(z_), significant);
}

}  // namespace arp
