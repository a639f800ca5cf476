#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace p2g {

/// Exact rational scalar backed by GMP.
///
/// Always kept canonical: gcd(|numerator|, denominator) = 1 and
/// denominator >= 1, so equality is plain structural comparison.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(static_cast<long int>(n)) {}
    Rational(const mpz_class& n) : value_(n) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" in decimal.
    static Rational from_string(const std::string& text);

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.value_ / b.value_));
    }

    Rational& operator+=(const Rational& x) { value_ += x.value_; return *this; }
    Rational& operator-=(const Rational& x) { value_ -= x.value_; return *this; }
    Rational& operator*=(const Rational& x) { value_ *= x.value_; return *this; }
    Rational& operator/=(const Rational& x) { return *this = *this / x; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(mpq_class(1 / value_));
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Decimal rendering: "p" for integers, "p/q" otherwise.
    std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

/// Exact nonnegative square root, or nullopt when x is not the square
/// of a rational (negative inputs included).
std::optional<Rational> rational_sqrt(const Rational& x);

inline Rational Rational::from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(text));
        return Rational(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("Rational: cannot parse \"" + text + "\"");
    }
}

inline std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_zero()) return Rational(0);
    if (mpz_perfect_square_p(x.numerator().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(x.denominator().get_mpz_t()) == 0) return std::nullopt;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), x.numerator().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), x.denominator().get_mpz_t());
    return Rational(num, den);
}

}  // namespace p2g
