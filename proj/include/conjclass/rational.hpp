#pragma once

/**
 * Exact rational numbers over arbitrary-precision integers.
 *
 * Canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1. Every
 * classification decision in the library is a sign test or an equality
 * test on values of this type, so nothing here ever rounds.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace conjclass {

using Integer = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer num, Integer den);

    /// Parses "p", "p/q", or a decimal string such as "-0.125" or "2.5e-3".
    /// Throws Error(Parse) on malformed text, Error(ZeroDenominator) on "p/0".
    static Rational parse(std::string_view text);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational abs() const { return num_.sign() < 0 ? -*this : *this; }
    Rational inverse() const;
    Rational conj() const { return *this; }

    double to_double() const;
    /// "p" or "p/q"; the canonical text format.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

private:
    struct Canonical {};
    Rational(Integer num, Integer den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Integer num_;
    Integer den_;
};

/// Reduced, sign-normalised num/den. Throws Error(ZeroDenominator) when den == 0.
Rational normalize_rational(const Integer& num, const Integer& den);

/// Exact square root when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

Rational pow(const Rational& base, int exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace conjclass
