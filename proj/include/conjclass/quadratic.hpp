#pragma once

#include "conjclass/rational.hpp"

#include <compare>
#include <string>

namespace conjclass {

/**
 * Real quadratic surd p + q*sqrt(D) with rational p, q and integer D >= 1.
 *
 * Canonical form keeps D squarefree and D = 1 whenever q = 0, so equal
 * numbers compare structurally equal. Square factors are removed by trial
 * division with primes below 10^6; a radicand that cannot be certified
 * squarefree that way is left as is (`squarefree_certified() == false`)
 * and comparisons fall back to exact cross-multiplied sign tests.
 *
 * Arithmetic between two irrational values requires a common radicand.
 */
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(Rational p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(int p) : p_(p) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(Rational p, Rational q, Integer radicand);

    /// sqrt(r) for r >= 0 in canonical form.
    static QuadraticNumber sqrt_of(const Rational& r);

    static QuadraticNumber zero() { return QuadraticNumber(); }
    static QuadraticNumber one() { return QuadraticNumber(1); }

    const Rational& rational_part() const { return p_; }
    const Rational& surd_coefficient() const { return q_; }
    const Integer& radicand() const { return d_; }
    bool squarefree_certified() const { return certified_; }

    bool is_rational() const { return q_.is_zero(); }
    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
    int sign() const;

    QuadraticNumber conj() const { return *this; }
    /// p - q*sqrt(D).
    QuadraticNumber galois_conjugate() const;
    QuadraticNumber inverse() const;

    double to_double() const;
    /// "p", "q*sqrt(D)", or "p+q*sqrt(D)".
    std::string str() const;

    QuadraticNumber operator-() const;
    QuadraticNumber& operator+=(const QuadraticNumber& rhs);
    QuadraticNumber& operator-=(const QuadraticNumber& rhs);
    QuadraticNumber& operator*=(const QuadraticNumber& rhs);
    QuadraticNumber& operator/=(const QuadraticNumber& rhs);

    friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
    friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
    friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
    friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }

    friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b);
    friend std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b);

private:
    void canonicalize();
    void unify_radicand(const QuadraticNumber& rhs);

    Rational p_;
    Rational q_;
    Integer d_ = 1;
    bool certified_ = true;
};

/// Sign of p + q*sqrt(n) for rational n >= 0, without reducing the radicand.
int surd_sign(const Rational& p, const Rational& q, const Rational& n);

/// Splits n > 0 into n = k^2 * m with m squarefree when certifiable.
struct SquarefreeSplit {
    Integer square_root_of_square_part;
    Integer kernel;
    bool certified;
};
SquarefreeSplit squarefree_split(const Integer& n);

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x);

}  // namespace conjclass
