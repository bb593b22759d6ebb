#include "conjclass/quadratic.hpp"

#include "conjclass/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace conjclass {

namespace mp = boost::multiprecision;

namespace {

constexpr std::uint32_t kTrialBound = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialBound; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

}  // namespace

SquarefreeSplit squarefree_split(const Integer& n) {
    if (n.sign() <= 0) throw std::invalid_argument("squarefree_split: n must be positive");
    Integer rest = n;
    Integer root = 1;
    Integer kernel = 1;
    for (std::uint32_t p : small_primes()) {
        if (Integer(p) * p > rest) break;
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) root *= p;
        if (e % 2 == 1) kernel *= p;
    }
    // rest has no prime factor below min(kTrialBound, sqrt(rest)).
    Integer s = mp::sqrt(rest);
    if (s * s == rest) return {root * s, kernel, true};
    const Integer bound = Integer(kTrialBound);
    const bool certified = rest < bound * bound * bound;
    return {root, kernel * rest, certified};
}

QuadraticNumber::QuadraticNumber(Rational p, Rational q, Integer radicand)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(radicand)) {
    if (d_.sign() <= 0) throw std::invalid_argument("QuadraticNumber: radicand must be >= 1");
    canonicalize();
}

void QuadraticNumber::canonicalize() {
    if (q_.is_zero()) {
        d_ = 1;
        certified_ = true;
        return;
    }
    SquarefreeSplit split = squarefree_split(d_);
    q_ *= Rational(split.square_root_of_square_part);
    d_ = split.kernel;
    certified_ = split.certified;
    if (d_ == 1) {
        p_ += q_;
        q_ = Rational();
    }
}

QuadraticNumber QuadraticNumber::sqrt_of(const Rational& r) {
    if (r.sign() < 0) throw std::invalid_argument("QuadraticNumber::sqrt_of: negative argument");
    if (r.is_zero()) return QuadraticNumber();
    // sqrt(a/b) = sqrt(a*b) / b
    return QuadraticNumber(Rational(), Rational(Integer(1), r.den()), r.num() * r.den());
}

int surd_sign(const Rational& p, const Rational& q, const Rational& n) {
    const int sp = p.sign();
    const int sq = (n.is_zero() ? 0 : q.sign());
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // opposite signs: compare p^2 with q^2 n
    const auto c = (p * p) <=> (q * q * n);
    if (c == 0) return 0;
    return c > 0 ? sp : sq;
}

int QuadraticNumber::sign() const { return surd_sign(p_, q_, Rational(d_)); }

QuadraticNumber QuadraticNumber::galois_conjugate() const {
    QuadraticNumber r = *this;
    r.q_ = -r.q_;
    return r;
}

QuadraticNumber QuadraticNumber::inverse() const {
    if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero surd");
    if (q_.is_zero()) return QuadraticNumber(p_.inverse());
    // 1/(p + q√D) = (p - q√D) / (p^2 - q^2 D)
    const Rational norm = p_ * p_ - q_ * q_ * Rational(d_);
    QuadraticNumber r = *this;
    r.p_ = p_ / norm;
    r.q_ = -q_ / norm;
    return r;
}

double QuadraticNumber::to_double() const {
    return p_.to_double() + q_.to_double() * std::sqrt(Rational(d_).to_double());
}

std::string QuadraticNumber::str() const {
    if (q_.is_zero()) return p_.str();
    std::string surd = q_.str() + "*sqrt(" + d_.str() + ")";
    if (p_.is_zero()) return surd;
    return p_.str() + (q_.sign() > 0 ? "+" : "") + surd;
}

QuadraticNumber QuadraticNumber::operator-() const {
    QuadraticNumber r = *this;
    r.p_ = -r.p_;
    r.q_ = -r.q_;
    return r;
}

void QuadraticNumber::unify_radicand(const QuadraticNumber& rhs) {
    if (rhs.q_.is_zero()) return;
    if (q_.is_zero()) {
        d_ = rhs.d_;
        certified_ = rhs.certified_;
        return;
    }
    if (d_ != rhs.d_) throw std::domain_error("QuadraticNumber: mixed radicands " + d_.str() + " and " + rhs.d_.str());
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
    unify_radicand(rhs);
    p_ += rhs.p_;
    q_ += rhs.q_;
    if (q_.is_zero()) d_ = 1;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) {
    unify_radicand(rhs);
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    if (q_.is_zero()) d_ = 1;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
    unify_radicand(rhs);
    // (p + q√D)(r + s√D) = pr + qsD + (ps + qr)√D
    const Rational d(d_);
    Rational p = p_ * rhs.p_ + q_ * rhs.q_ * d;
    Rational q = p_ * rhs.q_ + q_ * rhs.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    if (q_.is_zero()) d_ = 1;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) { return *this *= rhs.inverse(); }

namespace {

// sign(a + b√x - c√y), x != y both >= 1.
int two_surd_sign(const Rational& a, const Rational& b, const Integer& x, const Rational& c, const Integer& y) {
    const int su = surd_sign(a, b, Rational(x));
    const int sv = -c.sign();
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // u = a + b√x, v = -c√y of opposite signs: compare u^2 = a^2 + b^2 x + 2ab√x with c^2 y.
    const int cmp = surd_sign(a * a + b * b * Rational(x) - c * c * Rational(y), 2 * a * b, Rational(x));
    if (cmp == 0) return 0;
    return cmp > 0 ? su : sv;
}

int compare(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (a.is_rational() || b.is_rational() || a.radicand() == b.radicand()) return (a - b).sign();
    return two_surd_sign(a.rational_part() - b.rational_part(), a.surd_coefficient(), a.radicand(),
                         b.surd_coefficient(), b.radicand());
}

}  // namespace

bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_) return true;
    if (a.certified_ && b.certified_) return false;
    return compare(a, b) == 0;
}

std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b) {
    const int c = compare(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) { return os << x.str(); }

}  // namespace conjclass
