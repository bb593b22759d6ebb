#include "conjclass/rational.hpp"

#include "conjclass/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <optional>
#include <ostream>

namespace conjclass {

namespace mp = boost::multiprecision;

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is zero");
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = mp::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational normalize_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw Error(ErrorCode::Parse, "not a rational numeral: '" + std::string(whole) + "'");
    const auto first = s.find_first_not_of('0');
    Integer v{first == std::string_view::npos ? std::string("0") : std::string(s.substr(first))};
    return negative ? Integer(-v) : v;
}

Integer pow10(unsigned e) {
    Integer r = 1;
    for (unsigned i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw Error(ErrorCode::Parse, "empty numeral");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer n = parse_integer(text.substr(0, slash), whole);
        std::string_view d = text.substr(slash + 1);
        if (!d.empty() && d.front() == '-') throw Error(ErrorCode::Parse, "sign in denominator: '" + std::string(whole) + "'");
        return Rational(n, parse_integer(d, whole));
    }

    // Decimal with optional exponent, converted exactly.
    int exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = text.substr(e + 1);
        Integer ev = parse_integer(exp_text, whole);
        if (mp::abs(ev) > 4096) throw Error(ErrorCode::Parse, "exponent out of range: '" + std::string(whole) + "'");
        exponent = ev.convert_to<int>();
        text = text.substr(0, e);
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string digits;
    int frac_digits = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw Error(ErrorCode::Parse, "not a rational numeral: '" + std::string(whole) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_digits = static_cast<int>(fp.size());
    } else {
        if (!all_digits(text)) throw Error(ErrorCode::Parse, "not a rational numeral: '" + std::string(whole) + "'");
        digits = std::string(text);
    }
    // a leading zero would make the Integer constructor read octal
    const auto first = digits.find_first_not_of('0');
    Integer n(first == std::string::npos ? std::string("0") : digits.substr(first));
    if (negative) n = -n;
    const int shift = exponent - frac_digits;
    if (shift >= 0) return Rational(n * pow10(static_cast<unsigned>(shift)), Integer(1));
    return Rational(n, pow10(static_cast<unsigned>(-shift)));
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
    return Rational(den_, num_);
}

double Rational::to_double() const {
    return mp::cpp_rational(num_, den_).convert_to<double>();
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const { return Rational(Integer(-num_), den_, Canonical{}); }

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ -= rhs.num_;
    } else {
        num_ = num_ * rhs.den_ - rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero");
    Integer n = num_ * rhs.den_;
    Integer d = den_ * rhs.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Integer lhs = a.num_ * b.den_;
    const Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    if (r.is_zero()) return Rational();
    Integer sn = mp::sqrt(r.num());
    if (sn * sn != r.num()) return std::nullopt;
    Integer sd = mp::sqrt(r.den());
    if (sd * sd != r.den()) return std::nullopt;
    return Rational(sn, sd);
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    Rational result = 1;
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace conjclass
