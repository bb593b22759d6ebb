#include "conjclass/gaussian.hpp"

#include "conjclass/error.hpp"

#include <ostream>

namespace conjclass {

Gaussian Gaussian::inverse() const {
    if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of complex zero");
    const Rational n = norm();
    return Gaussian(re_ / n, -im_ / n);
}

std::string Gaussian::str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.is_zero() ? std::string() : re_.str();
    if (im_.sign() > 0 && !s.empty()) s += "+";
    if (im_.is_one()) return s + "i";
    if (im_ == Rational(-1)) return s + "-i";
    return s + im_.str() + "i";
}

Gaussian& Gaussian::operator+=(const Gaussian& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& rhs) {
    if (im_.is_zero() && rhs.im_.is_zero()) {
        re_ *= rhs.re_;
        return *this;
    }
    Rational r = re_ * rhs.re_ - im_ * rhs.im_;
    Rational i = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& rhs) {
    if (rhs.im_.is_zero()) {
        if (rhs.re_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by complex zero");
        re_ /= rhs.re_;
        im_ /= rhs.re_;
        return *this;
    }
    return *this *= rhs.inverse();
}

std::optional<Gaussian> exact_sqrt(const Gaussian& z) {
    if (z.im().is_zero()) {
        if (z.re().sign() >= 0) {
            if (auto r = exact_sqrt(z.re())) return Gaussian(*r);
            return std::nullopt;
        }
        if (auto r = exact_sqrt(-z.re())) return Gaussian(Rational(), *r);
        return std::nullopt;
    }
    // (x + iy)^2 = z  =>  x^2 = (re + |z|)/2, y = im / (2x).
    auto modulus = exact_sqrt(z.norm());
    if (!modulus) return std::nullopt;
    auto x = exact_sqrt((z.re() + *modulus) / 2);
    if (!x || x->is_zero()) return std::nullopt;
    return Gaussian(*x, z.im() / (*x * 2));
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << z.str(); }

}  // namespace conjclass
