#pragma once

#include "conjclass/rational.hpp"

#include <complex>
#include <optional>
#include <string>

namespace conjclass {

/// re + i*im with rational parts.
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return Gaussian(0, 1); }
    static Gaussian zero() { return Gaussian(); }
    static Gaussian one() { return Gaussian(1); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    /// |z|^2, always rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Gaussian inverse() const;

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
    std::string str() const;

    Gaussian operator-() const { return Gaussian(-re_, -im_); }
    Gaussian& operator+=(const Gaussian& rhs);
    Gaussian& operator-=(const Gaussian& rhs);
    Gaussian& operator*=(const Gaussian& rhs);
    Gaussian& operator/=(const Gaussian& rhs);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian&, const Gaussian&) = default;

private:
    Rational re_;
    Rational im_;
};

/// Square root inside Q(i) when one exists; the root with positive real part
/// (or positive imaginary part when the real part vanishes) is returned.
std::optional<Gaussian> exact_sqrt(const Gaussian& z);

std::ostream& operator<<(std::ostream& os, const Gaussian& z);

}  // namespace conjclass
