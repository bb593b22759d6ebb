#include "conjclass/matrix.hpp"

namespace conjclass {

Matrix<Rational> realify(const Matrix<Gaussian>& m) {
    Matrix<Rational> r(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Gaussian& z = m(i, j);
            r(2 * i, 2 * j) = z.re();
            r(2 * i, 2 * j + 1) = -z.im();
            r(2 * i + 1, 2 * j) = z.im();
            r(2 * i + 1, 2 * j + 1) = z.re();
        }
    return r;
}

Vector<Rational> realify(const Vector<Gaussian>& v) {
    Vector<Rational> r;
    r.reserve(2 * v.size());
    for (const auto& z : v) {
        r.push_back(z.re());
        r.push_back(z.im());
    }
    return r;
}

Matrix<Gaussian> to_gaussian(const Matrix<Rational>& m) {
    Matrix<Gaussian> g(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = Gaussian(m(i, j));
    return g;
}

Vector<Gaussian> to_gaussian(const Vector<Rational>& v) { return Vector<Gaussian>(v.begin(), v.end()); }

Matrix<QuadraticNumber> to_quadratic(const Matrix<Rational>& m) {
    Matrix<QuadraticNumber> q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = QuadraticNumber(m(i, j));
    return q;
}

Matrix<Rational> real_part_checked(const Matrix<Gaussian>& m) {
    Matrix<Rational> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_real()) throw Error(ErrorCode::FieldOrDimensionMismatch, "complex entry in real matrix");
            r(i, j) = m(i, j).re();
        }
    return r;
}

namespace {

template <class T>
std::string render(const Matrix<T>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).str();
        s += "]";
    }
    return s + "]";
}

}  // namespace

std::string to_string(const Matrix<Rational>& m) { return render(m); }
std::string to_string(const Matrix<Gaussian>& m) { return render(m); }
std::string to_string(const Matrix<QuadraticNumber>& m) { return render(m); }

}  // namespace conjclass
