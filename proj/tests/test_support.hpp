#pragma once

// Deterministic generators shared by the unit, property and acceptance suites.

#include "conjclass/classify.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace conjclass::test {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

    /// num in [-max_num, max_num], den in [1, max_den].
    Rational rational(long max_num, long max_den) {
        return Rational(Integer(integer(-max_num, max_num)), Integer(integer(1, max_den)));
    }
    Rational nonzero_rational(long max_num, long max_den) {
        Rational r;
        while (r.is_zero()) r = rational(max_num, max_den);
        return r;
    }
    Gaussian gaussian(long max_num, long max_den) { return Gaussian(rational(max_num, max_den), rational(max_num, max_den)); }
    Gaussian nonzero_gaussian(long max_num, long max_den) {
        Gaussian g;
        while (g.is_zero()) g = gaussian(max_num, max_den);
        return g;
    }

    /// Random matrix; `degenerate` copies a scaled row so the rank drops.
    Matrix<Rational> matrix(std::size_t n, long max_num, long max_den, bool degenerate = false) {
        Matrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rational(max_num, max_den);
        if (degenerate && n > 1) {
            const Rational k = rational(3, 2);
            for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = k * m(0, j);
        }
        return m;
    }
    Matrix<Gaussian> gaussian_matrix(std::size_t n, long max_num, long max_den) {
        Matrix<Gaussian> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = gaussian(max_num, max_den);
        return m;
    }
    Vector<Rational> vector(std::size_t n, long max_num, long max_den) {
        Vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(rational(max_num, max_den));
        return v;
    }
    Vector<Gaussian> gaussian_vector(std::size_t n, long max_num, long max_den) {
        Vector<Gaussian> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(gaussian(max_num, max_den));
        return v;
    }
    Matrix<Rational> invertible(std::size_t n, long max_num, long max_den) {
        for (;;) {
            auto m = matrix(n, max_num, max_den);
            if (!determinant(m).is_zero()) return m;
        }
    }
    Matrix<Gaussian> invertible_gaussian(std::size_t n, long max_num, long max_den) {
        for (;;) {
            auto m = gaussian_matrix(n, max_num, max_den);
            if (!determinant(m).is_zero()) return m;
        }
    }

    template <class T>
    const T& pick(const std::vector<T>& pool) {
        return pool[static_cast<std::size_t>(integer(0, static_cast<long>(pool.size()) - 1))];
    }

    /// Linear part drawn from structured cores (diagonal, Jordan, rotation-scaling)
    /// conjugated by a random invertible matrix, or fully random.
    Matrix<Rational> structured_real(std::size_t n) {
        static const std::vector<Rational> values = {0, 1, -1, Rational(1, 2), Rational(-1, 2), 2, -2, Rational(3, 2)};
        if (coin(0.25)) return matrix(n, 4, 3);
        if (n == 1) return Matrix<Rational>{{pick(values)}};
        Matrix<Rational> core(2, 2);
        switch (integer(0, 2)) {
            case 0: core = Matrix<Rational>{{pick(values), 0}, {0, pick(values)}}; break;
            case 1: {
                const Rational l = pick(values);
                core = Matrix<Rational>{{l, 1}, {0, l}};
                break;
            }
            default: {
                static const std::vector<std::pair<Rational, Rational>> cs = {
                    {Rational(3, 5), Rational(4, 5)}, {0, 1}, {Rational(1, 2), Rational(1, 2)}, {1, 2}, {Rational(-1, 2), 1}};
                const auto& [c, s] = pick(cs);
                core = Matrix<Rational>{{c, -s}, {s, c}};
            }
        }
        const auto p = invertible(2, 4, 2);
        return p * core * inverse(p);
    }

    Matrix<Gaussian> structured_complex(std::size_t n) {
        static const std::vector<Gaussian> values = {
            0, 1, -1, Gaussian::i(), Gaussian(Rational(3, 5), Rational(4, 5)), Gaussian(Rational(3, 5), Rational(-4, 5)),
            Gaussian(Rational(1, 2)), Gaussian(0, Rational(-1, 3)), Gaussian(2), Gaussian(1, 1)};
        if (coin(0.25)) return gaussian_matrix(n, 3, 2);
        if (n == 1) return Matrix<Gaussian>{{pick(values)}};
        Matrix<Gaussian> core(2, 2);
        if (coin(0.15)) {
            // unit eigenvalues outside Q(i): u l, u conj(l) with |u| = |l| = 1
            const Gaussian u = pick(std::vector<Gaussian>{1, Gaussian::i(), Gaussian(Rational(3, 5), Rational(4, 5))});
            const Rational c = pick(std::vector<Rational>{Rational(1, 3), Rational(1, 4), Rational(-2, 7)});
            core = Matrix<Gaussian>{{0, -(u * u)}, {1, u * Gaussian(2 * c)}};
        } else if (coin(0.3)) {
            const Gaussian l = pick(values);
            core = Matrix<Gaussian>{{l, 1}, {0, l}};
        } else {
            core = Matrix<Gaussian>{{pick(values), 0}, {0, pick(values)}};
        }
        const auto p = invertible_gaussian(2, 3, 2);
        return p * core * inverse(p);
    }

    /// b is zero a quarter of the time so that identity-like classes keep their fixed points.
    AffineMap affine_map(Field field, std::size_t n) {
        const bool zero_b = coin(0.25);
        if (field == Field::Real) {
            auto a = structured_real(n);
            return Affine<Rational>{std::move(a), zero_b ? Vector<Rational>(n) : vector(n, 3, 2)};
        }
        auto a = structured_complex(n);
        return Affine<Gaussian>{std::move(a), zero_b ? Vector<Gaussian>(n) : gaussian_vector(n, 3, 2)};
    }

    AffineMap affine_change(Field field, std::size_t n) {
        if (field == Field::Real) return Affine<Rational>{invertible(n, 4, 2), vector(n, 5, 3)};
        return Affine<Gaussian>{invertible_gaussian(n, 3, 2), gaussian_vector(n, 5, 3)};
    }

    /// Small unimodular integer matrix: keeps canonical coordinates of [-10, 10]^2 moderate.
    Matrix<Rational> unimodular() {
        Matrix<Rational> p = Matrix<Rational>::identity(2);
        for (int k = 0; k < 3; ++k) {
            const long t = integer(-1, 1);
            p = (coin() ? Matrix<Rational>{{1, t}, {0, 1}} : Matrix<Rational>{{1, 0}, {t, 1}}) * p;
        }
        if (coin()) p = Matrix<Rational>{{0, 1}, {1, 0}} * p;
        return p;
    }

    Rational drift() { return pick(std::vector<Rational>{1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), Rational(3, 2)}); }

    /// Two conjugate maps of the line.
    std::pair<AffineMap, AffineMap> line_pair() {
        auto in = [&](int cls) -> Rational {
            const Rational t = Rational(Integer(integer(1, 9)), Integer(10));  // (0, 1)
            switch (cls) {
                case 0: return Rational(-1) / t;
                case 1: return -1;
                case 2: return -t;
                case 3: return 0;
                case 4: return t;
                case 5: return 1;
                default: return Rational(1) / t;
            }
        };
        const int cls = static_cast<int>(integer(0, 6));
        Rational b = rational(5, 3), d = rational(5, 3);
        if (cls == 5) {
            if (coin(0.2)) {
                b = 0;
                d = 0;
            } else {
                b = nonzero_rational(5, 3);
                d = nonzero_rational(5, 3);
            }
        }
        return {Affine<Rational>{Matrix<Rational>{{in(cls)}}, {b}}, Affine<Rational>{Matrix<Rational>{{in(cls)}}, {d}}};
    }

    /// Planar map without fixed points, invertible linear part, second eigenvalue alpha > 0.
    AffineMap nofix_bijective() {
        const Rational alpha = pick(std::vector<Rational>{1, 1, 2, Rational(1, 2), Rational(3, 2), Rational(2, 3)});
        Matrix<Rational> core;
        Vector<Rational> delta;
        if (alpha.is_one()) {
            const bool shear = coin(0.7);
            core = Matrix<Rational>{{1, shear ? 1 : 0}, {0, 1}};
            delta = shear ? Vector<Rational>{rational(3, 2), drift()} : Vector<Rational>{drift(), rational(3, 2)};
            const auto p = unimodular();
            return Affine<Rational>{p * core * inverse(p), p * delta};
        }
        core = Matrix<Rational>{{1, 0}, {0, alpha}};
        // The conjugacy scales the fiber by alpha once per drift step, so the number of
        // steps across [-10, 10]^2 is kept small enough for alpha^steps to stay below 1e12.
        const double base = std::log(std::max(alpha.to_double(), 1 / alpha.to_double()));
        for (;;) {
            const auto p = unimodular();
            delta = {drift(), rational(3, 2)};
            const auto q = inverse(p);
            const double steps = 10 * (std::fabs(q(0, 0).to_double()) + std::fabs(q(0, 1).to_double())) /
                                 std::fabs(delta[0].to_double());
            if (steps * base <= std::log(1e12)) return Affine<Rational>{p * core * q, p * delta};
        }
    }

    /// Planar map without fixed points and singular linear part.
    AffineMap nofix_singular() {
        const auto p = unimodular();
        return Affine<Rational>{p * Matrix<Rational>{{1, 0}, {0, 0}} * inverse(p), p * Vector<Rational>{drift(), rational(3, 2)}};
    }

    /// Pure translation by a nonzero vector.
    AffineMap translation(Field field, std::size_t n) {
        if (field == Field::Real) {
            Vector<Rational> v;
            while (v.empty() || is_zero_vector(v)) v = vector(n, 4, 3);
            return Affine<Rational>{Matrix<Rational>::identity(n), v};
        }
        Vector<Gaussian> v;
        while (v.empty() || is_zero_vector(v)) v = gaussian_vector(n, 4, 3);
        return Affine<Gaussian>{Matrix<Gaussian>::identity(n), v};
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// t o f o t^-1 for maps over the same field.
inline AffineMap conjugated(const AffineMap& f, const AffineMap& t) {
    if (f.field() == Field::Real) return conjugate_by(f.as_real(), t.as_real());
    return conjugate_by(f.as_complex(), t.as_complex());
}

}  // namespace conjclass::test
