#pragma once

/**
 * Conjugating homeomorphisms as chains of closed-form invertible primitives,
 * their synthesis for the constructive cases, and numerical verification of
 * g o h = h o f.
 *
 * Primitives act on real coordinates: R^n for real maps, R^(2n) (realified,
 * (Re z1, Im z1, Re z2, Im z2)) for complex ones.
 */

#include "conjclass/classify.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace conjclass {

using HighPrecision = boost::multiprecision::cpp_dec_float_50;

using ExactMatrix = std::variant<Matrix<Rational>, Matrix<Gaussian>>;
using ExactVector = std::variant<Vector<Rational>, Vector<Gaussian>>;

struct Linear {
    ExactMatrix m;
};

struct Translate {
    ExactVector v;
};

/// Exponent of a signed power, with the pair (|a|, |c|) it was derived from.
struct PowerExponent {
    HighPrecision value = 1;
    std::optional<std::pair<Rational, Rational>> source;
};

/// x -> sgn(x - center_in) |x - center_in|^l + center_out
struct SignedPower1D {
    Rational center_in;
    Rational center_out;
    PowerExponent l;
};

/// (x1, x2) -> (x1 - (x2 - 1/2)^2 / 2, x2)
struct ParabolicShear {};

/// (x1, x2) -> (x1, x2 alpha^(-x1))
struct ExpFiberScale {
    Rational alpha;
};

/// Complex conjugation of every coordinate.
struct Conjugate {};

using PrimitiveMap = std::variant<Linear, Translate, SignedPower1D, ParabolicShear, ExpFiberScale, Conjugate>;

struct ChainLink {
    PrimitiveMap map;
    bool inverse = false;
};

/// chain[0] o chain[1] o ... ; the last link is applied first.
struct Homeomorphism {
    Field field = Field::Real;
    std::size_t dim = 1;
    std::vector<ChainLink> chain;

    std::size_t ambient_dim() const { return field == Field::Real ? dim : 2 * dim; }
};

/// Throws on primitives that are not bijections (singular Linear, l <= 0, alpha <= 0 or 1)
/// or that do not fit the ambient space.
void validate(const Homeomorphism& h);

Homeomorphism identity_homeomorphism(Field field, std::size_t dim);
Homeomorphism invert(const Homeomorphism& h);
/// outer o inner
Homeomorphism compose(const Homeomorphism& outer, const Homeomorphism& inner);
Homeomorphism single(Field field, std::size_t dim, PrimitiveMap p);

/// True when no link involves a transcendental function.
bool is_rational_only(const Homeomorphism& h);

enum class Direction { Forward, Inverse };

using Point = std::vector<double>;

/// Evaluates h (or its inverse) at x in real coordinates; throws DimensionMismatch.
Point homeo_apply(const Homeomorphism& h, const Point& x, Direction direction = Direction::Forward);

/// Translation to a fixed point q: returns h = Translate{q} and g(x) = A x with f = h o g o h^-1.
std::pair<Homeomorphism, AffineMap> reduce_to_linear(const AffineMap& f);

Homeomorphism synth_1d(const AffineMap& f, const AffineMap& g);
/// f(x) = x + b, g(x) = x + d: a linear B with B b = d.
Homeomorphism synth_translation(const AffineMap& f, const AffineMap& g);
/// f fixed-point free with det A != 0; g a translation.
Homeomorphism synth_nofix_bijective_2d(const AffineMap& f, const AffineMap& g);
/// f, g fixed-point free with singular linear parts.
Homeomorphism synth_nofix_singular_2d(const AffineMap& f, const AffineMap& g);

/// Dispatches to the constructions above. Throws NotConjugate, NegativeAlphaUnsupported,
/// or UnsupportedClass when no explicit construction is available.
Homeomorphism synthesize(const AffineMap& f, const AffineMap& g);

struct VerificationSpec {
    std::size_t samples = 10000;
    double range = 10;
    double tolerance = 1e-9;
};

struct VerificationReport {
    std::size_t samples = 0;
    double range = 0;
    double max_residual = 0;
    double max_roundtrip = 0;
    bool pass = false;
    double tolerance = 0;
};

/// Residual max |h(f(x)) - g(h(x))| / (1 + |g(h(x))|) and round trip max |h(h^-1(x)) - x|
/// over a deterministic low-discrepancy sample of [-range, range]^m.
VerificationReport verify_conjugacy(const AffineMap& f, const AffineMap& g, const Homeomorphism& h,
                                    const VerificationSpec& spec = {});

/// Sample i of the shifted Kronecker sequence in [-range, range]^m.
Point sample_point(std::size_t i, std::size_t m, double range);

}  // namespace conjclass
