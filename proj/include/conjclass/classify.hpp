#pragma once

/**
 * Affine maps x -> A x + b over Q and Q(i), their fixed-point sets, the
 * complete conjugacy signature and pairwise verdicts.
 *
 * Two maps with fixed points are conjugate iff their block signatures agree.
 * Without fixed points, one-dimensional maps form a single class and planar
 * maps split by whether the linear part is singular.
 */

#include "conjclass/solve.hpp"
#include "conjclass/spectral.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace conjclass {

template <ExactScalar T>
struct Affine {
    Matrix<T> a;
    Vector<T> b;

    Vector<T> operator()(const Vector<T>& x) const { return a * x + b; }
    std::size_t dim() const { return b.size(); }
    friend bool operator==(const Affine&, const Affine&) = default;
};

/// f o g
template <ExactScalar T>
Affine<T> compose(const Affine<T>& f, const Affine<T>& g) {
    return {f.a * g.a, f.a * g.b + f.b};
}

template <ExactScalar T>
Affine<T> inverse(const Affine<T>& f) {
    Matrix<T> inv = inverse(f.a);
    Vector<T> shift = inv * f.b;
    for (auto& x : shift) x = -x;
    return {std::move(inv), std::move(shift)};
}

/// t o f o t^-1
template <ExactScalar T>
Affine<T> conjugate_by(const Affine<T>& f, const Affine<T>& t) {
    return compose(compose(t, f), inverse(t));
}

class AffineMap {
public:
    AffineMap(Affine<Rational> f);  // NOLINT(google-explicit-constructor)
    AffineMap(Affine<Gaussian> f);  // NOLINT(google-explicit-constructor)

    static AffineMap make_real(Matrix<Rational> a, Vector<Rational> b) { return Affine<Rational>{std::move(a), std::move(b)}; }
    static AffineMap make_complex(Matrix<Gaussian> a, Vector<Gaussian> b) { return Affine<Gaussian>{std::move(a), std::move(b)}; }

    Field field() const { return data_.index() == 0 ? Field::Real : Field::Complex; }
    std::size_t dim() const;

    const Affine<Rational>& as_real() const { return std::get<0>(data_); }
    const Affine<Gaussian>& as_complex() const { return std::get<1>(data_); }

    template <class F>
    decltype(auto) visit(F&& fn) const {
        return std::visit(std::forward<F>(fn), data_);
    }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;

private:
    std::variant<Affine<Rational>, Affine<Gaussian>> data_;
};

template <ExactScalar T>
SolutionSet<T> fixed_point_set(const Affine<T>& f) {
    return solve_affine_system(f.a, f.b);
}

enum class FixedPointKind { Empty, Unique, Coset, All };

std::string to_string(FixedPointKind k);

FixedPointKind fixed_point_kind(const AffineMap& f);

struct HasFixedPoint {
    BlockSignature blocks;
    friend bool operator==(const HasFixedPoint&, const HasFixedPoint&) = default;
};

struct NoFixedPoint {
    bool singular = false;
    friend bool operator==(const NoFixedPoint&, const NoFixedPoint&) = default;
};

struct ConjugacySignature {
    Field field = Field::Real;
    std::size_t dim = 1;
    std::variant<HasFixedPoint, NoFixedPoint> status;

    bool has_fixed_point() const { return status.index() == 0; }
    const BlockSignature& blocks() const { return std::get<HasFixedPoint>(status).blocks; }
    bool singular() const { return std::get<NoFixedPoint>(status).singular; }

    friend bool operator==(const ConjugacySignature&, const ConjugacySignature&) = default;
};

/// Throws UnsupportedDimension beyond dimension 2.
ConjugacySignature signature(const AffineMap& f);

struct Warning {
    std::string code;
    std::string message;
    friend bool operator==(const Warning&, const Warning&) = default;
};

inline constexpr const char* kOrientationMismatch = "ORIENTATION_MISMATCH";
inline constexpr const char* kSynthUnsupported = "SYNTH_UNSUPPORTED";

struct Verdict {
    bool conjugate = false;
    std::string basis;
    std::optional<std::string> distinguishing_invariant;
    std::vector<Warning> warnings;
};

/// Citation tag of the criterion deciding maps of this field and dimension.
std::string basis_tag(Field field, std::size_t dim);

/// Throws FieldOrDimensionMismatch when the maps live in different spaces.
Verdict conjugate(const AffineMap& f, const AffineMap& g);

/// Verdict from precomputed signatures. `det_signs` carries sign(det A), sign(det C)
/// and is only consulted for the orientation warning.
Verdict conjugate(const ConjugacySignature& f, const ConjugacySignature& g, std::pair<int, int> det_signs);

/// A fixed map with the given signature.
AffineMap canonical_representative(const ConjugacySignature& s);

enum class FixedCount { Zero, One, Infinite };
enum class Period2 { None, Some };

std::string to_string(FixedCount c);
std::string to_string(Period2 p);

/// Topological invariants computed directly from the map, independent of the signature.
struct WitnessReport {
    FixedCount fixed_count = FixedCount::Zero;
    bool bijective = false;
    std::optional<int> orientation;
    Period2 period2 = Period2::None;
    bool contracting = false;
    friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

WitnessReport invariant_witnesses(const AffineMap& f);

}  // namespace conjclass
