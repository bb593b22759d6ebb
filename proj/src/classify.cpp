#include "conjclass/classify.hpp"

#include <algorithm>

namespace conjclass {

namespace {

template <ExactScalar T>
void check_shape(const Affine<T>& f) {
    if (!f.a.is_square() || f.a.rows() == 0 || f.a.rows() != f.b.size())
        throw Error(ErrorCode::DimensionMismatch, "affine map needs a square A and a matching b");
}

template <ExactScalar T>
FixedPointKind kind_of(const SolutionSet<T>& s) {
    switch (s.index()) {
        case 0: return FixedPointKind::Empty;
        case 1: return FixedPointKind::Unique;
        case 2: return FixedPointKind::Coset;
        default: return FixedPointKind::All;
    }
}

void check_supported(const AffineMap& f) {
    if (f.dim() > 2) throw Error(ErrorCode::UnsupportedDimension, "only dimensions 1 and 2 are classified");
}

int det_sign(const AffineMap& f) {
    if (f.field() == Field::Real) return determinant(f.as_real().a).sign();
    return determinant(f.as_complex().a).is_zero() ? 0 : 1;
}

}  // namespace

AffineMap::AffineMap(Affine<Rational> f) : data_(std::move(f)) { check_shape(std::get<0>(data_)); }
AffineMap::AffineMap(Affine<Gaussian> f) : data_(std::move(f)) { check_shape(std::get<1>(data_)); }

std::size_t AffineMap::dim() const {
    return visit([](const auto& f) { return f.dim(); });
}

std::string to_string(FixedPointKind k) {
    switch (k) {
        case FixedPointKind::Empty: return "empty";
        case FixedPointKind::Unique: return "unique";
        case FixedPointKind::Coset: return "coset";
        case FixedPointKind::All: return "all";
    }
    return "?";
}

FixedPointKind fixed_point_kind(const AffineMap& f) {
    return f.visit([](const auto& m) { return kind_of(fixed_point_set(m)); });
}

ConjugacySignature signature(const AffineMap& f) {
    check_supported(f);
    ConjugacySignature s;
    s.field = f.field();
    s.dim = f.dim();
    f.visit([&](const auto& m) {
        if (is_empty(fixed_point_set(m)))
            s.status = NoFixedPoint{determinant(m.a).is_zero()};
        else
            s.status = HasFixedPoint{block_decompose(m.a)};
    });
    return s;
}

std::string basis_tag(Field field, std::size_t dim) {
    if (field == Field::Real) return dim == 1 ? "Prop3.2" : "Thm3.5";
    return dim == 1 ? "Thm4.2" : "Thm4.5";
}

namespace {

std::optional<std::string> first_difference(const BlockSignature& a, const BlockSignature& b) {
    if (a.rank_plus != b.rank_plus) return "rank of the contracting part";
    if (a.det_sign_plus != b.det_sign_plus) return "determinant sign of the contracting part";
    if (a.rank_minus != b.rank_minus) return "rank of the expanding part";
    if (a.det_sign_minus != b.det_sign_minus) return "determinant sign of the expanding part";
    if (a.nilpotent_blocks != b.nilpotent_blocks) return "nilpotent block structure";
    if (!star_equal(a.unit_blocks, b.unit_blocks)) return "unit-modulus block structure";
    return std::nullopt;
}

}  // namespace

Verdict conjugate(const ConjugacySignature& f, const ConjugacySignature& g, std::pair<int, int> det_signs) {
    if (f.field != g.field || f.dim != g.dim)
        throw Error(ErrorCode::FieldOrDimensionMismatch, "maps act on different spaces");
    Verdict v;
    v.basis = basis_tag(f.field, f.dim);
    if (f.has_fixed_point() != g.has_fixed_point()) {
        v.distinguishing_invariant = "fixed-point count";
        return v;
    }
    if (f.has_fixed_point()) {
        v.distinguishing_invariant = first_difference(f.blocks(), g.blocks());
        v.conjugate = !v.distinguishing_invariant;
        return v;
    }
    if (f.dim == 1 || f.singular() == g.singular()) {
        v.conjugate = true;
    } else {
        v.distinguishing_invariant = "singularity of the linear part";
        return v;
    }
    if (f.field == Field::Real && f.dim == 2 && !f.singular() && det_signs.first != det_signs.second) {
        v.warnings.push_back({kOrientationMismatch,
                              "fixed-point-free maps with determinants of opposite sign are reported conjugate, "
                              "but an orientation-reversing map cannot be conjugate to an orientation-preserving one"});
    }
    return v;
}

Verdict conjugate(const AffineMap& f, const AffineMap& g) {
    if (f.field() != g.field() || f.dim() != g.dim())
        throw Error(ErrorCode::FieldOrDimensionMismatch, "maps act on different spaces");
    return conjugate(signature(f), signature(g), {det_sign(f), det_sign(g)});
}

namespace {

template <ExactScalar T>
struct BlockBuilder {
    std::vector<std::vector<std::vector<T>>> blocks;

    void scalar(const T& x) { blocks.push_back({{x}}); }
    void two(const T& a, const T& b, const T& c, const T& d) { blocks.push_back({{a, b}, {c, d}}); }

    Matrix<T> assemble() const {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.size();
        Matrix<T> m(n, n);
        std::size_t off = 0;
        for (const auto& b : blocks) {
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j) m(off + i, off + j) = b[i][j];
            off += b.size();
        }
        return m;
    }
};

template <ExactScalar T>
void add_hyperbolic(BlockBuilder<T>& bb, int rank, std::optional<int> sign, const Rational& value) {
    for (int i = 0; i < rank; ++i) {
        const bool negate = i == 0 && sign.value_or(1) < 0;
        bb.scalar(T(negate ? -value : value));
    }
}

template <ExactScalar T>
void add_nilpotent(BlockBuilder<T>& bb, const std::vector<int>& sizes) {
    for (int s : sizes) {
        if (s == 1)
            bb.scalar(T::zero());
        else
            bb.two(T::zero(), T::one(), T::zero(), T::zero());
    }
}

Matrix<Rational> real_linear_part(const BlockSignature& s) {
    BlockBuilder<Rational> bb;
    add_hyperbolic(bb, s.rank_plus, s.det_sign_plus, Rational(1, 2));
    add_hyperbolic(bb, s.rank_minus, s.det_sign_minus, Rational(2));
    add_nilpotent(bb, s.nilpotent_blocks);
    for (const auto& u : s.unit_blocks) {
        using K = UnitBlock::Kind;
        switch (u.kind) {
            case K::One: bb.scalar(1); break;
            case K::MinusOne: bb.scalar(-1); break;
            case K::Jordan2One: bb.two(1, 1, 0, 1); break;
            case K::Jordan2MinusOne: bb.two(-1, 1, 0, -1); break;
            case K::Rotation: {
                // trace 2c, det 1
                const Rational c = u.re.rational_part();
                bb.two(c, -(Rational(1) - c * c), 1, c);
                break;
            }
            case K::Complex: throw Error(ErrorCode::UnsupportedClass, "complex unit block in a real signature");
        }
    }
    return bb.assemble();
}

Matrix<Gaussian> complex_linear_part(const BlockSignature& s) {
    BlockBuilder<Gaussian> bb;
    add_hyperbolic(bb, s.rank_plus, std::nullopt, Rational(1, 2));
    add_hyperbolic(bb, s.rank_minus, std::nullopt, Rational(2));
    add_nilpotent(bb, s.nilpotent_blocks);
    const bool all_rational = std::all_of(s.unit_blocks.begin(), s.unit_blocks.end(),
                                          [](const UnitBlock& u) { return u.lambda.has_value(); });
    if (!all_rational) {
        if (!s.unit_realizer) throw Error(ErrorCode::UnsupportedClass, "unit eigenvalues outside Q(i) without a realizer");
        const auto& [t, d] = *s.unit_realizer;
        bb.two(Gaussian(0), -d, Gaussian(1), t);
        return bb.assemble();
    }
    for (const auto& u : s.unit_blocks) {
        if (u.size == 1)
            bb.scalar(*u.lambda);
        else
            bb.two(*u.lambda, Gaussian(1), Gaussian(0), *u.lambda);
    }
    return bb.assemble();
}

template <ExactScalar T>
Affine<T> fixed_point_free_form(std::size_t dim, bool singular) {
    Vector<T> b(dim, T::zero());
    Matrix<T> a = Matrix<T>::identity(dim);
    if (dim == 1) {
        b[0] = T::one();
    } else if (singular) {
        a(1, 1) = T::zero();
        b[0] = T::one();
    } else {
        b[1] = T::one();
    }
    return {a, b};
}

}  // namespace

AffineMap canonical_representative(const ConjugacySignature& s) {
    if (s.dim == 0 || s.dim > 2) throw Error(ErrorCode::UnsupportedDimension, "only dimensions 1 and 2 are classified");
    if (!s.has_fixed_point()) {
        if (s.field == Field::Real) return fixed_point_free_form<Rational>(s.dim, s.singular());
        return fixed_point_free_form<Gaussian>(s.dim, s.singular());
    }
    if (s.field == Field::Real) return Affine<Rational>{real_linear_part(s.blocks()), Vector<Rational>(s.dim)};
    return Affine<Gaussian>{complex_linear_part(s.blocks()), Vector<Gaussian>(s.dim)};
}

std::string to_string(FixedCount c) {
    switch (c) {
        case FixedCount::Zero: return "zero";
        case FixedCount::One: return "one";
        case FixedCount::Infinite: return "infinite";
    }
    return "?";
}

std::string to_string(Period2 p) { return p == Period2::None ? "none" : "some"; }

namespace {

template <ExactScalar T>
bool all_moduli_below_one(const Matrix<T>& a) {
    const auto classes = modulus_classes(char_pair(a));
    return std::all_of(classes.begin(), classes.end(),
                       [](ModulusClass c) { return c == ModulusClass::Zero || c == ModulusClass::InOpenUnit; });
}

template <ExactScalar T>
WitnessReport witnesses(const Affine<T>& f, Field field) {
    WitnessReport w;
    const std::size_t n = f.dim();
    const auto fixed = fixed_point_set(f);
    const auto fixed_dim = solution_dimension(fixed, n);
    w.fixed_count = !fixed_dim ? FixedCount::Zero : (*fixed_dim == 0 ? FixedCount::One : FixedCount::Infinite);

    const T det = determinant(f.a);
    w.bijective = !det.is_zero();
    if constexpr (std::is_same_v<T, Rational>) {
        if (field == Field::Real && w.bijective) w.orientation = det.sign();
    }

    // f o f fixes a strictly larger affine set exactly when some point has period two
    const auto twice = fixed_point_set(compose(f, f));
    const auto twice_dim = solution_dimension(twice, n);
    const auto order = [](const std::optional<std::size_t>& d) { return d ? static_cast<long>(*d) : -1L; };
    w.period2 = order(twice_dim) > order(fixed_dim) ? Period2::Some : Period2::None;

    w.contracting = all_moduli_below_one(f.a);
    return w;
}

}  // namespace

WitnessReport invariant_witnesses(const AffineMap& f) {
    check_supported(f);
    return f.visit([&](const auto& m) { return witnesses(m, f.field()); });
}

}  // namespace conjclass
