#include "conjclass/spectral.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace conjclass {

std::string to_string(ModulusClass c) {
    switch (c) {
        case ModulusClass::Zero: return "Zero";
        case ModulusClass::InOpenUnit: return "InOpenUnit";
        case ModulusClass::UnitModulus: return "UnitModulus";
        case ModulusClass::OutsideUnit: return "OutsideUnit";
    }
    return "?";
}

std::string to_string(UnitBlock::Kind k) {
    switch (k) {
        case UnitBlock::Kind::One: return "One";
        case UnitBlock::Kind::MinusOne: return "MinusOne";
        case UnitBlock::Kind::Jordan2One: return "Jordan2One";
        case UnitBlock::Kind::Jordan2MinusOne: return "Jordan2MinusOne";
        case UnitBlock::Kind::Rotation: return "Rotation";
        case UnitBlock::Kind::Complex: return "Complex";
    }
    return "?";
}

UnitBlock UnitBlock::real(Kind k) {
    UnitBlock b;
    b.kind = k;
    b.size = (k == Kind::Jordan2One || k == Kind::Jordan2MinusOne) ? 2 : 1;
    return b;
}

UnitBlock UnitBlock::rotation(const Rational& cos) {
    UnitBlock b;
    b.kind = Kind::Rotation;
    b.size = 2;
    b.re = QuadraticNumber(cos);
    return b;
}

UnitBlock UnitBlock::complex(int size, QuadraticNumber re, std::optional<Gaussian> lambda) {
    UnitBlock b;
    b.kind = Kind::Complex;
    b.size = size;
    b.re = std::move(re);
    if (lambda && lambda->im().sign() < 0) lambda = lambda->conj();
    b.lambda = std::move(lambda);
    return b;
}

std::strong_ordering operator<=>(const UnitBlock& a, const UnitBlock& b) {
    if (auto c = a.size <=> b.size; c != 0) return c;
    if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) return c;
    return a.re <=> b.re;
}

int BlockSignature::dimension() const {
    int n = rank_plus + rank_minus;
    for (int s : nilpotent_blocks) n += s;
    for (const auto& u : unit_blocks) n += u.size;
    return n;
}

namespace {

int rank_of(ModulusClass c) {
    switch (c) {
        case ModulusClass::OutsideUnit: return 3;
        case ModulusClass::UnitModulus: return 2;
        case ModulusClass::InOpenUnit: return 1;
        case ModulusClass::Zero: return 0;
    }
    return 0;
}

void sort_by_modulus(std::vector<ModulusClass>& v) {
    std::sort(v.begin(), v.end(), [](ModulusClass a, ModulusClass b) { return rank_of(a) > rank_of(b); });
}

ModulusClass classify_norm(const Rational& norm) {
    if (norm.is_zero()) return ModulusClass::Zero;
    const auto c = norm <=> Rational(1);
    if (c < 0) return ModulusClass::InOpenUnit;
    if (c > 0) return ModulusClass::OutsideUnit;
    return ModulusClass::UnitModulus;
}

// A real eigenvalue known only through its position relative to -1, 0, 1.
struct RealRoot {
    ModulusClass cls;
    int sign;
};

RealRoot classify_real(const Rational& x) {
    return {classify_norm(x * x), x.sign()};
}

// Distinct real roots r0 < r1 of x^2 - t x + d (disc > 0), located by the
// sign of the polynomial at the probe points -1, 0, 1.
std::vector<RealRoot> locate_distinct_roots(const Rational& t, const Rational& d) {
    const Rational vertex = t / 2;
    auto value = [&](const Rational& c) { return c * c - t * c + d; };
    // number of roots strictly below c, and whether c is a root
    auto probe = [&](const Rational& c) {
        const int s = value(c).sign();
        int below;
        if (s < 0)
            below = 1;
        else if (s == 0)
            below = (c > vertex) ? 1 : 0;
        else
            below = (c < vertex) ? 0 : 2;
        return std::pair<int, bool>{below, s == 0};
    };
    const auto [below_m1, root_m1] = probe(Rational(-1));
    const auto [below_0, root_0] = probe(Rational(0));
    const auto [below_p1, root_p1] = probe(Rational(1));

    std::vector<RealRoot> out;
    for (int k = 0; k < 2; ++k) {
        auto less = [&](int below) { return below > k; };
        auto equal = [&](int below, bool is_root) { return is_root && below == k; };
        RealRoot r{};
        if (equal(below_0, root_0)) {
            r = {ModulusClass::Zero, 0};
        } else {
            r.sign = less(below_0) ? -1 : 1;
            if (equal(below_m1, root_m1) || equal(below_p1, root_p1))
                r.cls = ModulusClass::UnitModulus;
            else if (!less(below_m1) && less(below_p1))
                r.cls = ModulusClass::InOpenUnit;
            else
                r.cls = ModulusClass::OutsideUnit;
        }
        out.push_back(r);
    }
    return out;
}

// Squared-modulus analysis for complex 2x2 with eigenvalues outside Q(i).
std::vector<ModulusClass> irrational_complex_classes(const EigenPair<Gaussian>& p) {
    const Rational n = p.disc.norm();  // |disc|^2, > 0
    const Rational t2 = p.trace.norm();
    const Rational prod = p.det.norm();  // r1 * r2
    // q(1) = 1 - s + prod, s = (t2 + sqrt(n)) / 2
    const int q1 = surd_sign(Rational(1) + prod - t2 / 2, Rational(-1, 2), n);
    if (q1 < 0) return {ModulusClass::OutsideUnit, ModulusClass::InOpenUnit};
    if (q1 == 0) {
        std::vector<ModulusClass> v{ModulusClass::UnitModulus, classify_norm(prod)};
        sort_by_modulus(v);
        return v;
    }
    // both on the same side of 1: compare the vertex s/2 with 1
    const int s_minus_2 = surd_sign(t2 / 2 - 2, Rational(1, 2), n);
    if (s_minus_2 < 0) return {ModulusClass::InOpenUnit, ModulusClass::InOpenUnit};
    return {ModulusClass::OutsideUnit, ModulusClass::OutsideUnit};
}

}  // namespace

std::vector<ModulusClass> modulus_classes(const EigenPair<Rational>& p) {
    if (p.n == 1) return {classify_real(p.trace).cls};
    std::vector<ModulusClass> v;
    const int ds = p.disc.sign();
    if (ds < 0) {
        const ModulusClass c = classify_norm(p.det);
        v = {c, c};
    } else if (ds == 0) {
        const ModulusClass c = classify_real(p.trace / 2).cls;
        v = {c, c};
    } else {
        for (const auto& r : locate_distinct_roots(p.trace, p.det)) v.push_back(r.cls);
    }
    sort_by_modulus(v);
    return v;
}

std::optional<std::vector<Gaussian>> gaussian_eigenvalues(const EigenPair<Gaussian>& p) {
    if (p.n == 1) return std::vector<Gaussian>{p.trace};
    auto s = exact_sqrt(p.disc);
    if (!s) return std::nullopt;
    const Gaussian half(Rational(1, 2));
    return std::vector<Gaussian>{(p.trace + *s) * half, (p.trace - *s) * half};
}

std::vector<ModulusClass> modulus_classes(const EigenPair<Gaussian>& p) {
    if (auto ev = gaussian_eigenvalues(p)) {
        std::vector<ModulusClass> v;
        for (const auto& l : *ev) v.push_back(classify_norm(l.norm()));
        sort_by_modulus(v);
        return v;
    }
    return irrational_complex_classes(p);
}

namespace {

void finish(BlockSignature& s) {
    std::sort(s.nilpotent_blocks.begin(), s.nilpotent_blocks.end());
    std::sort(s.unit_blocks.begin(), s.unit_blocks.end());
}

void add_real_root(BlockSignature& s, const RealRoot& r) {
    switch (r.cls) {
        case ModulusClass::Zero: s.nilpotent_blocks.push_back(1); break;
        case ModulusClass::InOpenUnit:
            ++s.rank_plus;
            s.det_sign_plus = s.det_sign_plus.value_or(1) * r.sign;
            break;
        case ModulusClass::OutsideUnit:
            ++s.rank_minus;
            s.det_sign_minus = s.det_sign_minus.value_or(1) * r.sign;
            break;
        case ModulusClass::UnitModulus:
            s.unit_blocks.push_back(UnitBlock::real(r.sign > 0 ? UnitBlock::Kind::One : UnitBlock::Kind::MinusOne));
            break;
    }
}

bool is_scalar(const Matrix<Rational>& a) { return a(0, 1).is_zero() && a(1, 0).is_zero() && a(0, 0) == a(1, 1); }
bool is_scalar(const Matrix<Gaussian>& a) { return a(0, 1).is_zero() && a(1, 0).is_zero() && a(0, 0) == a(1, 1); }

}  // namespace

BlockSignature block_decompose(const Matrix<Rational>& a) {
    const EigenPair<Rational> p = char_pair(a);
    BlockSignature s;
    if (p.n == 1) {
        add_real_root(s, classify_real(p.trace));
        finish(s);
        return s;
    }
    const int ds = p.disc.sign();
    if (ds < 0) {
        // complex pair, |lambda|^2 = det > 0
        switch (classify_norm(p.det)) {
            case ModulusClass::InOpenUnit:
                s.rank_plus = 2;
                s.det_sign_plus = 1;
                break;
            case ModulusClass::OutsideUnit:
                s.rank_minus = 2;
                s.det_sign_minus = 1;
                break;
            default: s.unit_blocks.push_back(UnitBlock::rotation(p.trace / 2)); break;
        }
    } else if (ds == 0) {
        const Rational r = p.trace / 2;
        const bool scalar = is_scalar(a);
        const RealRoot root = classify_real(r);
        switch (root.cls) {
            case ModulusClass::Zero:
                s.nilpotent_blocks = scalar ? std::vector<int>{1, 1} : std::vector<int>{2};
                break;
            case ModulusClass::InOpenUnit:
                s.rank_plus = 2;
                s.det_sign_plus = 1;
                break;
            case ModulusClass::OutsideUnit:
                s.rank_minus = 2;
                s.det_sign_minus = 1;
                break;
            case ModulusClass::UnitModulus: {
                const bool plus = root.sign > 0;
                if (scalar) {
                    const auto k = plus ? UnitBlock::Kind::One : UnitBlock::Kind::MinusOne;
                    s.unit_blocks = {UnitBlock::real(k), UnitBlock::real(k)};
                } else {
                    s.unit_blocks = {
                        UnitBlock::real(plus ? UnitBlock::Kind::Jordan2One : UnitBlock::Kind::Jordan2MinusOne)};
                }
                break;
            }
        }
    } else {
        for (const auto& r : locate_distinct_roots(p.trace, p.det)) add_real_root(s, r);
    }
    finish(s);
    return s;
}

namespace {

void add_complex_eigenvalue(BlockSignature& s, const Gaussian& l, int size) {
    switch (classify_norm(l.norm())) {
        case ModulusClass::Zero: s.nilpotent_blocks.push_back(size); break;
        case ModulusClass::InOpenUnit: s.rank_plus += size; break;
        case ModulusClass::OutsideUnit: s.rank_minus += size; break;
        case ModulusClass::UnitModulus: s.unit_blocks.push_back(UnitBlock::complex(size, QuadraticNumber(l.re()), l)); break;
    }
}

Rational real_checked(const Gaussian& z, const char* what) {
    if (!z.is_real()) throw std::logic_error(std::string("expected a real value for ") + what);
    return z.re();
}

}  // namespace

BlockSignature block_decompose(const Matrix<Gaussian>& a) {
    const EigenPair<Gaussian> p = char_pair(a);
    BlockSignature s;
    if (p.n == 1) {
        add_complex_eigenvalue(s, p.trace, 1);
        finish(s);
        return s;
    }
    if (auto ev = gaussian_eigenvalues(p)) {
        if (p.disc.is_zero() && !is_scalar(a)) {
            add_complex_eigenvalue(s, (*ev)[0], 2);
        } else {
            add_complex_eigenvalue(s, (*ev)[0], 1);
            add_complex_eigenvalue(s, (*ev)[1], 1);
        }
        finish(s);
        return s;
    }
    // Distinct eigenvalues outside Q(i); they are both unit or neither.
    const auto classes = irrational_complex_classes(p);
    for (ModulusClass c : classes) {
        if (c == ModulusClass::InOpenUnit) ++s.rank_plus;
        if (c == ModulusClass::OutsideUnit) ++s.rank_minus;
    }
    const auto units = std::count(classes.begin(), classes.end(), ModulusClass::UnitModulus);
    if (units == 1) throw std::logic_error("single unit-modulus eigenvalue outside Q(i)");
    if (units == 2) {
        // Re(l1), Re(l2) are the roots of y^2 - e1 y + e2 with
        // e1 = (t + t/d)/2, e2 = (d + 1/d + t^2/d - 2)/4 (both real here).
        const Gaussian& t = p.trace;
        const Gaussian& d = p.det;
        const Rational e1 = real_checked((t + t / d) * Gaussian(Rational(1, 2)), "sum of real parts");
        const Rational e2 =
            real_checked((d + d.inverse() + t * t / d - Gaussian(2)) * Gaussian(Rational(1, 4)), "product of real parts");
        const QuadraticNumber root = QuadraticNumber::sqrt_of(e1 * e1 - 4 * e2) * QuadraticNumber(Rational(1, 2));
        const QuadraticNumber mid(e1 / 2);
        s.unit_blocks = {UnitBlock::complex(1, mid + root), UnitBlock::complex(1, mid - root)};
        const bool keep = t.im().sign() > 0 || (t.im().is_zero() && d.im().sign() >= 0);
        s.unit_realizer = keep ? std::pair{t, d} : std::pair{t.conj(), d.conj()};
    }
    finish(s);
    return s;
}

bool star_equal(std::vector<UnitBlock> u, std::vector<UnitBlock> v) {
    std::sort(u.begin(), u.end());
    std::sort(v.begin(), v.end());
    return u == v;
}

bool star_equal(const std::vector<JordanBlock>& a, const std::vector<JordanBlock>& b) {
    // Key each block by (size, Re lambda, |Im lambda|).
    using Key = std::tuple<int, Rational, Rational>;
    auto keys = [](const std::vector<JordanBlock>& blocks) {
        std::vector<Key> k;
        for (const auto& blk : blocks) k.emplace_back(blk.size, blk.lambda.re(), blk.lambda.im().abs());
        std::sort(k.begin(), k.end());
        return k;
    };
    return keys(a) == keys(b);
}

namespace {

// Eigenvector of a 2x2 matrix for the eigenvalue lambda.
template <ExactScalar T>
Vector<T> eigenvector(const Matrix<T>& a, const T& lambda) {
    if (!a(0, 1).is_zero()) return {a(0, 1), lambda - a(0, 0)};
    if (!a(1, 0).is_zero()) return {lambda - a(1, 1), a(1, 0)};
    if (a(0, 0) == lambda) return {T::one(), T::zero()};
    return {T::zero(), T::one()};
}

template <ExactScalar T>
Matrix<T> from_columns(const Vector<T>& c0, const Vector<T>& c1) {
    return Matrix<T>{{c0[0], c1[0]}, {c0[1], c1[1]}};
}

// Columns v1 = (A - rE) v2, v2 for a non-scalar matrix with a double eigenvalue r.
template <ExactScalar T>
Matrix<T> jordan_chain(const Matrix<T>& a, const T& r) {
    const Matrix<T> n = a - r * Matrix<T>::identity(2);
    Vector<T> v2 = {T::one(), T::zero()};
    Vector<T> v1 = n * v2;
    if (is_zero_vector(v1)) {
        v2 = {T::zero(), T::one()};
        v1 = n * v2;
    }
    return from_columns(v1, v2);
}

template <ExactScalar T>
CanonicalFormResult<T> with_basis(const Matrix<T>& a, const Matrix<T>& p) {
    const Matrix<T> p_inv = inverse(p);
    return {p_inv * a * p, p_inv, p};
}

template <ExactScalar T>
CanonicalFormResult<T> unchanged(const Matrix<T>& a) {
    return {a, Matrix<T>::identity(a.rows()), Matrix<T>::identity(a.rows())};
}

}  // namespace

CanonicalFormResult<QuadraticNumber> real_canonical_form(const Matrix<Rational>& a_rational) {
    const Matrix<QuadraticNumber> a = to_quadratic(a_rational);
    const EigenPair<Rational> p = char_pair(a_rational);
    if (p.n == 1) return unchanged(a);
    const int ds = p.disc.sign();
    if (ds < 0) {
        const QuadraticNumber alpha(p.trace / 2);
        const QuadraticNumber beta = QuadraticNumber::sqrt_of(-p.disc / 4);
        const Matrix<QuadraticNumber> target{{alpha, -beta}, {beta, alpha}};
        if (a == target) return unchanged(a);
        // eigenvector u + i w for alpha + i beta; basis (w, u)
        const Vector<QuadraticNumber> u{a(0, 1), alpha - a(0, 0)};
        const Vector<QuadraticNumber> w{QuadraticNumber(), beta};
        return with_basis(a, from_columns(w, u));
    }
    if (ds == 0) {
        if (is_scalar(a_rational)) return unchanged(a);
        return with_basis(a, jordan_chain(a, QuadraticNumber(p.trace / 2)));
    }
    const QuadraticNumber root = QuadraticNumber::sqrt_of(p.disc) * QuadraticNumber(Rational(1, 2));
    const QuadraticNumber mid(p.trace / 2);
    const QuadraticNumber hi = mid + root;
    const QuadraticNumber lo = mid - root;
    const Matrix<QuadraticNumber> target{{hi, QuadraticNumber()}, {QuadraticNumber(), lo}};
    if (a == target) return unchanged(a);
    return with_basis(a, from_columns(eigenvector(a, hi), eigenvector(a, lo)));
}

JordanFormResult jordan_form(const Matrix<Gaussian>& a) {
    JordanFormResult r;
    r.eigen = char_pair(a);
    if (r.eigen.n == 1) {
        r.blocks = {{1, a(0, 0)}};
        r.form = unchanged(a);
        return r;
    }
    auto ev = gaussian_eigenvalues(r.eigen);
    if (!ev) {
        r.blocks = {{1, std::nullopt}, {1, std::nullopt}};
        return r;
    }
    const Gaussian& l1 = (*ev)[0];
    const Gaussian& l2 = (*ev)[1];
    if (r.eigen.disc.is_zero()) {
        if (is_scalar(a)) {
            r.blocks = {{1, l1}, {1, l1}};
            r.form = unchanged(a);
        } else {
            r.blocks = {{2, l1}};
            const Matrix<Gaussian> target{{l1, Gaussian(1)}, {Gaussian(), l1}};
            r.form = (a == target) ? unchanged(a) : with_basis(a, jordan_chain(a, l1));
        }
        return r;
    }
    r.blocks = {{1, l1}, {1, l2}};
    const Matrix<Gaussian> target{{l1, Gaussian()}, {Gaussian(), l2}};
    r.form = (a == target) ? unchanged(a) : with_basis(a, from_columns(eigenvector(a, l1), eigenvector(a, l2)));
    return r;
}

namespace {

bool in_part(ModulusClass c, SpectralPart part) {
    switch (part) {
        case SpectralPart::Plus: return c == ModulusClass::InOpenUnit;
        case SpectralPart::Minus: return c == ModulusClass::OutsideUnit;
        case SpectralPart::Nilpotent: return c == ModulusClass::Zero;
        case SpectralPart::Unit: return c == ModulusClass::UnitModulus;
    }
    return false;
}

}  // namespace

std::size_t part_size(const Matrix<Gaussian>& a, SpectralPart part) {
    std::size_t n = 0;
    for (ModulusClass c : modulus_classes(char_pair(a)))
        if (in_part(c, part)) ++n;
    return n;
}

std::size_t realified_part_size(const Matrix<Gaussian>& a, SpectralPart part) {
    auto ev = gaussian_eigenvalues(char_pair(a));
    if (!ev) throw Error(ErrorCode::UnsupportedClass, "eigenvalues outside Q(i)");
    std::vector<Gaussian> distinct;
    for (const auto& l : *ev)
        if (in_part(classify_norm(l.norm()), part) && std::find(distinct.begin(), distinct.end(), l) == distinct.end())
            distinct.push_back(l);
    const Matrix<Rational> m = realify(a);
    const std::size_t dim = m.rows();
    if (distinct.empty()) return 0;
    const Matrix<Rational> e = Matrix<Rational>::identity(dim);
    Matrix<Rational> q = e;
    for (const auto& l : distinct) {
        // (x - l)(x - conj l) = x^2 - 2 Re(l) x + |l|^2, raised to the block size bound
        const Matrix<Rational> factor = m * m - (2 * l.re()) * m + l.norm() * e;
        q = q * power(factor, static_cast<unsigned>(a.rows()));
    }
    return dim - rank(q);
}

}  // namespace conjclass
