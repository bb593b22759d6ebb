#include "conjclass/homeo.hpp"

#include <boost/multiprecision/float128.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace conjclass {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t matrix_size(const ExactMatrix& m) {
    return std::visit([](const auto& x) { return x.rows(); }, m);
}

Field field_of(const ExactMatrix& m) { return m.index() == 0 ? Field::Real : Field::Complex; }
Field field_of(const ExactVector& v) { return v.index() == 0 ? Field::Real : Field::Complex; }

Matrix<Rational> realified(const ExactMatrix& m) {
    if (const auto* r = std::get_if<Matrix<Rational>>(&m)) return *r;
    return realify(std::get<Matrix<Gaussian>>(m));
}

Vector<Rational> realified(const ExactVector& v) {
    if (const auto* r = std::get_if<Vector<Rational>>(&v)) return *r;
    return realify(std::get<Vector<Gaussian>>(v));
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::DimensionMismatch, what); }

}  // namespace

void validate(const Homeomorphism& h) {
    const std::size_t m = h.ambient_dim();
    for (const auto& link : h.chain) {
        std::visit(overloaded{
                       [&](const Linear& p) {
                           if (field_of(p.m) != h.field || matrix_size(p.m) != h.dim)
                               invalid("Linear does not fit the ambient space");
                           const bool singular =
                               std::visit([](const auto& x) { return !x.is_square() || determinant(x).is_zero(); }, p.m);
                           if (singular) throw Error(ErrorCode::Singular, "Linear primitive must be invertible");
                       },
                       [&](const Translate& p) {
                           const std::size_t n = std::visit([](const auto& v) { return v.size(); }, p.v);
                           if (field_of(p.v) != h.field || n != h.dim) invalid("Translate does not fit the ambient space");
                       },
                       [&](const SignedPower1D& p) {
                           if (m != 1) invalid("SignedPower1D acts on the line");
                           if (p.l.value <= 0) throw Error(ErrorCode::Parse, "SignedPower1D needs l > 0");
                       },
                       [&](const ParabolicShear&) {
                           if (m != 2) invalid("ParabolicShear acts on the plane");
                       },
                       [&](const ExpFiberScale& p) {
                           if (m != 2) invalid("ExpFiberScale acts on the plane");
                           if (p.alpha.sign() <= 0 || p.alpha.is_one())
                               throw Error(ErrorCode::Parse, "ExpFiberScale needs alpha > 0, alpha != 1");
                       },
                       [&](const Conjugate&) {},
                   },
                   link.map);
    }
}

Homeomorphism identity_homeomorphism(Field field, std::size_t dim) { return Homeomorphism{field, dim, {}}; }

Homeomorphism invert(const Homeomorphism& h) {
    Homeomorphism r{h.field, h.dim, {}};
    for (auto it = h.chain.rbegin(); it != h.chain.rend(); ++it) r.chain.push_back({it->map, !it->inverse});
    return r;
}

Homeomorphism compose(const Homeomorphism& outer, const Homeomorphism& inner) {
    if (outer.field != inner.field || outer.dim != inner.dim) invalid("composing maps of different spaces");
    Homeomorphism r = outer;
    r.chain.insert(r.chain.end(), inner.chain.begin(), inner.chain.end());
    return r;
}

Homeomorphism single(Field field, std::size_t dim, PrimitiveMap p) {
    return Homeomorphism{field, dim, {ChainLink{std::move(p), false}}};
}

bool is_rational_only(const Homeomorphism& h) {
    for (const auto& link : h.chain) {
        if (std::holds_alternative<ExpFiberScale>(link.map)) return false;
        if (const auto* p = std::get_if<SignedPower1D>(&link.map); p && p->l.value != 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Evaluation. Consecutive affine links are fused exactly. A point is carried
// as an exact rational anchor plus a floating offset: affine steps move the
// anchor exactly and signed powers re-anchor at their output center, so the
// tiny offsets produced near a center are not absorbed by rounding.
//
// Offsets are long double, or binary128 when the chains contain an
// exponential fiber scale, whose magnitudes grow like alpha^x1. Powers are
// always taken in long double.

namespace {

using Quad = boost::multiprecision::float128;

template <class S>
S to_scalar(const Rational& r) {
    return r.num().convert_to<S>() / r.den().convert_to<S>();
}

template <class S>
long double to_ld(const S& x) {
    return static_cast<long double>(x);
}

// Realified points have at most four coordinates.
template <class S>
class FixedPoint {
public:
    FixedPoint() = default;
    explicit FixedPoint(std::size_t n) : n_(n) {}

    void push_back(const S& x) { v_[n_++] = x; }
    std::size_t size() const { return n_; }
    S& operator[](std::size_t i) { return v_[i]; }
    const S& operator[](std::size_t i) const { return v_[i]; }

private:
    std::array<S, 4> v_{};
    std::size_t n_ = 0;
};

template <class S>
FixedPoint<S> to_scalar(const Vector<Rational>& v) {
    FixedPoint<S> q;
    for (const auto& x : v) q.push_back(to_scalar<S>(x));
    return q;
}

// Interned exact anchors; id 0 is the origin.
template <class S>
class Anchors {
public:
    explicit Anchors(std::size_t m) { intern(Vector<Rational>(m)); }

    int intern(const Vector<Rational>& v) {
        for (std::size_t i = 0; i < exact_.size(); ++i)
            if (exact_[i] == v) return static_cast<int>(i);
        exact_.push_back(v);
        rounded_.push_back(to_scalar<S>(v));
        return static_cast<int>(exact_.size() - 1);
    }

    const Vector<Rational>& exact(int id) const { return exact_[id]; }
    const FixedPoint<S>& rounded(int id) const { return rounded_[id]; }

    /// anchor a - anchor b, rounded once
    const FixedPoint<S>& delta(int a, int b) {
        auto it = delta_.find({a, b});
        if (it == delta_.end()) it = delta_.emplace(std::pair{a, b}, to_scalar<S>(exact_[a] - exact_[b])).first;
        return it->second;
    }

private:
    std::vector<Vector<Rational>> exact_;
    std::vector<FixedPoint<S>> rounded_;
    std::map<std::pair<int, int>, FixedPoint<S>> delta_;
};

template <class S>
struct State {
    int anchor = 0;
    FixedPoint<S> off;
};

template <class S>
FixedPoint<S> collapse(const State<S>& s, const Anchors<S>& anchors) {
    FixedPoint<S> x = s.off;
    const auto& a = anchors.rounded(s.anchor);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += a[i];
    return x;
}

// Per-anchor memo: results depend only on the input anchor id.
template <class V>
struct Memo {
    std::vector<std::optional<V>> slots;
    template <class F>
    const V& get(int id, F&& compute) {
        if (slots.size() <= static_cast<std::size_t>(id)) slots.resize(id + 1);
        if (!slots[id]) slots[id] = compute();
        return *slots[id];
    }
};

template <class S>
struct AffineStep {
    Matrix<Rational> ea;
    Vector<Rational> eb;
    std::size_t m = 0;
    std::array<S, 16> a{};  // row-major
    Memo<int> next;

    AffineStep(Matrix<Rational> ma, Vector<Rational> vb) : ea(std::move(ma)), eb(std::move(vb)), m(eb.size()) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) a[i * m + j] = to_scalar<S>(ea(i, j));
    }

    void apply(State<S>& s, Anchors<S>& anchors) {
        s.anchor = next.get(s.anchor, [&] { return anchors.intern(ea * anchors.exact(s.anchor) + eb); });
        FixedPoint<S> y(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) y[i] += a[i * m + j] * s.off[j];
        s.off = y;
    }
};

template <class S>
struct ShearStep {
    bool inverse;
    void apply(State<S>& s, Anchors<S>& anchors) {
        FixedPoint<S> x = collapse(s, anchors);
        const S t = x[1] - S(0.5);
        const S h = t * t / 2;
        x[0] += inverse ? h : -h;
        s = {0, x};
    }
};

template <class S>
struct ExpStep {
    long double alpha;
    bool inverse;
    void apply(State<S>& s, Anchors<S>& anchors) {
        FixedPoint<S> x = collapse(s, anchors);
        const long double e = inverse ? to_ld(x[0]) : -to_ld(x[0]);
        x[1] *= S(std::pow(alpha, e));
        s = {0, x};
    }
};

template <class S>
struct PowerStep {
    Rational from, to;
    long double l;
    Memo<S> shift;  // anchor - from
    std::optional<int> to_id;

    PowerStep(Rational f, Rational t, long double exponent) : from(std::move(f)), to(std::move(t)), l(exponent) {}

    void apply(State<S>& s, Anchors<S>& anchors) {
        const S d = shift.get(s.anchor, [&] { return to_scalar<S>(anchors.exact(s.anchor)[0] - from); }) + s.off[0];
        const long double mag = std::pow(std::fabs(to_ld(d)), l);
        if (!to_id) to_id = anchors.intern(Vector<Rational>{to});
        s.anchor = *to_id;
        s.off[0] = d < 0 ? S(-mag) : S(mag);
    }
};

template <class S>
using Step = std::variant<AffineStep<S>, ShearStep<S>, ExpStep<S>, PowerStep<S>>;

template <class S>
class Compiled {
public:
    Compiled(const Homeomorphism& h, Anchors<S>& anchors) : m_(h.ambient_dim()), anchors_(&anchors) {
        validate(h);
        reset_pending();
        for (auto it = h.chain.rbegin(); it != h.chain.rend(); ++it) add(*it);
        flush();
    }

    Compiled(const AffineMap& f, Anchors<S>& anchors)
        : m_(f.field() == Field::Real ? f.dim() : 2 * f.dim()), anchors_(&anchors) {
        f.visit([&](const auto& g) {
            if constexpr (std::is_same_v<std::decay_t<decltype(g)>, Affine<Rational>>)
                steps_.emplace_back(AffineStep<S>(g.a, g.b));
            else
                steps_.emplace_back(AffineStep<S>(realify(g.a), realify(g.b)));
        });
    }

    State<S> operator()(State<S> s) {
        for (auto& step : steps_) std::visit([&](auto& st) { st.apply(s, *anchors_); }, step);
        return s;
    }

private:
    void reset_pending() {
        pa_ = Matrix<Rational>::identity(m_);
        pb_ = Vector<Rational>(m_);
        pending_ = false;
    }

    void flush() {
        if (pending_) steps_.emplace_back(AffineStep<S>(pa_, pb_));
        reset_pending();
    }

    void push_affine(const Matrix<Rational>& a, const Vector<Rational>& b) {
        pa_ = a * pa_;
        pb_ = a * pb_ + b;
        pending_ = true;
    }

    void add(const ChainLink& link) {
        const bool inv = link.inverse;
        std::visit(overloaded{
                       [&](const Linear& p) {
                           const Matrix<Rational> a = realified(p.m);
                           push_affine(inv ? inverse(a) : a, Vector<Rational>(m_));
                       },
                       [&](const Translate& p) {
                           Vector<Rational> v = realified(p.v);
                           if (inv) v = scaled(Rational(-1), v);
                           push_affine(Matrix<Rational>::identity(m_), v);
                       },
                       [&](const Conjugate&) {
                           Matrix<Rational> c = Matrix<Rational>::identity(m_);
                           for (std::size_t i = 1; i < m_; i += 2) c(i, i) = -1;
                           push_affine(c, Vector<Rational>(m_));
                       },
                       [&](const SignedPower1D& p) {
                           flush();
                           const long double l = p.l.value.convert_to<long double>();
                           if (inv)
                               steps_.emplace_back(PowerStep<S>(p.center_out, p.center_in, 1.0L / l));
                           else
                               steps_.emplace_back(PowerStep<S>(p.center_in, p.center_out, l));
                       },
                       [&](const ParabolicShear&) {
                           flush();
                           steps_.emplace_back(ShearStep<S>{inv});
                       },
                       [&](const ExpFiberScale& p) {
                           flush();
                           steps_.emplace_back(ExpStep<S>{to_scalar<long double>(p.alpha), inv});
                       },
                   },
                   link.map);
    }

    std::size_t m_;
    Anchors<S>* anchors_;
    std::vector<Step<S>> steps_;
    Matrix<Rational> pa_;
    Vector<Rational> pb_;
    bool pending_ = false;
};

template <class S>
State<S> at(const Point& x) {
    State<S> s;
    for (double c : x) s.off.push_back(S(c));
    return s;
}

template <class S>
long double norm(const FixedPoint<S>& v) {
    S sum = 0;
    for (std::size_t i = 0; i < v.size(); ++i) sum += v[i] * v[i];
    return std::sqrt(to_ld(sum));
}

// a - b, with the anchor difference taken exactly
template <class S>
FixedPoint<S> difference(const State<S>& a, const State<S>& b, Anchors<S>& anchors) {
    FixedPoint<S> d = a.anchor == b.anchor ? FixedPoint<S>(a.off.size()) : anchors.delta(a.anchor, b.anchor);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += a.off[i] - b.off[i];
    return d;
}

bool has_exp(const Homeomorphism& h) {
    return std::any_of(h.chain.begin(), h.chain.end(),
                       [](const ChainLink& l) { return std::holds_alternative<ExpFiberScale>(l.map); });
}

template <class S>
Point apply_with(const Homeomorphism& h, const Point& x) {
    Anchors<S> anchors(x.size());
    Compiled<S> c(h, anchors);
    const auto y = collapse(c(at<S>(x)), anchors);
    Point out;
    for (std::size_t i = 0; i < y.size(); ++i) out.push_back(static_cast<double>(to_ld(y[i])));
    return out;
}

// Shifted Kronecker sequence with steps phi_m^-k, phi_m the positive root of x^(m+1) = x + 1.
class Kronecker {
public:
    Kronecker(std::size_t m, double range) : range_(range) {
        long double phi = 2;
        for (int it = 0; it < 60; ++it) {
            const long double p = std::pow(phi, static_cast<long double>(m + 1));
            phi -= (p - phi - 1) / ((m + 1) * p / phi - 1);
        }
        long double alpha = 1, whole;
        for (std::size_t k = 0; k < m; ++k) {
            alpha /= phi;
            alpha_.push_back(alpha);
            shift_.push_back(std::modf((k + 1) * std::sqrt(2.0L), &whole));
        }
    }

    Point operator()(std::size_t i) const {
        Point x(alpha_.size());
        long double whole;
        for (std::size_t k = 0; k < x.size(); ++k) {
            const long double u = std::modf(shift_[k] + static_cast<long double>(i + 1) * alpha_[k], &whole);
            x[k] = static_cast<double>((2 * u - 1) * range_);
        }
        return x;
    }

private:
    double range_;
    std::vector<long double> alpha_, shift_;
};

template <class S>
VerificationReport verify_with(const AffineMap& f, const AffineMap& g, const Homeomorphism& h,
                               const VerificationSpec& spec) {
    Anchors<S> anchors(h.ambient_dim());
    // h o h^-1 as one chain, so the affine links meeting in the middle fuse exactly
    Compiled<S> cf(f, anchors), cg(g, anchors), ch(h, anchors), ch_rt(compose(h, invert(h)), anchors);
    const Kronecker sample(h.ambient_dim(), spec.range);

    VerificationReport r;
    r.samples = spec.samples;
    r.range = spec.range;
    r.tolerance = spec.tolerance;
    long double worst_residual = 0, worst_roundtrip = 0;
    bool finite = true;
    for (std::size_t i = 0; i < spec.samples; ++i) {
        const State<S> x = at<S>(sample(i));
        const State<S> ghx = cg(ch(x));
        const State<S> hfx = ch(cf(x));
        const long double residual = norm(difference(hfx, ghx, anchors)) / (1 + norm(collapse(ghx, anchors)));
        const long double roundtrip = norm(difference(ch_rt(x), x, anchors));
        if (!std::isfinite(residual) || !std::isfinite(roundtrip)) {
            finite = false;
            continue;
        }
        worst_residual = std::max(worst_residual, residual);
        worst_roundtrip = std::max(worst_roundtrip, roundtrip);
    }
    r.max_residual = finite ? static_cast<double>(worst_residual) : INFINITY;
    r.max_roundtrip = finite ? static_cast<double>(worst_roundtrip) : INFINITY;
    r.pass = finite && r.max_residual <= r.tolerance && r.max_roundtrip <= r.tolerance;
    return r;
}

}  // namespace

Point homeo_apply(const Homeomorphism& h, const Point& x, Direction direction) {
    if (x.size() != h.ambient_dim()) invalid("point dimension does not match the homeomorphism");
    const Homeomorphism& c = direction == Direction::Forward ? h : invert(h);
    return has_exp(h) ? apply_with<Quad>(c, x) : apply_with<long double>(c, x);
}

Point sample_point(std::size_t i, std::size_t m, double range) { return Kronecker(m, range)(i); }

VerificationReport verify_conjugacy(const AffineMap& f, const AffineMap& g, const Homeomorphism& h,
                                    const VerificationSpec& spec) {
    if (f.field() != g.field() || f.dim() != g.dim() || h.field != f.field() || h.dim != f.dim())
        throw Error(ErrorCode::FieldOrDimensionMismatch, "maps and homeomorphism act on different spaces");
    return has_exp(h) ? verify_with<Quad>(f, g, h, spec) : verify_with<long double>(f, g, h, spec);
}

// ---------------------------------------------------------------------------
// Synthesis.

namespace {

void require_same_space(const AffineMap& f, const AffineMap& g) {
    if (f.field() != g.field() || f.dim() != g.dim())
        throw Error(ErrorCode::FieldOrDimensionMismatch, "maps act on different spaces");
}

Matrix<Rational> rational_matrix(const Matrix<QuadraticNumber>& m) {
    Matrix<Rational> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).surd_coefficient().is_zero()) throw std::logic_error("expected a rational transform");
            r(i, j) = m(i, j).rational_part();
        }
    return r;
}

// S with S A S^-1 equal to the real canonical form; rational eigenvalues only.
Matrix<Rational> rational_transform(const Matrix<Rational>& a) {
    const auto rcf = real_canonical_form(a);
    return rational_matrix(*rcf.transform);
}

template <ExactScalar T>
bool is_translation(const Affine<T>& f) {
    return f.a.is_identity();
}

template <ExactScalar T>
T cross(const Vector<T>& u, const Vector<T>& v) {
    return u[0] * v[1] - u[1] * v[0];
}

// An invertible B with B b = d.
template <ExactScalar T>
Matrix<T> mapping_matrix(const Vector<T>& b, const Vector<T>& d) {
    if (is_zero_vector(b) || is_zero_vector(d)) throw Error(ErrorCode::ZeroTranslation, "translation vectors must be nonzero");
    if (b.size() == 1) return Matrix<T>{{d[0] / b[0]}};
    if (cross(b, d).is_zero()) {
        const std::size_t k = b[0].is_zero() ? 1 : 0;
        return (d[k] / b[k]) * Matrix<T>::identity(2);
    }
    auto complete = [](const Vector<T>& v) {
        for (const Vector<T>& w : {Vector<T>{-v[1], v[0]}, Vector<T>{T::one(), T::zero()}, Vector<T>{T::zero(), T::one()}})
            if (!cross(v, w).is_zero()) return w;
        throw std::logic_error("no completion");
    };
    const Vector<T> wb = complete(b), wd = complete(d);
    const Matrix<T> from{{b[0], wb[0]}, {b[1], wb[1]}};
    const Matrix<T> to{{d[0], wd[0]}, {d[1], wd[1]}};
    return to * inverse(from);
}

ExactMatrix exact(Matrix<Rational> m) { return ExactMatrix(std::move(m)); }
ExactVector exact(Vector<Rational> v) { return ExactVector(std::move(v)); }

Homeomorphism linear(const Matrix<Rational>& m) { return single(Field::Real, m.rows(), Linear{exact(m)}); }
Homeomorphism translate(const Vector<Rational>& v) { return single(Field::Real, v.size(), Translate{exact(v)}); }

// h with h f h^-1 = x + target, for a planar real f without fixed points and det A != 0.
struct Straightened {
    Homeomorphism h;
    Vector<Rational> target;
};

Straightened straighten(const Affine<Rational>& f) {
    const Matrix<Rational>& a = f.a;
    if (a.is_identity()) return {identity_homeomorphism(Field::Real, 2), f.b};
    const Rational alpha = a(0, 0) + a(1, 1) - 1;
    if (alpha.sign() < 0)
        throw Error(ErrorCode::NegativeAlphaUnsupported, "second eigenvalue is negative; no explicit construction");

    Matrix<Rational> s = rational_transform(a);
    if (alpha.is_one()) {
        // S A S^-1 = [[1, 1], [0, 1]], then scale the drift to e2 and straighten the shear
        const Vector<Rational> delta = s * f.b;
        const Rational& d1 = delta[0];
        const Rational& d2 = delta[1];
        const Matrix<Rational> phi2{{Rational(1) / d2, -d1 / (d2 * d2)}, {0, Rational(1) / d2}};
        Homeomorphism h = single(Field::Real, 2, ParabolicShear{});
        h = compose(h, linear(phi2));
        h = compose(h, linear(s));
        return {h, Vector<Rational>{0, 1}};
    }
    // S A S^-1 = diag(1, alpha)
    if (!(s * a * inverse(s))(0, 0).is_one()) s = Matrix<Rational>{{0, 1}, {1, 0}} * s;
    const Vector<Rational> delta = s * f.b;
    const Rational& d1 = delta[0];
    const Rational& d2 = delta[1];
    Homeomorphism h = single(Field::Real, 2, ExpFiberScale{alpha});
    h = compose(h, translate(Vector<Rational>{0, d2 / (alpha - 1)}));
    h = compose(h, linear(Matrix<Rational>{{Rational(1) / d1, 0}, {0, 1}}));
    h = compose(h, linear(s));
    return {h, Vector<Rational>{1, 0}};
}

void require_planar_real(const AffineMap& f) {
    if (f.field() != Field::Real || f.dim() != 2)
        throw Error(ErrorCode::FieldOrDimensionMismatch, "construction applies to real planar maps");
}

void require_fixed_point_free(const Affine<Rational>& f) {
    if (!is_empty(fixed_point_set(f))) throw Error(ErrorCode::NotFixedPointFree, "map has a fixed point");
}

}  // namespace

std::pair<Homeomorphism, AffineMap> reduce_to_linear(const AffineMap& f) {
    return f.visit([&](const auto& m) -> std::pair<Homeomorphism, AffineMap> {
        using T = std::decay_t<decltype(m.b[0])>;
        const auto fixed = fixed_point_set(m);
        if (is_empty(fixed)) throw Error(ErrorCode::NoFixedPoint, "map has no fixed point");
        Vector<T> q(m.dim(), T::zero());
        if (const auto* u = std::get_if<UniquePoint<T>>(&fixed)) q = u->point;
        if (const auto* c = std::get_if<Coset<T>>(&fixed)) q = c->base;
        Homeomorphism h = single(f.field(), f.dim(), Translate{ExactVector(q)});
        return {h, Affine<T>{m.a, Vector<T>(m.dim(), T::zero())}};
    });
}

Homeomorphism synth_1d(const AffineMap& f, const AffineMap& g) {
    require_same_space(f, g);
    if (f.field() != Field::Real || f.dim() != 1)
        throw Error(ErrorCode::FieldOrDimensionMismatch, "construction applies to real maps of the line");
    if (!conjugate(f, g).conjugate) throw Error(ErrorCode::NotConjugate, "maps are not conjugate");
    const Rational& a = f.as_real().a(0, 0);
    const Rational& b = f.as_real().b[0];
    const Rational& c = g.as_real().a(0, 0);
    const Rational& d = g.as_real().b[0];
    if (a.is_one()) {
        const Rational k = b.is_zero() ? Rational(1) : d / b;
        return linear(Matrix<Rational>{{k}});
    }
    SignedPower1D p;
    p.center_in = b / (Rational(1) - a);
    p.center_out = d / (Rational(1) - c);
    if (!(a == c || a.is_zero() || a == Rational(-1))) {
        auto hp = [](const Rational& r) {
            return HighPrecision(r.num().convert_to<HighPrecision>()) / r.den().convert_to<HighPrecision>();
        };
        p.l.value = log(hp(c.abs())) / log(hp(a.abs()));
        p.l.source = std::pair{a.abs(), c.abs()};
    }
    return single(Field::Real, 1, p);
}

Homeomorphism synth_translation(const AffineMap& f, const AffineMap& g) {
    require_same_space(f, g);
    auto build = [&](const auto& fm, const auto& gm) {
        if (!is_translation(fm) || !is_translation(gm))
            throw Error(ErrorCode::UnsupportedClass, "both maps must be translations");
        return single(f.field(), f.dim(), Linear{ExactMatrix(mapping_matrix(fm.b, gm.b))});
    };
    if (f.field() == Field::Real) return build(f.as_real(), g.as_real());
    return build(f.as_complex(), g.as_complex());
}

Homeomorphism synth_nofix_bijective_2d(const AffineMap& f, const AffineMap& g) {
    require_same_space(f, g);
    require_planar_real(f);
    const auto& fm = f.as_real();
    const auto& gm = g.as_real();
    require_fixed_point_free(fm);
    if (determinant(fm.a).is_zero()) throw Error(ErrorCode::Singular, "linear part is singular");
    if (!is_translation(gm)) throw Error(ErrorCode::UnsupportedClass, "target must be a translation");
    const Straightened st = straighten(fm);
    return compose(linear(mapping_matrix(st.target, gm.b)), st.h);
}

Homeomorphism synth_nofix_singular_2d(const AffineMap& f, const AffineMap& g) {
    require_same_space(f, g);
    require_planar_real(f);
    const auto& fm = f.as_real();
    const auto& gm = g.as_real();
    require_fixed_point_free(fm);
    require_fixed_point_free(gm);
    if (!determinant(fm.a).is_zero() || !determinant(gm.a).is_zero())
        throw Error(ErrorCode::NotSingular, "linear parts must be singular");
    // S A S^-1 = diag(1, 0) = K^-1 C K
    const Matrix<Rational> s = rational_transform(fm.a);
    const Matrix<Rational> k_inv = rational_transform(gm.a);
    const Vector<Rational> delta = s * fm.b;
    const Vector<Rational> eta = k_inv * gm.b;
    Homeomorphism h = linear(inverse(k_inv));
    h = compose(h, translate(Vector<Rational>{0, eta[1] - delta[1]}));
    h = compose(h, linear(Matrix<Rational>{{eta[0] / delta[0], 0}, {0, 1}}));
    return compose(h, linear(s));
}

Homeomorphism synthesize(const AffineMap& f, const AffineMap& g) {
    require_same_space(f, g);
    if (!conjugate(f, g).conjugate) throw Error(ErrorCode::NotConjugate, "maps are not conjugate");
    if (f.field() == Field::Real && f.dim() == 1) return synth_1d(f, g);

    const bool translations = f.visit([&](const auto& m) { return is_translation(m); }) &&
                              g.visit([&](const auto& m) { return is_translation(m); });
    const bool f_fixed = fixed_point_kind(f) != FixedPointKind::Empty;
    if (translations && !f_fixed) return synth_translation(f, g);

    if (f_fixed) {
        // both have fixed points; conjugate linear parts via translations (and conjugation)
        const auto [hf, lf] = reduce_to_linear(f);
        const auto [hg, lg] = reduce_to_linear(g);
        if (lf == lg) return compose(hg, invert(hf));
        if (f.field() == Field::Complex && lg.as_complex().a == lf.as_complex().a.conj())
            return compose(compose(hg, single(f.field(), f.dim(), Conjugate{})), invert(hf));
        throw Error(ErrorCode::UnsupportedClass, "no explicit homeomorphism for these linear parts");
    }
    if (f.field() == Field::Real) {
        const auto& fm = f.as_real();
        if (determinant(fm.a).is_zero()) return synth_nofix_singular_2d(f, g);
        const Straightened sf = straighten(fm);
        const Straightened sg = straighten(g.as_real());
        return compose(compose(invert(sg.h), linear(mapping_matrix(sf.target, sg.target))), sf.h);
    }
    throw Error(ErrorCode::UnsupportedClass, "no explicit homeomorphism for fixed-point-free complex maps");
}

}  // namespace conjclass
