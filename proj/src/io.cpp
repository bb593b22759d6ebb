#include "conjclass/io.hpp"

#include <cmath>
#include <limits>

namespace conjclass::io {

namespace {

const Json& field_of(const Json& j, const char* key) {
    if (!j.is_object()) throw schema_error("expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw schema_error(std::string("missing field '") + key + "'");
    return *it;
}

void check_version(const Json& j) {
    if (!j.is_object()) throw schema_error("expected an object");
    if (const auto it = j.find("v"); it != j.end() && *it != kSchemaVersion)
        throw schema_error("unsupported schema version " + it->dump());
}

Json versioned(Json j) {
    j["v"] = kSchemaVersion;
    return j;
}

std::string string_of(const Json& j, const char* what) {
    if (!j.is_string()) throw schema_error(std::string(what) + " must be a string");
    return j.get<std::string>();
}

bool bool_of(const Json& j, const char* what) {
    if (!j.is_boolean()) throw schema_error(std::string(what) + " must be a boolean");
    return j.get<bool>();
}

long integer_of(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw schema_error(std::string(what) + " must be an integer");
    return j.get<long>();
}

double number_of(const Json& j, const char* what) {
    if (!j.is_number()) throw schema_error(std::string(what) + " must be a number");
    return j.get<double>();
}

Field field_from_json(const Json& j) {
    const std::string s = string_of(j, "field");
    if (s == "R") return Field::Real;
    if (s == "C") return Field::Complex;
    throw schema_error("field must be \"R\" or \"C\"");
}

std::optional<int> optional_sign(const Json& j, const char* what) {
    if (j.is_null()) return std::nullopt;
    const long s = integer_of(j, what);
    if (s != 1 && s != -1) throw schema_error(std::string(what) + " must be 1, -1 or null");
    return static_cast<int>(s);
}

Json optional_sign(const std::optional<int>& s) { return s ? Json(*s) : Json(nullptr); }

template <ExactScalar T>
T scalar_from_json(const Json& j) {
    if constexpr (std::is_same_v<T, Rational>)
        return rational_from_json(j);
    else
        return gaussian_from_json(j);
}

template <ExactScalar T>
Json vector_to_json(const Vector<T>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

template <ExactScalar T>
Json matrix_to_json(const Matrix<T>& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

template <ExactScalar T>
Vector<T> vector_from_json(const Json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) throw schema_error("vector must be an array of length " + std::to_string(n));
    Vector<T> v;
    for (const auto& x : j) v.push_back(scalar_from_json<T>(x));
    return v;
}

template <ExactScalar T>
Matrix<T> matrix_from_json(const Json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) throw schema_error("matrix must have " + std::to_string(n) + " rows");
    Matrix<T> m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != n) throw schema_error("matrix rows must have length " + std::to_string(n));
        for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from_json<T>(row[c]);
    }
    return m;
}

std::size_t dim_from_json(const Json& j) {
    const long d = integer_of(j, "dim");
    if (d < 1) throw schema_error("dim must be positive");
    return static_cast<std::size_t>(d);
}

Json exact_to_json(const ExactMatrix& m) {
    return std::visit([](const auto& x) { return matrix_to_json(x); }, m);
}

Json exact_to_json(const ExactVector& v) {
    return std::visit([](const auto& x) { return vector_to_json(x); }, v);
}

// Square matrix of either field; its size is taken from the document.
template <ExactScalar T>
Matrix<T> square_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw schema_error("matrix must be a non-empty array");
    return matrix_from_json<T>(j, j.size());
}

Json quadratic_to_json(const QuadraticNumber& q) {
    return {{"rational", to_json(q.rational_part())},
            {"surd", to_json(q.surd_coefficient())},
            {"radicand", q.radicand().str()}};
}

QuadraticNumber quadratic_from_json(const Json& j) {
    const Rational p = rational_from_json(field_of(j, "rational"));
    const Rational q = rational_from_json(field_of(j, "surd"));
    const Rational d = rational_from_json(field_of(j, "radicand"));
    if (d.den() != 1 || d.sign() < 0) throw schema_error("radicand must be a non-negative integer");
    try {
        return q.is_zero() ? QuadraticNumber(p) : QuadraticNumber(p, q, d.num());
    } catch (const Error& e) {
        throw schema_error(e.what());
    }
}

UnitBlock::Kind kind_from_json(const Json& j) {
    using K = UnitBlock::Kind;
    const std::string s = string_of(j, "kind");
    for (K k : {K::One, K::MinusOne, K::Jordan2One, K::Jordan2MinusOne, K::Rotation, K::Complex})
        if (to_string(k) == s) return k;
    throw schema_error("unknown unit block kind '" + s + "'");
}

Json unit_block_to_json(const UnitBlock& u) {
    Json j{{"kind", to_string(u.kind)}, {"size", u.size}};
    if (u.kind == UnitBlock::Kind::Rotation || u.kind == UnitBlock::Kind::Complex) j["re"] = quadratic_to_json(u.re);
    if (u.lambda) j["lambda"] = to_json(*u.lambda);
    return j;
}

UnitBlock unit_block_from_json(const Json& j) {
    UnitBlock u;
    u.kind = kind_from_json(field_of(j, "kind"));
    u.size = static_cast<int>(integer_of(field_of(j, "size"), "size"));
    if (u.size != 1 && u.size != 2) throw schema_error("unit block size must be 1 or 2");
    if (const auto it = j.find("re"); it != j.end()) u.re = quadratic_from_json(*it);
    if (const auto it = j.find("lambda"); it != j.end()) u.lambda = gaussian_from_json(*it);
    return u;
}

Json blocks_to_json(const BlockSignature& s) {
    Json units = Json::array();
    for (const auto& u : s.unit_blocks) units.push_back(unit_block_to_json(u));
    Json j{{"rank_plus", s.rank_plus},
           {"det_sign_plus", optional_sign(s.det_sign_plus)},
           {"rank_minus", s.rank_minus},
           {"det_sign_minus", optional_sign(s.det_sign_minus)},
           {"nilpotent_blocks", s.nilpotent_blocks},
           {"unit_blocks", std::move(units)}};
    if (s.unit_realizer) j["unit_realizer"] = {{"trace", to_json(s.unit_realizer->first)}, {"det", to_json(s.unit_realizer->second)}};
    return j;
}

BlockSignature blocks_from_json(const Json& j) {
    BlockSignature s;
    s.rank_plus = static_cast<int>(integer_of(field_of(j, "rank_plus"), "rank_plus"));
    s.det_sign_plus = optional_sign(field_of(j, "det_sign_plus"), "det_sign_plus");
    s.rank_minus = static_cast<int>(integer_of(field_of(j, "rank_minus"), "rank_minus"));
    s.det_sign_minus = optional_sign(field_of(j, "det_sign_minus"), "det_sign_minus");
    const Json& nil = field_of(j, "nilpotent_blocks");
    if (!nil.is_array()) throw schema_error("nilpotent_blocks must be an array");
    for (const auto& n : nil) s.nilpotent_blocks.push_back(static_cast<int>(integer_of(n, "nilpotent block")));
    const Json& units = field_of(j, "unit_blocks");
    if (!units.is_array()) throw schema_error("unit_blocks must be an array");
    for (const auto& u : units) s.unit_blocks.push_back(unit_block_from_json(u));
    if (const auto it = j.find("unit_realizer"); it != j.end())
        s.unit_realizer = std::pair{gaussian_from_json(field_of(*it, "trace")), gaussian_from_json(field_of(*it, "det"))};
    return s;
}

Json primitive_to_json(const PrimitiveMap& p) {
    return std::visit(
        [](const auto& m) -> Json {
            using P = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<P, Linear>) {
                return {{"map", "Linear"}, {"B", exact_to_json(m.m)}};
            } else if constexpr (std::is_same_v<P, Translate>) {
                return {{"map", "Translate"}, {"v", exact_to_json(m.v)}};
            } else if constexpr (std::is_same_v<P, SignedPower1D>) {
                Json j{{"map", "SignedPower1D"},
                       {"center_in", to_json(m.center_in)},
                       {"center_out", to_json(m.center_out)},
                       {"l", m.l.value.str(50, std::ios_base::fmtflags(0))}};
                if (m.l.source) j["l_source"] = {to_json(m.l.source->first), to_json(m.l.source->second)};
                return j;
            } else if constexpr (std::is_same_v<P, ParabolicShear>) {
                return {{"map", "ParabolicShear"}};
            } else if constexpr (std::is_same_v<P, ExpFiberScale>) {
                return {{"map", "ExpFiberScale"}, {"alpha", to_json(m.alpha)}};
            } else {
                return {{"map", "Conjugate"}};
            }
        },
        p);
}

HighPrecision decimal_from_json(const Json& j) {
    const std::string s = string_of(j, "l");
    // digits, sign, point and exponent only; the library parser accepts more
    if (s.empty() || s.find_first_not_of("0123456789+-.eE") != std::string::npos)
        throw schema_error("l must be a decimal string");
    try {
        return HighPrecision(s);
    } catch (const std::exception&) {
        throw schema_error("l must be a decimal string");
    }
}

PrimitiveMap primitive_from_json(const Json& j, Field field) {
    const std::string kind = string_of(field_of(j, "map"), "map");
    const auto exact_matrix = [&](const Json& m) -> ExactMatrix {
        if (field == Field::Real) return square_from_json<Rational>(m);
        return square_from_json<Gaussian>(m);
    };
    const auto exact_vector = [&](const Json& v) -> ExactVector {
        if (!v.is_array() || v.empty()) throw schema_error("vector must be a non-empty array");
        if (field == Field::Real) return vector_from_json<Rational>(v, v.size());
        return vector_from_json<Gaussian>(v, v.size());
    };
    if (kind == "Linear") return Linear{exact_matrix(field_of(j, "B"))};
    if (kind == "Translate") return Translate{exact_vector(field_of(j, "v"))};
    if (kind == "SignedPower1D") {
        SignedPower1D p{rational_from_json(field_of(j, "center_in")), rational_from_json(field_of(j, "center_out")), {}};
        p.l.value = decimal_from_json(field_of(j, "l"));
        if (const auto it = j.find("l_source"); it != j.end()) {
            if (!it->is_array() || it->size() != 2) throw schema_error("l_source must be a pair");
            p.l.source = std::pair{rational_from_json((*it)[0]), rational_from_json((*it)[1])};
        }
        return p;
    }
    if (kind == "ParabolicShear") return ParabolicShear{};
    if (kind == "ExpFiberScale") return ExpFiberScale{rational_from_json(field_of(j, "alpha"))};
    if (kind == "Conjugate") return Conjugate{};
    throw schema_error("unknown primitive '" + kind + "'");
}

}  // namespace

Error schema_error(const std::string& what) { return Error(ErrorCode::Parse, what); }

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Gaussian& z) { return {{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
    if (!j.is_string()) throw schema_error("numbers must be rational or decimal strings, got " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        throw schema_error(e.what());
    }
}

Gaussian gaussian_from_json(const Json& j) {
    if (!j.is_object()) return Gaussian(rational_from_json(j));
    return Gaussian(rational_from_json(field_of(j, "re")), rational_from_json(field_of(j, "im")));
}

Json to_json(const AffineMap& f) {
    Json j{{"field", to_string(f.field())}, {"dim", f.dim()}};
    f.visit([&](const auto& m) {
        j["A"] = matrix_to_json(m.a);
        j["b"] = vector_to_json(m.b);
    });
    return versioned(std::move(j));
}

AffineMap map_from_json(const Json& j) {
    check_version(j);
    const Field field = field_from_json(field_of(j, "field"));
    const std::size_t n = dim_from_json(field_of(j, "dim"));
    if (field == Field::Real)
        return Affine<Rational>{matrix_from_json<Rational>(field_of(j, "A"), n), vector_from_json<Rational>(field_of(j, "b"), n)};
    return Affine<Gaussian>{matrix_from_json<Gaussian>(field_of(j, "A"), n), vector_from_json<Gaussian>(field_of(j, "b"), n)};
}

Json to_json(const ConjugacySignature& s) {
    Json j{{"field", to_string(s.field)}, {"dim", s.dim}};
    if (s.has_fixed_point()) {
        j["status"] = "HasFixedPoint";
        j["blocks"] = blocks_to_json(s.blocks());
    } else {
        j["status"] = "NoFixedPoint";
        j["singular"] = s.singular();
    }
    return versioned(std::move(j));
}

ConjugacySignature signature_from_json(const Json& j) {
    check_version(j);
    ConjugacySignature s;
    s.field = field_from_json(field_of(j, "field"));
    s.dim = dim_from_json(field_of(j, "dim"));
    const std::string status = string_of(field_of(j, "status"), "status");
    if (status == "HasFixedPoint")
        s.status = HasFixedPoint{blocks_from_json(field_of(j, "blocks"))};
    else if (status == "NoFixedPoint")
        s.status = NoFixedPoint{bool_of(field_of(j, "singular"), "singular")};
    else
        throw schema_error("status must be HasFixedPoint or NoFixedPoint");
    return s;
}

Json to_json(const Homeomorphism& h) {
    Json chain = Json::array();
    for (const auto& link : h.chain) {
        Json l = primitive_to_json(link.map);
        l["direction"] = link.inverse ? "inverse" : "forward";
        chain.push_back(std::move(l));
    }
    return versioned({{"field", to_string(h.field)}, {"dim", h.dim}, {"chain", std::move(chain)}});
}

Homeomorphism homeomorphism_from_json(const Json& j) {
    check_version(j);
    Homeomorphism h;
    h.field = field_from_json(field_of(j, "field"));
    h.dim = dim_from_json(field_of(j, "dim"));
    const Json& chain = field_of(j, "chain");
    if (!chain.is_array()) throw schema_error("chain must be an array");
    for (const auto& link : chain) {
        ChainLink l{primitive_from_json(link, h.field), false};
        if (const auto it = link.find("direction"); it != link.end()) {
            const std::string d = string_of(*it, "direction");
            if (d != "forward" && d != "inverse") throw schema_error("direction must be forward or inverse");
            l.inverse = d == "inverse";
        }
        h.chain.push_back(std::move(l));
    }
    try {
        validate(h);
    } catch (const Error& e) {
        throw schema_error(e.what());
    }
    return h;
}

Json to_json(const VerificationReport& r) {
    // non-finite residuals have no JSON number; they travel as null
    const auto num = [](double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); };
    return versioned({{"samples", r.samples},
                      {"range", r.range},
                      {"tolerance", r.tolerance},
                      {"max_residual", num(r.max_residual)},
                      {"max_roundtrip", num(r.max_roundtrip)},
                      {"pass", r.pass}});
}

VerificationReport report_from_json(const Json& j) {
    check_version(j);
    const auto num = [&](const char* key) {
        const Json& x = field_of(j, key);
        return x.is_null() ? std::numeric_limits<double>::infinity() : number_of(x, key);
    };
    VerificationReport r;
    const long samples = integer_of(field_of(j, "samples"), "samples");
    if (samples < 0) throw schema_error("samples must be non-negative");
    r.samples = static_cast<std::size_t>(samples);
    r.range = number_of(field_of(j, "range"), "range");
    r.tolerance = number_of(field_of(j, "tolerance"), "tolerance");
    r.max_residual = num("max_residual");
    r.max_roundtrip = num("max_roundtrip");
    r.pass = bool_of(field_of(j, "pass"), "pass");
    return r;
}

Json to_json(const WitnessReport& w) {
    return {{"fixed_points", to_string(w.fixed_count)},
            {"bijective", w.bijective},
            {"orientation", optional_sign(w.orientation)},
            {"period_two", to_string(w.period2)},
            {"contracting", w.contracting}};
}

Json to_json(const Verdict& v) {
    Json warnings = Json::array();
    for (const auto& w : v.warnings) warnings.push_back({{"code", w.code}, {"message", w.message}});
    return versioned({{"conjugate", v.conjugate},
                      {"basis", v.basis},
                      {"distinguishing_invariant", v.distinguishing_invariant ? Json(*v.distinguishing_invariant) : Json(nullptr)},
                      {"warnings", std::move(warnings)}});
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw schema_error(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace conjclass::io
