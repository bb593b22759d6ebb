#include "conjclass/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace conjclass::cli {

namespace {

constexpr std::size_t kMaxOrbitSteps = 10000;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnsupportedDimension: return kUnsupportedDimension;
        case ErrorCode::FieldOrDimensionMismatch: return kMismatch;
        default: return kParse;
    }
}

void require_same_space(const AffineMap& f, const AffineMap& g) {
    if (f.field() != g.field() || f.dim() != g.dim())
        throw Error(ErrorCode::FieldOrDimensionMismatch, "maps act on different spaces");
}

template <ExactScalar T>
io::Json orbit_of(const Matrix<Rational>& a, const Vector<Rational>& b, const OrbitRequest& req) {
    Vector<Rational> x = req.start.empty() ? Vector<Rational>(b.size()) : req.start;
    if (x.size() != b.size()) throw io::schema_error("orbit start has the wrong number of coordinates");
    io::Json points = io::Json::array();
    for (std::size_t k = 0;; ++k) {
        io::Json p = io::Json::array();
        for (const auto& c : x) p.push_back(c.to_double());
        points.push_back(std::move(p));
        if (k == req.steps) break;
        x = a * x + b;
    }
    return points;
}

io::Json orbit(const AffineMap& f, const OrbitRequest& req) {
    if (req.steps > kMaxOrbitSteps) throw io::schema_error("at most 10000 orbit steps");
    if (f.field() == Field::Real) return orbit_of<Rational>(f.as_real().a, f.as_real().b, req);
    return orbit_of<Gaussian>(realify(f.as_complex().a), realify(f.as_complex().b), req);
}

std::string read_all(std::istream& in) {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io::schema_error("cannot read '" + path + "'");
    return read_all(f);
}

const io::Json& member(const io::Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw io::schema_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

// Documents named on the command line, or one combined document on stdin.
std::vector<io::Json> gather(const std::vector<std::string>& files, std::istream& in,
                             const std::vector<const char*>& keys) {
    if (files.size() == keys.size()) {
        std::vector<io::Json> docs;
        for (const auto& f : files) docs.push_back(io::parse(read_file(f)));
        return docs;
    }
    if (files.size() > 1)
        throw io::schema_error("expected " + std::to_string(keys.size()) + " files, one combined file, or stdin");
    const io::Json whole = io::parse(files.empty() ? read_all(in) : read_file(files[0]));
    std::vector<io::Json> docs;
    for (const char* k : keys) docs.push_back(member(whole, k));
    return docs;
}

void emit(std::ostream& out, const Result& r) { out << io::dump(r.document) << '\n'; }

}  // namespace

double default_tolerance() {
    if (const char* env = std::getenv("CONJCLASS_TOL")) {
        char* end = nullptr;
        const double t = std::strtod(env, &end);
        if (end != env && *end == '\0' && t > 0 && std::isfinite(t)) return t;
    }
    return 1e-9;
}

Result failure(const Error& e) {
    io::Json doc{{"v", io::kSchemaVersion}, {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
    return {std::move(doc), exit_code_for(e.code())};
}

Result cmd_classify(const io::Json& map, const std::optional<OrbitRequest>& orbit_request) {
    try {
        const AffineMap f = io::map_from_json(map);
        io::Json doc = io::to_json(signature(f));
        if (orbit_request) doc["orbit"] = orbit(f, *orbit_request);
        return {std::move(doc), kOk};
    } catch (const Error& e) {
        return failure(e);
    }
}

Result cmd_compare(const io::Json& f_doc, const io::Json& g_doc, const CompareOptions& options) {
    try {
        const AffineMap f = io::map_from_json(f_doc);
        const AffineMap g = io::map_from_json(g_doc);
        require_same_space(f, g);
        const Verdict verdict = conjugate(f, g);
        io::Json doc = io::to_json(verdict);
        doc["signature_f"] = io::to_json(signature(f));
        doc["signature_g"] = io::to_json(signature(g));
        int code = verdict.conjugate ? kOk : kNegative;
        if (verdict.conjugate && (options.synthesize || options.verify)) {
            try {
                const Homeomorphism h = synthesize(f, g);
                doc["witness"] = io::to_json(h);
                if (options.verify) doc["verification"] = io::to_json(verify_conjugacy(f, g, h, options.spec));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::UnsupportedClass && e.code() != ErrorCode::NegativeAlphaUnsupported) throw;
                doc["warnings"].push_back({{"code", conjclass::kSynthUnsupported}, {"message", e.what()}});
                code = kSynthUnsupported;
            }
        }
        return {std::move(doc), code};
    } catch (const Error& e) {
        return failure(e);
    }
}

Result cmd_verify(const io::Json& f_doc, const io::Json& g_doc, const io::Json& h_doc, const VerificationSpec& spec) {
    try {
        const AffineMap f = io::map_from_json(f_doc);
        const AffineMap g = io::map_from_json(g_doc);
        require_same_space(f, g);
        const Homeomorphism h = io::homeomorphism_from_json(h_doc);
        const VerificationReport report = verify_conjugacy(f, g, h, spec);
        return {io::to_json(report), report.pass ? kOk : kNegative};
    } catch (const Error& e) {
        return failure(e);
    }
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Topological conjugacy of affine maps on R^n and C^n (n <= 2)", "conjclass"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::size_t orbit_steps = 0;
    std::string orbit_start;
    CompareOptions options;
    bool batch = false;

    auto* classify = app.add_subcommand("classify", "Conjugacy signature of one map");
    classify->add_option("input", files, "Map document (stdin when omitted)")->expected(0, 1);
    auto* emit_orbit = classify->add_option("--emit-orbit", orbit_steps, "Append the orbit of --orbit-start over N steps");
    classify->add_option("--orbit-start", orbit_start, "Realified start point as comma-separated exact numerals (default: origin)")
        ->needs(emit_orbit);

    const auto add_sampling = [&](CLI::App* cmd) {
        cmd->add_option("--samples", options.spec.samples, "Number of sample points")->check(CLI::PositiveNumber);
        cmd->add_option("--range", options.spec.range, "Samples lie in [-R, R]^m")->check(CLI::PositiveNumber);
        cmd->add_option("--tol", options.spec.tolerance, "Pass threshold (default: CONJCLASS_TOL or 1e-9)")
            ->check(CLI::PositiveNumber);
    };

    auto* compare = app.add_subcommand("compare", "Decide whether two maps are topologically conjugate");
    compare->add_option("input", files, "f and g documents, or one {\"f\", \"g\"} document (stdin when omitted)")
        ->expected(0, 2);
    compare->add_flag("--synthesize", options.synthesize, "Attach an explicit conjugating homeomorphism");
    compare->add_flag("--verify", options.verify, "Synthesize and check g o h = h o f on a sample");
    compare->add_flag("--batch", batch, "Read newline-delimited {\"f\", \"g\"} documents");
    add_sampling(compare);

    auto* verify = app.add_subcommand("verify", "Check a witness homeomorphism numerically");
    verify->add_option("input", files, "f, g and h documents, or one {\"f\", \"g\", \"h\"} document (stdin when omitted)")
        ->expected(0, 3);
    add_sampling(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (classify->parsed()) {
            std::optional<OrbitRequest> orbit_request;
            if (*emit_orbit) {
                orbit_request = OrbitRequest{orbit_steps, {}};
                std::istringstream coords(orbit_start);
                for (std::string c; std::getline(coords, c, ',');) orbit_request->start.push_back(io::rational_from_json(c));
            }
            const io::Json doc = io::parse(files.empty() ? read_all(in) : read_file(files[0]));
            const Result r = cmd_classify(doc, orbit_request);
            emit(out, r);
            return r.exit_code;
        }
        if (compare->parsed() && batch) {
            if (files.size() > 1) throw io::schema_error("--batch reads one stream");
            std::ifstream file;
            if (!files.empty()) {
                file.open(files[0]);
                if (!file) throw io::schema_error("cannot read '" + files[0] + "'");
            }
            std::istream& source = files.empty() ? in : file;
            int status = kOk;
            std::string line;
            while (std::getline(source, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                Result r;
                try {
                    const io::Json pair = io::parse(line);
                    r = cmd_compare(member(pair, "f"), member(pair, "g"), options);
                } catch (const Error& e) {
                    r = failure(e);
                }
                if (r.exit_code == kParse) status = kParse;
                r.document["exit_code"] = r.exit_code;
                emit(out, r);
            }
            return status;
        }
        if (compare->parsed()) {
            const auto docs = gather(files, in, {"f", "g"});
            const Result r = cmd_compare(docs[0], docs[1], options);
            emit(out, r);
            return r.exit_code;
        }
        const auto docs = gather(files, in, {"f", "g", "h"});
        const Result r = cmd_verify(docs[0], docs[1], docs[2], options.spec);
        emit(out, r);
        return r.exit_code;
    } catch (const Error& e) {
        const Result r = failure(e);
        emit(out, r);
        return r.exit_code;
    }
}

}  // namespace conjclass::cli
