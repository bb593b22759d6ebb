#include "conjclass/cli.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

using namespace conjclass;
using io::Json;

namespace {

using R = Rational;
using G = Gaussian;

Json line_doc(const char* a, const char* b) { return {{"field", "R"}, {"dim", 1}, {"A", {{a}}}, {"b", {b}}}; }

Json plane_doc(std::vector<std::vector<std::string>> a, std::vector<std::string> b) {
    return {{"field", "R"}, {"dim", 2}, {"A", a}, {"b", b}};
}

// Canonical text must survive parse then serialize unchanged.
template <class Parse>
void check_canonical(const Json& doc, Parse parse) {
    const std::string text = io::dump(doc);
    CHECK(io::dump(io::to_json(parse(io::parse(text)))) == text);
}

int run(std::vector<const char*> args, const std::string& input, std::string* output = nullptr) {
    args.insert(args.begin(), "conjclass");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(args.size()), args.data(), in, out, err);
    if (output) *output = out.str();
    return code;
}

}  // namespace

TEST_CASE("map documents") {
    const AffineMap f = io::map_from_json(line_doc("0.5", "-3/9"));
    CHECK(f == AffineMap::make_real(Matrix<R>{{R(1, 2)}}, Vector<R>{R(-1, 3)}));
    CHECK(io::dump(io::to_json(f)) == R"({"A":[["1/2"]],"b":["-1/3"],"dim":1,"field":"R","v":1})");

    const Json c{{"field", "C"}, {"dim", 1}, {"A", {{{{"re", "0"}, {"im", "1"}}}}}, {"b", {"2"}}};
    const AffineMap g = io::map_from_json(c);
    CHECK(g == AffineMap::make_complex(Matrix<G>{{G::i()}}, Vector<G>{G(2)}));
    CHECK(io::dump(io::to_json(g)) == R"({"A":[[{"im":"1","re":"0"}]],"b":[{"im":"0","re":"2"}],"dim":1,"field":"C","v":1})");

    // integers are exact either way; binary floating point is not
    CHECK(io::map_from_json(line_doc("1", "2")) == io::map_from_json(Json{{"field", "R"}, {"dim", 1}, {"A", {{1}}}, {"b", {2}}}));
    auto code = [](const Json& j) {
        try {
            io::map_from_json(j);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::NotConjugate;
    };
    CHECK(code(Json{{"field", "R"}, {"dim", 1}, {"A", {{0.5}}}, {"b", {"1"}}}) == ErrorCode::Parse);
    CHECK(code(Json{{"field", "R"}, {"dim", 2}, {"A", {{"1"}}}, {"b", {"1"}}}) == ErrorCode::Parse);
    CHECK(code(Json{{"field", "Q"}, {"dim", 1}, {"A", {{"1"}}}, {"b", {"1"}}}) == ErrorCode::Parse);
    CHECK(code(Json{{"field", "R"}, {"dim", 1}, {"A", {{"1/0"}}}, {"b", {"1"}}}) == ErrorCode::Parse);
    CHECK(code(Json{{"v", 2}, {"field", "R"}, {"dim", 1}, {"A", {{"1"}}}, {"b", {"1"}}}) == ErrorCode::Parse);
    CHECK(code(Json::array()) == ErrorCode::Parse);
    CHECK_THROWS_AS(io::parse("{\"field\":"), Error);
}

TEST_CASE("canonical documents round trip byte for byte") {
    test::Rng rng(101);
    for (int i = 0; i < 300; ++i) {
        const Field field = i % 2 ? Field::Real : Field::Complex;
        const auto f = rng.affine_map(field, 1 + (i / 2) % 2);
        check_canonical(io::to_json(f), io::map_from_json);
        CHECK(io::map_from_json(io::parse(io::dump(io::to_json(f)))) == f);

        const auto s = signature(f);
        check_canonical(io::to_json(s), io::signature_from_json);
        CHECK(io::signature_from_json(io::to_json(s)) == s);
    }
    for (int i = 0; i < 100; ++i) {
        const auto [f, g] = rng.line_pair();
        check_canonical(io::to_json(synthesize(f, g)), io::homeomorphism_from_json);
        const auto f2 = rng.nofix_bijective(), g2 = rng.nofix_bijective();
        const auto h2 = synthesize(f2, g2);
        check_canonical(io::to_json(h2), io::homeomorphism_from_json);
        CHECK(verify_conjugacy(f2, g2, io::homeomorphism_from_json(io::to_json(h2)), {200}).pass);
    }
    Homeomorphism h = single(Field::Complex, 1, Conjugate{});
    h = compose(h, single(Field::Complex, 1, Translate{ExactVector(Vector<G>{G(R(1, 2), -3)})}));
    h.chain[1].inverse = true;
    check_canonical(io::to_json(h), io::homeomorphism_from_json);

    const VerificationReport r{100, 10, 1.5e-12, 3e-17, true, 1e-9};
    check_canonical(io::to_json(r), io::report_from_json);
}

TEST_CASE("homeomorphism documents") {
    const Json h{{"field", "R"},
                 {"dim", 1},
                 {"chain", {{{"map", "SignedPower1D"}, {"center_in", "1"}, {"center_out", "0.5"}, {"l", "2"}, {"direction", "inverse"}}}}};
    const auto parsed = io::homeomorphism_from_json(h);
    REQUIRE(parsed.chain.size() == 1);
    CHECK(parsed.chain[0].inverse);
    const auto& p = std::get<SignedPower1D>(parsed.chain[0].map);
    CHECK(p.center_out == R(1, 2));
    CHECK(p.l.value == 2);
    CHECK(homeo_apply(parsed, {4.5})[0] == doctest::Approx(3));

    auto bad = [](Json j) {
        try {
            io::homeomorphism_from_json(j);
        } catch (const Error& e) {
            return e.code() == ErrorCode::Parse;
        }
        return false;
    };
    Json zero_l = h;
    zero_l["chain"][0]["l"] = "0";
    CHECK(bad(zero_l));
    Json word_l = h;
    word_l["chain"][0]["l"] = "two";
    CHECK(bad(word_l));
    CHECK(bad(Json{{"field", "R"}, {"dim", 1}, {"chain", {{{"map", "Linear"}, {"B", {{"0"}}}}}}}));
    CHECK(bad(Json{{"field", "R"}, {"dim", 1}, {"chain", {{{"map", "ParabolicShear"}}}}}));
    CHECK(bad(Json{{"field", "R"}, {"dim", 1}, {"chain", {{{"map", "Rotate"}}}}}));
}

TEST_CASE("cmd_classify examples") {
    const auto r1 = cli::cmd_classify(line_doc("1", "1"));
    CHECK(r1.exit_code == 0);
    CHECK(r1.document["status"] == "NoFixedPoint");
    CHECK(r1.document["singular"] == false);

    const auto r2 = cli::cmd_classify(plane_doc({{"1", "1"}, {"0", "1"}}, {"0", "1"}));
    CHECK(r2.document["status"] == "NoFixedPoint");
    CHECK(r2.document["singular"] == false);

    const auto r3 = cli::cmd_classify(plane_doc({{"1", "0"}, {"0", "1"}}, {"0", "0"}));
    CHECK(r3.document["status"] == "HasFixedPoint");
    const Json units = r3.document["blocks"]["unit_blocks"];
    REQUIRE(units.size() == 2);
    CHECK(units[0]["kind"] == "One");
    CHECK(units[1]["kind"] == "One");

    const Json cube{{"field", "R"}, {"dim", 3}, {"A", {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}}, {"b", {"0", "0", "0"}}};
    CHECK(cli::cmd_classify(cube).exit_code == cli::kUnsupportedDimension);
    CHECK(cli::cmd_classify(Json{{"field", "R"}}).exit_code == cli::kParse);
}

TEST_CASE("orbit dump") {
    const auto r = cli::cmd_classify(line_doc("1/2", "1"), cli::OrbitRequest{3, {}});
    CHECK(r.document["orbit"] == Json{{0.0}, {1.0}, {1.5}, {1.75}});
    const auto rot = cli::cmd_classify(Json{{"field", "C"}, {"dim", 1}, {"A", {{{{"re", "0"}, {"im", "1"}}}}}, {"b", {"0"}}},
                                       cli::OrbitRequest{4, {R(1), R(0)}});
    CHECK(rot.document["orbit"] == Json{{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}, {1.0, 0.0}});
    CHECK(cli::cmd_classify(line_doc("2", "0"), cli::OrbitRequest{2, {R(1), R(1)}}).exit_code == cli::kParse);
}

TEST_CASE("cmd_compare examples") {
    cli::CompareOptions opt;
    opt.synthesize = opt.verify = true;
    const auto r1 = cli::cmd_compare(line_doc("1/2", "3"), line_doc("1/4", "0"), opt);
    CHECK(r1.exit_code == 0);
    CHECK(r1.document["conjugate"] == true);
    CHECK(r1.document["basis"] == "Prop3.2");
    CHECK(r1.document["witness"]["chain"][0]["map"] == "SignedPower1D");
    CHECK(r1.document["witness"]["chain"][0]["center_in"] == "6");
    CHECK(r1.document["verification"]["pass"] == true);

    const auto glide = plane_doc({{"1", "0"}, {"0", "-1"}}, {"1", "0"});
    const auto shift = plane_doc({{"1", "0"}, {"0", "1"}}, {"0", "1"});
    const auto r2 = cli::cmd_compare(glide, shift, opt);
    CHECK(r2.exit_code == cli::kSynthUnsupported);
    CHECK(r2.document["conjugate"] == true);
    CHECK_FALSE(r2.document.contains("witness"));
    std::vector<std::string> codes;
    for (const auto& w : r2.document["warnings"]) codes.push_back(w["code"]);
    CHECK(codes == std::vector<std::string>{kOrientationMismatch, kSynthUnsupported});
    // without --synthesize the verdict alone decides the exit code
    CHECK(cli::cmd_compare(glide, shift).exit_code == 0);

    const auto r3 = cli::cmd_compare(line_doc("1", "1"), line_doc("1", "0"));
    CHECK(r3.exit_code == 1);
    CHECK(r3.document["conjugate"] == false);
    CHECK(r3.document["distinguishing_invariant"] == "fixed-point count");

    CHECK(cli::cmd_compare(line_doc("1", "1"), shift).exit_code == cli::kMismatch);
    CHECK(cli::cmd_compare(line_doc("x", "1"), line_doc("1", "1")).exit_code == cli::kParse);
}

TEST_CASE("compare is symmetric and deterministic") {
    test::Rng rng(103);
    for (int i = 0; i < 200; ++i) {
        const Field field = i % 2 ? Field::Real : Field::Complex;
        const std::size_t n = 1 + (i / 2) % 2;
        const auto f = rng.affine_map(field, n);
        const auto g = rng.coin(0.5) ? test::conjugated(f, rng.affine_change(field, n)) : rng.affine_map(field, n);
        const auto fg = cli::cmd_compare(io::to_json(f), io::to_json(g));
        const auto gf = cli::cmd_compare(io::to_json(g), io::to_json(f));
        CHECK(fg.document["conjugate"] == gf.document["conjugate"]);
        CHECK(fg.exit_code == gf.exit_code);
        CHECK(io::dump(cli::cmd_compare(io::to_json(f), io::to_json(g)).document) == io::dump(fg.document));
    }
}

TEST_CASE("cmd_verify examples") {
    const VerificationSpec spec{10000, 10, 1e-9};
    // (x1, x2) -> (2 x1, x2 + 5) carries diag(1,0)x + (1,0) to diag(1,0)x + (2,5)
    const auto f = plane_doc({{"1", "0"}, {"0", "0"}}, {"1", "0"});
    const auto g = plane_doc({{"1", "0"}, {"0", "0"}}, {"2", "5"});
    const Json phi2{{"field", "R"},
                    {"dim", 2},
                    {"chain", {{{"map", "Translate"}, {"v", {"0", "5"}}}, {{"map", "Linear"}, {"B", Json::array({{"2", "0"}, {"0", "1"}})}}}}};
    const auto r1 = cli::cmd_verify(f, g, phi2, spec);
    CHECK(r1.exit_code == 0);
    CHECK(r1.document["pass"] == true);

    const Json id{{"field", "R"}, {"dim", 1}, {"chain", Json::array()}};
    CHECK(cli::cmd_verify(line_doc("2", "1"), line_doc("2", "1"), id, spec).exit_code == 0);

    // identity between x + 1 and x + 2: residual 1 / (1 + |x + 2|), largest at the sample nearest -2
    const auto r3 = cli::cmd_verify(line_doc("1", "1"), line_doc("1", "2"), id, spec);
    CHECK(r3.exit_code == 1);
    double expected = 0;
    for (std::size_t i = 0; i < spec.samples; ++i)
        expected = std::max(expected, 1 / (1 + std::fabs(sample_point(i, 1, 10)[0] + 2)));
    CHECK(r3.document["max_residual"].get<double>() == doctest::Approx(expected).epsilon(1e-12));

    CHECK(cli::cmd_verify(f, g, Json{{"field", "R"}}, spec).exit_code == cli::kParse);
    CHECK(cli::cmd_verify(f, line_doc("1", "1"), id, spec).exit_code == cli::kMismatch);
}

TEST_CASE("tolerance from the environment") {
    ::setenv("CONJCLASS_TOL", "1e-6", 1);
    CHECK(cli::default_tolerance() == 1e-6);
    CHECK(cli::CompareOptions{}.spec.tolerance == 1e-6);
    ::setenv("CONJCLASS_TOL", "tight", 1);
    CHECK(cli::default_tolerance() == 1e-9);
    ::unsetenv("CONJCLASS_TOL");
    CHECK(cli::default_tolerance() == 1e-9);
}

TEST_CASE("command line") {
    std::string out;
    CHECK(run({"classify"}, io::dump(line_doc("1", "1")), &out) == 0);
    CHECK(io::parse(out)["status"] == "NoFixedPoint");

    const Json pair{{"f", line_doc("1/2", "3")}, {"g", line_doc("1/4", "0")}};
    CHECK(run({"compare", "--verify", "--samples", "500"}, io::dump(pair), &out) == 0);
    CHECK(io::parse(out)["verification"]["samples"] == 500);
    CHECK(run({"compare"}, R"({"f":{"field":"R","dim":1,"A":[["1"]],"b":["1"]},"g":{"field":"R","dim":1,"A":[["1"]],"b":["0"]}})") == 1);
    CHECK(run({"compare"}, "not json", &out) == 2);
    CHECK(io::parse(out)["error"]["code"] == "Parse");
    CHECK(run({"compare", "--tol", "-1"}, io::dump(pair)) == 2);
    CHECK(run({}, "") == 2);
    CHECK(run({"--help"}, "", &out) == 0);

    const Json triple{{"f", line_doc("2", "1")}, {"g", line_doc("2", "1")}, {"h", {{"field", "R"}, {"dim", 1}, {"chain", Json::array()}}}};
    CHECK(run({"verify"}, io::dump(triple), &out) == 0);
    CHECK(io::parse(out)["pass"] == true);

    CHECK(run({"classify", "--emit-orbit", "2"}, io::dump(line_doc("2", "1")), &out) == 0);
    CHECK(io::parse(out)["orbit"] == Json{{0.0}, {1.0}, {3.0}});
}

TEST_CASE("batch mode") {
    const std::string lines = io::dump(Json{{"f", line_doc("1/2", "3")}, {"g", line_doc("1/4", "0")}}) + "\n\n" +
                              "{broken\n" + io::dump(Json{{"f", line_doc("1", "1")}, {"g", line_doc("1", "0")}}) + "\n";
    std::string out;
    CHECK(run({"compare", "--batch"}, lines, &out) == 2);
    std::istringstream s(out);
    std::vector<Json> docs;
    for (std::string l; std::getline(s, l);) docs.push_back(io::parse(l));
    REQUIRE(docs.size() == 3);
    CHECK(docs[0]["exit_code"] == 0);
    CHECK(docs[1]["exit_code"] == 2);
    CHECK(docs[1]["error"]["code"] == "Parse");
    CHECK(docs[2]["exit_code"] == 1);

    CHECK(run({"compare", "--batch"}, io::dump(Json{{"f", line_doc("1", "1")}, {"g", line_doc("1", "0")}})) == 0);
}
