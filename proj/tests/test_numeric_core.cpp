#include "conjclass/matrix.hpp"
#include "conjclass/solve.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace conjclass;

TEST_CASE("normalize_rational reduces and normalises sign") {
    CHECK(normalize_rational(2, 4) == Rational(1, 2));
    const Rational r = normalize_rational(3, -6);
    CHECK(r.num() == -1);
    CHECK(r.den() == 2);
    const Rational z = normalize_rational(0, 7);
    CHECK(z.num() == 0);
    CHECK(z.den() == 1);
    CHECK_THROWS_AS(normalize_rational(1, 0), Error);
    try {
        normalize_rational(5, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroDenominator);
    }
}

TEST_CASE("rational text format") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK(Rational::parse("-1.25") == Rational(-5, 4));
    CHECK(Rational::parse("2.5e-3") == Rational(1, 400));
    CHECK(Rational::parse("1e3") == Rational(1000));
    CHECK(Rational::parse(".75") == Rational(3, 4));
    CHECK(Rational(-1, 3).str() == "-1/3");
    CHECK(Rational(4).str() == "4");
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("nan"), Error);
    // leading zeros are decimal, not octal
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("010/08") == Rational(5, 4));
    CHECK(Rational::parse("-0.0625") == Rational(-1, 16));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("000") == Rational(0));
}

TEST_CASE("rational text round trips") {
    test::Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        const Rational r = rng.rational(10000, 999);
        CHECK(Rational::parse(r.str()) == r);
        // k / 10^j written with zero padding
        const long k = rng.integer(-99999, 99999);
        const int j = static_cast<int>(rng.integer(0, 6));
        std::string digits = std::to_string(std::labs(k));
        if (static_cast<int>(digits.size()) <= j) digits.insert(0, j + 1 - digits.size(), '0');
        const std::string text = (k < 0 ? "-" : "") + digits.substr(0, digits.size() - j) + "." + digits.substr(digits.size() - j) + "0";
        long den = 1;
        for (int e = 0; e < j; ++e) den *= 10;
        CHECK(Rational::parse(text) == Rational(Integer(k), Integer(den)));
    }
}

TEST_CASE("rational field axioms on random triples") {
    test::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const Rational a = rng.rational(50, 20), b = rng.rational(50, 20), c = rng.rational(50, 20);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("gaussian square roots") {
    const auto s = exact_sqrt(Gaussian(-4));
    REQUIRE(s);
    CHECK(*s * *s == Gaussian(-4));
    const Gaussian z(Rational(3), Rational(4));  // (2+i)^2
    const auto r = exact_sqrt(z);
    REQUIRE(r);
    CHECK(*r == Gaussian(2, 1));
    CHECK_FALSE(exact_sqrt(Gaussian(2)));
    CHECK_FALSE(exact_sqrt(Gaussian(Rational(1), Rational(1))));
}

TEST_CASE("quadratic numbers: canonical radicand and exact signs") {
    const QuadraticNumber s8 = QuadraticNumber::sqrt_of(8);
    CHECK(s8.radicand() == 2);
    CHECK(s8.surd_coefficient() == Rational(2));
    CHECK(QuadraticNumber::sqrt_of(Rational(9, 4)) == QuadraticNumber(Rational(3, 2)));
    CHECK(QuadraticNumber::sqrt_of(Rational(1, 2)).radicand() == 2);

    const QuadraticNumber golden = QuadraticNumber(Rational(1, 2)) + QuadraticNumber::sqrt_of(5) * QuadraticNumber(Rational(1, 2));
    CHECK(golden * golden == golden + QuadraticNumber(1));
    CHECK(golden > QuadraticNumber(Rational(161, 100)));
    CHECK(golden < QuadraticNumber(Rational(162, 100)));
    CHECK((golden * golden.inverse()) == QuadraticNumber(1));
    CHECK((QuadraticNumber(3) - QuadraticNumber::sqrt_of(9)).is_zero());
    // sqrt(2) vs sqrt(3) across radicands
    CHECK(QuadraticNumber::sqrt_of(2) < QuadraticNumber::sqrt_of(3));
    CHECK(QuadraticNumber(1) + QuadraticNumber::sqrt_of(2) > QuadraticNumber::sqrt_of(5));
    CHECK(surd_sign(Rational(-3), Rational(1), Rational(9)) == 0);
    CHECK(surd_sign(Rational(-3), Rational(1), Rational(10)) == 1);
}

TEST_CASE("squarefree split beyond the trial bound") {
    // 1000003 is prime and above the trial bound; its square is still detected.
    const Integer p = 1000003;
    const auto split = squarefree_split(p * p * 3);
    CHECK(split.square_root_of_square_part == p);
    CHECK(split.kernel == 3);
    CHECK(split.certified);
}

TEST_CASE("matrix_det examples") {
    CHECK(determinant(Matrix<Rational>{{1, 1}, {0, 1}}) == Rational(1));
    CHECK(determinant(Matrix<Rational>{{1, 0}, {0, 0}}) == Rational(0));
    const Matrix<Rational> ri = realify(Matrix<Gaussian>{{Gaussian::i()}});
    CHECK(ri == Matrix<Rational>{{0, -1}, {1, 0}});
    CHECK(determinant(ri) == Rational(1));
    CHECK(determinant(Matrix<Rational>(0, 0)) == Rational(1));
    CHECK(determinant(Matrix<Gaussian>{{Gaussian::i(), 1}, {0, Gaussian::i()}}) == Gaussian(-1));
}

TEST_CASE("matrix_rank examples") {
    CHECK(rank(Matrix<Rational>::identity(2)) == 2);
    CHECK(rank(Matrix<Rational>{{1, 0}, {0, 0}}) == 1);
    CHECK(rank(Matrix<Rational>{{2, 4}, {1, 2}}) == 1);
    CHECK(rank(Matrix<Rational>(0, 0)) == 0);
}

TEST_CASE("solve_affine_system examples") {
    using R = Rational;
    auto s1 = solve_affine_system(Matrix<R>{{1, 1}, {0, 1}}, Vector<R>{0, 1});
    CHECK(std::holds_alternative<EmptySet<R>>(s1));

    auto s2 = solve_affine_system(Matrix<R>::identity(2), Vector<R>{0, 0});
    CHECK(std::holds_alternative<WholeSpace<R>>(s2));

    // diag(1,2) x + (0,-1): fixed points {(t, 1)}
    auto s3 = solve_affine_system(Matrix<R>{{1, 0}, {0, 2}}, Vector<R>{0, -1});
    REQUIRE(std::holds_alternative<Coset<R>>(s3));
    const auto& coset = std::get<Coset<R>>(s3);
    CHECK(coset.base == Vector<R>{0, 1});
    REQUIRE(coset.basis.size() == 1);
    CHECK(coset.basis[0] == Vector<R>{1, 0});
    // substitute back: f(base + t*dir) == base + t*dir
    const Matrix<R> a{{1, 0}, {0, 2}};
    for (int t : {-3, 0, 5}) {
        const Vector<R> x = coset.base + scaled(R(t), coset.basis[0]);
        CHECK(a * x + Vector<R>{0, -1} == x);
    }
}

TEST_CASE("similarity invariance of det and rank") {
    test::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + i % 4;
        const auto m = rng.matrix(n, 6, 3, i % 3 == 0);
        const auto p = rng.invertible(n, 5, 2);
        const auto conj = p * m * inverse(p);
        CHECK(rank(conj) == rank(m));
        CHECK(determinant(conj) == determinant(m));
    }
}

TEST_CASE("unique fixed point iff det(A - E) != 0") {
    test::Rng rng(17);
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = 1 + i % 2;
        const auto a = rng.matrix(n, 3, 2, i % 5 == 0);
        const auto b = rng.vector(n, 3, 2);
        const auto s = solve_affine_system(a, b);
        const bool unique = std::holds_alternative<UniquePoint<Rational>>(s);
        CHECK(unique == !determinant(a - Matrix<Rational>::identity(n)).is_zero());
        if (unique) {
            const auto& v = std::get<UniquePoint<Rational>>(s).point;
            CHECK(a * v + b == v);
        }
    }
}

TEST_CASE("gaussian systems") {
    using G = Gaussian;
    // i z + 1 = z  =>  z = 1/(1 - i) = (1 + i)/2
    auto s = solve_affine_system(Matrix<G>{{G::i()}}, Vector<G>{G(1)});
    REQUIRE(std::holds_alternative<UniquePoint<G>>(s));
    CHECK(std::get<UniquePoint<G>>(s).point[0] == G(Rational(1, 2), Rational(1, 2)));
}
