#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sic/contextuality.hpp"
#include "sic/ray.hpp"

using namespace sic;

namespace {

std::vector<QuadScalar> ints(std::initializer_list<std::int64_t> xs)
{
    return {xs.begin(), xs.end()};
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::int64_t> num(-9, 9);
    std::uniform_int_distribution<std::int64_t> den(1, 6);
    return Rational(num(rng), den(rng));
}

QuadScalar random_scalar(std::mt19937_64& rng, std::int64_t m)
{
    return QuadScalar(random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng), m);
}

QuadScalar random_nonzero(std::mt19937_64& rng, std::int64_t m)
{
    QuadScalar x;
    do
        x = random_scalar(rng, m);
    while (x.is_zero());
    return x;
}

} // namespace

TEST_CASE("Rational is kept in lowest terms")
{
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(4, -6).denominator() == 3);
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational::parse("-12/8") == Rational(-3, 2));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("Rational arithmetic does not overflow")
{
    Rational x(1);
    for (int i = 0; i < 100; ++i)
        x *= Rational(std::int64_t{1} << 40, 3);
    for (int i = 0; i < 100; ++i)
        x /= Rational(std::int64_t{1} << 40, 3);
    CHECK(x == Rational(1));
}

TEST_CASE("square-free check")
{
    CHECK(is_square_free(0));
    CHECK(is_square_free(1));
    CHECK(is_square_free(2));
    CHECK(is_square_free(30));
    CHECK_FALSE(is_square_free(4));
    CHECK_FALSE(is_square_free(18));
    CHECK_FALSE(is_square_free(-2));
}

TEST_CASE("QuadScalar folds sqrt(0) and sqrt(1)")
{
    const QuadScalar x(1, 2, 3, 4, 1);
    CHECK(x == QuadScalar(3, 0, 7, 0, 1));
    CHECK_FALSE(x.has_surd());
    const QuadScalar y(1, 2, 3, 4, 0);
    CHECK(y == QuadScalar(1, 0, 3, 0, 5));
    CHECK_THROWS_AS(QuadScalar(1, 1, 0, 0, 8), std::invalid_argument);
}

TEST_CASE("QuadScalar arithmetic in Q(sqrt 2, i)")
{
    const QuadScalar r2 = QuadScalar::sqrt_of(2);
    const QuadScalar i = QuadScalar::imaginary_unit();
    CHECK(r2 * r2 == QuadScalar(2));
    CHECK(i * i == QuadScalar(-1));
    CHECK((r2 * i).conj() == -(r2 * i));
    CHECK((QuadScalar(1) + r2) * (QuadScalar(1) - r2) == QuadScalar(-1));
    CHECK((QuadScalar(3) + r2 * i).inverse() * (QuadScalar(3) + r2 * i) == QuadScalar(1));
    CHECK_THROWS_AS(QuadScalar(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(QuadScalar::sqrt_of(2) + QuadScalar::sqrt_of(3), std::invalid_argument);
    CHECK(QuadScalar::sqrt_of(3) * 2 == QuadScalar(0, 2, 0, 0, 3));
}

TEST_CASE("QuadScalar parse")
{
    CHECK(QuadScalar::parse("-3/4", 2) == QuadScalar(Rational(-3, 4)));
    CHECK(QuadScalar::parse("(0,1,0,0)", 2) == QuadScalar::sqrt_of(2));
    CHECK(QuadScalar::parse("(1/2,0,-1,1/3)", 5) == QuadScalar(Rational(1, 2), 0, -1, Rational(1, 3), 5));
    CHECK_THROWS(QuadScalar::parse("(1,2,3)", 2));
    CHECK_THROWS(QuadScalar::parse("(1,2,3,4", 2));
    CHECK_THROWS(QuadScalar::parse("(1, 2,3,4)", 2));
}

TEST_CASE("field axioms hold on random elements")
{
    std::mt19937_64 rng(7);
    for (std::int64_t m : {1, 2, 3, 5}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto x = random_nonzero(rng, m);
            const auto y = random_scalar(rng, m);
            const auto z = random_scalar(rng, m);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * x.inverse() == QuadScalar(1));
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK((y / x) * x == y);
        }
    }
}

TEST_CASE("canonicalize examples")
{
    CHECK(Ray(ints({0, 2, -2})).components() == ints({0, 1, -1}));
    CHECK(Ray(ints({1, 1, 1})).components() == ints({1, 1, 1}));
    CHECK(Ray(ints({0, 0, -3})).components() == ints({0, 0, 1}));
    CHECK(Ray({QuadScalar(0), QuadScalar::imaginary_unit(), QuadScalar(0)}).components() == ints({0, 1, 0}));
    CHECK_THROWS_WITH_AS(Ray(ints({0, 0, 0})), "zero ray", std::invalid_argument);
}

TEST_CASE("canonicalize is projectively invariant")
{
    std::mt19937_64 rng(11);
    for (std::int64_t m : {1, 2, 3, 5}) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<QuadScalar> u;
            for (int k = 0; k < 4; ++k)
                u.push_back(trial % 3 == 0 && k == 0 ? QuadScalar(0) : random_scalar(rng, m));
            if (std::all_of(u.begin(), u.end(), [](const QuadScalar& x) { return x.is_zero(); }))
                continue;
            const auto lambda = random_nonzero(rng, m);
            std::vector<QuadScalar> scaled;
            for (const auto& x : u)
                scaled.push_back(lambda * x);
            const Ray r(u);
            CHECK(Ray(scaled) == r);
            CHECK(canonicalize(r) == r);
            CHECK(Ray(r.components()) == r);
        }
    }
}

TEST_CASE("inner product and orthogonality examples")
{
    CHECK(inner_product(Ray(ints({1, 1, 1})), Ray(ints({0, 1, -1}))).is_zero());
    CHECK(inner_product(Ray(ints({1, 0, 0})), Ray(ints({1, 0, 0}))) == QuadScalar(1));
    const QuadScalar r2 = QuadScalar::sqrt_of(2);
    // (1, sqrt2) canonical stays; (sqrt2, -1) canonicalizes to (1, -1/sqrt2).
    CHECK(inner_product(Ray({QuadScalar(1), r2}), Ray({r2, QuadScalar(-1)})).is_zero());

    CHECK(is_orthogonal(Ray(ints({1, 0, 0})), Ray(ints({0, 1, 1}))));
    CHECK(is_orthogonal(Ray(ints({1, 1, 0})), Ray(ints({1, -1, 1}))));
    CHECK_FALSE(is_orthogonal(Ray(ints({1, 1, 1})), Ray(ints({1, 1, -1}))));
    CHECK(inner_product(Ray(ints({1, 1, 1})), Ray(ints({1, 1, -1}))) == QuadScalar(1));
    CHECK_THROWS_AS(inner_product(Ray(ints({1, 0})), Ray(ints({1, 0, 0}))), std::invalid_argument);

    // <(1,i),(1,-i)> = 1 + conj(i)(-i) = 1 + i^2 = 0
    const QuadScalar i = QuadScalar::imaginary_unit();
    CHECK(is_orthogonal(Ray({QuadScalar(1), i}), Ray({QuadScalar(1), -i})));
    CHECK_FALSE(is_orthogonal(Ray({QuadScalar(1), i}), Ray({QuadScalar(1), i})));
}

TEST_CASE("inner product is conjugate symmetric and orthogonality symmetric")
{
    std::mt19937_64 rng(5);
    for (std::int64_t m : {1, 2, 3, 5}) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<QuadScalar> u, v;
            for (int k = 0; k < 3; ++k) {
                u.push_back(random_scalar(rng, m));
                v.push_back(random_scalar(rng, m));
            }
            u[0] = random_nonzero(rng, m);
            v[1] = random_nonzero(rng, m);
            const Ray ru(u), rv(v);
            CHECK(inner_product(ru, rv) == inner_product(rv, ru).conj());
            CHECK(is_orthogonal(ru, rv) == is_orthogonal(rv, ru));
        }
    }
}

TEST_CASE("orthogonality agrees with an independent big-integer recomputation")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> num(-3, 3);
    std::uniform_int_distribution<std::int64_t> den(1, 4);
    std::size_t orthogonal = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<std::pair<std::int64_t, std::int64_t>> u(3), v(3);
        for (auto& x : u)
            x = {num(rng), den(rng)};
        for (auto& x : v)
            x = {num(rng), den(rng)};
        // Force frequent orthogonal pairs: choose v[2] so that the sum cancels when possible.
        if (trial % 2 == 0 && u[2].first != 0) {
            // v2 = -(u0 v0 + u1 v1) / u2 as an exact rational via Rational
            Rational s = Rational(u[0].first, u[0].second) * Rational(v[0].first, v[0].second)
                + Rational(u[1].first, u[1].second) * Rational(v[1].first, v[1].second);
            const Rational v2 = -s / Rational(u[2].first, u[2].second);
            if (v2.numerator().fits_slong_p() && v2.denominator().fits_slong_p())
                v[2] = {v2.numerator().get_si(), v2.denominator().get_si()};
        }
        auto to_ray = [](const auto& xs) {
            std::vector<QuadScalar> c;
            for (const auto& [p, q] : xs)
                c.emplace_back(Rational(p, q));
            return c;
        };
        auto cu = to_ray(u), cv = to_ray(v);
        const auto nonzero = [](const auto& c) {
            return std::any_of(c.begin(), c.end(), [](const QuadScalar& x) { return !x.is_zero(); });
        };
        if (!nonzero(cu) || !nonzero(cv))
            continue;
        const bool expected = oracle::rational_inner_product_is_zero(u, v);
        orthogonal += expected;
        CHECK(is_orthogonal(Ray(cu), Ray(cv)) == expected);
    }
    CHECK(orthogonal > 100);
}

TEST_CASE("parse_rayset basics")
{
    const RaySet s = parse_rayset("dim 3\nsqrt 1\nray 1 0 0\nray 0 1 1\n");
    CHECK(s.dim() == 3);
    CHECK(s.size() == 2);
    CHECK(s[1].components() == ints({0, 1, 1}));

    const RaySet merged = parse_rayset("dim 3\nsqrt 1\nray 2 0 0\nray 1 0 0\n");
    CHECK(merged.size() == 1);
    CHECK_THROWS_AS(parse_rayset("dim 3\nsqrt 1\nray 2 0 0\nray 1 0 0\n", DedupPolicy::reject), ParseError);

    const RaySet with_root = parse_rayset("# comment\n\ndim 2\nsqrt 2\nray (0,1,0,0) 1\n");
    CHECK(with_root[0].components()[0] == QuadScalar(1));
    CHECK(with_root[0].components()[1] * QuadScalar::sqrt_of(2) == QuadScalar(1));
}

TEST_CASE("parse_rayset errors carry locations")
{
    auto error_at = [](std::string_view text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_rayset(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    CHECK(error_at("dim 3\nsqrt 1\nray 1 0\n") == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(error_at("dim 3\nsqrt 1\nray 1 x 0\n") == std::pair<std::size_t, std::size_t>{3, 7});
    CHECK(error_at("dim 3\nsqrt 4\n") == std::pair<std::size_t, std::size_t>{2, 6});
    CHECK(error_at("dim 3\nray 1 0 0\n") == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(error_at("dim 3\nsqrt 1\nray 0 0 0\n") == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(error_at("dim 3\ndim 3\n") == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(error_at("dim 3\nsqrt 1\nray 1 0 0\nsqrt 2\n") == std::pair<std::size_t, std::size_t>{4, 1});
    CHECK(error_at("bogus\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(error_at("dim 3\n") == std::pair<std::size_t, std::size_t>{2, 1});
}

TEST_CASE("serialize/parse round trip on random sets")
{
    std::mt19937_64 rng(3);
    for (std::int64_t m : {0, 1, 2, 3, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            RaySet s(3, m);
            for (int r = 0; r < 6; ++r) {
                std::vector<QuadScalar> c;
                for (int k = 0; k < 3; ++k)
                    c.push_back(random_scalar(rng, m));
                c[r % 3] = random_nonzero(rng, m);
                s.add(Ray(c));
            }
            const RaySet back = parse_rayset(serialize_rayset(s), DedupPolicy::reject);
            CHECK(back == s);
        }
    }
}

TEST_CASE("shipped Yu-Oh file has 13 rays")
{
    const RaySet s = load_rayset(std::string(SIC_DATA_DIR) + "/yu-oh-13.rays", DedupPolicy::reject);
    CHECK(s.dim() == 3);
    CHECK(s.size() == 13);
    CHECK(s == catalog_get("yu-oh-13"));
}
