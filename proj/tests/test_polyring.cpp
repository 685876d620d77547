#include <doctest.h>

#include <functional>
#include <random>

#include "qfs/polyring.hpp"
#include "qfs/catalogue.hpp"
#include "support.hpp"

using namespace qfs;

namespace {

RingPtr ring(std::uint32_t p, std::vector<std::uint32_t> w = {1, 1, 1, 1}) {
    return Ring::make(Field::prime(p), std::move(w));
}

// Delta straight from the definition: sum over compositions alpha of p into
// the terms of f, parts <= p-1, of (multinomial(p; alpha) / p) prod (c M)^alpha,
// with the integer multinomial computed exactly.
Polynomial delta_by_compositions(const Polynomial& f) {
    const auto& r = f.ring_ptr();
    const std::uint32_t p = f.ring().characteristic();
    const auto terms = f.terms();
    Polynomial out(r);
    std::vector<std::uint32_t> alpha(terms.size(), 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (i == terms.size()) {
            if (left != 0) return;
            std::vector<std::uint32_t> parts;
            Polynomial prod = Polynomial::constant(r, 1);
            for (std::size_t j = 0; j < terms.size(); ++j) {
                if (alpha[j] == 0) continue;
                parts.push_back(alpha[j]);
                prod = prod * poly_pow(Polynomial::monomial(r, terms[j].exponent, terms[j].coeff), alpha[j]);
            }
            out = out + prod.scaled(f.ring().field().from_integer(multinomial_over_p_exact(parts, p)));
            return;
        }
        for (std::uint32_t a = 0; a <= std::min(left, p - 1); ++a) {
            alpha[i] = a;
            rec(i + 1, left - a);
        }
        alpha[i] = 0;
    };
    rec(0, p);
    return out;
}

} // namespace

TEST_SUITE("polyring") {

TEST_CASE("parsing") {
    auto r3 = ring(3);
    auto f = parse_poly("x0^4+x1^4+x2^4+x3^4", r3);
    CHECK(f.size() == 4);
    CHECK(f == parse_poly("x^4 + y^4 + z^4 + w^4", r3));
    CHECK(f.homogeneous_degree() == 4u);

    auto s = parse_poly("x0^6+x1^6+x2^6+x3^2", ring(3, {1, 1, 1, 3}));
    CHECK(s.size() == 4);
    for (const auto& t : s.terms()) CHECK(s.ring().weighted_degree(t.exponent) == 6);

    CHECK(parse_poly("x0 - x0", r3).is_zero());
    CHECK(parse_poly("2*x*y^3 + 5 x y^3", r3) == parse_poly("x y^3", r3));
    CHECK(parse_poly("-x^4", r3) == parse_poly("2x^4", r3));

    CHECK_THROWS_WITH_AS(parse_poly("x0 + u", r3), doctest::Contains("unknown variable 'u'"), UsageError);
    CHECK_THROWS_WITH_AS(parse_poly("x0 + ", r3), doctest::Contains("syntax error at offset"), UsageError);
    CHECK_THROWS_AS(parse_poly("x0 ^", r3), UsageError);
    CHECK_THROWS_AS(parse_poly("x0 * * x1", r3), UsageError);
    CHECK_THROWS_AS(parse_poly("(t) x0", r3), UsageError);
    CHECK_THROWS_AS(parse_poly("", r3), UsageError);

    auto f4 = Ring::make(Field::extension(2, 2), {1, 1, 1, 1});
    auto g = parse_poly("(t+1)*x^4 + (t) y^4 + z^4", f4);
    CHECK(g.coefficient(ExponentVector{{4, 0, 0, 0}}) == f4->field().parse("t+1"));
}

TEST_CASE("format round trip") {
    std::mt19937_64 rng(5);
    for (auto r : {ring(2), ring(7), Ring::make(Field::extension(3, 2), {1, 1, 1, 3}),
                   Ring::make(Field::prime(5), {1, 2, 3, 4, 5, 6})}) {
        for (int i = 0; i < 50; ++i) {
            const auto f = test::random_poly(r, rng, 6, 5);
            CHECK(parse_poly(format_poly(f), r) == f);
        }
    }
}

TEST_CASE("products and powers") {
    auto r2 = ring(2), r3 = ring(3);
    CHECK(poly_pow(parse_poly("x+y", r2), 2) == parse_poly("x^2+y^2", r2));
    CHECK(poly_pow(parse_poly("x+y", r3), 3) == parse_poly("x^3+y^3", r3));
    CHECK(poly_pow(parse_poly("x+y", r3), 0) == Polynomial::constant(r3, 1));
    CHECK(poly_pow(parse_poly("x+y", r3), 2) == parse_poly("x^2+2xy+y^2", r3));
    CHECK(multiply_truncated(parse_poly("x^2+y", r2), parse_poly("x+y", r2), 3) == parse_poly("x^2y+xy+y^2", r2));
    CHECK(parse_poly("x^3y", r3).partial_derivative(0).is_zero());
    CHECK(parse_poly("x^2y", r3).partial_derivative(0) == parse_poly("2xy", r3));
    const auto big = Polynomial::monomial(r2, ExponentVector{{1u << 31, 0, 0, 0}});
    CHECK_THROWS_AS(big * big, ResourceError);
}

TEST_CASE("p-th power is the Frobenius image") {
    std::mt19937_64 rng(7);
    for (auto r : {ring(2), ring(3), ring(5), Ring::make(Field::extension(2, 3), {1, 1, 1, 1})}) {
        for (int i = 0; i < 30; ++i) {
            const auto f = test::random_poly(r, rng, 5, 4);
            CHECK(poly_pow(f, r->characteristic()) == f.frobenius_power(1));
            CHECK(f * f * f == poly_pow(f, 3));
        }
    }
}

TEST_CASE("delta examples") {
    auto r2 = ring(2), r3 = ring(3);
    CHECK(delta(parse_poly("x+y", r2)) == parse_poly("xy", r2));
    CHECK(delta(parse_poly("x+y", r3)) == parse_poly("x^2y+xy^2", r3));
    CHECK(delta(parse_poly("x^2+xy", r2)) == parse_poly("x^3y", r2));
    CHECK(delta(parse_poly("2x", r3)).is_zero());
    CHECK(delta(Polynomial(r3)).is_zero());
    CHECK(delta_lift_oracle(parse_poly("x+y", r2)) == parse_poly("xy", r2));
    CHECK(delta_lift_oracle(parse_poly("2x", r3)).is_zero());
    const auto rem = parse_poly(quartic_ns2_f2().equation, r2);
    CHECK(in_frobenius_power(delta(rem), 2));
    CHECK_THROWS_AS(delta_lift_oracle(parse_poly("x", Ring::make(Field::extension(2, 2), {1, 1}))), UsageError);
}

TEST_CASE("multinomial residue") {
    const std::uint32_t a[] = {1, 1};
    CHECK(multinomial_over_p_exact(a, 2) == 1);
    const std::uint32_t b[] = {1, 2};
    CHECK(multinomial_over_p_exact(b, 3) == 1);
    const std::uint32_t c[] = {2, 2, 3}; // 7!/(2!2!3!) = 210, /7 = 30
    CHECK(multinomial_over_p_exact(c, 7) == 30 % 7);
}

TEST_CASE("delta agrees with the composition sum") {
    std::mt19937_64 rng(13);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        auto r = ring(p);
        for (int i = 0; i < 20; ++i) {
            const auto f = test::random_poly(r, rng, p <= 3 ? 6 : 4, 3);
            CHECK(delta(f) == delta_by_compositions(f));
        }
    }
    auto r = Ring::make(Field::extension(3, 2), {1, 1, 1, 1});
    for (int i = 0; i < 20; ++i) {
        const auto f = test::random_poly(r, rng, 5, 3);
        CHECK(delta(f) == delta_by_compositions(f));
    }
}

TEST_CASE("delta agrees with the lift to Z/p^2") {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto r = ring(p);
        const MonomialBasis b(r);
        for (int i = 0; i < 200; ++i) {
            const auto f = i % 2 ? test::random_form(b, rng) : test::random_poly(r, rng, 7, 4);
            CHECK(delta(f) == delta_lift_oracle(f));
        }
    }
}

TEST_CASE("delta raises the degree by a factor p") {
    for (const auto* rows : {&quartics_f2(), &quartics_f3()}) {
        for (const auto& row : *rows) {
            auto r = ring(row.p);
            CHECK(delta(parse_poly(row.equation, r)).homogeneous_degree() == 4u * row.p);
        }
    }
    auto q = Ring::make(Field::prime(2), quintic_f2().weights);
    CHECK(delta(parse_poly(quintic_f2().equation, q)).homogeneous_degree() == 10u);
}

TEST_CASE("u operator") {
    auto r3 = ring(3);
    CHECK(u_op(parse_poly("x^2y^2z^2w^2", r3)) == Polynomial::constant(r3, 1));
    CHECK(u_op(parse_poly("x^5y^2z^2w^2", r3)) == parse_poly("x", r3));
    CHECK(u_op(parse_poly("x^3y^2z^2w^2", r3)).is_zero());
    CHECK(u_op_iterated(parse_poly("x^8y^8z^8w^8", r3), 2) == Polynomial::constant(r3, 1));
}

TEST_CASE("u is semilinear") {
    std::mt19937_64 rng(19);
    for (auto r : {ring(2), ring(3), Ring::make(Field::extension(2, 2), {1, 1, 1, 1})}) {
        for (int i = 0; i < 100; ++i) {
            const auto g = test::random_poly(r, rng, 3, 3);
            const auto a = test::random_poly(r, rng, 8, 6);
            CHECK(u_op(g.frobenius_power(1) * a) == g * u_op(a));
        }
    }
}

TEST_CASE("Frobenius power ideal") {
    auto r3 = ring(3);
    CHECK(in_frobenius_power(parse_poly("x^4+y^4+z^4+w^4", r3), 1));
    CHECK_FALSE(in_frobenius_power(parse_poly("x^2y^2z^2w^2", r3), 1));
    CHECK(corner_coefficient(parse_poly("x^2y^2z^2w^2 + x^8", r3), 1).raw() == 1);
    CHECK(corner_coefficient(Polynomial(r3), 1).is_zero());
    CHECK_THROWS_AS(corner_coefficient(parse_poly("x^4", r3), 1), UsageError);
}

TEST_CASE("ring validation") {
    CHECK_THROWS_AS(Ring::make(Field::prime(2), {1}), UsageError);
    CHECK_THROWS_AS(Ring::make(Field::prime(2), {1, 0}), UsageError);
    CHECK_THROWS_AS(parse_poly("x", ring(2)) + parse_poly("x", ring(3)), UsageError);
}

}
