#include <doctest.h>

#include <algorithm>
#include <random>

#include "qfs/cartier.hpp"
#include "qfs/catalogue.hpp"
#include "support.hpp"

using namespace qfs;

namespace {

RingPtr quartic_ring(std::uint32_t p) { return Ring::make(Field::prime(p), {1, 1, 1, 1}); }

Polynomial permuted(const Polynomial& f, const std::vector<std::size_t>& perm) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Term u = t;
        for (std::size_t i = 0; i < perm.size(); ++i) u.exponent[perm[i]] = t.exponent[i];
        terms.push_back(u);
    }
    return Polynomial::from_terms(f.ring_ptr(), std::move(terms));
}

Polynomial base_change(const Polynomial& f, const RingPtr& to) {
    std::vector<Term> terms(f.terms().begin(), f.terms().end());
    return Polynomial::from_terms(to, std::move(terms));
}

} // namespace

TEST_SUITE("cartier") {

TEST_CASE("basis sizes and order") {
    CHECK(basis(quartic_ring(2)).size() == 35);
    CHECK(basis(Ring::make(Field::prime(2), {1, 1, 1, 3})).size() == 39);
    CHECK(basis(Ring::make(Field::prime(2), {1, 1, 1, 1, 1})).size() == 126);
    const auto b = basis(quartic_ring(2));
    CHECK(b[0] == ExponentVector{{4, 0, 0, 0}});
    CHECK(b[34] == ExponentVector{{0, 0, 0, 4}});
    for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(b.ring().precedes(b[i], b[i + 1]));
    const auto s = basis(Ring::make(Field::prime(2), {1, 1, 1, 3}));
    CHECK(s[s.size() - 1] == ExponentVector{{0, 0, 0, 2}});
}

TEST_CASE("bundle basics") {
    auto r3 = quartic_ring(3);
    const auto fermat = bundle(parse_poly("x^4+y^4+z^4+w^4", r3));
    CHECK(fermat.lambda.is_zero());
    CHECK(fermat.basis.combine(fermat.v_f) == fermat.f);

    std::mt19937_64 rng(3);
    const auto b2 = basis(quartic_ring(2));
    for (int i = 0; i < 10; ++i) {
        const auto bb = bundle(test::random_form(b2, rng));
        std::size_t nonzero = 0;
        for (std::size_t j = 0; j < bb.m(); ++j) nonzero += bb.lambda.raw(j) != 0;
        CHECK(nonzero == 1);
        CHECK(bb.lambda.raw(*b2.index_of(ExponentVector{{1, 1, 1, 1}})) == 1);
        CHECK(bb.basis.combine(bb.v_f) == bb.f);
    }
    CHECK_THROWS_AS(bundle(parse_poly("x^3", r3)), UsageError);
    CHECK_THROWS_AS(bundle(parse_poly("x^4+y", r3)), UsageError);
    CHECK_THROWS_AS(bundle(Polynomial(r3)), UsageError);
}

TEST_CASE("heights") {
    CHECK_FALSE(height(bundle(parse_poly("x^4+y^4+z^4+w^4", quartic_ring(3)))).is_finite());
    CHECK(height(bundle(parse_poly("x^4+y^4+z^4+w^4", quartic_ring(5)))).value == 1u);
    CHECK(height(bundle(parse_poly("x^4+y^4+z^4+w^4", quartic_ring(3)))).cap == 35);
    CHECK(height(bundle(parse_poly("x^4+y^4+z^4+w^4", quartic_ring(3))), 7).cap == 7);
}

TEST_CASE("reference equations") {
    for (const auto* rows : {&quartics_f2(), &quartics_f3()}) {
        for (const auto& row : *rows) {
            CAPTURE(row.equation);
            const auto r = artin_report(parse_poly(row.equation, quartic_ring(row.p)));
            CHECK_FALSE(r.height.is_finite());
            CHECK(r.ns.value == row.ns);
            CHECK(r.tau->value == std::min(row.ns, 10u));
            CHECK(r.family == Family::quartic_k3);
        }
    }
    const auto rem = quartic_ns2_f2();
    CHECK(artin_report(parse_poly(rem.equation, quartic_ring(2))).ns.value == 2u);
}

TEST_CASE("report details") {
    const auto t2 = artin_report(parse_poly(quartics_f3()[3].equation, quartic_ring(3)));
    CHECK(t2.tau->value == 4u);
    CHECK(t2.sigma_note == SigmaNote::equals_tau);

    const auto f = parse_poly(quartics_f2()[4].equation, quartic_ring(2));
    const auto t1 = artin_report(f);
    CHECK(t1.ns.value == 7u);
    CHECK(t1.sigma_note == SigmaNote::equals_tau);
    REQUIRE(t1.line);
    for (const auto& t : f.terms()) CHECK((t.exponent[t1.line->first] > 0 || t.exponent[t1.line->second] > 0));
    CHECK(coordinate_line(parse_poly("x^4+y^4+z^4+w^4", quartic_ring(2))) == std::nullopt);
    // every term contains x or w, so x = w = 0 lies on it
    const auto xw = parse_poly("x^4+x^3y+xz^3+y^3w+w^4", quartic_ring(2));
    bool found = false;
    for (const auto& t : xw.terms()) found |= t.exponent[0] == 0 && t.exponent[3] == 0;
    CHECK_FALSE(found);

    const auto ord = artin_report(parse_poly("x^4+y^4+z^4+w^4", quartic_ring(5)));
    CHECK(ord.height.value == 1u);
    CHECK_FALSE(ord.ns.is_finite());
    CHECK_FALSE(ord.tau->is_finite());
    CHECK(ord.sigma_note == SigmaNote::not_applicable);

    const auto sext = artin_report(parse_poly("x0^6+x1^6+x2^6+x3^2", Ring::make(Field::prime(5), {1, 1, 1, 3})));
    CHECK(sext.family == Family::weighted_sextic_k3);
    CHECK(sext.ns.value == 1u);
    CHECK(sext.sigma_note == SigmaNote::equals_tau);

    const auto cy = artin_report(parse_poly("x^5+y^5+z^5+w^5+u^5", Ring::make(Field::prime(2), {1, 1, 1, 1, 1})));
    CHECK(cy.family == Family::general_cy);
    CHECK_FALSE(cy.tau);
}

TEST_CASE("ns equals one exactly when lambda vanishes") {
    std::mt19937_64 rng(23);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto b = basis(quartic_ring(p));
        for (int i = 0; i < 40; ++i) {
            const auto bb = bundle(test::random_form(b, rng));
            const bool one = ns_index(bb, CappedIndex{std::nullopt, 0}, std::nullopt).value == 1u;
            CHECK(one == bb.lambda.is_zero());
            CHECK(bb.lambda.is_zero() == in_frobenius_power(poly_pow(bb.f, p - 2), 1));
        }
    }
}

TEST_CASE("finite height keeps the rank rows independent") {
    std::mt19937_64 rng(29);
    for (std::uint32_t p : {2u, 3u}) {
        const auto b = basis(quartic_ring(p));
        for (int i = 0; i < 40; ++i) {
            const auto bb = bundle(test::random_form(b, rng));
            const auto h = height(bb);
            if (!h.is_finite()) {
                CHECK(ns_index(bb).is_finite());
                continue;
            }
            CHECK_FALSE(ns_index(bb).is_finite());
            const auto rows = krylov_rows(bb.lambda, bb.T, *h.value);
            CHECK(rank(rows) == *h.value);
        }
    }
}

TEST_CASE("invariance under permutations and scaling") {
    std::mt19937_64 rng(31);
    for (std::uint32_t p : {2u, 3u}) {
        const auto b = basis(quartic_ring(p));
        for (int i = 0; i < 25; ++i) {
            const auto f = i < 10 ? parse_poly((p == 2 ? quartics_f2() : quartics_f3())[i % 7].equation, quartic_ring(p))
                                  : test::random_form(b, rng);
            const auto base = artin_report(f);
            std::vector<std::size_t> perm{0, 1, 2, 3};
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto g = artin_report(permuted(f, perm));
            CHECK(g.height == base.height);
            CHECK(g.ns == base.ns);
            const std::uint32_t a = 1 + static_cast<std::uint32_t>(rng() % (p - 1));
            const auto s = artin_report(f.scaled(a));
            CHECK(s.height == base.height);
            CHECK(s.ns == base.ns);
        }
    }
}

TEST_CASE("base change to an extension field") {
    std::mt19937_64 rng(37);
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}}) {
        const auto small = quartic_ring(p);
        const auto big = Ring::make(Field::extension(p, e), {1, 1, 1, 1});
        const auto b = basis(small);
        for (int i = 0; i < 10; ++i) {
            const auto f = i < 3 ? parse_poly((p == 2 ? quartics_f2() : quartics_f3())[i].equation, small)
                                 : test::random_form(b, rng);
            const auto bs = bundle(f), bb = bundle(base_change(f, big));
            CHECK(height(bs).value == height(bb, 35).value);
            CHECK(ns_index(bs).value == ns_index(bb, height(bb, 35), std::nullopt).value);
        }
    }
}

TEST_CASE("Fedder oracle") {
    auto r3 = quartic_ring(3);
    const auto fermat = parse_poly("x^4+y^4+z^4+w^4", r3);
    CHECK(corner_coefficient(poly_pow(fermat, 2), 1).is_zero());
    const auto res = fedder_height_oracle(fermat, 3);
    CHECK_FALSE(res.height);
    CHECK(res.checked_through == 3);
    CHECK(fedder_height_oracle(parse_poly("x^4+y^4+z^4+w^4+xyzw", r3), 3).height == 1u);
    CHECK_THROWS_AS(fedder_height_oracle(fermat, 5), ResourceError);
    CHECK_THROWS_AS(fedder_height_oracle(parse_poly("x^4+y^4+z^4+w^4", quartic_ring(5)), 2), UsageError);

    std::mt19937_64 rng(41);
    for (std::uint32_t p : {2u, 3u}) {
        const auto b = basis(quartic_ring(p));
        for (int i = 0; i < 30; ++i) {
            const auto f = test::random_form(b, rng);
            const auto h = height(bundle(f), 3);
            CHECK(fedder_height_oracle(f, 3).height == h.value);
        }
    }
}

TEST_CASE("rank rows") {
    const auto bb = bundle(parse_poly(quartics_f2()[0].equation, quartic_ring(2)));
    const Vector zero(bb.basis.ring().field_ptr(), bb.m());
    CHECK(rank(g_matrix(bb, zero, 3)) == 2);
    CHECK(rank(g_matrix(bb, zero, 2)) == 2);
    std::mt19937_64 rng(43);
    const auto c = test::random_vector(bb.basis.ring().field_ptr(), bb.m(), rng);
    CHECK(g_matrix(bb, c, 1).row(0) == bb.lambda.frobenius());
    CHECK_THROWS_AS(g_matrix(bb, Vector(bb.basis.ring().field_ptr(), 3), 2), UsageError);
}

TEST_CASE("quintic threefold") {
    const auto& q = quintic_f2();
    const auto r = artin_report(parse_poly(q.equation, Ring::make(Field::prime(2), q.weights)));
    CHECK_FALSE(r.height.is_finite());
    CHECK(r.height.cap == 126);
    CHECK(r.ns.value == 58u);
}

}
