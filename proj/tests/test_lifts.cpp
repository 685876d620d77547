#include <doctest.h>

#include <random>

#include "qfs/catalogue.hpp"
#include "qfs/lifts.hpp"
#include "support.hpp"

using namespace qfs;

namespace {

RingPtr quartic_ring(std::uint32_t p) { return Ring::make(Field::prime(p), {1, 1, 1, 1}); }

FrobeniusBundle known(std::uint32_t p, std::size_t i) {
    return bundle(parse_poly((p == 2 ? quartics_f2() : quartics_f3())[i].equation, quartic_ring(p)));
}

} // namespace

TEST_SUITE("lifts") {

TEST_CASE("shifted matrix") {
    std::mt19937_64 rng(47);
    const auto b = basis(quartic_ring(2));
    for (int i = 0; i < 30; ++i) {
        const auto bb = bundle(test::random_form(b, rng));
        const auto c = test::random_vector(b.ring().field_ptr(), b.size(), rng);
        CHECK(t_shifted(bb, c).t_c == rebuild_shifted_matrix(bb, c));
        CHECK(t_shifted(bb, Vector(b.ring().field_ptr(), b.size())).t_c == bb.T);
    }
    const auto b3 = basis(quartic_ring(3));
    for (int i = 0; i < 10; ++i) {
        const auto bb = bundle(test::random_form(b3, rng));
        const auto c = test::random_vector(b3.ring().field_ptr(), b3.size(), rng);
        CHECK(t_shifted(bb, c).t_c == rebuild_shifted_matrix(bb, c));
    }
    const auto fermat = bundle(parse_poly("x^4+y^4+z^4+w^4", quartic_ring(3)));
    const auto c = test::random_vector(b3.ring().field_ptr(), b3.size(), rng);
    CHECK(t_shifted(fermat, c).t_c == fermat.T);
    CHECK_THROWS_AS(t_shifted(fermat, Vector(b3.ring().field_ptr(), 4)), UsageError);
}

TEST_CASE("ns of lifts") {
    std::mt19937_64 rng(53);
    const auto fermat = bundle(parse_poly("x^4+y^4+z^4+w^4", quartic_ring(3)));
    for (int i = 0; i < 5; ++i) {
        const auto c = test::random_vector(fermat.basis.ring().field_ptr(), fermat.m(), rng);
        CHECK(ns_lift(fermat, t_shifted(fermat, c)).value == 1u);
    }
    const auto sigma4 = known(3, 3);
    const auto zero = ns_lift(sigma4, t_shifted(sigma4, Vector(sigma4.basis.ring().field_ptr(), sigma4.m())));
    CHECK((zero.value == 4u || !zero.is_finite()));

    const auto ordinary = bundle(parse_poly("x^4+y^4+z^4+w^4", quartic_ring(5)));
    CHECK_THROWS_AS(ns_lift(ordinary, t_shifted(ordinary, ordinary.v_f)), UsageError);
}

TEST_CASE("infinite lift") {
    CHECK_FALSE(infinite_lift(bundle(parse_poly("x^4+y^4+z^4+w^4", quartic_ring(3)))));
    const auto bb = known(2, 0);
    const auto lift = infinite_lift(bb);
    REQUIRE(lift);
    CHECK(bb.lambda.raw(lift->j) != 0);
    CHECK(verify_infinite_lift(bb, *lift, 36));
    CHECK_FALSE(ns_lift(bb, t_shifted(bb, lift->c), 36).is_finite());
}

TEST_CASE("M values") {
    std::mt19937_64 rng(59);
    for (std::uint32_t p : {2u, 3u}) {
        const auto b = basis(quartic_ring(p));
        for (int i = 0; i < 10; ++i) {
            const auto bb = bundle(test::random_form(b, rng));
            const auto c = test::random_vector(b.ring().field_ptr(), b.size(), rng);
            const auto m = m_values(bb, c, 4);
            CHECK(m[0].raw() == dot(bb.lambda, c));
            for (const auto& v : m_values(bb, Vector(b.ring().field_ptr(), b.size()), 4)) CHECK(v.is_zero());
        }
    }
    const auto bb = known(2, 0);
    CHECK_THROWS_AS(m_values(bb, bb.v_f, 5), ResourceError);
}

TEST_CASE("decomposition identity") {
    // row_n G(b,c) = row_n G(b,0) - sum_{j<n} M_j^(p^(n-j)) row_(n-j) G(b,c)
    std::mt19937_64 rng(61);
    for (std::uint32_t p : {2u, 3u}) {
        const auto b = basis(quartic_ring(p));
        const Field& k = b.ring().field();
        for (int i = 0; i < 15; ++i) {
            const auto bb = i < 3 ? known(p, static_cast<std::size_t>(i) + 1) : bundle(test::random_form(b, rng));
            const auto c = test::random_vector(b.ring().field_ptr(), b.size(), rng);
            const auto m = m_values(bb, c, 4);
            const auto g0 = g_matrix(bb, Vector(b.ring().field_ptr(), b.size()), 4);
            const auto gc = g_matrix(bb, c, 4);
            for (unsigned n = 1; n <= 4; ++n) {
                Vector rhs = g0.row(n - 1);
                for (unsigned j = 1; j < n; ++j) {
                    const std::uint32_t coeff = k.pow(m[j - 1].raw(), checked_prime_power(p, n - j));
                    const Vector r = gc.row(n - j - 1);
                    for (std::size_t x = 0; x < rhs.size(); ++x) rhs.set_raw(x, k.sub(rhs.raw(x), k.mul(coeff, r.raw(x))));
                }
                CHECK(rhs == gc.row(n - 1));
            }
        }
    }
}

TEST_CASE("rank does not depend on c") {
    std::mt19937_64 rng(67);
    for (std::uint32_t p : {2u, 3u}) {
        const auto b = basis(quartic_ring(p));
        for (int i = 0; i < 10; ++i) {
            const auto bb = bundle(test::random_form(b, rng));
            const auto c = test::random_vector(b.ring().field_ptr(), b.size(), rng);
            for (unsigned n = 1; n <= 6; ++n)
                CHECK(rank(g_matrix(bb, c, n)) == rank(g_matrix(bb, Vector(b.ring().field_ptr(), b.size()), n)));
        }
    }
}

}
