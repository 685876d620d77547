#include <doctest.h>

#include <sstream>

#include "qfs/scan.hpp"

using namespace qfs;

TEST_SUITE("scan") {

TEST_CASE("sampling is a pure function of seed and index") {
    auto r = Ring::make(Field::prime(2), {1, 1, 1, 1});
    CHECK(sample(9, 4, *r) == sample(9, 4, *r));
    CHECK(sample(9, 4, *r) != sample(9, 5, *r));
    CHECK(sample(9, 4, *r) != sample(10, 4, *r));
    CHECK(sample(1, 0, *r).size() == 35);
}

TEST_CASE("sampled coordinates are balanced") {
    auto r = Ring::make(Field::prime(2), {1, 1, 1, 1});
    std::vector<unsigned> ones(35, 0);
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const auto v = sample(77, i, *r);
        for (std::size_t j = 0; j < v.size(); ++j) ones[j] += v[j];
    }
    for (auto n : ones) {
        CHECK(n >= 4500);
        CHECK(n <= 5500);
    }
    auto r5 = Ring::make(Field::extension(5, 2), {1, 1, 1, 1});
    std::vector<unsigned> hist(25, 0);
    for (std::uint64_t i = 0; i < 2000; ++i)
        for (auto x : sample(3, i, *r5)) ++hist[x];
    for (auto n : hist) CHECK(n > 2000u * 35 / 25 * 8 / 10);
}

TEST_CASE("mask") {
    auto r = Ring::make(Field::prime(3), {1, 1, 1, 1});
    std::vector<bool> mask(35, false);
    mask[0] = mask[34] = true;
    for (std::uint64_t i = 0; i < 20; ++i) {
        const auto v = sample(5, i, *r, &mask);
        for (std::size_t j = 1; j < 34; ++j) CHECK(v[j] == 0);
    }
    std::vector<bool> bad(3, true);
    CHECK_THROWS_AS(sample(5, 0, *r, &bad), UsageError);
}

TEST_CASE("singular witnesses") {
    auto r3 = Ring::make(Field::prime(3), {1, 1, 1, 1});
    CHECK(singular_witness(parse_poly("x^4", r3)).has_value());
    CHECK_FALSE(singular_witness(parse_poly("x^4+y^4+z^4+w^4", r3), 2).has_value());
    CHECK(singular_witness(parse_poly("x^4+y^4+z^4+w^4", Ring::make(Field::prime(2), {1, 1, 1, 1}))).has_value());
    auto s3 = Ring::make(Field::prime(3), {1, 1, 1, 3});
    CHECK(singular_witness(parse_poly("x0^6+x1^6+x2^6+x3^2", s3)).has_value());
    const auto v = singular_witness(parse_poly("x0^6+x1^6+x2^6", Ring::make(Field::prime(5), {1, 1, 1, 3})));
    REQUIRE(v);
    CHECK(v->ambient_vertex);
    CHECK_THROWS_AS(singular_witness(parse_poly("x^4", r3), 4), UsageError);
}

TEST_CASE("results do not depend on the worker count") {
    ScanJob job;
    job.ring = Ring::make(Field::prime(2), {1, 1, 1, 3});
    job.seed = 2024;
    job.count = 150;
    job.smoothness_filter = true;
    job.mode = ScanMode::assert_bound;
    job.target = 3;
    std::string csv1, csv4, js1, js4;
    for (unsigned w : {1u, 4u}) {
        job.workers = w;
        const auto r = run_scan(job);
        std::ostringstream out;
        write_csv(r, *job.ring, out);
        (w == 1 ? csv1 : csv4) = out.str();
        (w == 1 ? js1 : js4) = summary_json(job, r);
        std::uint64_t total = 0;
        for (const auto& [k, n] : r.histogram) total += n;
        CHECK(total == job.count);
        CHECK(r.violations.empty());
    }
    CHECK(csv1 == csv4);
    CHECK(js1 == js4);
    CHECK(csv1.rfind("index,coefficients,height,ns,tau,smooth_witness_flag\n", 0) == 0);
    CHECK(js1.find("is not a smoothness proof") != std::string::npos);
}

TEST_CASE("hunt finds the Fermat quartic") {
    ScanJob job;
    job.ring = Ring::make(Field::prime(3), {1, 1, 1, 1});
    job.mode = ScanMode::hunt;
    job.target = 1;
    job.exhaustive = true;
    std::vector<bool> mask(35, false);
    const auto b = basis(job.ring);
    for (const char* m : {"x^4", "y^4", "z^4", "w^4"})
        mask[*b.index_of(parse_poly(m, job.ring).terms()[0].exponent)] = true;
    job.mask = mask;
    job.smoothness_filter = true;
    const auto r = run_scan(job);
    CHECK(r.records.size() == 81);
    CHECK(r.hits.size() == 16); // all four coefficients nonzero
}

}
