#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "cubefermat/theta.hpp"
#include "oracles.hpp"

using namespace cubefermat;

TEST_CASE("TernaryForm validation") {
    CHECK_THROWS_AS(TernaryForm({{{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}}), std::invalid_argument); // odd diagonal
    CHECK_THROWS_AS(TernaryForm({{{2, 1, 0}, {0, 2, 0}, {0, 0, 2}}}), std::invalid_argument); // asymmetric
    CHECK_THROWS_AS(TernaryForm({{{2, 0, 0}, {0, -2, 0}, {0, 0, 2}}}), std::invalid_argument); // indefinite
    CHECK(form_Q1().det() == 648);
    CHECK(form_Q2().det() == 648);
    CHECK(form_Q3().det() == 54);
    CHECK(form_Q4().det() == 54);
}

TEST_CASE("count_reps small values") {
    CHECK(count_reps(form_Q1(), 0) == 1);
    CHECK(count_reps(form_Q1(), 1) == 2);
    CHECK(count_reps(form_Q2(), 1) == 0);
    CHECK(count_reps(form_Q3(), 2) == 4);
    CHECK(count_reps(form_Q4(), 2) == 4);
    CHECK(coeff_a(2) == 0);
    CHECK(coeff_b(2) == 0);
}

TEST_CASE("count_reps against cube enumeration") {
    for (const TernaryForm* q : {&form_Q1(), &form_Q2(), &form_Q3(), &form_Q4()}) {
        for (std::int64_t n = 0; n <= 60; ++n)
            CHECK(count_reps(*q, n) == static_cast<std::uint64_t>(oracles::naive_count_reps(*q, n)));
    }
}

TEST_CASE("table coefficients a(n) and b(n)") {
    const std::int64_t ns[] = {1, 34, 19, 13, 22, 7, 10, 46};
    const std::int64_t as[] = {2, 4, -6, 2, -4, -2, -4, 4};
    const std::int64_t bs[] = {2, 12, -6, 6, -12, -6, 12, -12};
    for (int i = 0; i < 8; ++i) {
        CHECK(coeff_a(ns[i]) == as[i]);
        CHECK(coeff_b(ns[i]) == bs[i]);
    }
}

TEST_CASE("theta_series agrees with count_reps on random n") {
    std::mt19937 rng(20240731);
    std::uniform_int_distribution<std::int64_t> pick(0, 10000);
    for (const TernaryForm* q : {&form_Q1(), &form_Q2(), &form_Q3(), &form_Q4()}) {
        QSeries theta = theta_series(*q, 10000);
        CHECK(theta.coeff(0) == 1);
        for (int i = 0; i < 200; ++i) {
            std::int64_t n = pick(rng);
            CHECK(theta.coeff(n) == count_reps(*q, n));
        }
    }
}

TEST_CASE("batch_counts sharding is deterministic") {
    for (const TernaryForm* q : {&form_Q1(), &form_Q3()}) {
        auto one = batch_counts(*q, 100000, 1);
        for (int s : {2, 4, 8}) CHECK(batch_counts(*q, 100000, s) == one);
    }
}

TEST_CASE("sign symmetry: counts of nonzero values are even") {
    auto counts = batch_counts(form_Q4(), 5000, 2);
    for (std::size_t n = 1; n < counts.size(); ++n) CHECK(counts[n] % 2 == 0);
}

TEST_CASE("vanishing on n = 2 (mod 3) classes") {
    auto c1 = batch_counts(form_Q1(), 100000);
    auto c2 = batch_counts(form_Q2(), 100000);
    auto c3 = batch_counts(form_Q3(), 100000);
    auto c4 = batch_counts(form_Q4(), 100000);
    for (std::int64_t n = 2; n <= 100000; n += 3) {
        auto i = static_cast<std::size_t>(n);
        CHECK(c1[i] == 0);
        CHECK(c2[i] == 0);
        CHECK(c3[i] == c4[i]); // b(n) = 0
    }
}

TEST_CASE("lattice point totals match the ellipsoid volume within 2%") {
    // vol{Q <= N} = (4 pi / 3) (2N)^{3/2} / sqrt(det A)
    for (const TernaryForm* q : {&form_Q1(), &form_Q3()}) {
        const std::int64_t n = 1000000;
        auto counts = batch_counts(*q, n, 2);
        double total = 0;
        for (auto c : counts) total += c;
        double vol = 4.0 * 3.14159265358979 / 3.0 * std::pow(2.0 * static_cast<double>(n), 1.5) /
                     std::sqrt(static_cast<double>(q->det()));
        CHECK(std::abs(total - vol) / vol < 0.02);
    }
}

TEST_CASE("memory budget refusal") {
    CHECK_THROWS_AS(batch_counts(form_Q1(), 2'000'000'000, 8), std::runtime_error);
}

TEST_CASE("theta_level") {
    auto l1 = theta_level(form_Q1());
    CHECK(l1.level == 108);
    CHECK(l1.char_disc == 1);
    auto l2 = theta_level(form_Q2());
    CHECK(l2.level == 108);
    CHECK(l2.char_disc == 1);
    auto l3 = theta_level(form_Q3());
    CHECK(l3.level == 108);
    CHECK(l3.char_disc == 12);
    auto l4 = theta_level(form_Q4());
    CHECK(l4.level == 108);
    CHECK(l4.char_disc == 12);

    // off-family regression: the unit form x^2 + y^2 + z^2
    TernaryForm unit({{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}});
    auto lu = theta_level(unit);
    CHECK(lu.level == 4);
    CHECK(lu.char_disc == 1);
}
