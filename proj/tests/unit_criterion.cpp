#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include "cubefermat/criterion.hpp"
#include "cubefermat/io.hpp"

using namespace cubefermat;

TEST_CASE("normalize") {
    CHECK(normalize(2).d_pos == 2);
    CHECK(!normalize(2).special);
    CHECK(normalize(-2).d_pos == 6);
    CHECK(normalize(8).d_pos == 2);   // squarefree part first
    CHECK(normalize(-12).d_pos == 1); // sf(-12) = -3, the special case
    CHECK(normalize(-3).special);
    CHECK(normalize(-1).d_pos == 3);
    CHECK_THROWS_AS(normalize(0), std::invalid_argument);
    CHECK_THROWS_AS(normalize(1), std::invalid_argument);
    CHECK_THROWS_AS(normalize(49), std::invalid_argument);
}

TEST_CASE("decide pinned verdicts") {
    Verdict v2 = decide(2);
    CHECK(v2.status == Status::SolvableUnderBSD);
    CHECK(v2.case_used == CriterionCase::Q3Q4_at_d);
    CHECK(v2.left == 4);
    CHECK(v2.right == 4);

    Verdict vm1 = decide(-1);
    CHECK(vm1.status == Status::NoSolutionUnconditional);
    CHECK(vm1.case_used == CriterionCase::Q1Q2_at_d_over_3);
    CHECK(vm1.d_positive_rep == 3);
    CHECK(vm1.left == 2);
    CHECK(vm1.right == 0);

    Verdict v34 = decide(34);
    CHECK(v34.status == Status::NoSolutionUnconditional);
    CHECK(v34.left - v34.right == 12);

    CHECK(decide(-3).status == Status::KnownTrivialField);
    CHECK(decide(-3).case_used == CriterionCase::Special);
}

TEST_CASE("decide is pure") {
    for (std::int64_t d : {2, -1, 34, -3, 145}) {
        Verdict a = decide(d);
        Verdict b = decide(d);
        CHECK(a.status == b.status);
        CHECK(a.left == b.left);
        CHECK(a.right == b.right);
    }
}

TEST_CASE("classify_range agrees with decide") {
    auto rows = classify_range(200);
    std::map<std::int64_t, Verdict> by_d;
    for (const auto& r : rows) by_d[r.d_input] = r;

    // exactly the squarefree d in [2, 200]
    std::size_t expect = 0;
    for (std::int64_t d = 2; d <= 200; ++d)
        if (is_squarefree(d)) ++expect;
    CHECK(rows.size() == expect);

    auto first = classify_range(10);
    std::vector<std::int64_t> small;
    for (const auto& r : first) small.push_back(r.d_input);
    CHECK(small == std::vector<std::int64_t>{2, 3, 5, 6, 7, 10});

    for (std::int64_t d = 2; d <= 200; ++d) {
        if (!is_squarefree(d)) continue;
        Verdict direct = decide(d);
        const Verdict& row = by_d.at(d);
        CHECK(row.status == direct.status);
        CHECK(row.case_used == direct.case_used);
        CHECK(row.left == direct.left);
        CHECK(row.right == direct.right);
    }

    // d = 2 (mod 3) rows are always solvable-under-BSD
    for (const auto& r : rows)
        if (r.d_input % 3 == 2) CHECK(r.status == Status::SolvableUnderBSD);

    // sharded sieve changes nothing
    auto sharded = classify_range(200, 4);
    REQUIRE(sharded.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(sharded[i].d_input == rows[i].d_input);
        CHECK(sharded[i].status == rows[i].status);
        CHECK(sharded[i].left == rows[i].left);
    }
}

TEST_CASE("duality: d and -3d give the same verdict") {
    for (std::int64_t d = -300; d <= 300; ++d) {
        if (d == 0 || d == -3 || squarefree_part(d) == 1 || squarefree_part(d) == -3) continue;
        std::int64_t partner = squarefree_part(-3 * d);
        CHECK(decide(d).status == decide(partner).status);
    }
}

TEST_CASE("cross_check on pinned cases") {
    auto c2 = cross_check(2, 10);
    CHECK(c2.verdict.status == Status::SolvableUnderBSD);
    CHECK(c2.lreport.root_number == -1);
    CHECK(c2.witness.has_value());
    CHECK(c2.witness->k == Rational(-7, 6));
    CHECK(c2.consistent());

    auto cm1 = cross_check(-1, 50);
    CHECK(cm1.verdict.status == Status::NoSolutionUnconditional);
    CHECK(std::abs(cm1.lreport.value - 1.52995) < 1e-4);
    CHECK(!cm1.witness.has_value());
    CHECK(cm1.consistent());

    auto cm34 = cross_check(-34, 30);
    CHECK(cm34.verdict.status == Status::NoSolutionUnconditional);
    CHECK(std::abs(cm34.lreport.value - 1.04953) < 1e-4);
    CHECK(cm34.consistent());

    auto cm3 = cross_check(-3, 10);
    CHECK(cm3.verdict.status == Status::KnownTrivialField);
    CHECK(cm3.consistent());
}

TEST_CASE("verdict serialization") {
    Verdict v = decide(2);
    json j = to_json(v);
    CHECK(j["d"] == 2);
    CHECK(j["status"] == "SolvableUnderBSD");
    CHECK(j["left"] == 4);
    auto parsed = json::parse(j.dump());
    CHECK(parsed == j);

    CHECK(to_csv(v) == "2,Q3Q4_at_d,4,4,SolvableUnderBSD");
    CHECK(csv_header_verdict() == "d,case,left_count,right_count,status");

    auto w = burnside_search(2, 10);
    REQUIRE(w.has_value());
    json jw = to_json(*w);
    CHECK(jw["d"] == 2);
    CHECK(jw["x"] == json::array({18, 1, 17, 1}));
    CHECK(jw["k"] == json::array({-7, 6}));

    json jl = to_json(central_value(-1));
    CHECK(jl["conductor"] == 432);
    CHECK(jl["root_number"] == 1);
}
