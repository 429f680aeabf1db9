#include <catch2/catch_amalgamated.hpp>

#include "cubefermat/modform.hpp"
#include "cubefermat/theta.hpp"
#include "oracles.hpp"

using namespace cubefermat;

namespace {

QSeries theta_diff_12(std::int64_t trunc) {
    return theta_series(form_Q1(), trunc) - theta_series(form_Q2(), trunc);
}
QSeries theta_diff_34(std::int64_t trunc) {
    return theta_series(form_Q3(), trunc) - theta_series(form_Q4(), trunc);
}

} // namespace

TEST_CASE("sturm_bound") {
    CHECK(sturm_bound(context_theta12()) == 27);
    CHECK(sturm_bound(context_theta34()) == 27);
    CHECK(sturm_bound(context_F()) == 6);
    CHECK(sturm_bound(FormContext(4, 1, QuadChar(1))) == 1);
}

TEST_CASE("equal_upto") {
    QSeries F = build_F(100);
    CHECK(equal_upto(F, F, 100));
    QSeries bumped = F + QSeries::monomial(60, 1, 100);
    CHECK(!equal_upto(F, bumped, 100));
    CHECK(equal_upto(F, bumped, 59));
    CHECK_THROWS_AS(equal_upto(F, bumped, 101), std::invalid_argument);
}

TEST_CASE("weight-2 Hecke: F and F|V(2) are eigenforms") {
    QSeries F = build_F(2000);
    FormContext ctx = context_F();

    QSeries tp5 = hecke_tp_weight2(F, ctx, 5);
    CHECK(tp5.trunc() == 400);
    CHECK(equal_upto(tp5, F.coeff(5) * F, 400));

    QSeries zero(500);
    CHECK(hecke_tp_weight2(zero, ctx, 5).is_zero());

    QSeries fv2 = v_operator(F, 2);
    QSeries tp5v = hecke_tp_weight2(fv2, ctx, 5);
    CHECK(equal_upto(tp5v, F.coeff(5) * fv2, 200));

    for (std::int64_t p : {7, 11, 13}) {
        QSeries img = hecke_tp_weight2(F, ctx, p);
        CHECK(equal_upto(img, F.coeff(p) * F, img.trunc()));
    }

    CHECK_THROWS_AS(hecke_tp_weight2(build_F(4), ctx, 5), std::invalid_argument);
    CHECK_THROWS_AS(hecke_tp_weight2(F, ctx, 6), std::invalid_argument);
    CHECK_THROWS_AS(hecke_tp_weight2(F, context_theta12(), 5), std::invalid_argument);
}

TEST_CASE("weight-3/2 Hecke: theta differences are eigenforms") {
    QSeries F = build_F(20);
    QSeries t12 = theta_diff_12(5000);
    QSeries t34 = theta_diff_34(5000);

    QSeries zero(500);
    CHECK(hecke_tp2_half(zero, context_theta12(), 5).is_zero());

    QSeries img12 = hecke_tp2_half(t12, context_theta12(), 5);
    CHECK(img12.trunc() == 200);
    CHECK(equal_upto(img12, F.coeff(5) * t12, 200));

    QSeries img34 = hecke_tp2_half(t34, context_theta34(), 7);
    CHECK(img34.trunc() == 102);
    CHECK(equal_upto(img34, F.coeff(7) * t34, 100));

    CHECK_THROWS_AS(hecke_tp2_half(t12, context_theta12(), 3), std::invalid_argument);
    CHECK_THROWS_AS(hecke_tp2_half(t12, context_theta12(), 2), std::invalid_argument);
    CHECK_THROWS_AS(hecke_tp2_half(theta_diff_12(20), context_theta12(), 5), std::invalid_argument);
    CHECK_THROWS_AS(hecke_tp2_half(t12, context_F(), 5), std::invalid_argument);
}

TEST_CASE("Shimura lift targets") {
    QSeries F = build_F(100);
    QSeries fv2 = v_operator(F, 2);
    QSeries t12 = theta_diff_12(4800);
    QSeries t34 = theta_diff_34(4800);

    QSeries s12 = shimura_lift(t12, 1, context_theta12());
    CHECK(s12.trunc() >= 40);
    CHECK(equal_upto(s12, Integer(2) * F + Integer(4) * fv2, 40));

    // The chi_3 lift lands on the opposite V(2) sign.
    QSeries s34 = shimura_lift(t34, 1, context_theta34());
    CHECK(equal_upto(s34, Integer(2) * F - Integer(4) * fv2, 40));

    for (std::int64_t t : {2, 3}) {
        CHECK(shimura_lift(t12, t, context_theta12()).is_zero());
        CHECK(shimura_lift(t34, t, context_theta34()).is_zero());
    }

    CHECK_THROWS_AS(shimura_lift(t12, 4, context_theta12()), std::invalid_argument);
    CHECK_THROWS_AS(shimura_lift(theta_diff_12(2), 3, context_theta12()), std::invalid_argument);
}

TEST_CASE("Shimura commutes with Hecke") {
    QSeries t12 = theta_diff_12(10000);
    QSeries t34 = theta_diff_34(10000);
    for (std::int64_t p : {5, 7, 11, 13}) {
        for (std::int64_t t : {1, 2, 3}) {
            for (auto* pair : {&t12, &t34}) {
                const FormContext ctx = pair == &t12 ? context_theta12() : context_theta34();
                QSeries lhs = shimura_lift(hecke_tp2_half(*pair, ctx, p), t, ctx);
                QSeries rhs = hecke_tp_weight2(shimura_lift(*pair, t, ctx), context_F(), p);
                std::int64_t depth = std::min(lhs.trunc(), rhs.trunc());
                CHECK(depth >= 1);
                CHECK(equal_upto(lhs, rhs, depth));
            }
        }
    }
}

TEST_CASE("eigenvalues agree across both theta differences") {
    QSeries F = build_F(20);
    QSeries t12 = theta_diff_12(10000);
    QSeries t34 = theta_diff_34(10000);
    for (std::int64_t p : {5, 7, 11, 13}) {
        Integer lam = F.coeff(p);
        QSeries i12 = hecke_tp2_half(t12, context_theta12(), p);
        QSeries i34 = hecke_tp2_half(t34, context_theta34(), p);
        CHECK(equal_upto(i12, lam * t12, i12.trunc()));
        CHECK(equal_upto(i34, lam * t34, i34.trunc()));
    }
}

TEST_CASE("twist fixed point of theta_Q3 - theta_Q4") {
    QSeries t34 = theta_diff_34(10000);
    CHECK(oracles::series_equal(twist(t34, QuadChar(-3)), t34));
}
