#pragma once

// The self-check suite behind `verify-identities`: every modular-form and
// theta-series identity the solvability criterion rests on, verified on
// exact q-expansions to a requested depth.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "arith.hpp"
#include "modform.hpp"
#include "qseries.hpp"
#include "theta.hpp"

namespace cubefermat {

struct IdentityCheck {
    std::string name;
    bool ok;
    std::string detail; // depth used, first mismatch, ...
};

namespace detail {

inline std::int64_t first_mismatch(const QSeries& f, const QSeries& g, std::int64_t bound) {
    for (std::int64_t n = 0; n <= bound; ++n)
        if (f.coeff(n) != g.coeff(n)) return n;
    return -1;
}

inline void push_equal(std::vector<IdentityCheck>& out, std::string name, const QSeries& f,
                       const QSeries& g) {
    std::int64_t bound = std::min(f.trunc(), g.trunc());
    std::int64_t bad = first_mismatch(f, g, bound);
    std::ostringstream os;
    if (bad < 0)
        os << "equal to depth " << bound;
    else
        os << "first mismatch at n = " << bad;
    out.push_back({std::move(name), bad < 0, os.str()});
}

} // namespace detail

// Runs the full identity suite with theta expansions of the given depth.
// Needs depth >= 400 so that every Hecke image retains at least a couple of
// coefficients.
inline std::vector<IdentityCheck> run_identity_suite(std::int64_t depth) {
    if (depth < 400) throw std::invalid_argument("run_identity_suite: depth must be >= 400");
    std::vector<IdentityCheck> out;

    QSeries F = build_F(depth);
    QSeries theta12 = theta_series(form_Q1(), depth) - theta_series(form_Q2(), depth);
    QSeries theta34 = theta_series(form_Q3(), depth) - theta_series(form_Q4(), depth);
    FormContext ctxF = context_F();
    FormContext ctx12 = context_theta12();
    FormContext ctx34 = context_theta34();

    // lambda is supported on n = 1 (mod 3).
    {
        std::int64_t bad = -1;
        for (std::int64_t n = 1; n <= depth; ++n)
            if (n % 3 != 1 && F.coeff(n) != 0) { bad = n; break; }
        std::ostringstream os;
        if (bad < 0) os << "checked to depth " << depth;
        else os << "nonzero lambda at n = " << bad << " = " << (bad % 3) << " (mod 3)";
        out.push_back({"lambda(n) = 0 unless n = 1 (mod 3)", bad < 0, os.str()});
    }

    // F is a T_p eigenform with eigenvalue lambda(p).
    for (std::int64_t p : {5, 7, 11, 13}) {
        Integer lam = F.coeff(p);
        detail::push_equal(out, "F|T_" + std::to_string(p) + " = lambda(" + std::to_string(p) + ") F",
                           hecke_tp_weight2(F, ctxF, p), lam * F);
    }

    // Both theta differences are T_{p^2} eigenforms with the same eigenvalues.
    for (std::int64_t p : {5, 7, 11, 13}) {
        if (depth / (p * p) < 1) continue;
        Integer lam = F.coeff(p);
        detail::push_equal(out,
                           "(theta_Q1 - theta_Q2)|T_" + std::to_string(p * p) + " = lambda(" +
                               std::to_string(p) + ") (theta_Q1 - theta_Q2)",
                           hecke_tp2_half(theta12, ctx12, p), lam * theta12);
        detail::push_equal(out,
                           "(theta_Q3 - theta_Q4)|T_" + std::to_string(p * p) + " = lambda(" +
                               std::to_string(p) + ") (theta_Q3 - theta_Q4)",
                           hecke_tp2_half(theta34, ctx34, p), lam * theta34);
    }

    // Shimura lifts: S_1 sends the differences into the lambda-eigenspace
    // spanned by F and F|V(2) (note the opposite V(2) signs); S_2 and S_3
    // vanish.
    {
        QSeries fv2 = v_operator(F, 2);
        detail::push_equal(out, "S_1(theta_Q1 - theta_Q2) = 2F + 4F|V(2)", shimura_lift(theta12, 1, ctx12),
                           Integer(2) * F + Integer(4) * fv2);
        detail::push_equal(out, "S_1(theta_Q3 - theta_Q4) = 2F - 4F|V(2)", shimura_lift(theta34, 1, ctx34),
                           Integer(2) * F - Integer(4) * fv2);
        for (std::int64_t t : {2, 3}) {
            QSeries s12 = shimura_lift(theta12, t, ctx12);
            QSeries s34 = shimura_lift(theta34, t, ctx34);
            out.push_back({"S_" + std::to_string(t) + "(theta_Q1 - theta_Q2) = 0", s12.is_zero(),
                           "depth " + std::to_string(s12.trunc())});
            out.push_back({"S_" + std::to_string(t) + "(theta_Q3 - theta_Q4) = 0", s34.is_zero(),
                           "depth " + std::to_string(s34.trunc())});
        }
    }

    // The lift commutes with the Hecke action.
    for (std::int64_t p : {5, 7}) {
        for (std::int64_t t : {1, 2, 3}) {
            if (isqrt64(depth / (p * p * t)) < 1) continue;
            detail::push_equal(out,
                               "S_" + std::to_string(t) + " . T_" + std::to_string(p * p) + " = T_" +
                                   std::to_string(p) + " . S_" + std::to_string(t) + " on theta_Q1 - theta_Q2",
                               shimura_lift(hecke_tp2_half(theta12, ctx12, p), t, ctx12),
                               hecke_tp_weight2(shimura_lift(theta12, t, ctx12), ctxF, p));
            detail::push_equal(out,
                               "S_" + std::to_string(t) + " . T_" + std::to_string(p * p) + " = T_" +
                                   std::to_string(p) + " . S_" + std::to_string(t) + " on theta_Q3 - theta_Q4",
                               shimura_lift(hecke_tp2_half(theta34, ctx34, p), t, ctx34),
                               hecke_tp_weight2(shimura_lift(theta34, t, ctx34), ctxF, p));
        }
    }

    // Twisting theta_Q3 - theta_Q4 by the character mod 3 fixes it.
    detail::push_equal(out, "(theta_Q3 - theta_Q4) x psi = theta_Q3 - theta_Q4", twist(theta34, QuadChar(-3)),
                       theta34);

    // Vanishing on the d = 2 (mod 3) classes.
    {
        std::int64_t bad = -1;
        QSeries theta1 = theta_series(form_Q1(), depth);
        for (std::int64_t n = 2; n <= depth && bad < 0; n += 3)
            if (theta1.coeff(n) != 0 || theta12.coeff(n) != 0) bad = n;
        out.push_back({"r_Q1(n) = r_Q2(n) = 0 for n = 2 (mod 3)", bad < 0,
                       bad < 0 ? "checked to depth " + std::to_string(depth)
                               : "violation at n = " + std::to_string(bad)});
    }
    {
        std::int64_t bad = -1;
        for (std::int64_t n = 2; n <= depth && bad < 0; n += 3)
            if (theta34.coeff(n) != 0) bad = n;
        out.push_back({"b(n) = 0 for n = 2 (mod 3)", bad < 0,
                       bad < 0 ? "checked to depth " + std::to_string(depth)
                               : "violation at n = " + std::to_string(bad)});
    }

    return out;
}

} // namespace cubefermat
