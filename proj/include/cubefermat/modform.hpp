#pragma once

// Hecke operators in weight 2 and weight 3/2, the Shimura lift, and Sturm
// bounds, all acting on truncated q-expansions.
//
// Characters inside the weight-3/2 operators follow the convention for
// forms on Gamma_0(4N): the space character is evaluated as the Kronecker
// symbol of its fundamental discriminant and vanishes on integers sharing
// a factor with 4N. Identity checks always state the depth they were
// verified to; sturm_bound gives the depth at which agreement becomes
// equality for honest modular forms.

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "arith.hpp"
#include "qseries.hpp"

namespace cubefermat {

struct FormContext {
    int weight_twice;    // 4 for weight 2, 3 for weight 3/2
    std::int64_t level;  // Gamma_0(level)
    QuadChar character;

    FormContext(int wt2, std::int64_t lvl, QuadChar chi_) : weight_twice(wt2), level(lvl), character(chi_) {
        if (wt2 != 3 && wt2 != 4) throw std::invalid_argument("FormContext: weight_twice must be 3 or 4");
        if (lvl < 1) throw std::invalid_argument("FormContext: level must be positive");
    }

    // Character extended to the modulus 4*level (zero on any n sharing a factor).
    int chi_ext(std::int64_t n) const {
        if (std::gcd(n < 0 ? -n : n, 4 * level) > 1) return 0;
        return character(n);
    }
};

// S_2(Gamma_0(27)): home of F.
inline FormContext context_F() { return FormContext(4, 27, QuadChar(1)); }
// M_{3/2}(Gamma_0(108), chi_1): home of theta_Q1 - theta_Q2.
inline FormContext context_theta12() { return FormContext(3, 108, QuadChar(1)); }
// M_{3/2}(Gamma_0(108), chi_3): home of theta_Q3 - theta_Q4.
inline FormContext context_theta34() { return FormContext(3, 108, QuadChar(12)); }

// T_p on weight-2 forms: b(n) = a(pn) + p a(n/p), the second term dropped
// when p | level or p does not divide n. Output truncation floor(trunc/p).
inline QSeries hecke_tp_weight2(const QSeries& f, const FormContext& ctx, std::int64_t p) {
    if (ctx.weight_twice != 4) throw std::invalid_argument("hecke_tp_weight2: context is not weight 2");
    if (!is_prime_u64(static_cast<std::uint64_t>(p))) throw std::invalid_argument("hecke_tp_weight2: p must be prime");
    std::int64_t t = f.trunc() / p;
    if (t < 1) throw std::invalid_argument("hecke_tp_weight2: insufficient truncation");
    QSeries out(t);
    bool good = ctx.level % p != 0;
    for (std::int64_t n = 0; n <= t; ++n) {
        Integer v = f.coeff(p * n);
        if (good && n % p == 0) v += p * f.coeff(n / p);
        out.at(n) = v;
    }
    return out;
}

// T_{p^2} on weight-3/2 forms (lambda = 1):
//   b(n) = a(p^2 n) + chi(p) (-n/p) a(n) + chi(p)^2 p a(n/p^2).
// Output truncation floor(trunc/p^2).
inline QSeries hecke_tp2_half(const QSeries& f, const FormContext& ctx, std::int64_t p) {
    if (ctx.weight_twice != 3) throw std::invalid_argument("hecke_tp2_half: context is not weight 3/2");
    if (!is_prime_u64(static_cast<std::uint64_t>(p))) throw std::invalid_argument("hecke_tp2_half: p must be prime");
    if ((2 * ctx.level) % p == 0) throw std::invalid_argument("hecke_tp2_half: p must not divide 2*level");
    std::int64_t p2 = p * p;
    std::int64_t t = f.trunc() / p2;
    if (t < 1) throw std::invalid_argument("hecke_tp2_half: insufficient truncation");
    int chi_p = ctx.chi_ext(p);
    QSeries out(t);
    for (std::int64_t n = 0; n <= t; ++n) {
        Integer v = f.coeff(p2 * n);
        int k = chi_p * kronecker(-n, p);
        if (k == 1) v += f.coeff(n);
        else if (k == -1) v -= f.coeff(n);
        if (n % p2 == 0) v += chi_p * chi_p * p * f.coeff(n / p2);
        out.at(n) = v;
    }
    return out;
}

// Shimura lift S_t at squarefree t (lambda = 1):
//   A(n) = sum_{d | n} chi(d) (-t/d) a(t (n/d)^2).
// Output truncation floor(sqrt(trunc/t)).
inline QSeries shimura_lift(const QSeries& f, std::int64_t t, const FormContext& ctx) {
    if (ctx.weight_twice != 3) throw std::invalid_argument("shimura_lift: context is not weight 3/2");
    if (t < 1 || !is_squarefree(t)) throw std::invalid_argument("shimura_lift: t must be squarefree positive");
    std::int64_t depth = isqrt64(f.trunc() / t);
    if (depth < 1) throw std::invalid_argument("shimura_lift: insufficient truncation");
    QSeries out(depth);
    for (std::int64_t n = 1; n <= depth; ++n) {
        Integer acc = 0;
        for (std::int64_t d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            int k = ctx.chi_ext(d) * kronecker(-t, d);
            if (k == 0) continue;
            std::int64_t m = n / d;
            const Integer& a = f.coeff(t * m * m);
            acc += k == 1 ? a : -a;
        }
        out.at(n) = acc;
    }
    return out;
}

// Sturm bound: ceil((weight/12) [SL_2(Z) : Gamma_0(level)]).
inline std::int64_t sturm_bound(const FormContext& ctx) {
    std::int64_t index = ctx.level;
    for (auto [p, e] : factor(static_cast<std::uint64_t>(ctx.level))) {
        (void)e;
        index = index / static_cast<std::int64_t>(p) * (static_cast<std::int64_t>(p) + 1);
    }
    std::int64_t num = ctx.weight_twice * index; // weight/12 = weight_twice/24
    return (num + 23) / 24;
}

// Coefficient agreement for all 0 <= n <= bound.
inline bool equal_upto(const QSeries& f, const QSeries& g, std::int64_t bound) {
    if (bound < 0) throw std::invalid_argument("equal_upto: negative bound");
    if (f.trunc() < bound || g.trunc() < bound)
        throw std::invalid_argument("equal_upto: insufficient truncation for requested bound");
    for (std::int64_t n = 0; n <= bound; ++n)
        if (f.coeff(n) != g.coeff(n)) return false;
    return true;
}

} // namespace cubefermat
