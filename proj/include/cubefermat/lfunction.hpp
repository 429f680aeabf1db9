#pragma once

// Central L-values of the twists E_d : dY^2 = X^3 - 432.
//
// The coefficients of E_d come from the level-27 newform F by twisting:
// a_n(E_d) = lambda(n) chi_d(n), valid for every n here because chi_d kills
// the primes dividing its conductor and lambda(3) = 0 covers p = 3. The
// central value is evaluated with the standard exponentially convergent sum
// from the functional equation,
//   L(E,1) = 2 sum_{n>=1} (a_n/n) exp(-2 pi n / sqrt(N)),
// exact for root number +1 and identically zero for root number -1. The
// truncation tail is bounded rigorously with |a_n| <= d(n) sqrt(n) <=
// sqrt(3) n (the divisor-count bound d(n)^2 <= 3n, tight at n = 12).

#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "arith.hpp"
#include "qseries.hpp"

namespace cubefermat {

struct LReport {
    std::int64_t d = 0;         // twist as requested
    std::int64_t d_reduced = 0; // representative coprime to 3 actually computed
    std::int64_t conductor = 0;
    int root_number = 1;
    double value = 0.0;
    double tail_bound = 0.0;
    std::int64_t terms_used = 0;
};

// L(E_d, 1) = L(E_{-3d}, 1) lets every twist be reduced to a representative
// coprime to 3: d stays put if 3 does not divide it, else -d/3 (E_{-9m} is
// E_{-m} up to square scaling).
inline std::int64_t reduce_twist(std::int64_t d) {
    if (!is_squarefree(d)) throw std::invalid_argument("reduce_twist: d must be squarefree and nonzero");
    return d % 3 == 0 ? -d / 3 : d;
}

// w(E_d) = chi_d(-27) for d coprime to 3.
inline int root_number(std::int64_t d) {
    if (!is_squarefree(d)) throw std::invalid_argument("root_number: d must be squarefree and nonzero");
    if (d % 3 == 0) throw std::invalid_argument("root_number: 3 | d; reduce the twist first");
    return chi(d, -27);
}

// Conductor of E_d for d coprime to 3: 27 disc(d)^2.
inline std::int64_t conductor(std::int64_t d) {
    if (!is_squarefree(d)) throw std::invalid_argument("conductor: d must be squarefree and nonzero");
    if (d % 3 == 0) throw std::invalid_argument("conductor: 3 | d; reduce the twist first");
    std::int64_t disc = fundamental_discriminant(d);
    return 27 * disc * disc;
}

namespace detail {

// Shared cache of lambda(n) from F; grown on demand, guarded for concurrent
// L-value sweeps.
inline std::shared_ptr<const std::vector<std::int64_t>> lambda_table(std::int64_t upto) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<std::int64_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache || static_cast<std::int64_t>(cache->size()) < upto + 1) {
        std::int64_t have = cache ? static_cast<std::int64_t>(cache->size()) : 0;
        std::int64_t depth = std::max<std::int64_t>({upto, 2 * have, 4096});
        QSeries f = build_F(depth);
        auto fresh = std::make_shared<std::vector<std::int64_t>>(static_cast<std::size_t>(depth) + 1, 0);
        for (std::int64_t n = 1; n <= depth; ++n)
            (*fresh)[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(f.coeff(n));
        cache = fresh;
    }
    return cache;
}

} // namespace detail

// a_n(E_d) = lambda(n) chi_d(n) for n = 1..depth; requires d coprime to 3.
inline std::vector<std::int64_t> twisted_an(std::int64_t d, std::int64_t depth) {
    if (!is_squarefree(d)) throw std::invalid_argument("twisted_an: d must be squarefree and nonzero");
    if (d % 3 == 0) throw std::invalid_argument("twisted_an: 3 | d; reduce the twist first");
    auto lam = detail::lambda_table(depth);
    std::int64_t D = fundamental_discriminant(d);
    std::int64_t period = D < 0 ? -D : D;
    std::vector<int> chi_mod(static_cast<std::size_t>(period));
    for (std::int64_t r = 0; r < period; ++r) chi_mod[static_cast<std::size_t>(r)] = kronecker(D, r);
    std::vector<std::int64_t> out(static_cast<std::size_t>(depth) + 1, 0);
    for (std::int64_t n = 1; n <= depth; ++n)
        out[static_cast<std::size_t>(n)] = (*lam)[static_cast<std::size_t>(n)] * chi_mod[static_cast<std::size_t>(n % period)];
    return out;
}

inline LReport central_value(std::int64_t d) {
    if (!is_squarefree(d)) throw std::invalid_argument("central_value: d must be squarefree and nonzero");
    LReport rep;
    rep.d = d;
    rep.d_reduced = reduce_twist(d);
    rep.conductor = conductor(rep.d_reduced);
    rep.root_number = root_number(rep.d_reduced);
    if (rep.root_number == -1) {
        rep.value = 0.0;
        rep.tail_bound = 0.0;
        rep.terms_used = 0;
        return rep;
    }
    constexpr double two_pi = 6.283185307179586476925286766559;
    double sqrt_n = std::sqrt(static_cast<double>(rep.conductor));
    double c = two_pi / sqrt_n;
    std::int64_t terms = static_cast<std::int64_t>(std::ceil(12.0 * sqrt_n));
    auto an = twisted_an(rep.d_reduced, terms);
    double sum = 0.0;
    for (std::int64_t n = 1; n <= terms; ++n) {
        if (an[static_cast<std::size_t>(n)] == 0) continue;
        sum += static_cast<double>(an[static_cast<std::size_t>(n)]) / static_cast<double>(n) *
               std::exp(-c * static_cast<double>(n));
    }
    rep.value = 2.0 * sum;
    double r = std::exp(-c);
    rep.tail_bound = 2.0 * std::sqrt(3.0) * std::exp(-c * static_cast<double>(terms + 1)) / (1.0 - r);
    rep.terms_used = terms;
    if (!(rep.tail_bound < 1e-6))
        throw std::logic_error("central_value: tail bound failed to reach 1e-6");
    return rep;
}

} // namespace cubefermat
