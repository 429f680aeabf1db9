#pragma once

// Truncated q-expansions with exact integer coefficients.
//
// A QSeries carries its own truncation depth: coefficients are valid for
// 0 <= n <= trunc() and every operation returns the tightest truncation it
// can guarantee, so a series is never silently read beyond what was
// actually computed. Reads past trunc() throw.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"

namespace cubefermat {

class QSeries {
public:
    explicit QSeries(std::int64_t trunc) : trunc_(trunc), c_(static_cast<std::size_t>(trunc) + 1) {
        if (trunc < 0) throw std::invalid_argument("QSeries: negative truncation");
    }

    static QSeries one(std::int64_t trunc) {
        QSeries s(trunc);
        s.c_[0] = 1;
        return s;
    }

    static QSeries monomial(std::int64_t n, Integer coeff, std::int64_t trunc) {
        QSeries s(trunc);
        if (n < 0) throw std::invalid_argument("QSeries::monomial: negative exponent");
        if (n <= trunc) s.c_[static_cast<std::size_t>(n)] = std::move(coeff);
        return s;
    }

    std::int64_t trunc() const { return trunc_; }

    const Integer& coeff(std::int64_t n) const {
        if (n < 0 || n > trunc_)
            throw std::out_of_range("QSeries::coeff: index " + std::to_string(n) +
                                    " beyond truncation " + std::to_string(trunc_));
        return c_[static_cast<std::size_t>(n)];
    }

    Integer& at(std::int64_t n) {
        if (n < 0 || n > trunc_) throw std::out_of_range("QSeries::at: index beyond truncation");
        return c_[static_cast<std::size_t>(n)];
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    QSeries truncated(std::int64_t new_trunc) const {
        if (new_trunc > trunc_) throw std::invalid_argument("QSeries::truncated: cannot extend");
        QSeries out(new_trunc);
        std::copy(c_.begin(), c_.begin() + new_trunc + 1, out.c_.begin());
        return out;
    }

    // Multiplication by q^k. Known coefficients only shift up, so the input
    // truncation remains sound.
    QSeries shifted_up(std::int64_t k) const {
        if (k < 0) throw std::invalid_argument("QSeries::shifted_up: negative shift");
        QSeries out(trunc_);
        for (std::int64_t n = trunc_; n >= k; --n) out.c_[n] = c_[n - k];
        return out;
    }

    friend QSeries operator+(const QSeries& f, const QSeries& g) {
        std::int64_t t = std::min(f.trunc_, g.trunc_);
        QSeries out(t);
        for (std::int64_t n = 0; n <= t; ++n) out.c_[n] = f.c_[n] + g.c_[n];
        return out;
    }

    friend QSeries operator-(const QSeries& f, const QSeries& g) {
        std::int64_t t = std::min(f.trunc_, g.trunc_);
        QSeries out(t);
        for (std::int64_t n = 0; n <= t; ++n) out.c_[n] = f.c_[n] - g.c_[n];
        return out;
    }

    friend QSeries operator*(const Integer& s, const QSeries& f) {
        QSeries out(f.trunc_);
        for (std::int64_t n = 0; n <= f.trunc_; ++n) out.c_[n] = s * f.c_[n];
        return out;
    }

    QSeries operator-() const { return Integer(-1) * *this; }

    // Cauchy product at the minimum truncation. Skips zero coefficients on
    // both sides; eta-quotient factors are sparse and this is what keeps
    // deep expansions cheap.
    friend QSeries operator*(const QSeries& f, const QSeries& g) {
        std::int64_t t = std::min(f.trunc_, g.trunc_);
        QSeries out(t);
        std::vector<std::int64_t> nzf, nzg;
        for (std::int64_t n = 0; n <= t; ++n)
            if (f.c_[n] != 0) nzf.push_back(n);
        for (std::int64_t n = 0; n <= t; ++n)
            if (g.c_[n] != 0) nzg.push_back(n);
        if (nzf.size() > nzg.size()) {
            for (std::int64_t j : nzg)
                for (std::int64_t i : nzf) {
                    if (i + j > t) break;
                    out.c_[i + j] += f.c_[i] * g.c_[j];
                }
        } else {
            for (std::int64_t i : nzf)
                for (std::int64_t j : nzg) {
                    if (i + j > t) break;
                    out.c_[i + j] += f.c_[i] * g.c_[j];
                }
        }
        return out;
    }

private:
    std::int64_t trunc_;
    std::vector<Integer> c_;
};

namespace detail {

// Reciprocal of a series with constant term 1.
inline QSeries series_inverse(const QSeries& f) {
    if (f.coeff(0) != 1) throw std::invalid_argument("series_inverse: constant term must be 1");
    std::int64_t t = f.trunc();
    QSeries g(t);
    g.at(0) = 1;
    std::vector<std::int64_t> nzf;
    for (std::int64_t k = 1; k <= t; ++k)
        if (f.coeff(k) != 0) nzf.push_back(k);
    for (std::int64_t n = 1; n <= t; ++n) {
        Integer acc = 0;
        for (std::int64_t k : nzf) {
            if (k > n) break;
            acc += f.coeff(k) * g.coeff(n - k);
        }
        g.at(n) = -acc;
    }
    return g;
}

inline QSeries series_pow(QSeries base, std::int64_t e) {
    std::int64_t t = base.trunc();
    QSeries acc = QSeries::one(t);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

} // namespace detail

// Expansion of prod_{n>=1} (1 - q^{mn})^e. Negative e inverts the base
// expansion (valid: constant term is 1). The base product is Euler's
// pentagonal number series, so it is sparse.
inline QSeries eta_factor(std::int64_t m, std::int64_t e, std::int64_t trunc) {
    if (m < 1) throw std::invalid_argument("eta_factor: m must be positive");
    QSeries base(trunc);
    base.at(0) = 1;
    for (std::int64_t k = 1;; ++k) {
        std::int64_t e1 = m * k * (3 * k - 1) / 2;
        std::int64_t e2 = m * k * (3 * k + 1) / 2;
        if (e1 > trunc && e2 > trunc) break;
        Integer sign = (k & 1) ? -1 : 1;
        if (e1 <= trunc) base.at(e1) += sign;
        if (e2 <= trunc) base.at(e2) += sign;
    }
    if (e == 0) return QSeries::one(trunc);
    if (e < 0) return detail::series_pow(detail::series_inverse(base), -e);
    return detail::series_pow(base, e);
}

// F(z) = q prod (1-q^{3n})^2 (1-q^{9n})^2, the weight-2 newform of level 27
// attached to Y^2 = X^3 - 432. coeff(n) is lambda(n).
inline QSeries build_F(std::int64_t trunc) {
    if (trunc < 1) throw std::invalid_argument("build_F: truncation must be >= 1");
    QSeries prod = eta_factor(3, 2, trunc) * eta_factor(9, 2, trunc);
    return prod.shifted_up(1);
}

// f|V(m): coefficient of q^n is the coefficient of q^{n/m} when m | n.
inline QSeries v_operator(const QSeries& f, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("v_operator: m must be positive");
    QSeries out(f.trunc());
    for (std::int64_t n = 0; n * m <= f.trunc(); ++n) out.at(n * m) = f.coeff(n);
    return out;
}

// Coefficient-wise twist by a quadratic character.
inline QSeries twist(const QSeries& f, const QuadChar& character) {
    QSeries out(f.trunc());
    for (std::int64_t n = 0; n <= f.trunc(); ++n) {
        int c = character(n);
        if (c == 1)
            out.at(n) = f.coeff(n);
        else if (c == -1)
            out.at(n) = -f.coeff(n);
    }
    return out;
}

} // namespace cubefermat
