#pragma once

// Positive-definite integral ternary quadratic forms Q(x) = (1/2) x^T A x,
// exact representation counting, and theta series.
//
// Two independent code paths produce representation numbers:
//   * count_reps(Q, n):      per-n enumeration, solving the inner variable
//                             as an integer quadratic;
//   * batch_counts(Q, N, s): a histogram sieve over every lattice point of
//                             the ellipsoid Q <= N, sharded over disjoint
//                             x-slices for parallelism.
// The sieve visits each point once with an incremental evaluation (two adds
// per point), so 10^9-point ellipsoids are a few seconds of work. Ranges
// are derived exactly from the 2D Schur complement of the Gram matrix:
// column (x,y) is admissible iff
//   G(x,y) = gamma x^2 + beta xy + alpha y^2 <= 2 A33 N,
// with alpha = A33 A22 - A23^2, beta = 2(A33 A12 - A13 A23),
// gamma = A33 A11 - A13^2, and the z-run inside a column is the integer
// interval between the roots of (A33/2) z^2 + L z + (Q(x,y,0) - N).
// Floating-point square roots are used only as a first guess and are fixed
// up by exact integer comparisons, so no lattice point is missed.

#include <array>
#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "arith.hpp"
#include "qseries.hpp"

namespace cubefermat {

struct TernaryForm {
    // Symmetric Gram matrix with even diagonal; Q(v) = (1/2) v^T A v.
    std::array<std::array<std::int64_t, 3>, 3> A;

    explicit TernaryForm(std::array<std::array<std::int64_t, 3>, 3> gram) : A(gram) {
        for (int i = 0; i < 3; ++i) {
            if (A[i][i] % 2 != 0) throw std::invalid_argument("TernaryForm: diagonal must be even");
            for (int j = 0; j < 3; ++j)
                if (A[i][j] != A[j][i]) throw std::invalid_argument("TernaryForm: matrix must be symmetric");
        }
        // Positive definiteness via leading principal minors.
        if (A[0][0] <= 0 || minor2() <= 0 || det() <= 0)
            throw std::invalid_argument("TernaryForm: not positive definite");
    }

    std::int64_t eval(std::int64_t x, std::int64_t y, std::int64_t z) const {
        return (A[0][0] * x * x + A[1][1] * y * y + A[2][2] * z * z) / 2 +
               A[0][1] * x * y + A[0][2] * x * z + A[1][2] * y * z;
    }

    std::int64_t minor2() const { return A[0][0] * A[1][1] - A[0][1] * A[0][1]; }

    std::int64_t det() const {
        return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[1][2]) -
               A[0][1] * (A[0][1] * A[2][2] - A[1][2] * A[0][2]) +
               A[0][2] * (A[0][1] * A[1][2] - A[1][1] * A[0][2]);
    }

    // Adjugate (det * A^{-1}), exact.
    std::array<std::array<std::int64_t, 3>, 3> adjugate() const {
        const auto& a = A;
        std::array<std::array<std::int64_t, 3>, 3> m{};
        m[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
        m[0][1] = -(a[0][1] * a[2][2] - a[0][2] * a[2][1]);
        m[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
        m[1][0] = -(a[1][0] * a[2][2] - a[1][2] * a[2][0]);
        m[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
        m[1][2] = -(a[0][0] * a[1][2] - a[0][2] * a[1][0]);
        m[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
        m[2][1] = -(a[0][0] * a[2][1] - a[0][1] * a[2][0]);
        m[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        return m;
    }
};

// The four forms of the solvability criterion.
// Q1, Q2 decide d with 3 | d (at d/3); Q3, Q4 decide d coprime to 3.
inline const TernaryForm& form_Q1() {
    static const TernaryForm f({{{2, 0, 0}, {0, 6, 0}, {0, 0, 54}}}); // x^2 + 3y^2 + 27z^2
    return f;
}
inline const TernaryForm& form_Q2() {
    static const TernaryForm f({{{6, 0, 0}, {0, 8, -2}, {0, -2, 14}}}); // 3x^2 + 4y^2 - 2yz + 7z^2
    return f;
}
inline const TernaryForm& form_Q3() {
    static const TernaryForm f({{{2, 0, 1}, {0, 2, 0}, {1, 0, 14}}}); // x^2 + y^2 + 7z^2 + xz
    return f;
}
inline const TernaryForm& form_Q4() {
    static const TernaryForm f({{{2, 1, 0}, {1, 4, 1}, {0, 1, 8}}}); // x^2 + 2y^2 + 4z^2 + xy + yz
    return f;
}

namespace detail {

struct SieveGeometry {
    std::int64_t a11, a12, a13, a22, a23, a33;
    std::int64_t alpha, beta, gamma; // 2D Schur-complement form G(x,y)
    std::int64_t det;

    explicit SieveGeometry(const TernaryForm& q) {
        a11 = q.A[0][0]; a12 = q.A[0][1]; a13 = q.A[0][2];
        a22 = q.A[1][1]; a23 = q.A[1][2]; a33 = q.A[2][2];
        alpha = a33 * a22 - a23 * a23;
        beta  = 2 * (a33 * a12 - a13 * a23);
        gamma = a33 * a11 - a13 * a13;
        det   = q.det();
    }

    std::int64_t g(std::int64_t x, std::int64_t y) const {
        return gamma * x * x + beta * x * y + alpha * y * y;
    }

    // Largest |x| admitting any lattice point: det * x^2 <= 2 * alpha * n.
    std::int64_t x_bound(std::int64_t n) const {
        std::int64_t b = isqrt64(2 * alpha * n / det);
        while (det * (b + 1) * (b + 1) <= 2 * alpha * n) ++b;
        while (b > 0 && det * b * b > 2 * alpha * n) --b;
        return b;
    }

    // Integer y-interval with G(x,y) <= 2*a33*n; false if empty.
    bool y_range(std::int64_t x, std::int64_t n, std::int64_t& y_lo, std::int64_t& y_hi) const {
        std::int64_t cap = 2 * a33 * n;
        std::int64_t disc = (beta * beta - 4 * alpha * gamma) * x * x + 8 * alpha * cap;
        if (disc < 0) return false;
        std::int64_t s = isqrt64(disc);
        y_lo = ceil_div(-beta * x - s, 2 * alpha);
        y_hi = floor_div(-beta * x + s, 2 * alpha);
        while (g(x, y_lo - 1) <= cap) --y_lo; // isqrt slack: at most one step
        while (g(x, y_hi + 1) <= cap) ++y_hi;
        while (y_lo <= y_hi && g(x, y_lo) > cap) ++y_lo;
        while (y_lo <= y_hi && g(x, y_hi) > cap) --y_hi;
        return y_lo <= y_hi;
    }

    // Integer z-interval with Q(x,y,z) <= n; false if empty.
    bool z_range(std::int64_t x, std::int64_t y, std::int64_t n, std::int64_t& z_lo, std::int64_t& z_hi) const {
        std::int64_t L = a13 * x + a23 * y;
        std::int64_t qxy0 = (a11 * x * x + a22 * y * y) / 2 + a12 * x * y;
        std::int64_t disc = L * L - 2 * a33 * (qxy0 - n);
        if (disc < 0) return false;
        std::int64_t s = isqrt64(disc);
        z_lo = ceil_div(-L - s, a33);
        z_hi = floor_div(-L + s, a33);
        auto val = [&](std::int64_t z) { return qxy0 + (a33 / 2) * z * z + L * z; };
        while (val(z_lo - 1) <= n) --z_lo; // isqrt slack: at most one step
        while (val(z_hi + 1) <= n) ++z_hi;
        while (z_lo <= z_hi && val(z_lo) > n) ++z_lo;
        while (z_lo <= z_hi && val(z_hi) > n) --z_hi;
        return z_lo <= z_hi;
    }
};

inline void sieve_slice(const SieveGeometry& geo, std::int64_t n, std::int64_t x0, std::int64_t x_step,
                        std::int64_t x_max, std::vector<std::uint32_t>& hist) {
    for (std::int64_t x = x0; x <= x_max; x += x_step) {
        std::int64_t y_lo, y_hi;
        if (!geo.y_range(x, n, y_lo, y_hi)) continue;
        for (std::int64_t y = y_lo; y <= y_hi; ++y) {
            std::int64_t z_lo, z_hi;
            if (!geo.z_range(x, y, n, z_lo, z_hi)) continue;
            std::int64_t val = geo.a33 / 2 * z_lo * z_lo + (geo.a13 * x + geo.a23 * y) * z_lo +
                               (geo.a11 * x * x + geo.a22 * y * y) / 2 + geo.a12 * x * y;
            std::int64_t delta = geo.a33 * z_lo + geo.a33 / 2 + geo.a13 * x + geo.a23 * y;
            for (std::int64_t z = z_lo; z <= z_hi; ++z) {
                assert(val >= 0 && val <= n);
                assert(hist[static_cast<std::size_t>(val)] != UINT32_MAX);
                ++hist[static_cast<std::size_t>(val)];
                val += delta;
                delta += geo.a33;
            }
        }
    }
}

inline std::int64_t sieve_memory_budget_bytes() {
    constexpr std::int64_t kDefaultMb = 2048;
    std::int64_t mb = kDefaultMb;
    if (const char* env = std::getenv("CUBEFERMAT_MEM_MB")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) mb = v;
    }
    return mb * 1024 * 1024;
}

} // namespace detail

// Exact number of integer triples with Q(x,y,z) = n.
inline std::uint64_t count_reps(const TernaryForm& q, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("count_reps: n must be nonnegative");
    if (n == 0) return 1;
    detail::SieveGeometry geo(q);
    std::uint64_t count = 0;
    std::int64_t bx = geo.x_bound(n);
    for (std::int64_t x = -bx; x <= bx; ++x) {
        std::int64_t y_lo, y_hi;
        if (!geo.y_range(x, n, y_lo, y_hi)) continue;
        for (std::int64_t y = y_lo; y <= y_hi; ++y) {
            // (a33/2) z^2 + L z + (Q(x,y,0) - n) = 0 over the integers.
            std::int64_t L = geo.a13 * x + geo.a23 * y;
            std::int64_t qxy0 = (geo.a11 * x * x + geo.a22 * y * y) / 2 + geo.a12 * x * y;
            std::int64_t disc = L * L - 2 * geo.a33 * (qxy0 - n);
            if (disc < 0) continue;
            std::int64_t s = isqrt64(disc);
            if (s * s != disc) continue;
            if ((-L + s) % geo.a33 == 0) ++count;
            if (s != 0 && (-L - s) % geo.a33 == 0) ++count;
        }
    }
    return count;
}

// Histogram of representation numbers for 0 <= n <= N, sharded over
// interleaved x-slices. The result is independent of the shard count:
// shards produce disjoint point sets and integer addition is associative.
inline std::vector<std::uint32_t> batch_counts(const TernaryForm& q, std::int64_t n_max, int shards = 1) {
    if (n_max < 1) throw std::invalid_argument("batch_counts: N must be >= 1");
    if (shards < 1) throw std::invalid_argument("batch_counts: shards must be >= 1");
    std::int64_t need = static_cast<std::int64_t>(shards) * (n_max + 1) * sizeof(std::uint32_t);
    if (need > detail::sieve_memory_budget_bytes())
        throw std::runtime_error("batch_counts: histogram memory " + std::to_string(need) +
                                 " bytes exceeds budget (set CUBEFERMAT_MEM_MB to raise)");

    detail::SieveGeometry geo(q);
    std::int64_t bx = geo.x_bound(n_max);

    if (shards == 1) {
        std::vector<std::uint32_t> hist(static_cast<std::size_t>(n_max) + 1, 0);
        detail::sieve_slice(geo, n_max, -bx, 1, bx, hist);
        return hist;
    }

    std::vector<std::vector<std::uint32_t>> parts(
        shards, std::vector<std::uint32_t>(static_cast<std::size_t>(n_max) + 1, 0));
    std::vector<std::thread> workers;
    workers.reserve(shards);
    for (int s = 0; s < shards; ++s) {
        workers.emplace_back([&, s] {
            detail::sieve_slice(geo, n_max, -bx + s, shards, bx, parts[static_cast<std::size_t>(s)]);
        });
    }
    for (auto& w : workers) w.join();
    std::vector<std::uint32_t> hist = std::move(parts[0]);
    for (int s = 1; s < shards; ++s)
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += parts[static_cast<std::size_t>(s)][i];
    return hist;
}

// theta_Q(z) = sum r_Q(n) q^n, computed by the histogram sieve.
inline QSeries theta_series(const TernaryForm& q, std::int64_t trunc) {
    auto counts = batch_counts(q, trunc, 1);
    QSeries out(trunc);
    for (std::int64_t n = 0; n <= trunc; ++n) out.at(n) = counts[static_cast<std::size_t>(n)];
    return out;
}

// a(n): n-th coefficient of theta_Q1 - theta_Q2.
inline std::int64_t coeff_a(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("coeff_a: n must be >= 1");
    return static_cast<std::int64_t>(count_reps(form_Q1(), n)) -
           static_cast<std::int64_t>(count_reps(form_Q2(), n));
}

// b(n): n-th coefficient of theta_Q3 - theta_Q4.
inline std::int64_t coeff_b(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("coeff_b: n must be >= 1");
    return static_cast<std::int64_t>(count_reps(form_Q3(), n)) -
           static_cast<std::int64_t>(count_reps(form_Q4(), n));
}

struct ThetaLevel {
    std::int64_t level;
    std::int64_t char_disc;
};

// Minimal N with N*A^{-1} integral and even-diagonal, plus the fundamental
// discriminant attached to det(2A). theta_Q lives in
// M_{3/2}(Gamma_0(level), chi_{char_disc}).
inline ThetaLevel theta_level(const TernaryForm& q) {
    auto adj = q.adjugate();
    std::int64_t det = q.det();
    std::int64_t level = 0;
    for (std::int64_t n = 1; n <= 2 * det; ++n) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = 0; j < 3 && ok; ++j) {
                std::int64_t num = n * adj[i][j];
                if (num % det != 0) ok = false;
                else if (i == j && (num / det) % 2 != 0) ok = false;
            }
        if (ok) { level = n; break; }
    }
    // n = 2*det always qualifies, so level != 0 here.
    std::int64_t det2a = 8 * det;
    return {level, fundamental_discriminant(squarefree_part(det2a))};
}

} // namespace cubefermat
