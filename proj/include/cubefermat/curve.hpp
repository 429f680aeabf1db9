#pragma once

// Exact arithmetic on E : Y^2 = X^3 - 432 over Q(sqrt(d)), the maps between
// Fermat triples and curve points, quadratic-twist descent, torsion of
// E_d : dY^2 = X^3 - 432, and the Burnside search for explicit solutions.
// No floating point anywhere: every returned object satisfies its defining
// equation exactly.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "arith.hpp"

namespace cubefermat {

// a + b sqrt(d) with rational a, b. d must be squarefree and nonzero;
// d = 1 is accepted as the degenerate rational case and canonicalized to
// b = 0 so that torsion points of E_1 can ride through the same code paths.
struct QuadFieldElem {
    Rational a;
    Rational b;
    std::int64_t d = 1;

    QuadFieldElem() = default;
    QuadFieldElem(Rational a_, Rational b_, std::int64_t d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
        if (!is_squarefree(d)) throw std::invalid_argument("QuadFieldElem: d must be squarefree and nonzero");
        if (d == 1) { a += b; b = 0; }
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    QuadFieldElem conj() const { return {a, -b, d}; }

    friend bool operator==(const QuadFieldElem& u, const QuadFieldElem& v) {
        return u.d == v.d && u.a == v.a && u.b == v.b;
    }

    friend QuadFieldElem operator+(const QuadFieldElem& u, const QuadFieldElem& v) {
        check(u, v);
        return {u.a + v.a, u.b + v.b, u.d};
    }
    friend QuadFieldElem operator-(const QuadFieldElem& u, const QuadFieldElem& v) {
        check(u, v);
        return {u.a - v.a, u.b - v.b, u.d};
    }
    QuadFieldElem operator-() const { return {-a, -b, d}; }

    friend QuadFieldElem operator*(const QuadFieldElem& u, const QuadFieldElem& v) {
        check(u, v);
        return {u.a * v.a + u.b * v.b * u.d, u.a * v.b + u.b * v.a, u.d};
    }

    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d); the norm is
    // nonzero for nonzero elements because d is not a square (and for the
    // degenerate d = 1 the element is plain rational).
    QuadFieldElem inverse() const {
        Rational norm = a * a - b * b * d;
        if (norm == 0) throw std::domain_error("QuadFieldElem: division by zero");
        return {a / norm, -b / norm, d};
    }

    friend QuadFieldElem operator/(const QuadFieldElem& u, const QuadFieldElem& v) { return u * v.inverse(); }

    QuadFieldElem square() const { return *this * *this; }
    QuadFieldElem cube() const { return *this * *this * *this; }

private:
    static void check(const QuadFieldElem& u, const QuadFieldElem& v) {
        if (u.d != v.d) throw std::invalid_argument("QuadFieldElem: mixed base fields");
    }
};

inline QuadFieldElem rational_in(Rational r, std::int64_t d) { return {std::move(r), 0, d}; }

// A solution triple to x^3 + y^3 = z^3 in Q(sqrt(d)).
struct FermatSolution {
    QuadFieldElem x, y, z;

    std::int64_t field_d() const { return x.d; }

    bool equation_holds() const { return x.cube() + y.cube() == z.cube(); }
    bool is_nontrivial() const { return !x.is_zero() && !y.is_zero() && !z.is_zero(); }
};

// true iff x^3 + y^3 = z^3 holds exactly and no coordinate vanishes.
inline bool verify_solution(const FermatSolution& s) {
    return s.equation_holds() && s.is_nontrivial();
}

// A point of E : Y^2 = X^3 - 432 over Q(sqrt(d)), or the point at infinity.
struct CurvePoint {
    bool infinity = true;
    QuadFieldElem X, Y;

    static CurvePoint at_infinity() { return {}; }
    static CurvePoint affine(QuadFieldElem X_, QuadFieldElem Y_) {
        CurvePoint p;
        p.infinity = false;
        p.X = std::move(X_);
        p.Y = std::move(Y_);
        if (p.X.d != p.Y.d) throw std::invalid_argument("CurvePoint: mixed base fields");
        return p;
    }

    bool on_curve() const {
        if (infinity) return true;
        QuadFieldElem c432 = rational_in(432, X.d);
        return Y.square() == X.cube() - c432;
    }

    CurvePoint negated() const {
        if (infinity) return *this;
        return affine(X, -Y);
    }

    friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
        if (p.infinity || q.infinity) return p.infinity == q.infinity;
        return p.X == q.X && p.Y == q.Y;
    }
};

// Chord-tangent addition on Y^2 = X^3 - 432.
inline CurvePoint add_points(const CurvePoint& p, const CurvePoint& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    if (p.X.d != q.X.d) throw std::invalid_argument("add_points: mixed base fields");
    std::int64_t d = p.X.d;
    QuadFieldElem lambda;
    if (p.X == q.X) {
        if (p.Y == -q.Y) return CurvePoint::at_infinity();
        // Doubling; Y = 0 cannot occur (432 has no cube root in a quadratic field).
        lambda = rational_in(3, d) * p.X.square() / (rational_in(2, d) * p.Y);
    } else {
        lambda = (q.Y - p.Y) / (q.X - p.X);
    }
    QuadFieldElem x3 = lambda.square() - p.X - q.X;
    QuadFieldElem y3 = lambda * (p.X - x3) - p.Y;
    return CurvePoint::affine(x3, y3);
}

inline CurvePoint multiply_point(CurvePoint p, std::int64_t m) {
    if (m < 0) { p = p.negated(); m = -m; }
    CurvePoint acc = CurvePoint::at_infinity();
    while (m > 0) {
        if (m & 1) acc = add_points(acc, p);
        m >>= 1;
        if (m) p = add_points(p, p);
    }
    return acc;
}

// C -> E: X = 12z/(y+x), Y = 36(y-x)/(y+x). The degenerate x + y = 0
// forces z = 0 (trivial solution) and maps to infinity.
inline CurvePoint fermat_to_curve(const FermatSolution& s) {
    QuadFieldElem sum = s.x + s.y;
    if (sum.is_zero()) return CurvePoint::at_infinity();
    std::int64_t d = s.field_d();
    QuadFieldElem X = rational_in(12, d) * s.z / sum;
    QuadFieldElem Y = rational_in(36, d) * (s.y - s.x) / sum;
    return CurvePoint::affine(X, Y);
}

// P - sigma(P) for P in E(Q(sqrt(d))); lands on the twist E_d : d b^2 = a^3 - 432
// as a rational pair (a, b). Returns nullopt when the difference is infinity
// (in particular for rational P).
inline std::optional<std::pair<Rational, Rational>> twist_descent(const CurvePoint& p) {
    if (p.infinity) return std::nullopt;
    CurvePoint sigma_p = CurvePoint::affine(p.X.conj(), p.Y.conj());
    CurvePoint q = add_points(p, sigma_p.negated());
    if (q.infinity) return std::nullopt;
    // sigma(Q) = -Q, so X is rational and Y is a pure multiple of sqrt(d).
    if (!q.X.is_rational() || q.Y.a != 0)
        throw std::logic_error("twist_descent: point not antisymmetric under conjugation");
    return std::make_pair(q.X.a, q.Y.b);
}

// (a, b) on E_d with a != 0 pulled back to a Fermat solution with z = 1:
// x, y = (12/a +- b sqrt(d)/(3a))/2. Nontrivial exactly when (a, b) is
// not torsion.
inline FermatSolution twist_to_fermat(const Rational& a, const Rational& b, std::int64_t d) {
    if (a == 0) throw std::invalid_argument("twist_to_fermat: a must be nonzero");
    if (d * b * b != a * a * a - 432) throw std::invalid_argument("twist_to_fermat: (a, b) not on E_d");
    Rational ra = 6 / a;
    Rational rb = b / (6 * a);
    FermatSolution s;
    s.x = QuadFieldElem(ra, rb, d);
    s.y = QuadFieldElem(ra, -rb, d);
    s.z = rational_in(1, d);
    return s;
}

// Order of the torsion subgroup of E_d(Q), computed from the rational roots
// x = 0 and x = 12d of the 3-division polynomial of y^2 = x^3 - 432 d^3
// (the integral model of E_d): a 3-torsion point exists iff the matching
// y^2 value is a perfect square. No 2-torsion exists (432 d^3 is never a
// rational cube), so the order is 1 or 3.
inline int torsion_order(std::int64_t d) {
    if (!is_squarefree(d)) throw std::invalid_argument("torsion_order: d must be squarefree and nonzero");
    Integer D = d;
    // phi_3(x) = 3x^4 - 12*432 d^3 x = 3x (x^3 - 1728 d^3); rational roots 0 and 12d.
    Integer y2_at_0 = -432 * D * D * D;
    Integer y2_at_12d = 1296 * D * D * D;
    if (is_perfect_square(y2_at_0) || is_perfect_square(y2_at_12d)) return 3;
    return 1;
}

struct BurnsideWitness {
    FermatSolution solution;
    Rational k;
};

namespace detail {

// Exact rational square root, if one exists.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
    return Rational(boost::multiprecision::sqrt(num), boost::multiprecision::sqrt(den));
}

inline Integer gcd_int(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

// Scale to integral coordinates, remove content, make z positive, and put
// the +sqrt(d) branch first; cubes absorb any rational scaling.
inline void canonicalize(FermatSolution& s) {
    Integer l = 1;
    for (const Rational* r : {&s.x.a, &s.x.b, &s.y.a, &s.y.b, &s.z.a, &s.z.b}) {
        Integer den = boost::multiprecision::denominator(*r);
        l = l / gcd_int(l, den) * den;
    }
    Rational scale(l, 1);
    Integer content = 0;
    for (Rational* r : {&s.x.a, &s.x.b, &s.y.a, &s.y.b, &s.z.a, &s.z.b}) {
        *r *= scale;
        content = gcd_int(content, boost::multiprecision::numerator(*r));
    }
    if (content > 1) {
        Rational inv(Integer(1), content);
        for (Rational* r : {&s.x.a, &s.x.b, &s.y.a, &s.y.b, &s.z.a, &s.z.b}) *r *= inv;
    }
    bool flip = false;
    if (s.z.is_rational() && s.z.a != 0) flip = s.z.a < 0;
    if (flip) {
        s.x = -s.x;
        s.y = -s.y;
        s.z = -s.z;
    }
    if (s.x.b < s.y.b) std::swap(s.x, s.y);
}

} // namespace detail

// Search the Burnside parametrization
//   x = -3 + sqrt(-3(1 + 4k^3)), y = -3 - sqrt(-3(1 + 4k^3)), z = 6k
// for k = p/q landing in Q(sqrt(d)): accept k when -3(1 + 4k^3)/d is a
// rational square. Enumeration order is increasing max(|p|, q), then (p, q)
// lexicographic, so the returned witness is deterministic. Absence of a hit
// proves nothing; a hit is verified exactly before being returned.
inline std::optional<BurnsideWitness> burnside_search(std::int64_t d, std::int64_t height) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw std::invalid_argument("burnside_search: d must be squarefree, not 0 or 1");
    if (height < 1) throw std::invalid_argument("burnside_search: height must be >= 1");
    for (std::int64_t h = 1; h <= height; ++h) {
        for (std::int64_t p = -h; p <= h; ++p) {
            for (std::int64_t q = 1; q <= h; ++q) {
                if (std::max(p < 0 ? -p : p, q) != h) continue;
                if (p == 0 || p == -q) continue; // k = 0 and k = -1 are degenerate
                if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
                Rational k(p, q);
                Rational target = Rational(-3) * (1 + 4 * k * k * k) / d;
                auto r = detail::rational_sqrt(target);
                if (!r || *r == 0) continue;
                FermatSolution s;
                s.x = QuadFieldElem(-3, *r, d);
                s.y = QuadFieldElem(-3, -(*r), d);
                s.z = rational_in(6 * k, d);
                detail::canonicalize(s);
                if (!verify_solution(s)) continue; // k = 0/-1 and r = 0 already excluded
                return BurnsideWitness{s, k};
            }
        }
    }
    return std::nullopt;
}

} // namespace cubefermat
