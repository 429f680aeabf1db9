#pragma once

// Exact integer utilities: factorization at desk scale, squarefree parts,
// fundamental discriminants, the full Kronecker symbol, and the quadratic
// characters chi_d built from it.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubefermat {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

// floor(sqrt(v)) for v >= 0.
inline std::int64_t isqrt64(std::int64_t v) {
    if (v < 0) throw std::invalid_argument("isqrt64: negative input");
    if (v == 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && static_cast<__int128>(r) * r > v) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= v) ++r;
    return r;
}

inline bool is_perfect_square(const Integer& v) {
    if (v < 0) return false;
    Integer r = boost::multiprecision::sqrt(v);
    return r * r == v;
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Trial division with a primality certificate for the cofactor. Primes in
// strictly increasing order, exponents >= 1.
inline std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor: n must be positive");
    std::vector<std::pair<std::uint64_t, int>> out;
    auto strip = [&](std::uint64_t p) {
        if (n % p) return;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    std::uint64_t p = 5;
    constexpr std::uint64_t kTrialBound = 10'000'000;
    while (p <= kTrialBound && p * p <= n) {
        strip(p);
        strip(p + 2);
        p += 6;
    }
    if (n > 1) {
        if (is_prime_u64(n)) {
            out.emplace_back(n, 1);
        } else {
            // Cofactor beyond the fast trial bound and not prime; keep dividing.
            while (p * p <= n) {
                strip(p);
                strip(p + 2);
                p += 6;
                if (is_prime_u64(n)) break;
            }
            if (n > 1) out.emplace_back(n, 1);
        }
    }
    return out;
}

// s squarefree with n = s * m^2; sign of n preserved.
inline std::int64_t squarefree_part(std::int64_t n) {
    if (n == 0) throw std::invalid_argument("squarefree_part: n must be nonzero");
    std::uint64_t a = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    std::int64_t s = 1;
    for (auto [p, e] : factor(a)) {
        if (e & 1) s *= static_cast<std::int64_t>(p);
    }
    return n < 0 ? -s : s;
}

inline bool is_squarefree(std::int64_t n) {
    return n != 0 && squarefree_part(n) == n;
}

// D = d for d = 1 (mod 4), else 4d; the discriminant of Q(sqrt(d)).
inline std::int64_t fundamental_discriminant(std::int64_t d) {
    if (!is_squarefree(d)) throw std::invalid_argument("fundamental_discriminant: d must be squarefree and nonzero");
    std::int64_t m = ((d % 4) + 4) % 4;
    return m == 1 ? d : 4 * d;
}

// Full Kronecker symbol (a/n), including n <= 0 and even n.
// Conventions: (a/2) by a mod 8, (a/-1) = sign of a (1 for a >= 0),
// (a/0) = 1 iff a = +-1.
inline int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int t = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) t = -t;
    }
    int twos = 0;
    while ((n & 1) == 0) { n >>= 1; ++twos; }
    if (twos & 1) {
        int m = static_cast<int>(((a % 8) + 8) % 8);
        if (m == 3 || m == 5) t = -t;
        // m in {1,7}: factor +1; even a was ruled out above.
    }
    // n odd and positive from here; Jacobi symbol is periodic in a mod n.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            int m = static_cast<int>(n & 7);
            if (m == 3 || m == 5) t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

inline bool is_fundamental_discriminant(std::int64_t D) {
    if (D == 0) return false;
    std::int64_t m = ((D % 4) + 4) % 4;
    if (m == 1) return is_squarefree(D);
    if (m != 0) return false;
    std::int64_t q = D / 4;
    std::int64_t qm = ((q % 4) + 4) % 4;
    return (qm == 2 || qm == 3) && is_squarefree(q);
}

// The primitive quadratic character of a fundamental discriminant,
// evaluated as a Kronecker symbol. QuadChar(1) is the trivial character;
// QuadChar(-3) is the nontrivial character mod 3.
struct QuadChar {
    std::int64_t disc = 1;

    QuadChar() = default;
    explicit QuadChar(std::int64_t D) : disc(D) {
        if (!is_fundamental_discriminant(D))
            throw std::invalid_argument("QuadChar: not a fundamental discriminant");
    }

    static QuadChar from_squarefree(std::int64_t d) {
        return QuadChar(fundamental_discriminant(d));
    }

    std::int64_t conductor() const { return disc < 0 ? -disc : disc; }

    int operator()(std::int64_t n) const { return kronecker(disc, n); }
};

// chi_d(n) = (d/n) extended to the primitive character of disc(Q(sqrt(d))).
inline int chi(std::int64_t d, std::int64_t n) {
    return kronecker(fundamental_discriminant(d), n);
}

} // namespace cubefermat
