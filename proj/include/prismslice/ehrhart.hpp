#pragma once

/**
 * @file ehrhart.hpp
 * @brief Lattice-point counting for hyperplane slices of boxes
 *        [0,c_1] x ... x [0,c_n]: the brute-force dilation counter, the
 *        alternating-sum closed form, the per-coefficient assembly from
 *        weighted-permutation counts, fat-to-thin reduction, volumes and the
 *        uniform-matroid independence polytope formula.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "prismslice/counting.hpp"
#include "prismslice/polynomial.hpp"
#include "prismslice/weighted_perms.hpp"

namespace prismslice {

/// The slice of the box at level k: points of the box with coordinate sum k.
struct SliceSpec {
    long long k;
    CapVector c;

    SliceSpec(long long k_, CapVector c_) : k(k_), c(std::move(c_)) {
        if (k < 0) throw std::invalid_argument("SliceSpec: k must be nonnegative");
    }

    std::size_t n() const { return c.n(); }
    /// Full-dimensional slices have 0 < k < sum(c); degenerate levels are allowed
    /// by the polynomial operations but rejected by the coefficient formulas.
    bool full_dimensional() const { return 0 < k && k < c.sum(); }
};

/// The fat slice: points of the box with coordinate sum in [a, b].
struct FatSliceSpec {
    long long a;
    long long b;
    CapVector c;

    FatSliceSpec(long long a_, long long b_, CapVector c_) : a(a_), b(b_), c(std::move(c_)) {
        if (a < 0 || a >= b) throw std::invalid_argument("FatSliceSpec: need 0 <= a < b");
    }
};

/// #(t * slice ∩ Z^n), counted exactly via truncated products. The oracle for
/// every polynomial identity in this module.
inline BigInt brute_count(const SliceSpec& s, long long t) {
    if (t < 0) throw std::domain_error("brute_count: negative dilation");
    std::vector<long long> caps;
    caps.reserve(s.n());
    for (long long e : s.c.entries()) caps.push_back(e * t);
    return bounded_power_coeff(caps, s.k * t);
}

/// #(t * fat-slice ∩ Z^n): level sums a*t..b*t of the dilated box.
inline BigInt fat_brute_count(const FatSliceSpec& f, long long t) {
    if (t < 0) throw std::domain_error("fat_brute_count: negative dilation");
    std::vector<long long> caps;
    caps.reserve(f.c.n());
    for (long long e : f.c.entries()) caps.push_back(e * t);
    BigInt acc(0);
    for (long long target = f.a * t; target <= f.b * t; ++target)
        acc += bounded_power_coeff(caps, target);
    return acc;
}

/**
 * The closed form for the dilation-counting polynomial of a slice:
 *
 *   sum_{j=0}^{k-1} (-1)^j sum_{v=0}^{k-1} binom(t(k-v)+n-1-j, n-1) rho_{c,j}(v)
 *
 * evaluated as an exact polynomial in t. The inner sums run over the printed
 * ranges; rho vanishes outside its support. Degenerate levels fall out
 * naturally: k = sum(c) gives the constant 1 and k > sum(c) gives 0; k = 0 is
 * special-cased to the constant 1.
 */
inline RatPoly ehrhart_formula(const SliceSpec& s) {
    const long long n = static_cast<long long>(s.n());
    if (s.k == 0) return RatPoly::constant(Rational(1));
    // accumulate (n-1)! * ehr as an integer polynomial, divide once at the end
    IntPoly acc;
    for (long long j = 0; j <= s.k - 1; ++j) {
        for (long long v = 0; v <= s.k - 1; ++v) {
            BigInt r = rho(s.c, j, v);
            if (r.is_zero()) continue;
            // prod_{u=0}^{n-2} ((k-v) t + n-1-j-u)
            IntPoly prod = IntPoly::constant(BigInt(1));
            for (long long u = 0; u <= n - 2; ++u)
                prod *= IntPoly{BigInt(n - 1 - j - u), BigInt(s.k - v)};
            if (j % 2 == 0)
                acc += r * prod;
            else
                acc -= r * prod;
        }
    }
    Rational scale(BigInt(1), factorial(n - 1));
    return scale * to_rational(acc);
}

/**
 * Coefficient of t^m via the weighted-permutation counts:
 *   (1/(n-1)!) sum_{ell=0}^{k-1} W(ell, n, m+1, c) A(m, k-ell-1).
 * Requires a full-dimensional slice and 0 <= m <= n-1.
 */
inline Rational ehrhart_coefficient(const SliceSpec& s, long long m) {
    const long long n = static_cast<long long>(s.n());
    if (!s.full_dimensional())
        throw std::domain_error("ehrhart_coefficient: requires 0 < k < sum(c)");
    if (m < 0 || m > n - 1)
        throw std::domain_error("ehrhart_coefficient: requires 0 <= m <= n-1");
    BigInt acc(0);
    for (long long ell = 0; ell <= s.k - 1; ++ell) {
        BigInt a = eulerian(m, s.k - ell - 1);
        if (a.is_zero()) continue;
        acc += w_count_formula(ell, static_cast<int>(n), static_cast<int>(m), s.c) * a;
    }
    return Rational(acc, factorial(n - 1));
}

/// The full polynomial assembled coefficient by coefficient.
inline RatPoly ehrhart_via_coefficients(const SliceSpec& s) {
    const long long n = static_cast<long long>(s.n());
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n));
    for (long long m = 0; m <= n - 1; ++m) coeffs.push_back(ehrhart_coefficient(s, m));
    return RatPoly(std::move(coeffs));
}

/// Counting polynomial of the whole box: prod_i (c_i t + 1).
inline RatPoly prism_ehrhart(const CapVector& c) {
    RatPoly acc = RatPoly::constant(Rational(1));
    for (long long e : c.entries()) acc *= RatPoly{Rational(1), Rational(e)};
    return acc;
}

/// Fat slice at [a, b] maps to the thin slice at level b with an extra
/// coordinate capped at b - a; the counting polynomials agree.
inline SliceSpec fat_to_thin(const FatSliceSpec& f) {
    return SliceSpec(f.b, f.c.append(f.b - f.a));
}

/**
 * Counting polynomial of the independence polytope of the uniform matroid of
 * rank k on n elements:
 *   sum_{j=0}^{k-1} (-1)^j C(n,j) binom((k-j)t + n - j, n).
 */
inline RatPoly uniform_independence_ehrhart(long long k, long long n) {
    if (k < 1 || k > n) throw std::domain_error("uniform_independence_ehrhart: need 1 <= k <= n");
    RatPoly acc;
    for (long long j = 0; j <= k - 1; ++j) {
        RatPoly term = Rational(binomial(n, j)) *
                       binomial_polynomial(LinearForm{k - j, n - j}, n);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/**
 * Euclidean-relative volume of a full-dimensional slice as the convolution
 *   (1/(n-1)!) sum_{ell=0}^{k-1} B(ell, c) A(n-1, k-ell-1),
 * where B counts placements of ell balls into boxes of capacities c_i - 1.
 */
inline Rational volume(const SliceSpec& s) {
    const long long n = static_cast<long long>(s.n());
    if (!s.full_dimensional()) throw std::domain_error("volume: requires 0 < k < sum(c)");
    BigInt acc(0);
    for (long long ell = 0; ell <= s.k - 1; ++ell) {
        BigInt a = eulerian(n - 1, s.k - ell - 1);
        if (a.is_zero()) continue;
        acc += bounded_compositions(ell, s.c) * a;
    }
    return Rational(acc, factorial(n - 1));
}

/// (n-1)! times the volume; always an integer for these slices.
inline BigInt normalized_volume(const SliceSpec& s) {
    Rational v = volume(s) * Rational(factorial(static_cast<long long>(s.n()) - 1));
    return v.as_integer();
}

/// Coefficient-wise comparison of the counting polynomials for caps c <= c2.
inline bool monotonicity_check(const SliceSpec& s, const CapVector& c2) {
    if (s.c.n() != c2.n()) throw std::invalid_argument("monotonicity_check: dimension mismatch");
    if (!s.c.dominated_by(c2))
        throw std::invalid_argument("monotonicity_check: second cap vector must dominate");
    SliceSpec s2(s.k, c2);
    if (!s.full_dimensional() || !s2.full_dimensional())
        throw std::domain_error("monotonicity_check: both slices must be full-dimensional");
    RatPoly p = ehrhart_formula(s);
    RatPoly q = ehrhart_formula(s2);
    int d = std::max(p.degree(), q.degree());
    for (int i = 0; i <= d; ++i)
        if (p.coeff(static_cast<std::size_t>(i)) > q.coeff(static_cast<std::size_t>(i)))
            return false;
    return true;
}

} // namespace prismslice
