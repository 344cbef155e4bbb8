#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials with exact coefficients, plus the
 *        generating-function helpers the lattice-point machinery is built on:
 *        binomial(at+b, r) expanded in t, truncated bounded-product coefficient
 *        extraction, Ehrhart-series numerators and exact Lagrange interpolation.
 *
 * Coefficients are stored by degree with no trailing zeros; the empty vector
 * is the zero polynomial (degree -1 by convention).
 */

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "prismslice/bigint.hpp"
#include "prismslice/rational.hpp"

namespace prismslice {

template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }
    static Polynomial variable() { return Polynomial(std::vector<T>{T(0), T(1)}); }

    /// Degree as the index of the last nonzero coefficient; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const std::vector<T>& coeffs() const { return c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<T> r(c_.size(), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial{};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, const Polynomial& p) {
        std::vector<T> r(p.c_.size(), T(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    T evaluate(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial{};
        std::vector<T> r(c_.size() - 1, T(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = T(static_cast<long long>(i)) * c_[i];
        return Polynomial(std::move(r));
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == T(0)) continue;
            if (!s.empty()) s += " + ";
            s += coeff_str(c_[i]);
            if (i >= 1) s += "*" + var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    std::vector<T> c_;

    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    static std::string coeff_str(const T& v) { return v.to_string(); }
};

using RatPoly = Polynomial<Rational>;
using IntPoly = Polynomial<BigInt>;

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

/// Converts an exactly-integral RatPoly to an IntPoly; throws otherwise.
inline IntPoly to_integer_checked(const RatPoly& p) {
    std::vector<BigInt> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(v.as_integer());
    return IntPoly(std::move(c));
}

/// The affine expression slope*t + intercept.
struct LinearForm {
    long long slope = 0;
    long long intercept = 0;
};

/**
 * Expands binom(a, r) = (1/r!) * prod_{s=0}^{r-1} (a - s) as a polynomial in t,
 * where a is the affine form slope*t + intercept. This is the generalized
 * binomial via the falling-factorial product, so it is valid at negative
 * integer arguments as well.
 */
inline RatPoly binomial_polynomial(const LinearForm& a, long long r) {
    if (r < 0) throw std::domain_error("binomial_polynomial: negative order");
    RatPoly acc = RatPoly::constant(Rational(1));
    BigInt rfact(1);
    for (long long s = 0; s < r; ++s) {
        acc *= RatPoly{Rational(a.intercept - s), Rational(a.slope)};
        rfact *= BigInt(s + 1);
    }
    return Rational(BigInt(1), rfact) * acc;
}

/**
 * Coefficient of x^target in prod_i (1 + x + ... + x^{caps[i]}), i.e. the
 * number of integer vectors 0 <= v_i <= caps[i] with sum equal to target.
 * The running product is truncated above target throughout.
 */
inline BigInt bounded_power_coeff(const std::vector<long long>& caps, long long target) {
    if (target < 0) return BigInt(0);
    for (long long cap : caps)
        if (cap < 0) throw std::domain_error("bounded_power_coeff: negative cap");
    std::vector<BigInt> dp(static_cast<std::size_t>(target) + 1);
    dp[0] = BigInt(1);
    std::vector<BigInt> prefix(dp.size() + 1);
    for (long long cap : caps) {
        if (cap == 0) continue;
        prefix[0] = BigInt(0);
        for (std::size_t s = 0; s < dp.size(); ++s) prefix[s + 1] = prefix[s] + dp[s];
        for (std::size_t s = 0; s < dp.size(); ++s) {
            std::size_t lo = s >= static_cast<std::size_t>(cap) ? s - static_cast<std::size_t>(cap) : 0;
            dp[s] = prefix[s + 1] - prefix[lo];
        }
    }
    return dp[static_cast<std::size_t>(target)];
}

/**
 * Numerator of the series sum_{j>=0} p(j) x^j over (1-x)^{d+1}, truncated at
 * degree d: h_i = sum_{j=0}^{i} (-1)^j C(d+1, j) p(i-j).
 *
 * Rejects inputs that produce a non-integral or negative coefficient, which
 * signals that p was not the counting polynomial of a d-dimensional lattice
 * polytope.
 */
inline IntPoly hstar_from_ehrhart(const RatPoly& p, long long d) {
    if (d < 0) throw std::domain_error("hstar_from_ehrhart: negative dimension");
    if (p.degree() > d)
        throw std::domain_error("hstar_from_ehrhart: polynomial degree exceeds dimension");
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(d) + 1);
    for (long long j = 0; j <= d; ++j) values.push_back(p.evaluate(Rational(j)));
    // binomials C(d+1, j), j = 0..d+1
    std::vector<BigInt> binom(static_cast<std::size_t>(d) + 2);
    binom[0] = BigInt(1);
    for (long long j = 1; j <= d + 1; ++j)
        binom[static_cast<std::size_t>(j)] =
            binom[static_cast<std::size_t>(j - 1)] * BigInt(d + 2 - j) / BigInt(j);
    std::vector<BigInt> h(static_cast<std::size_t>(d) + 1);
    for (long long i = 0; i <= d; ++i) {
        Rational acc(0);
        for (long long j = 0; j <= i; ++j) {
            Rational term = Rational(binom[static_cast<std::size_t>(j)]) *
                            values[static_cast<std::size_t>(i - j)];
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        if (!acc.is_integer() || acc.sign() < 0)
            throw std::domain_error("hstar_from_ehrhart: coefficient " + acc.to_string() +
                                    " at degree " + std::to_string(i) +
                                    " is not a nonnegative integer");
        h[static_cast<std::size_t>(i)] = acc.as_integer();
    }
    return IntPoly(std::move(h));
}

/// Coefficient of x^j in h(x) / (1-x)^{d+1}; inverse direction of hstar_from_ehrhart.
inline BigInt ehrhart_series_value(const IntPoly& h, long long d, long long j) {
    BigInt acc(0);
    for (int i = 0; i <= h.degree(); ++i) {
        long long top = d + j - i;
        if (top < d) continue;
        // C(top, d)
        BigInt b(1);
        for (long long s = 1; s <= d; ++s) b = b * BigInt(top - d + s) / BigInt(s);
        acc += h.coeff(static_cast<std::size_t>(i)) * b;
    }
    return acc;
}

/// Exact Lagrange interpolation through the given (x, y) pairs (distinct x).
inline RatPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    RatPoly acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RatPoly basis = RatPoly::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis *= RatPoly{-points[j].first, Rational(1)};
            denom *= points[i].first - points[j].first;
        }
        acc += (points[i].second / denom) * basis;
    }
    return acc;
}

} // namespace prismslice
