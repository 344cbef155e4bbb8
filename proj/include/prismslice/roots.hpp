#pragma once

/**
 * @file roots.hpp
 * @brief Root-location checks for the conjecture scans.
 *
 * Real-rootedness and interlacing are decided exactly: square-free reduction
 * by a derivative gcd, Sturm chains over the integers (remainders rescaled to
 * primitive integer polynomials by positive factors only, which preserves the
 * sign sequence), and bisection-based root isolation with rational endpoints.
 *
 * The unit-circle check is numeric by necessity but certified: roots of the
 * square-free part are refined by simultaneous (Weierstrass) iteration, and
 * the final corrections are recomputed in exact rational arithmetic, giving
 * inclusion disks that bound every true root's distance from the unit circle.
 */

#include <algorithm>
#include <complex>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prismslice/bigint.hpp"
#include "prismslice/errors.hpp"
#include "prismslice/polynomial.hpp"
#include "prismslice/rational.hpp"

namespace prismslice {

namespace detail {

inline std::pair<RatPoly, RatPoly> rat_divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("rat_divmod: division by zero polynomial");
    RatPoly r = a;
    std::vector<Rational> q(a.degree() >= b.degree()
                                ? static_cast<std::size_t>(a.degree() - b.degree()) + 1
                                : 0,
                            Rational(0));
    const Rational lead = b.coeff(static_cast<std::size_t>(b.degree()));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational factor = r.coeff(static_cast<std::size_t>(r.degree())) / lead;
        q[static_cast<std::size_t>(shift)] = factor;
        std::vector<Rational> sub(static_cast<std::size_t>(shift) + 1, Rational(0));
        sub[static_cast<std::size_t>(shift)] = factor;
        r -= RatPoly(std::move(sub)) * b;
    }
    return {RatPoly(std::move(q)), r};
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    return a / BigInt::gcd(a, b) * b;
}

/// Scales by a positive rational to the primitive integer multiple; the sign
/// pattern of the coefficients is unchanged.
inline IntPoly primitive_scale(const RatPoly& p) {
    if (p.is_zero()) return IntPoly{};
    BigInt denom(1);
    for (const auto& c : p.coeffs()) denom = lcm(denom, c.denominator());
    std::vector<BigInt> ints;
    ints.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) ints.push_back(c.numerator() * (denom / c.denominator()));
    BigInt content(0);
    for (const auto& v : ints) content = BigInt::gcd(content, v);
    for (auto& v : ints) v /= content;
    return IntPoly(std::move(ints));
}

} // namespace detail

/// Primitive gcd with positive leading coefficient.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        if (a.is_zero()) return a;
        IntPoly g = detail::primitive_scale(to_rational(a));
        return g.coeff(static_cast<std::size_t>(g.degree())).sign() < 0 ? -g : g;
    }
    RatPoly ra = to_rational(a), rb = to_rational(b);
    while (!rb.is_zero()) {
        RatPoly rem = detail::rat_divmod(ra, rb).second;
        ra = rb;
        rb = rem;
    }
    IntPoly g = detail::primitive_scale(ra);
    return g.coeff(static_cast<std::size_t>(g.degree())).sign() < 0 ? -g : g;
}

/// p divided by gcd(p, p'): same roots, all simple, positive leading coefficient.
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (p.degree() == 0) return IntPoly{BigInt(1)};
    IntPoly g = poly_gcd(p, p.derivative());
    auto [q, r] = detail::rat_divmod(to_rational(p), to_rational(g));
    if (!r.is_zero()) throw model_violation("squarefree_part: non-exact division");
    IntPoly sf = detail::primitive_scale(q);
    return sf.coeff(static_cast<std::size_t>(sf.degree())).sign() < 0 ? -sf : sf;
}

/// Sturm chain with exact sign evaluation at rationals and at +/- infinity.
class SturmChain {
public:
    explicit SturmChain(IntPoly p) : p_(std::move(p)) {
        if (p_.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
        seq_.push_back(p_);
        if (p_.degree() >= 1) seq_.push_back(detail::primitive_scale(to_rational(p_.derivative())));
        while (seq_.back().degree() >= 1) {
            RatPoly rem = detail::rat_divmod(to_rational(seq_[seq_.size() - 2]),
                                             to_rational(seq_.back()))
                              .second;
            if (rem.is_zero()) break; // input was not square-free
            seq_.push_back(detail::primitive_scale(-rem));
        }
    }

    const IntPoly& poly() const { return p_; }

    /// Sign of q at the rational x, via homogeneous integer evaluation.
    static int sign_at(const IntPoly& q, const Rational& x) {
        const BigInt& a = x.numerator();
        const BigInt& b = x.denominator();
        int d = q.degree();
        if (d < 0) return 0;
        BigInt acc(0);
        BigInt bpow(1);
        // sum c_i a^i b^(d-i), accumulated Horner-style in a
        for (int i = d; i >= 0; --i) {
            acc = acc * a + q.coeff(static_cast<std::size_t>(i)) * bpow;
            if (i > 0) bpow *= b;
        }
        return acc.sign();
    }

    int sign_at(const Rational& x) const { return sign_at(p_, x); }

    int variations_at(const Rational& x) const {
        int var = 0, prev = 0;
        for (const auto& s : seq_) {
            int sg = sign_at(s, x);
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++var;
            prev = sg;
        }
        return var;
    }

    int variations_at_infinity(int direction) const {
        int var = 0, prev = 0;
        for (const auto& s : seq_) {
            int sg = s.coeff(static_cast<std::size_t>(s.degree())).sign();
            if (direction < 0 && s.degree() % 2 == 1) sg = -sg;
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++var;
            prev = sg;
        }
        return var;
    }

    /// Distinct real roots in the open interval (a, b); endpoints must not be roots.
    int count_in(const Rational& a, const Rational& b) const {
        return variations_at(a) - variations_at(b);
    }

    int total_real_roots() const {
        return variations_at_infinity(-1) - variations_at_infinity(+1);
    }

    /// Strictly larger than the absolute value of every root.
    Rational cauchy_bound() const {
        Rational lead(p_.coeff(static_cast<std::size_t>(p_.degree())));
        if (lead.sign() < 0) lead = -lead;
        Rational mx(0);
        for (int i = 0; i < p_.degree(); ++i) {
            Rational v(p_.coeff(static_cast<std::size_t>(i)));
            if (v.sign() < 0) v = -v;
            if (v > mx) mx = v;
        }
        return Rational(1) + mx / lead;
    }

private:
    IntPoly p_;
    std::vector<IntPoly> seq_;
};

/// Exact decision: does the polynomial have only real roots (counted with
/// multiplicity)? Square-free reduction makes multiplicity immaterial.
inline bool real_rooted_check(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("real_rooted_check: zero polynomial");
    if (p.degree() == 0) return true;
    IntPoly sf = squarefree_part(p);
    SturmChain chain(sf);
    return chain.total_real_roots() == sf.degree();
}

/// Open isolating interval (lo, hi) around a single root, or an exact
/// rational root when exact is set (then lo == hi is the root).
struct RootInterval {
    Rational lo, hi;
    bool exact = false;
};

/// Isolating intervals for all real roots of a square-free polynomial,
/// in increasing order of the roots.
inline std::vector<RootInterval> isolate_real_roots(const SturmChain& chain) {
    std::vector<RootInterval> out;
    const IntPoly& p = chain.poly();
    if (p.degree() <= 0) return out;
    Rational bound = chain.cauchy_bound();
    std::function<void(const Rational&, const Rational&)> rec = [&](const Rational& a,
                                                                    const Rational& b) {
        int cnt = chain.count_in(a, b);
        if (cnt == 0) return;
        if (cnt == 1) {
            out.push_back(RootInterval{a, b, false});
            return;
        }
        Rational mid = (a + b) / Rational(2);
        if (chain.sign_at(mid) == 0) {
            // exact rational root at mid: carve out a punctured neighborhood
            Rational w = (b - a) / Rational(4);
            while (chain.sign_at(mid - w) == 0 || chain.sign_at(mid + w) == 0 ||
                   chain.count_in(mid - w, mid + w) != 1)
                w = w / Rational(2);
            rec(a, mid - w);
            out.push_back(RootInterval{mid, mid, true});
            rec(mid + w, b);
            return;
        }
        rec(a, mid);
        rec(mid, b);
    };
    rec(-bound, bound);
    return out;
}

/// One bisection step on an isolating interval.
inline RootInterval refine_root_interval(const SturmChain& chain, const RootInterval& iv) {
    if (iv.exact) return iv;
    Rational mid = (iv.lo + iv.hi) / Rational(2);
    if (chain.sign_at(mid) == 0) return RootInterval{mid, mid, true};
    if (chain.count_in(iv.lo, mid) == 1) return RootInterval{iv.lo, mid, false};
    return RootInterval{mid, iv.hi, false};
}

enum class InterlaceStatus { interlaced, not_interlaced, not_applicable };

inline const char* to_string(InterlaceStatus s) {
    switch (s) {
        case InterlaceStatus::interlaced: return "interlaced";
        case InterlaceStatus::not_interlaced: return "not_interlaced";
        default: return "not_applicable";
    }
}

/**
 * Yun's square-free decomposition: returns factors[e-1] = the square-free,
 * pairwise-coprime polynomial carrying the roots of multiplicity e, so that p
 * equals a constant times prod factors[e-1]^e. Entries may be constant when a
 * multiplicity level is empty.
 */
inline std::vector<IntPoly> yun_squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("yun_squarefree_decomposition: zero polynomial");
    std::vector<IntPoly> out;
    if (p.degree() == 0) return out;
    IntPoly u = poly_gcd(p, p.derivative());
    RatPoly v = detail::rat_divmod(to_rational(p), to_rational(u)).first;
    RatPoly w = detail::rat_divmod(to_rational(p.derivative()), to_rational(u)).first;
    while (v.degree() >= 1) {
        RatPoly z = w - v.derivative();
        IntPoly h = poly_gcd(detail::primitive_scale(v), detail::primitive_scale(z));
        out.push_back(h);
        v = detail::rat_divmod(v, to_rational(h)).first;
        w = detail::rat_divmod(z, to_rational(h)).first;
    }
    return out;
}

namespace detail {

/// Multiplicity of the root isolated by iv within the polynomial whose Yun
/// factors are given; 0 when it is not a root. The isolating interval must
/// separate the root from every other root of the factored polynomial.
inline long long multiplicity_in(const std::vector<IntPoly>& yun_factors,
                                 const RootInterval& iv) {
    for (std::size_t e = 0; e < yun_factors.size(); ++e) {
        const IntPoly& f = yun_factors[e];
        if (f.degree() < 1) continue;
        if (iv.exact) {
            if (SturmChain::sign_at(f, iv.lo) == 0) return static_cast<long long>(e) + 1;
        } else if (SturmChain::sign_at(f, iv.lo) * SturmChain::sign_at(f, iv.hi) < 0) {
            return static_cast<long long>(e) + 1;
        }
    }
    return 0;
}

} // namespace detail

/**
 * Exact interlacing decision, multiplicity-aware and with ties allowed: the
 * sorted root sequences (with multiplicity) must admit an alternating merge
 * beta_1 <= alpha_1 <= beta_2 <= ..., which holds iff at every point of the
 * line the root counts of the two polynomials differ by at most one, with the
 * longer sequence leading. Shared roots and repeated roots are handled by the
 * counting; degrees may differ by at most one. Not applicable unless both
 * polynomials are real-rooted.
 */
inline InterlaceStatus interlace_check(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("interlace_check: zero polynomial");
    if (!real_rooted_check(p) || !real_rooted_check(q)) return InterlaceStatus::not_applicable;
    const int dp = p.degree(), dq = q.degree();
    if (std::abs(dp - dq) > 1) return InterlaceStatus::not_interlaced;
    if (dp == 0 && dq == 0) return InterlaceStatus::interlaced;

    // distinct roots of the union, totally ordered by isolation
    IntPoly u = squarefree_part(p * q);
    auto intervals = isolate_real_roots(SturmChain(u));
    auto yp = yun_squarefree_decomposition(p);
    auto yq = yun_squarefree_decomposition(q);

    long long count_p = 0, count_q = 0;
    bool q_leads = true, p_leads = true;
    for (const auto& iv : intervals) {
        count_p += detail::multiplicity_in(yp, iv);
        count_q += detail::multiplicity_in(yq, iv);
        long long d = count_q - count_p;
        if (d < 0 || d > 1) q_leads = false;
        if (d > 0 || d < -1) p_leads = false;
    }
    bool ok;
    if (dq == dp + 1)
        ok = q_leads;
    else if (dp == dq + 1)
        ok = p_leads;
    else
        ok = q_leads || p_leads;
    return ok ? InterlaceStatus::interlaced : InterlaceStatus::not_interlaced;
}

/// True when the coefficient sequence equals its reverse up to a global sign.
inline bool self_inversive_check(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("self_inversive_check: zero polynomial");
    const auto d = static_cast<std::size_t>(p.degree());
    bool pal = true, antipal = true;
    for (std::size_t i = 0; i <= d; ++i) {
        if (p.coeff(i) != p.coeff(d - i)) pal = false;
        if (p.coeff(i) != -p.coeff(d - i)) antipal = false;
    }
    return pal || antipal;
}

struct UnitCircleReport {
    bool pass = false;
    bool inconclusive = false;
    double max_deviation = 0.0;
    std::string detail;
};

namespace detail {

struct RationalComplex {
    Rational re, im;
};

inline RationalComplex rc_sub(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline RationalComplex rc_mul(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Rational rc_norm2(const RationalComplex& a) { return a.re * a.re + a.im * a.im; }

inline Rational rational_from_double(double x) {
    if (x == 0.0) return Rational(0);
    if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite value");
    int e = 0;
    double fr = std::frexp(x, &e); // |fr| in [0.5, 1)
    auto mant = static_cast<long long>(std::ldexp(fr, 53));
    int shift = e - 53;
    if (shift >= 0)
        return Rational(BigInt(mant) * BigInt::pow(BigInt(2), static_cast<unsigned long long>(shift)));
    return Rational(BigInt(mant), BigInt::pow(BigInt(2), static_cast<unsigned long long>(-shift)));
}

/// Exact evaluation of p at a complex point with dyadic-rational components.
inline RationalComplex evaluate_exact(const IntPoly& p, const RationalComplex& z) {
    RationalComplex acc{Rational(0), Rational(0)};
    for (int i = p.degree(); i >= 0; --i) {
        acc = rc_mul(acc, z);
        acc.re += Rational(p.coeff(static_cast<std::size_t>(i)));
    }
    return acc;
}

} // namespace detail

/**
 * Reports whether all complex roots of p lie on the unit circle, to the given
 * tolerance on max | |z| - 1 |. Roots of the square-free part (the same root
 * set) are approximated by simultaneous Weierstrass iteration; the final
 * corrections are then recomputed exactly, and n times the exact correction
 * modulus gives inclusion disks containing every true root. The check is
 * inconclusive when the iteration cannot push those radii well below tol.
 * A pass additionally requires the self-inversive coefficient symmetry.
 */
inline UnitCircleReport unit_circle_check(const IntPoly& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("unit_circle_check: zero polynomial");
    if (!(tol > 0)) throw std::invalid_argument("unit_circle_check: tolerance must be positive");
    UnitCircleReport rep;
    bool si = self_inversive_check(p);
    if (p.degree() == 0) {
        rep.pass = si;
        rep.max_deviation = 0.0;
        rep.detail = "constant polynomial, no roots";
        return rep;
    }
    IntPoly sf = squarefree_part(p);
    const int d = sf.degree();
    // monic coefficients in double for the iteration
    double lead = sf.coeff(static_cast<std::size_t>(d)).to_double();
    std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        coeffs[static_cast<std::size_t>(i)] =
            sf.coeff(static_cast<std::size_t>(i)).to_double() / lead;
    std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc_seed(1.0, 0.0);
    for (int i = 0; i < d; ++i) {
        acc_seed *= seed;
        z[static_cast<std::size_t>(i)] = acc_seed;
    }
    auto horner = [&](std::complex<double> x) {
        std::complex<double> acc(0.0, 0.0);
        for (int i = d; i >= 0; --i) acc = acc * x + coeffs[static_cast<std::size_t>(i)];
        return acc;
    };
    int calm = 0;
    for (int iter = 0; iter < 2000 && calm < 3; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> den(1.0, 0.0);
            for (int j = 0; j < d; ++j)
                if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            std::complex<double> w = horner(z[static_cast<std::size_t>(i)]) / den;
            z[static_cast<std::size_t>(i)] -= w;
            max_step = std::max(max_step, std::abs(w));
        }
        calm = max_step < 1e-14 ? calm + 1 : 0;
    }
    // certified inclusion radii from exact corrections
    const Rational lead2 = Rational(sf.coeff(static_cast<std::size_t>(d))) *
                           Rational(sf.coeff(static_cast<std::size_t>(d)));
    double max_dev = 0.0, max_radius = 0.0;
    bool finite = true;
    for (int i = 0; i < d; ++i) {
        const auto& zi = z[static_cast<std::size_t>(i)];
        if (!std::isfinite(zi.real()) || !std::isfinite(zi.imag())) {
            finite = false;
            break;
        }
        detail::RationalComplex ze{detail::rational_from_double(zi.real()),
                                   detail::rational_from_double(zi.imag())};
        Rational num2 = detail::rc_norm2(detail::evaluate_exact(sf, ze));
        Rational den2 = lead2;
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            detail::RationalComplex zj{
                detail::rational_from_double(z[static_cast<std::size_t>(j)].real()),
                detail::rational_from_double(z[static_cast<std::size_t>(j)].imag())};
            den2 = den2 * detail::rc_norm2(detail::rc_sub(ze, zj));
        }
        if (den2.is_zero()) {
            finite = false;
            break;
        }
        double radius = d * std::sqrt((num2 / den2).to_double()) * (1.0 + 1e-9);
        double center_dev = std::abs(std::sqrt(detail::rc_norm2(ze).to_double()) - 1.0);
        if (!std::isfinite(radius) || !std::isfinite(center_dev)) {
            finite = false;
            break;
        }
        max_radius = std::max(max_radius, radius);
        max_dev = std::max(max_dev, center_dev + radius + 1e-15);
    }
    if (!finite || !(max_radius <= tol * 1e-3)) {
        rep.inconclusive = true;
        rep.max_deviation = max_dev;
        rep.detail = "root refinement did not converge to certified accuracy";
        return rep;
    }
    rep.max_deviation = max_dev;
    rep.pass = (max_dev <= tol) && si;
    rep.detail = si ? "" : "coefficients not self-inversive";
    if (max_dev > tol) rep.detail = "root off unit circle";
    return rep;
}

} // namespace prismslice
