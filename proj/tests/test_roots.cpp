#include <doctest.h>

#include <vector>

#include "prismslice/roots.hpp"

using namespace prismslice;

namespace {

IntPoly ip(std::vector<long long> coeffs) {
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

// (x - r1)(x - r2)... for integer roots
IntPoly from_roots(const std::vector<long long>& roots) {
    IntPoly acc = IntPoly::constant(BigInt(1));
    for (long long r : roots) acc *= IntPoly{BigInt(-r), BigInt(1)};
    return acc;
}

bool interval_contains(const RootInterval& iv, const Rational& v) {
    if (iv.exact) return iv.lo == v;
    return iv.lo < v && v < iv.hi;
}

} // namespace

TEST_CASE("square-free reduction and gcd") {
    IntPoly sq = ip({1, 2, 1}); // (1+x)^2
    CHECK(squarefree_part(sq) == ip({1, 1}));
    CHECK(squarefree_part(ip({0, 0, 0, 1})) == ip({0, 1})); // x^3 -> x
    CHECK(squarefree_part(ip({-2, 1})) == ip({-2, 1}));

    IntPoly a = ip({1, 1}) * ip({1, 2});
    IntPoly b = ip({1, 1}) * ip({3, 1});
    CHECK(poly_gcd(a, b) == ip({1, 1}));
    CHECK(poly_gcd(ip({1, 1}), ip({1, 2})).degree() == 0);
    CHECK(poly_gcd(a, IntPoly{}) == a);
}

TEST_CASE("Sturm chains count real roots") {
    CHECK(SturmChain(ip({-2, 0, 1})).total_real_roots() == 2);  // x^2 - 2
    CHECK(SturmChain(ip({1, 0, 1})).total_real_roots() == 0);   // x^2 + 1
    CHECK(SturmChain(ip({0, 1})).total_real_roots() == 1);
    CHECK(SturmChain(from_roots({1, 2, 3})).total_real_roots() == 3);
    CHECK(SturmChain(from_roots({-5, 0, 7})).count_in(Rational(-1), Rational(8)) == 2);
}

TEST_CASE("real-rootedness decision") {
    CHECK(real_rooted_check(ip({1, 2, 1})));
    CHECK_FALSE(real_rooted_check(ip({1, 1, 1})));
    CHECK(real_rooted_check(ip({7})));
    CHECK(real_rooted_check(ip({3, 5})));
    CHECK(real_rooted_check(from_roots({1, 2, 3, 4, 5})));
    CHECK_FALSE(real_rooted_check(ip({1, 0, 1}) * ip({-1, 1})));
    // multiplicity handled through the square-free part
    CHECK(real_rooted_check(ip({1, 2, 1}) * ip({1, 2, 1}) * ip({-3, 1})));
    CHECK_THROWS_AS(real_rooted_check(IntPoly{}), std::invalid_argument);
}

TEST_CASE("root isolation") {
    // roots -1, 1/2, 3
    IntPoly p = ip({1, 1}) * ip({-1, 2}) * ip({-3, 1});
    SturmChain chain(p);
    auto ivs = isolate_real_roots(chain);
    REQUIRE(ivs.size() == 3);
    CHECK(interval_contains(ivs[0], Rational(-1)));
    CHECK(interval_contains(ivs[1], Rational(BigInt(1), BigInt(2))));
    CHECK(interval_contains(ivs[2], Rational(3)));

    // refinement keeps the root and shrinks the interval
    RootInterval iv = ivs[1];
    for (int i = 0; i < 30 && !iv.exact; ++i) iv = refine_root_interval(chain, iv);
    CHECK(interval_contains(iv, Rational(BigInt(1), BigInt(2))));

    // integer roots landed on exactly by midpoints are reported as points
    IntPoly q = from_roots({-1, 0, 1});
    auto qivs = isolate_real_roots(SturmChain(q));
    REQUIRE(qivs.size() == 3);
    CHECK(interval_contains(qivs[0], Rational(-1)));
    CHECK(interval_contains(qivs[1], Rational(0)));
    CHECK(interval_contains(qivs[2], Rational(1)));

    CHECK(isolate_real_roots(SturmChain(ip({1, 0, 1}))).empty());
}

TEST_CASE("Yun decomposition by multiplicity") {
    // (1+x)^2 (2+x): multiplicity-1 part 2+x, multiplicity-2 part 1+x
    auto f = yun_squarefree_decomposition(ip({1, 2, 1}) * ip({2, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == ip({2, 1}));
    CHECK(f[1] == ip({1, 1}));

    // x^3: only a multiplicity-3 factor
    auto g = yun_squarefree_decomposition(ip({0, 0, 0, 1}));
    REQUIRE(g.size() == 3);
    CHECK(g[0].degree() == 0);
    CHECK(g[1].degree() == 0);
    CHECK(g[2] == ip({0, 1}));

    // squarefree input: single level
    auto h = yun_squarefree_decomposition(from_roots({1, 2, 3}));
    REQUIRE(h.size() == 1);
    CHECK(h[0] == from_roots({1, 2, 3}));

    CHECK(yun_squarefree_decomposition(ip({42})).empty());
}

TEST_CASE("interlacing decisions") {
    // roots -2 between -3 and -1
    CHECK(interlace_check(ip({2, 1}), ip({1, 1}) * ip({3, 1})) == InterlaceStatus::interlaced);
    // nested roots do not alternate
    CHECK(interlace_check(ip({-1, 0, 1}), ip({-4, 0, 1})) == InterlaceStatus::not_interlaced);
    // same degree, alternating
    CHECK(interlace_check(from_roots({1, 3}), from_roots({2, 4})) == InterlaceStatus::interlaced);
    CHECK(interlace_check(from_roots({1, 4}), from_roots({2, 3})) ==
          InterlaceStatus::not_interlaced);
    // degree gap of two
    CHECK(interlace_check(from_roots({1}), from_roots({0, 2, 4})) ==
          InterlaceStatus::not_interlaced);
    // ties are allowed: shared and repeated roots interleave weakly
    CHECK(interlace_check(from_roots({1, 3}), from_roots({1, 5})) ==
          InterlaceStatus::interlaced);
    CHECK(interlace_check(ip({1, 1}), ip({1, 1})) == InterlaceStatus::interlaced);
    CHECK(interlace_check(ip({1, 1}), ip({1, 2, 1})) == InterlaceStatus::interlaced);
    CHECK(interlace_check(from_roots({0, 0, 5}), from_roots({0, 3})) ==
          InterlaceStatus::interlaced);
    // ... but a double root strictly between the partner's roots still fails
    CHECK(interlace_check(ip({1, 2, 1}), from_roots({-2, 0})) ==
          InterlaceStatus::not_interlaced);
    // not real-rooted: not applicable
    CHECK(interlace_check(ip({1, 1, 1}), ip({1, 1})) == InterlaceStatus::not_applicable);
    // no roots at all: vacuously interlaced
    CHECK(interlace_check(ip({5}), ip({1, 1})) == InterlaceStatus::interlaced);
    CHECK(interlace_check(ip({5}), ip({3})) == InterlaceStatus::interlaced);
    // irrational roots that straddle: x^2 - 2 vs x - 1
    CHECK(interlace_check(ip({-1, 1}), ip({-2, 0, 1})) == InterlaceStatus::interlaced);
}

TEST_CASE("self-inversive coefficient symmetry") {
    CHECK(self_inversive_check(ip({1, 2, 1})));
    CHECK_FALSE(self_inversive_check(ip({1, 2})));
    CHECK(self_inversive_check(ip({-1, 0, 1}))); // anti-palindromic
    CHECK(self_inversive_check(ip({4})));
    CHECK(self_inversive_check(ip({1, 1, 1}) * ip({1, 1}))); // product of palindromics
    CHECK_THROWS_AS(self_inversive_check(IntPoly{}), std::invalid_argument);
}

TEST_CASE("unit circle check") {
    auto r1 = unit_circle_check(ip({1, 1, 1}), 1e-9);
    CHECK(r1.pass);
    CHECK_FALSE(r1.inconclusive);
    CHECK(r1.max_deviation < 1e-10);

    auto r2 = unit_circle_check(ip({1, 2}), 1e-9);
    CHECK_FALSE(r2.pass);
    CHECK_FALSE(r2.inconclusive);
    CHECK(r2.max_deviation == doctest::Approx(0.5).epsilon(1e-6));

    // repeated factors are fine: the square-free part carries the root set
    auto r3 = unit_circle_check(ip({1, 2, 1}) * ip({1, 2, 1}), 1e-9);
    CHECK(r3.pass);

    // all roots on the circle but shifted center: x - 2 fails
    CHECK_FALSE(unit_circle_check(ip({-2, 1}), 1e-9).pass);

    // product of truncated geometric series passes
    IntPoly prod = ip({1, 1, 1, 1}) * ip({1, 1}) * ip({1, 1, 1});
    auto r4 = unit_circle_check(prod, 1e-9);
    CHECK(r4.pass);
    CHECK(r4.max_deviation < 1e-12);

    // palindromic but off-circle: 2 + 3x + 2x^2 has |roots| = 1? check it honestly
    // roots of 2 + 3x + 2x^2: product = 1, complex pair, so both lie on |z| = 1
    CHECK(unit_circle_check(ip({2, 3, 2}), 1e-9).pass);
    // palindromic with real roots off the circle: 1 + 3x + x^2
    auto r5 = unit_circle_check(ip({1, 3, 1}), 1e-9);
    CHECK_FALSE(r5.pass);
    CHECK(r5.max_deviation > 0.1);

    auto rc = unit_circle_check(ip({7}), 1e-9);
    CHECK(rc.pass);
    CHECK(rc.max_deviation == 0.0);

    CHECK_THROWS_AS(unit_circle_check(ip({1, 1}), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(unit_circle_check(IntPoly{}, 1e-9), std::invalid_argument);
}

TEST_CASE("unit circle certification stays finite at high degree") {
    // squarefree product of prime-order root-of-unity factors, degree 13;
    // the exact correction ratios here involve thousand-bit integers
    auto geometric = [](int len) {
        std::vector<BigInt> c(static_cast<std::size_t>(len), BigInt(1));
        return IntPoly(std::move(c));
    };
    IntPoly p = geometric(2) * geometric(3) * geometric(5) * geometric(7);
    REQUIRE(squarefree_part(p).degree() == 13);
    auto rep = unit_circle_check(p, 1e-9);
    CHECK(rep.pass);
    CHECK_FALSE(rep.inconclusive);
    CHECK(std::isfinite(rep.max_deviation));
    CHECK(rep.max_deviation > 0.0);
    CHECK(rep.max_deviation < 1e-12);

    // same degree, one root pulled off the circle: certified failure
    IntPoly q = geometric(2) * geometric(3) * geometric(5) * geometric(7) * ip({-1, 2});
    auto bad = unit_circle_check(q, 1e-9);
    CHECK_FALSE(bad.pass);
    CHECK(std::isfinite(bad.max_deviation));
    CHECK(bad.max_deviation > 0.4);
}
