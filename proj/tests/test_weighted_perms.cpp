#include <doctest.h>

#include <set>
#include <vector>

#include "prismslice/weighted_perms.hpp"

using namespace prismslice;

TEST_CASE("canonical form and validation") {
    auto p = WeightedPermutation::create(5, {{3, 5}, {2, 1}, {4}}, {7, 2, 0});
    CHECK(p.cycles == std::vector<std::vector<int>>{{1, 2}, {3, 5}, {4}});
    CHECK(p.weights == std::vector<long long>{2, 7, 0});
    CHECK(p.total_weight() == 9);
    CHECK(p.num_cycles() == 3);

    CHECK_THROWS_AS(WeightedPermutation::create(3, {{1, 2}}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(WeightedPermutation::create(3, {{1, 2}, {2, 3}}, {0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeightedPermutation::create(2, {{1, 2}}, {-1}), std::invalid_argument);
    CHECK_THROWS_AS(WeightedPermutation::create(2, {{1, 2}}, {0, 0}), std::invalid_argument);
}

TEST_CASE("cap compatibility") {
    // cycles (1 2)(3 5)(4) weighted by their maxima
    auto p = WeightedPermutation::create(5, {{1, 2}, {3, 5}, {4}}, {2, 5, 4});
    CHECK(is_compatible(p, CapVector({8, 10, 7, 8, 8})));
    CHECK_FALSE(is_compatible(p, CapVector({3, 3, 3, 3, 3})));

    auto zero = WeightedPermutation::create(5, {{1, 2}, {3, 5}, {4}}, {0, 0, 0});
    CHECK(is_compatible(zero, CapVector({1, 1, 1, 1, 1})));

    CHECK_THROWS_AS(is_compatible(p, CapVector({1, 1})), std::invalid_argument);
}

TEST_CASE("stratum enumeration") {
    CHECK(w_count_enum(0, 2, 2, CapVector({1, 1})) == 1);
    CHECK(w_count_enum(1, 2, 1, CapVector({1, 1})) == 1);
    CHECK(w_count_enum(2, 3, 3, CapVector({2, 2, 2})) == 3);
    CHECK(w_count_enum(2, 3, 3, CapVector({2, 2, 2})) == bounded_compositions(2, CapVector({2, 2, 2})));

    // every emitted object is distinct and satisfies the stratum constraints
    CapVector c({2, 1, 2});
    std::set<std::string> seen;
    long long count = 0;
    for_each_weighted(3, 2, 2, c, [&](const WeightedPermutation& p) {
        CHECK(p.num_cycles() == 2);
        CHECK(p.total_weight() == 2);
        CHECK(is_compatible(p, c));
        std::string key;
        for (std::size_t i = 0; i < p.cycles.size(); ++i) {
            for (int e : p.cycles[i]) key += std::to_string(e) + ".";
            key += "w" + std::to_string(p.weights[i]) + "|";
        }
        CHECK(seen.insert(key).second);
        ++count;
    });
    CHECK(BigInt(count) == w_count_enum(2, 3, 2, c));

    // a single n-cycle carries any weight below the full cap sum
    CHECK(w_count_enum(3, 4, 1, CapVector({1, 1, 1, 1})) == factorial(3));
    // total weight at least sum(c) is impossible
    CHECK(w_count_enum(4, 4, 1, CapVector({1, 1, 1, 1})) == 0);
    CHECK(w_count_enum(7, 3, 2, CapVector({2, 2, 3})) == 0);
}

TEST_CASE("closed formula matches enumeration") {
    // formula takes the shifted index: w_count_formula(l, n, m, c) counts m+1 cycles
    CHECK(w_count_formula(1, 2, 1, CapVector({1, 1})) == 0);

    for (int n = 1; n <= 4; ++n) {
        std::vector<long long> caps(static_cast<std::size_t>(n), 1);
        // iterate all cap vectors with entries in {1, 2}
        while (true) {
            CapVector c(caps);
            for (int m = 0; m <= n - 1; ++m)
                for (long long ell = 0; ell <= c.sum(); ++ell)
                    CHECK(w_count_formula(ell, n, m, c) == w_count_enum(ell, n, m + 1, c));
            std::size_t pos = 0;
            while (pos < caps.size() && ++caps[pos] > 2) caps[pos++] = 1;
            if (pos == caps.size()) break;
        }
    }

    // zero total weight leaves exactly the permutations with m+1 cycles
    for (int n = 1; n <= 5; ++n)
        for (int m = 0; m <= n - 1; ++m)
            CHECK(w_count_formula(0, n, m, CapVector(std::vector<long long>(
                                               static_cast<std::size_t>(n), 3))) ==
                  stirling1_unsigned(n, m + 1));

    CHECK_THROWS_AS(w_count_formula(0, 3, 3, CapVector({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("all-ones caps give the weighted Lah strata") {
    for (int n = 1; n <= 5; ++n) {
        CapVector ones(std::vector<long long>(static_cast<std::size_t>(n), 1));
        for (int m = 1; m <= n; ++m) {
            BigInt total(0);
            for (long long ell = 0; ell <= n - m; ++ell) total += w_count_enum(ell, n, m, ones);
            CHECK(total == lah(n, m));
        }
    }
}

TEST_CASE("stratum monotonicity in the caps") {
    CapVector c({1, 2, 1});
    CapVector c2({2, 2, 2});
    for (int m = 1; m <= 3; ++m)
        for (long long ell = 0; ell <= c2.sum(); ++ell)
            CHECK(w_count_enum(ell, 3, m, c) <= w_count_enum(ell, 3, m, c2));
}

TEST_CASE("ordered-block bijection") {
    // worked example: cycles (1 2 6)(3 5 7)(4 8) with weights 1, 2, 0
    auto p = WeightedPermutation::create(8, {{1, 2, 6}, {3, 5, 7}, {4, 8}}, {1, 2, 0});
    LahPartition img = to_lah(p);
    CHECK(img == LahPartition::create(8, {{2, 6, 1}, {7, 3, 5}, {4, 8}}));
    CHECK(from_lah(img) == p);

    // identity with zero weights maps to singletons
    auto id = WeightedPermutation::create(3, {{1}, {2}, {3}}, {0, 0, 0});
    CHECK(to_lah(id) == LahPartition::create(3, {{1}, {2}, {3}}));

    // partition weight is the sum of per-block weights
    auto pi = LahPartition::create(7, {{5, 3, 7}, {6, 2, 4, 1}});
    CHECK(pi.weight() == 4);

    // weight at or above the cycle length is rejected
    auto bad = WeightedPermutation::create(2, {{1, 2}}, {2});
    CHECK_THROWS_AS(to_lah(bad), std::domain_error);
}

TEST_CASE("bijection round trips on full strata") {
    for (int n = 1; n <= 5; ++n) {
        CapVector ones(std::vector<long long>(static_cast<std::size_t>(n), 1));
        for (int m = 1; m <= n; ++m) {
            // weighted permutations with every cycle weight below its length
            long long forward = 0;
            for (long long ell = 0; ell <= n - m; ++ell) {
                for_each_weighted(n, m, ell, ones, [&](const WeightedPermutation& p) {
                    LahPartition img = to_lah(p);
                    CHECK(from_lah(img) == p);
                    CHECK(img.weight() == p.total_weight());
                    ++forward;
                });
            }
            // ordered-block partitions map back into the same family
            long long backward = 0;
            for_each_lah(n, m, [&](const LahPartition& pi) {
                WeightedPermutation pre = from_lah(pi);
                CHECK(to_lah(pre) == pi);
                CHECK(pre.total_weight() == pi.weight());
                ++backward;
            });
            CHECK(forward == backward);
            CHECK(BigInt(backward) == lah(n, m));
        }
    }
}
