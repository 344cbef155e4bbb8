#pragma once

/**
 * @file counting.hpp
 * @brief The combinatorial number families everything else consumes:
 *        Eulerian numbers, unsigned Stirling numbers of the first kind, Lah
 *        numbers, elementary symmetric sums over integer intervals, the
 *        subset-sum counts rho, bounded-capacity composition counts, and the
 *        generalized binomial [x^a](1+x+...+x^{b-1})^n.
 *
 * Out-of-range arguments return 0 rather than throwing, so alternating sums
 * can be written with the bounds of the defining formulas. Caches are
 * thread_local; results do not depend on interleaving.
 */

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "prismslice/bigint.hpp"
#include "prismslice/polynomial.hpp"

namespace prismslice {

/// Per-coordinate box sizes c_1..c_n, every entry strictly positive.
class CapVector {
public:
    explicit CapVector(std::vector<long long> entries) : entries_(std::move(entries)) {
        for (long long e : entries_)
            if (e < 1) throw std::invalid_argument("CapVector: entries must be >= 1");
    }

    std::size_t n() const { return entries_.size(); }
    long long operator[](std::size_t i) const { return entries_.at(i); }
    const std::vector<long long>& entries() const { return entries_; }

    long long sum() const {
        long long s = 0;
        for (long long e : entries_) s += e;
        return s;
    }

    CapVector append(long long v) const {
        std::vector<long long> e = entries_;
        e.push_back(v);
        return CapVector(std::move(e));
    }

    /// Entrywise comparison: true when every entry of *this is <= other's.
    bool dominated_by(const CapVector& other) const {
        if (n() != other.n()) throw std::invalid_argument("CapVector: dimension mismatch");
        for (std::size_t i = 0; i < n(); ++i)
            if (entries_[i] > other.entries_[i]) return false;
        return true;
    }

    friend bool operator==(const CapVector& a, const CapVector& b) {
        return a.entries_ == b.entries_;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries_[i]);
        }
        return s;
    }

private:
    std::vector<long long> entries_;
};

inline BigInt factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    thread_local std::vector<BigInt> cache{BigInt(1)};
    while (static_cast<long long>(cache.size()) <= n)
        cache.push_back(cache.back() * BigInt(static_cast<long long>(cache.size())));
    return cache[static_cast<std::size_t>(n)];
}

/// Classical binomial C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt b(1);
    for (long long s = 1; s <= k; ++s) b = b * BigInt(n - k + s) / BigInt(s);
    return b;
}

/// Number of permutations of [n] with exactly k descents; A(0,0) = 1.
inline BigInt eulerian(long long n, long long k) {
    if (n < 0) throw std::domain_error("eulerian: negative n");
    if (k < 0) return BigInt(0);
    if (n == 0) return k == 0 ? BigInt(1) : BigInt(0);
    if (k >= n) return BigInt(0);
    thread_local std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
    while (static_cast<long long>(rows.size()) <= n) {
        long long r = static_cast<long long>(rows.size());
        std::vector<BigInt> row(static_cast<std::size_t>(r));
        const auto& prev = rows.back();
        auto prev_at = [&](long long j) {
            return (j < 0 || j >= static_cast<long long>(prev.size())) ? BigInt(0)
                                                                       : prev[static_cast<std::size_t>(j)];
        };
        for (long long j = 0; j < r; ++j)
            row[static_cast<std::size_t>(j)] =
                BigInt(j + 1) * prev_at(j) + BigInt(r - j) * prev_at(j - 1);
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// Number of permutations of [n] with exactly m cycles (unsigned first kind).
inline BigInt stirling1_unsigned(long long n, long long m) {
    if (n < 0) throw std::domain_error("stirling1_unsigned: negative n");
    if (m < 0 || m > n) return BigInt(0);
    if (n == 0) return BigInt(1); // m == 0 here
    thread_local std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
    while (static_cast<long long>(rows.size()) <= n) {
        long long r = static_cast<long long>(rows.size());
        const auto& prev = rows.back();
        auto prev_at = [&](long long j) {
            return (j < 0 || j >= static_cast<long long>(prev.size())) ? BigInt(0)
                                                                       : prev[static_cast<std::size_t>(j)];
        };
        std::vector<BigInt> row(static_cast<std::size_t>(r) + 1);
        for (long long j = 0; j <= r; ++j)
            row[static_cast<std::size_t>(j)] = prev_at(j - 1) + BigInt(r - 1) * prev_at(j);
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

/**
 * Elementary symmetric sum of order s over the integers of [a, b]: the sum
 * over all s-subsets of {a,...,b} of the subset product. s = 0 gives 1, even
 * on an empty interval; s > 0 on an empty interval gives 0.
 */
inline BigInt interval_esp(long long a, long long b, long long s) {
    if (s < 0) return BigInt(0);
    if (s == 0) return BigInt(1);
    if (a > b) return BigInt(0);
    std::vector<BigInt> e(static_cast<std::size_t>(s) + 1);
    e[0] = BigInt(1);
    for (long long v = a; v <= b; ++v)
        for (long long j = std::min<long long>(s, v - a + 1); j >= 1; --j)
            e[static_cast<std::size_t>(j)] += BigInt(v) * e[static_cast<std::size_t>(j - 1)];
    return e[static_cast<std::size_t>(s)];
}

/**
 * The interval sum P^s over [-a, b] computed by the alternating Stirling
 * convolution sum_j (-1)^j c(a+1, a+1-j) c(b+1, b+1-s+j); requires a, b > 0.
 * Cross-check identity for interval_esp(-a, b, s).
 */
inline BigInt interval_esp_via_stirling(long long a, long long b, long long s) {
    if (a <= 0 || b <= 0) throw std::domain_error("interval_esp_via_stirling: a, b must be positive");
    if (s < 0) return BigInt(0);
    BigInt acc(0);
    for (long long j = 0; j <= s; ++j) {
        BigInt term = stirling1_unsigned(a + 1, a + 1 - j) * stirling1_unsigned(b + 1, b + 1 - s + j);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Partitions of [n] into m internally ordered blocks: (n!/m!) C(n-1, m-1).
inline BigInt lah(long long n, long long m) {
    if (n < 1) throw std::domain_error("lah: n must be positive");
    if (m < 1 || m > n) return BigInt(0);
    return factorial(n) / factorial(m) * binomial(n - 1, m - 1);
}

namespace detail {
// rho table for a fixed cap vector: entry [j][s] counts j-subsets of the caps
// summing to s, for 0 <= j <= n, 0 <= s <= sum(c).
inline const std::vector<std::vector<BigInt>>& rho_table(const CapVector& c) {
    thread_local std::map<std::vector<long long>, std::vector<std::vector<BigInt>>> cache;
    auto it = cache.find(c.entries());
    if (it != cache.end()) return it->second;
    std::size_t n = c.n();
    std::size_t smax = static_cast<std::size_t>(c.sum());
    std::vector<std::vector<BigInt>> dp(n + 1, std::vector<BigInt>(smax + 1));
    dp[0][0] = BigInt(1);
    for (std::size_t i = 0; i < n; ++i) {
        long long ci = c[i];
        for (std::size_t j = std::min(i + 1, n); j-- > 0;)
            for (std::size_t s = smax + 1; s-- > static_cast<std::size_t>(ci);)
                dp[j + 1][s] += dp[j][s - static_cast<std::size_t>(ci)];
    }
    return cache.emplace(c.entries(), std::move(dp)).first->second;
}
} // namespace detail

/// Number of j-subsets I of the index set with sum_{i in I} c_i == s.
inline BigInt rho(const CapVector& c, long long j, long long s) {
    if (j < 0 || j > static_cast<long long>(c.n())) return BigInt(0);
    if (s < 0 || s > c.sum()) return BigInt(0);
    return detail::rho_table(c)[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
}

/// Ways of placing ell indistinguishable balls into boxes of capacities c_i - 1.
inline BigInt bounded_compositions(long long ell, const CapVector& c) {
    std::vector<long long> caps;
    caps.reserve(c.n());
    for (long long e : c.entries()) caps.push_back(e - 1);
    return bounded_power_coeff(caps, ell);
}

/// [x^a] (1 + x + ... + x^{b-1})^n by direct truncated expansion.
inline BigInt gen_binomial(long long n, long long a, long long b) {
    if (n < 0) throw std::domain_error("gen_binomial: negative n");
    if (b < 1) throw std::domain_error("gen_binomial: b must be positive");
    if (a < 0) return BigInt(0);
    std::vector<long long> caps(static_cast<std::size_t>(n), b - 1);
    return bounded_power_coeff(caps, a);
}

/// Same coefficient via the alternating sum over C(n,j) C(n-1+a-bj, n-1).
inline BigInt gen_binomial_formula(long long n, long long a, long long b) {
    if (n < 0) throw std::domain_error("gen_binomial_formula: negative n");
    if (b < 1) throw std::domain_error("gen_binomial_formula: b must be positive");
    if (a < 0) return BigInt(0);
    if (n == 0) return a == 0 ? BigInt(1) : BigInt(0); // empty product
    BigInt acc(0);
    for (long long j = 0; j <= a / b; ++j) {
        BigInt term = binomial(n, j) * binomial(n - 1 + a - b * j, n - 1);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace prismslice
