#pragma once

/**
 * @file hstar.hpp
 * @brief Numerators of the lattice-point counting series for slices of boxes,
 *        by two independent routes: the series transform of the counting
 *        polynomial, and a direct census of cap-compatible decorated ordered
 *        set partitions stratified by winding number. Also the generating
 *        polynomial of the weighted-permutation strata used by the
 *        unit-circle conjecture scan.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "prismslice/counting.hpp"
#include "prismslice/errors.hpp"
#include "prismslice/ehrhart.hpp"
#include "prismslice/polynomial.hpp"
#include "prismslice/weighted_perms.hpp"

namespace prismslice {

/**
 * A cyclically ordered partition of [n] into nonempty blocks, with a strictly
 * positive integer weight per block; the type parameter k is the total
 * weight. Canonical representative of the cyclic class: the block containing
 * element 1 is listed first. Block contents are kept sorted.
 */
struct DecoratedPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks; // cyclic order; blocks[0] contains 1
    std::vector<long long> weights;       // parallel; every entry >= 1

    long long k() const {
        long long s = 0;
        for (long long w : weights) s += w;
        return s;
    }

    static DecoratedPartition create(int n, std::vector<std::vector<int>> blocks,
                                     std::vector<long long> weights) {
        if (blocks.empty() || blocks.size() != weights.size())
            throw std::invalid_argument("DecoratedPartition: blocks/weights mismatch");
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        std::size_t total = 0;
        std::size_t first = blocks.size();
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            auto& blk = blocks[b];
            if (blk.empty()) throw std::invalid_argument("DecoratedPartition: empty block");
            for (int e : blk) {
                if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
                    throw std::invalid_argument("DecoratedPartition: blocks must partition [n]");
                seen[static_cast<std::size_t>(e)] = true;
                if (e == 1) first = b;
            }
            total += blk.size();
            std::sort(blk.begin(), blk.end());
            if (weights[b] < 1)
                throw std::invalid_argument("DecoratedPartition: block weights must be >= 1");
        }
        if (total != static_cast<std::size_t>(n))
            throw std::invalid_argument("DecoratedPartition: blocks must partition [n]");
        DecoratedPartition p;
        p.n = n;
        // rotate the cyclic order so the block containing 1 leads
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            std::size_t idx = (first + b) % blocks.size();
            p.blocks.push_back(std::move(blocks[idx]));
            p.weights.push_back(weights[idx]);
        }
        return p;
    }

    friend bool operator==(const DecoratedPartition& a, const DecoratedPartition& b) {
        return a.n == b.n && a.blocks == b.blocks && a.weights == b.weights;
    }
};

/// The cyclic weight-distances lambda_i together with the winding number d,
/// where d * k = sum(lambda).
struct WindingProfile {
    std::vector<long long> lambdas;
    long long winding = 0;
};

namespace detail {

/// lambda_i = sum of block weights from block(i) inclusive to block(i+1)
/// exclusive in cyclic order (0 when both elements share a block); the
/// winding is sum(lambda)/k, which is integral by construction.
inline WindingProfile winding_from_layout(const std::vector<int>& block_of,
                                          const std::vector<long long>& weights) {
    const std::size_t n = block_of.size();
    const std::size_t m = weights.size();
    long long k = 0;
    for (long long w : weights) k += w;
    WindingProfile wp;
    wp.lambdas.resize(n, 0);
    long long total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t a = static_cast<std::size_t>(block_of[i]);
        std::size_t b = static_cast<std::size_t>(block_of[(i + 1) % n]);
        long long dist = 0;
        for (std::size_t u = a; u != b; u = (u + 1) % m) dist += weights[u];
        wp.lambdas[i] = dist;
        total += dist;
    }
    if (k <= 0 || total % k != 0)
        throw model_violation("winding total " + std::to_string(total) +
                               " not divisible by type " + std::to_string(k));
    wp.winding = total / k;
    return wp;
}

} // namespace detail

inline WindingProfile winding_number(const DecoratedPartition& p) {
    std::vector<int> block_of(static_cast<std::size_t>(p.n));
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (int e : p.blocks[b]) block_of[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
    return detail::winding_from_layout(block_of, p.weights);
}

/// True when every block's weight is strictly below the sum of its members' caps.
inline bool is_compatible(const DecoratedPartition& p, const CapVector& c) {
    if (static_cast<std::size_t>(p.n) != c.n())
        throw std::invalid_argument("is_compatible: dimension mismatch");
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        long long cap_sum = 0;
        for (int e : p.blocks[b]) cap_sum += c[static_cast<std::size_t>(e - 1)];
        if (p.weights[b] >= cap_sum) return false;
    }
    return true;
}

/// Visits every decorated ordered set partition of type (k, n), i.e. every
/// cyclic class (canonically rotated) with positive block weights summing to k.
template <class V>
void for_each_decorated(int n, long long k, V&& visit) {
    if (n < 1 || k < 1) return;
    if (n >= 31) throw std::invalid_argument("for_each_decorated: n too large");
    const std::uint32_t full = (1u << n) - 1u;
    std::vector<std::vector<int>> blocks;
    auto push_block = [&](std::uint32_t mask) {
        std::vector<int> blk;
        for (int e = 0; e < n; ++e)
            if (mask & (1u << e)) blk.push_back(e + 1);
        blocks.push_back(std::move(blk));
    };
    std::function<void(std::uint32_t)> rec_blocks = [&](std::uint32_t remaining) {
        if (remaining == 0) {
            std::size_t m = blocks.size();
            if (static_cast<long long>(m) > k) return; // weights >= 1 each
            // compositions of k with every part >= 1: shift each part down by 1
            std::vector<long long> shifted_bounds(m, k - static_cast<long long>(m));
            detail::for_each_bounded_composition(
                k - static_cast<long long>(m), shifted_bounds,
                [&](const std::vector<long long>& parts) {
                    std::vector<long long> weights(m);
                    for (std::size_t i = 0; i < m; ++i) weights[i] = parts[i] + 1;
                    DecoratedPartition p;
                    p.n = n;
                    p.blocks = blocks;
                    p.weights = std::move(weights);
                    visit(p);
                });
            return;
        }
        // the block containing 1 is pinned first (cyclic-class representative);
        // every later block ranges over all nonempty subsets of the remainder
        for (std::uint32_t sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
            push_block(sub);
            rec_blocks(remaining & ~sub);
            blocks.pop_back();
        }
    };
    // first block: 1 together with any subset of {2..n}
    const std::uint32_t rest_all = full & ~1u;
    for (std::uint32_t sub = rest_all;; sub = (sub - 1) & rest_all) {
        push_block(1u | sub);
        rec_blocks(full & ~(1u | sub));
        blocks.pop_back();
        if (sub == 0) break;
    }
}

namespace detail {

struct DecoratedEntry {
    std::vector<std::uint32_t> block_masks;
    std::vector<long long> weights;
    int winding;
};

/// All decorated partitions of type (k, n) in compact form, cached per (n, k).
inline const std::vector<DecoratedEntry>& decorated_census(int n, long long k) {
    thread_local std::map<std::pair<int, long long>, std::vector<DecoratedEntry>> cache;
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<DecoratedEntry> entries;
    for_each_decorated(n, k, [&](const DecoratedPartition& p) {
        DecoratedEntry e;
        e.block_masks.reserve(p.blocks.size());
        std::vector<int> block_of(static_cast<std::size_t>(n));
        for (std::size_t b = 0; b < p.blocks.size(); ++b) {
            std::uint32_t mask = 0;
            for (int el : p.blocks[b]) {
                mask |= 1u << (el - 1);
                block_of[static_cast<std::size_t>(el - 1)] = static_cast<int>(b);
            }
            e.block_masks.push_back(mask);
        }
        e.weights = p.weights;
        e.winding = static_cast<int>(winding_from_layout(block_of, p.weights).winding);
        entries.push_back(std::move(e));
    });
    return cache.emplace(key, std::move(entries)).first->second;
}

} // namespace detail

/**
 * Numerator coefficients by direct census: coefficient i counts the
 * cap-compatible decorated ordered set partitions of type (k, n) with winding
 * number i. Requires a full-dimensional slice.
 */
inline IntPoly hstar_combinatorial(const SliceSpec& s) {
    if (!s.full_dimensional())
        throw std::domain_error("hstar_combinatorial: requires 0 < k < sum(c)");
    const int n = static_cast<int>(s.n());
    // cap sums per block mask
    std::vector<long long> cap_sum(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 1; mask < cap_sum.size(); ++mask) {
        auto low_idx = static_cast<std::uint32_t>(std::countr_zero(mask));
        cap_sum[mask] = cap_sum[mask & (mask - 1)] + s.c[low_idx];
    }
    std::vector<long long> hist(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : detail::decorated_census(n, s.k)) {
        bool ok = true;
        for (std::size_t b = 0; b < e.block_masks.size(); ++b) {
            if (e.weights[b] >= cap_sum[e.block_masks[b]]) {
                ok = false;
                break;
            }
        }
        if (ok) ++hist[static_cast<std::size_t>(e.winding)];
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(hist.size());
    for (long long h : hist) coeffs.emplace_back(h);
    return IntPoly(std::move(coeffs));
}

/// Numerator via the series route: the counting polynomial pushed through
/// hstar_from_ehrhart at dimension n-1.
inline IntPoly hstar_series(const SliceSpec& s) {
    if (!s.full_dimensional())
        throw std::domain_error("hstar_series: requires 0 < k < sum(c)");
    return hstar_from_ehrhart(ehrhart_formula(s), static_cast<long long>(s.n()) - 1);
}

/**
 * Generating polynomial of the weighted-permutation strata with m+1 cycles:
 * coefficient of x^ell is W(ell, n, m+1, c). Finite because the strata are
 * empty once ell reaches sum(c).
 */
inline IntPoly w_generating_poly(int n, int m, const CapVector& c) {
    if (m < 0 || m > n - 1) throw std::invalid_argument("w_generating_poly: need 0 <= m <= n-1");
    std::vector<BigInt> coeffs;
    long long bound = c.sum();
    coeffs.reserve(static_cast<std::size_t>(bound));
    for (long long ell = 0; ell < bound; ++ell)
        coeffs.push_back(w_count_formula(ell, n, m, c));
    return IntPoly(std::move(coeffs));
}

} // namespace prismslice
