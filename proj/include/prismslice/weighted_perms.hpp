#pragma once

/**
 * @file weighted_perms.hpp
 * @brief Weighted permutations (a nonnegative weight per cycle), the cap
 *        compatibility test, deterministic enumeration of the strata
 *        W(ell, n, m, c), the closed counting formula for those strata, and
 *        the weight-preserving bijection with partitions into internally
 *        ordered blocks.
 */

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "prismslice/bigint.hpp"
#include "prismslice/counting.hpp"

namespace prismslice {

/**
 * A permutation of [n] given by its cycle decomposition, with a nonnegative
 * integer weight attached to each cycle. Canonical form: every cycle starts
 * at its minimum element and cycles are listed by increasing minimum.
 */
struct WeightedPermutation {
    int n = 0;
    std::vector<std::vector<int>> cycles;
    std::vector<long long> weights; // parallel to cycles

    long long total_weight() const {
        long long s = 0;
        for (long long w : weights) s += w;
        return s;
    }

    int num_cycles() const { return static_cast<int>(cycles.size()); }

    static WeightedPermutation create(int n, std::vector<std::vector<int>> cycles,
                                      std::vector<long long> weights) {
        if (cycles.size() != weights.size())
            throw std::invalid_argument("WeightedPermutation: cycles/weights size mismatch");
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        std::size_t total = 0;
        for (auto& cyc : cycles) {
            if (cyc.empty()) throw std::invalid_argument("WeightedPermutation: empty cycle");
            for (int e : cyc) {
                if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
                    throw std::invalid_argument("WeightedPermutation: cycles must partition [n]");
                seen[static_cast<std::size_t>(e)] = true;
            }
            total += cyc.size();
            // rotate so the minimum leads
            auto mn = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), mn, cyc.end());
        }
        if (total != static_cast<std::size_t>(n))
            throw std::invalid_argument("WeightedPermutation: cycles must partition [n]");
        for (long long w : weights)
            if (w < 0) throw std::invalid_argument("WeightedPermutation: negative weight");
        // order cycles by their minimum, carrying weights along
        std::vector<std::size_t> order(cycles.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return cycles[a][0] < cycles[b][0]; });
        WeightedPermutation p;
        p.n = n;
        for (std::size_t i : order) {
            p.cycles.push_back(std::move(cycles[i]));
            p.weights.push_back(weights[i]);
        }
        return p;
    }

    friend bool operator==(const WeightedPermutation& a, const WeightedPermutation& b) {
        return a.n == b.n && a.cycles == b.cycles && a.weights == b.weights;
    }
};

/// True when every cycle's weight is strictly below the sum of its members' caps.
inline bool is_compatible(const WeightedPermutation& p, const CapVector& c) {
    if (static_cast<std::size_t>(p.n) != c.n())
        throw std::invalid_argument("is_compatible: dimension mismatch");
    for (std::size_t i = 0; i < p.cycles.size(); ++i) {
        long long cap_sum = 0;
        for (int e : p.cycles[i]) cap_sum += c[static_cast<std::size_t>(e - 1)];
        if (p.weights[i] >= cap_sum) return false;
    }
    return true;
}

namespace detail {

/// Visits every decomposition of [n] into exactly m cycles; each cycle starts
/// at its minimum and cycles appear by increasing minimum.
template <class V>
void for_each_cycle_decomposition(int n, int m, V&& visit) {
    if (m < 1 || m > n) return;
    std::vector<std::vector<int>> cycles;
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;

    std::function<void(std::vector<int>)> rec = [&](std::vector<int> remaining) {
        if (remaining.empty()) {
            if (static_cast<int>(cycles.size()) == m) visit(cycles);
            return;
        }
        int cycles_left = m - static_cast<int>(cycles.size());
        if (cycles_left <= 0 || static_cast<int>(remaining.size()) < cycles_left) return;
        int head = remaining[0];
        std::vector<int> rest(remaining.begin() + 1, remaining.end());
        int max_extra = static_cast<int>(remaining.size()) - cycles_left;
        // choose the other elements of head's cycle, then each arrangement
        std::vector<int> chosen_idx;
        std::function<void(int, int)> choose = [&](int start, int need) {
            if (need == 0) {
                std::vector<int> chosen;
                chosen.reserve(chosen_idx.size());
                for (int idx : chosen_idx) chosen.push_back(rest[static_cast<std::size_t>(idx)]);
                std::vector<int> next_remaining;
                std::size_t ci = 0;
                for (std::size_t i = 0; i < rest.size(); ++i) {
                    if (ci < chosen_idx.size() && static_cast<int>(i) == chosen_idx[ci]) ++ci;
                    else next_remaining.push_back(rest[i]);
                }
                std::sort(chosen.begin(), chosen.end());
                do {
                    std::vector<int> cycle;
                    cycle.reserve(chosen.size() + 1);
                    cycle.push_back(head);
                    cycle.insert(cycle.end(), chosen.begin(), chosen.end());
                    cycles.push_back(std::move(cycle));
                    rec(next_remaining);
                    cycles.pop_back();
                } while (std::next_permutation(chosen.begin(), chosen.end()));
                return;
            }
            for (int i = start; i <= static_cast<int>(rest.size()) - need; ++i) {
                chosen_idx.push_back(i);
                choose(i + 1, need - 1);
                chosen_idx.pop_back();
            }
        };
        for (int extra = 0; extra <= max_extra; ++extra) choose(0, extra);
    };
    rec(all);
}

/// Visits every composition of total into parts with 0 <= part[i] <= bound[i].
template <class V>
void for_each_bounded_composition(long long total, const std::vector<long long>& bounds, V&& visit) {
    std::size_t k = bounds.size();
    std::vector<long long> suffix(k + 1, 0);
    for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] + bounds[i];
    std::vector<long long> parts(k, 0);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long left) {
        if (i == k) {
            if (left == 0) visit(parts);
            return;
        }
        if (left > suffix[i]) return;
        long long hi = std::min(bounds[i], left);
        long long lo = std::max<long long>(0, left - suffix[i + 1]);
        for (long long w = lo; w <= hi; ++w) {
            parts[i] = w;
            rec(i + 1, left - w);
        }
    };
    rec(0, total);
}

} // namespace detail

/**
 * Streams every cap-compatible weighted permutation of [n] with m cycles and
 * total weight ell, each exactly once, in a deterministic order. The
 * per-cycle weight bounds are applied during generation.
 */
template <class V>
void for_each_weighted(int n, int m, long long ell, const CapVector& c, V&& visit) {
    if (c.n() != static_cast<std::size_t>(n))
        throw std::invalid_argument("for_each_weighted: dimension mismatch");
    if (m < 1 || m > n) throw std::invalid_argument("for_each_weighted: need 1 <= m <= n");
    if (ell < 0) return;
    detail::for_each_cycle_decomposition(n, m, [&](const std::vector<std::vector<int>>& cycles) {
        std::vector<long long> bounds;
        bounds.reserve(cycles.size());
        for (const auto& cyc : cycles) {
            long long cap_sum = 0;
            for (int e : cyc) cap_sum += c[static_cast<std::size_t>(e - 1)];
            bounds.push_back(cap_sum - 1);
        }
        detail::for_each_bounded_composition(ell, bounds, [&](const std::vector<long long>& w) {
            WeightedPermutation p;
            p.n = n;
            p.cycles = cycles;
            p.weights = w;
            visit(p);
        });
    });
}

inline std::vector<WeightedPermutation> enumerate_weighted(int n, int m, long long ell,
                                                           const CapVector& c) {
    std::vector<WeightedPermutation> out;
    for_each_weighted(n, m, ell, c, [&](const WeightedPermutation& p) { out.push_back(p); });
    return out;
}

/// |W(ell, n, m, c)| by exhausting the enumeration.
inline BigInt w_count_enum(long long ell, int n, int m, const CapVector& c) {
    long long count = 0;
    for_each_weighted(n, m, ell, c, [&](const WeightedPermutation&) { ++count; });
    return BigInt(count);
}

/**
 * The closed formula for W(ell, n, m+1, c) (note the shift: the m passed here
 * is one less than the cycle count):
 *
 *   sum_{j=0}^{n} (-1)^j P^{n-1-m}_{-j+1, n-1-j}
 *                 sum_{i=0}^{ell} rho_{c,j}(i) C(m+ell-i, m).
 *
 * Returned as a signed integer on purpose: callers assert nonnegativity so a
 * violation of the identity would surface rather than be masked.
 */
inline BigInt w_count_formula(long long ell, int n, int m, const CapVector& c) {
    if (c.n() != static_cast<std::size_t>(n))
        throw std::invalid_argument("w_count_formula: dimension mismatch");
    if (m < 0 || m > n - 1) throw std::invalid_argument("w_count_formula: need 0 <= m <= n-1");
    if (ell < 0) return BigInt(0);
    BigInt acc(0);
    for (long long j = 0; j <= n; ++j) {
        BigInt inner(0);
        for (long long i = 0; i <= ell; ++i) {
            BigInt r = rho(c, j, i);
            if (r.is_zero()) continue;
            inner += r * binomial(m + ell - i, m);
        }
        if (inner.is_zero()) continue;
        BigInt term = interval_esp(-j + 1, n - 1 - j, n - 1 - m) * inner;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/**
 * A partition of [n] into nonempty internally ordered blocks. Block weight is
 * the number of elements smaller than the block's first element; the
 * partition weight is the sum over blocks. Canonical form lists blocks by
 * increasing minimum element.
 */
struct LahPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    static LahPartition create(int n, std::vector<std::vector<int>> blocks) {
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        std::size_t total = 0;
        for (const auto& b : blocks) {
            if (b.empty()) throw std::invalid_argument("LahPartition: empty block");
            for (int e : b) {
                if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
                    throw std::invalid_argument("LahPartition: blocks must partition [n]");
                seen[static_cast<std::size_t>(e)] = true;
            }
            total += b.size();
        }
        if (total != static_cast<std::size_t>(n))
            throw std::invalid_argument("LahPartition: blocks must partition [n]");
        std::sort(blocks.begin(), blocks.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      return *std::min_element(a.begin(), a.end()) <
                             *std::min_element(b.begin(), b.end());
                  });
        LahPartition p;
        p.n = n;
        p.blocks = std::move(blocks);
        return p;
    }

    static long long block_weight(const std::vector<int>& block) {
        long long w = 0;
        for (int e : block)
            if (e < block[0]) ++w;
        return w;
    }

    long long weight() const {
        long long s = 0;
        for (const auto& b : blocks) s += block_weight(b);
        return s;
    }

    friend bool operator==(const LahPartition& a, const LahPartition& b) {
        return a.n == b.n && a.blocks == b.blocks;
    }
};

/**
 * Weighted permutation -> ordered-block partition: each cycle becomes the
 * block read cyclically starting from its (w+1)-th smallest element. Requires
 * every cycle weight to be strictly below the cycle length.
 */
inline LahPartition to_lah(const WeightedPermutation& p) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(p.cycles.size());
    for (std::size_t i = 0; i < p.cycles.size(); ++i) {
        const auto& cyc = p.cycles[i];
        long long w = p.weights[i];
        if (w >= static_cast<long long>(cyc.size()))
            throw std::domain_error("to_lah: cycle weight must be below cycle length");
        std::vector<int> sorted = cyc;
        std::sort(sorted.begin(), sorted.end());
        int first = sorted[static_cast<std::size_t>(w)];
        auto pos = std::find(cyc.begin(), cyc.end(), first);
        std::vector<int> block(pos, cyc.end());
        block.insert(block.end(), cyc.begin(), pos);
        blocks.push_back(std::move(block));
    }
    return LahPartition::create(p.n, std::move(blocks));
}

/// Inverse of to_lah: the block read as a cycle, weighted by the rank of its
/// first element within the block.
inline WeightedPermutation from_lah(const LahPartition& pi) {
    std::vector<std::vector<int>> cycles;
    std::vector<long long> weights;
    cycles.reserve(pi.blocks.size());
    for (const auto& b : pi.blocks) {
        weights.push_back(LahPartition::block_weight(b));
        cycles.push_back(b);
    }
    return WeightedPermutation::create(pi.n, std::move(cycles), std::move(weights));
}

/// Visits every partition of [n] into exactly m internally ordered blocks.
template <class V>
void for_each_lah(int n, int m, V&& visit) {
    if (m < 1 || m > n) return;
    // grow set partitions element by element, then expand block orderings
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(blocks.size()) > m) return;
        int elements_left = n - next + 1;
        int blocks_needed = m - static_cast<int>(blocks.size());
        if (elements_left < blocks_needed) return;
        if (next > n) {
            if (static_cast<int>(blocks.size()) != m) return;
            // expand every internal ordering of every block
            std::vector<std::vector<int>> arranged(blocks.size());
            std::function<void(std::size_t)> orderings = [&](std::size_t bi) {
                if (bi == blocks.size()) {
                    visit(LahPartition::create(n, arranged));
                    return;
                }
                std::vector<int> perm = blocks[bi];
                std::sort(perm.begin(), perm.end());
                do {
                    arranged[bi] = perm;
                    orderings(bi + 1);
                } while (std::next_permutation(perm.begin(), perm.end()));
            };
            orderings(0);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(next);
            rec(next + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({next});
        rec(next + 1);
        blocks.pop_back();
    };
    rec(1);
}

} // namespace prismslice
