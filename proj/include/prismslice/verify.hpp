#pragma once

/**
 * @file verify.hpp
 * @brief The cross-check battery: every identity in the library is exercised
 *        against its independent route (brute-force counts, enumeration,
 *        interpolation, series expansion) over caller-chosen grid bounds.
 *        Used by the verify subcommand and the acceptance suite.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "prismslice/counting.hpp"
#include "prismslice/ehrhart.hpp"
#include "prismslice/flag.hpp"
#include "prismslice/hstar.hpp"
#include "prismslice/polynomial.hpp"
#include "prismslice/weighted_perms.hpp"

namespace prismslice {

struct VerifyRecord {
    std::string check;
    std::string instance;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// Accumulates per-check tallies; failing records are always retained, passing
/// ones only when keep_all is set.
class VerifyReport {
public:
    explicit VerifyReport(bool keep_all = false) : keep_all_(keep_all) {}

    void add(const std::string& check, const std::string& instance, const std::string& expected,
             const std::string& actual, bool pass) {
        auto& tally = by_check_[check];
        ++tally.first;
        if (!pass) ++tally.second;
        ++total_;
        if (!pass) ++failed_;
        if (keep_all_ || !pass) records_.push_back({check, instance, expected, actual, pass});
    }

    template <class T>
    void add_eq(const std::string& check, const std::string& instance, const T& expected,
                const T& actual) {
        add(check, instance, expected.to_string(), actual.to_string(), expected == actual);
    }

    void add_cond(const std::string& check, const std::string& instance, bool condition) {
        add(check, instance, "true", condition ? "true" : "false", condition);
    }

    std::size_t total() const { return total_; }
    std::size_t failed() const { return failed_; }
    std::size_t passed() const { return total_ - failed_; }
    bool all_pass() const { return failed_ == 0; }
    const std::vector<VerifyRecord>& records() const { return records_; }
    /// check name -> (instances run, instances failed)
    const std::map<std::string, std::pair<std::size_t, std::size_t>>& by_check() const {
        return by_check_;
    }

private:
    bool keep_all_;
    std::size_t total_ = 0, failed_ = 0;
    std::vector<VerifyRecord> records_;
    std::map<std::string, std::pair<std::size_t, std::size_t>> by_check_;
};

/// Calls fn with every cap vector of length n with entries in 1..max_c.
inline void for_each_cap_vector(int n, long long max_c,
                                const std::function<void(const CapVector&)>& fn) {
    std::vector<long long> cur(static_cast<std::size_t>(n), 1);
    while (true) {
        fn(CapVector(cur));
        std::size_t pos = 0;
        while (pos < cur.size() && ++cur[pos] > max_c) cur[pos++] = 1;
        if (pos == cur.size()) break;
    }
}

namespace checks {

inline std::string slice_str(const SliceSpec& s) {
    return "k=" + std::to_string(s.k) + " c=" + s.c.to_string();
}

/// Counting polynomial vs brute-force dilation counts at t = 0..n.
inline void brute_oracle(int max_n, long long max_c, VerifyReport& rep) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_cap_vector(n, max_c, [&](const CapVector& c) {
            for (long long k = 1; k < c.sum(); ++k) {
                SliceSpec s(k, c);
                RatPoly p = ehrhart_formula(s);
                rep.add_eq("ehrhart_value_at_0", slice_str(s), Rational(1),
                           p.evaluate(Rational(0)));
                for (long long t = 1; t <= n; ++t)
                    rep.add_eq("ehrhart_vs_brute", slice_str(s) + " t=" + std::to_string(t),
                               Rational(brute_count(s, t)), p.evaluate(Rational(t)));
            }
        });
    }
}

/// The formula polynomial is the unique interpolant through the brute counts.
inline void interpolation(int max_n, long long max_c, VerifyReport& rep) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_cap_vector(n, max_c, [&](const CapVector& c) {
            for (long long k = 1; k < c.sum(); ++k) {
                SliceSpec s(k, c);
                std::vector<std::pair<Rational, Rational>> pts;
                pts.emplace_back(Rational(0), Rational(1));
                for (long long t = 1; t <= n; ++t)
                    pts.emplace_back(Rational(t), Rational(brute_count(s, t)));
                rep.add_cond("ehrhart_interpolation", slice_str(s),
                             lagrange_interpolate(pts) == ehrhart_formula(s));
            }
        });
    }
}

/// Degenerate levels and the reflection symmetry k <-> sum(c) - k.
inline void level_structure(int max_n, long long max_c, VerifyReport& rep) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_cap_vector(n, max_c, [&](const CapVector& c) {
            rep.add_cond("ehrhart_degenerate_levels", "c=" + c.to_string(),
                         ehrhart_formula(SliceSpec(c.sum(), c)) == RatPoly{Rational(1)} &&
                             ehrhart_formula(SliceSpec(c.sum() + 1, c)).is_zero() &&
                             brute_count(SliceSpec(c.sum() + 1, c), 1) == BigInt(0));
            for (long long k = 1; k < c.sum(); ++k)
                rep.add_cond("ehrhart_level_symmetry", slice_str(SliceSpec(k, c)),
                             ehrhart_formula(SliceSpec(k, c)) ==
                                 ehrhart_formula(SliceSpec(c.sum() - k, c)));
        });
    }
}

/// Per-coefficient assembly equals the closed form, with positive coefficients.
inline void coefficient_identity(int max_n, long long max_c, VerifyReport& rep) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_cap_vector(n, max_c, [&](const CapVector& c) {
            for (long long k = 1; k < c.sum(); ++k) {
                SliceSpec s(k, c);
                RatPoly direct = ehrhart_formula(s);
                RatPoly assembled = ehrhart_via_coefficients(s);
                rep.add_cond("coefficient_identity", slice_str(s), assembled == direct);
                bool positive = assembled.degree() == n - 1;
                for (int m = 0; m <= assembled.degree(); ++m)
                    positive = positive && assembled.coeff(static_cast<std::size_t>(m)) > Rational(0);
                rep.add_cond("coefficient_positivity", slice_str(s), positive);
            }
        });
    }
}

/// Closed stratum counts vs enumeration, the all-ones specialization, and the
/// ordered-block row sums.
inline void w_identity(int max_n, long long max_c, VerifyReport& rep) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_cap_vector(n, max_c, [&](const CapVector& c) {
            for (int m = 0; m <= n - 1; ++m)
                for (long long ell = 0; ell < c.sum(); ++ell) {
                    std::string inst = "ell=" + std::to_string(ell) + " n=" + std::to_string(n) +
                                       " m=" + std::to_string(m) + " c=" + c.to_string();
                    BigInt formula = w_count_formula(ell, n, m, c);
                    rep.add_eq("w_formula_vs_enum", inst, w_count_enum(ell, n, m + 1, c), formula);
                    rep.add_cond("w_formula_nonnegative", inst, formula >= BigInt(0));
                }
        });
        CapVector ones(std::vector<long long>(static_cast<std::size_t>(n), 1));
        for (int m = 1; m <= n; ++m) {
            BigInt row(0);
            for (long long ell = 0; ell <= n - m; ++ell) {
                row += w_count_enum(ell, n, m, ones);
                rep.add_eq("w_unit_caps_specialization",
                           "ell=" + std::to_string(ell) + " n=" + std::to_string(n) +
                               " m=" + std::to_string(m),
                           w_count_enum(ell, n, m, ones), w_count_formula(ell, n, m - 1, ones));
            }
            rep.add_eq("w_lah_row_sum", "n=" + std::to_string(n) + " m=" + std::to_string(m),
                       lah(n, m), row);
        }
    }
}

/// Weight-preserving bijection between weighted permutations and ordered-block
/// partitions, in both directions, with the Lah totals.
inline void lah_bijection(int max_n, VerifyReport& rep) {
    for (int n = 1; n <= max_n; ++n) {
        CapVector ones(std::vector<long long>(static_cast<std::size_t>(n), 1));
        for (int m = 1; m <= n; ++m) {
            std::string inst = "n=" + std::to_string(n) + " m=" + std::to_string(m);
            bool forward_ok = true;
            long long forward = 0;
            for (long long ell = 0; ell <= n - m; ++ell)
                for_each_weighted(n, m, ell, ones, [&](const WeightedPermutation& p) {
                    LahPartition img = to_lah(p);
                    forward_ok = forward_ok && from_lah(img) == p &&
                                 img.weight() == p.total_weight();
                    ++forward;
                });
            bool backward_ok = true;
            long long backward = 0;
            for_each_lah(n, m, [&](const LahPartition& pi) {
                backward_ok = backward_ok && to_lah(from_lah(pi)) == pi;
                ++backward;
            });
            rep.add_cond("lah_bijection_roundtrip", inst, forward_ok && backward_ok);
            rep.add_cond("lah_bijection_count", inst,
                         forward == backward && BigInt(forward) == lah(n, m));
        }
    }
}

/// Census histogram equals the series numerator everywhere on the grid.
inline void hstar_identity(int max_n, long long max_c, VerifyReport& rep) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_cap_vector(n, max_c, [&](const CapVector& c) {
            for (long long k = 1; k < c.sum(); ++k) {
                SliceSpec s(k, c);
                IntPoly census = hstar_combinatorial(s);
                IntPoly series = hstar_series(s);
                rep.add_cond("hstar_census_vs_series", slice_str(s), census == series);
                rep.add_cond("hstar_constant_term", slice_str(s), census.coeff(0) == BigInt(1));
            }
        });
    }
    rep.add_cond("hstar_spot_octahedron", "k=2 c=1,1,1,1",
                 hstar_combinatorial(SliceSpec(2, CapVector({1, 1, 1, 1}))) ==
                     IntPoly{BigInt(1), BigInt(2), BigInt(1)});
    rep.add_cond("hstar_spot_simplex", "k=1 c=2,1",
                 hstar_combinatorial(SliceSpec(1, CapVector({2, 1}))) == IntPoly{BigInt(1)});
}

/// Volume by convolution vs leading coefficient, the unit-cap Eulerian
/// volumes, and the normalized volume as the numerator evaluated at one.
inline void volume_chain(int hypersimplex_max_n, int max_n, long long max_c, VerifyReport& rep) {
    for (int n = 2; n <= hypersimplex_max_n; ++n) {
        CapVector ones(std::vector<long long>(static_cast<std::size_t>(n), 1));
        for (long long k = 1; k < n; ++k)
            rep.add_eq("volume_unit_caps_eulerian",
                       "n=" + std::to_string(n) + " k=" + std::to_string(k),
                       eulerian(n - 1, k - 1), normalized_volume(SliceSpec(k, ones)));
    }
    for (int n = 1; n <= max_n; ++n) {
        for_each_cap_vector(n, max_c, [&](const CapVector& c) {
            for (long long k = 1; k < c.sum(); ++k) {
                SliceSpec s(k, c);
                rep.add_eq("volume_vs_leading_coeff", slice_str(s),
                           ehrhart_formula(s).coeff(static_cast<std::size_t>(n - 1)), volume(s));
                rep.add_eq("normalized_volume_vs_hstar_at_1", slice_str(s),
                           hstar_series(s).evaluate(BigInt(1)), normalized_volume(s));
            }
        });
    }
}

/// Three-way identity for the flag counts, the spot distribution, and the
/// support window.
inline void flag_identity(int max_n, long long max_c, VerifyReport& rep) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_cap_vector(n, max_c, [&](const CapVector& c) {
            for (long long k = 0; k <= c.sum(); ++k) {
                std::string inst = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                   " c=" + c.to_string();
                BigInt by_enum = flag_eulerian_enum(n, k, c);
                rep.add_eq("flag_enum_vs_convolution", inst, by_enum,
                           flag_eulerian_convolution(n, k, c));
                if (k < c.sum()) {
                    rep.add_eq("flag_enum_vs_volume", inst, by_enum,
                               flag_eulerian_via_volume(n, k, c));
                    BigInt refined(0);
                    for (const auto& v : flag_eulerian_hstar_refinement(n, k, c)) refined += v;
                    rep.add_eq("flag_refinement_total", inst, by_enum, refined);
                }
                rep.add_cond("flag_support_window", inst, (by_enum > 0) == (k <= c.sum() - 1));
            }
        });
    }
    std::vector<long long> expect{1, 3, 3, 1};
    bool spot = true;
    for (long long k = 0; k <= 3; ++k)
        spot = spot && flag_eulerian_enum(2, k, CapVector({2, 2})) ==
                           BigInt(expect[static_cast<std::size_t>(k)]);
    rep.add_cond("flag_spot_distribution", "n=2 c=2,2", spot);
}

/// Fat slices against thin images, the uniform-matroid closed form, and the
/// whole-box reduction.
inline void fat_thin_uniform(int max_n, VerifyReport& rep) {
    for (int n = 1; n <= max_n; ++n) {
        CapVector ones(std::vector<long long>(static_cast<std::size_t>(n), 1));
        for (long long k = 1; k <= n; ++k) {
            std::string inst = "k=" + std::to_string(k) + " n=" + std::to_string(n);
            FatSliceSpec fat(0, k, ones);
            RatPoly u = uniform_independence_ehrhart(k, n);
            rep.add_cond("uniform_matroid_vs_fat_thin", inst,
                         u == ehrhart_formula(fat_to_thin(fat)));
            bool positive = true;
            for (int i = 0; i <= u.degree(); ++i)
                positive = positive && u.coeff(static_cast<std::size_t>(i)) > Rational(0);
            rep.add_cond("uniform_matroid_positivity", inst, positive);
            for (long long t = 1; t <= 2; ++t)
                rep.add_eq("fat_brute_counts", inst + " t=" + std::to_string(t),
                           Rational(fat_brute_count(fat, t)),
                           u.evaluate(Rational(t)));
        }
    }
    // generic fat slices on a small non-uniform grid
    for (int n = 1; n <= std::min(max_n, 3); ++n) {
        for_each_cap_vector(n, 3, [&](const CapVector& c) {
            for (long long a = 0; a < c.sum(); ++a)
                for (long long b = a + 1; b <= c.sum(); ++b) {
                    FatSliceSpec fat(a, b, c);
                    RatPoly image = ehrhart_formula(fat_to_thin(fat));
                    std::string inst = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                       " c=" + c.to_string();
                    for (long long t = 1; t <= 2; ++t)
                        rep.add_eq("fat_to_thin_counts", inst + " t=" + std::to_string(t),
                                   Rational(fat_brute_count(fat, t)),
                                   image.evaluate(Rational(t)));
                }
            rep.add_cond("fat_whole_box", "c=" + c.to_string(),
                         ehrhart_formula(fat_to_thin(FatSliceSpec(0, c.sum(), c))) ==
                             prism_ehrhart(c));
        });
    }
}

/// Coefficient-wise monotonicity over all comparable cap pairs.
inline void monotonicity(int max_n, long long max_c, VerifyReport& rep) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_cap_vector(n, max_c, [&](const CapVector& lo) {
            for_each_cap_vector(n, max_c, [&](const CapVector& hi) {
                if (!lo.dominated_by(hi)) return;
                for (long long k = 1; k < lo.sum(); ++k)
                    rep.add_cond("ehrhart_monotonicity",
                                 "k=" + std::to_string(k) + " c=" + lo.to_string() +
                                     " c'=" + hi.to_string(),
                                 monotonicity_check(SliceSpec(k, lo), hi));
            });
        });
    }
}

/// Whole-box closed form: level counts sum to the product formula.
inline void prism_closed_form(int max_n, long long max_c, VerifyReport& rep) {
    for (int n = 1; n <= max_n; ++n) {
        for_each_cap_vector(n, max_c, [&](const CapVector& c) {
            RatPoly box = prism_ehrhart(c);
            for (long long t = 1; t <= 3; ++t) {
                std::vector<long long> caps;
                for (long long e : c.entries()) caps.push_back(e * t);
                BigInt levels(0);
                for (long long level = 0; level <= c.sum() * t; ++level)
                    levels += bounded_power_coeff(caps, level);
                rep.add_eq("prism_closed_form", "c=" + c.to_string() + " t=" + std::to_string(t),
                           Rational(levels), box.evaluate(Rational(t)));
            }
        });
    }
}

/// The two-route counting identities from the number-family layer.
inline void counting_dual_routes(VerifyReport& rep) {
    for (long long n = 0; n <= 8; ++n)
        for (long long b = 1; b <= 5; ++b)
            for (long long a = 0; a <= n * (b - 1); ++a) {
                std::string inst = "n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                   " b=" + std::to_string(b);
                rep.add_eq("gen_binomial_two_routes", inst, gen_binomial(n, a, b),
                           gen_binomial_formula(n, a, b));
                rep.add_cond("gen_binomial_symmetry", inst,
                             gen_binomial(n, a, b) == gen_binomial(n, n * (b - 1) - a, b));
            }
    for (long long a = 1; a <= 6; ++a)
        for (long long b = 1; b <= 6; ++b)
            for (long long s = 0; s <= a + b + 1; ++s)
                rep.add_eq("interval_esp_two_routes",
                           "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                               " s=" + std::to_string(s),
                           interval_esp(-a, b, s), interval_esp_via_stirling(a, b, s));
    for (long long n = 0; n <= 7; ++n) {
        BigInt esum(0), ssum(0);
        for (long long k = 0; k <= n; ++k) esum += eulerian(n, k);
        for (long long m = 0; m <= n; ++m) ssum += stirling1_unsigned(n, m);
        rep.add_cond("row_sums_factorial", "n=" + std::to_string(n),
                     esum == factorial(n) && ssum == factorial(n));
    }
}

} // namespace checks

struct VerifyBounds {
    int max_n = 4;
    long long max_c = 3;
};

/// The full battery at uniform bounds; the acceptance suite drives the
/// individual checks at their own grid sizes instead.
inline void run_all_checks(const VerifyBounds& b, VerifyReport& rep) {
    checks::brute_oracle(b.max_n, b.max_c, rep);
    checks::interpolation(b.max_n, b.max_c, rep);
    checks::level_structure(b.max_n, b.max_c, rep);
    checks::coefficient_identity(b.max_n, b.max_c, rep);
    checks::w_identity(b.max_n, b.max_c, rep);
    checks::lah_bijection(std::min(b.max_n + 1, 6), rep);
    checks::hstar_identity(b.max_n, b.max_c, rep);
    checks::volume_chain(b.max_n + 1, b.max_n, b.max_c, rep);
    checks::flag_identity(b.max_n, b.max_c, rep);
    checks::fat_thin_uniform(b.max_n, rep);
    checks::monotonicity(b.max_n, b.max_c, rep);
    checks::prism_closed_form(b.max_n, b.max_c, rep);
    checks::counting_dual_routes(rep);
}

} // namespace prismslice
