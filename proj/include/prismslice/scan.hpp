#pragma once

/**
 * @file scan.hpp
 * @brief Conjecture scans over parameter grids, one JSONL record per
 *        (check, instance). Scans resume past records already present in the
 *        output file, fan out across worker threads (capped by PRISM_THREADS),
 *        and serialize writes through a single writer. Record order is
 *        unspecified.
 *
 * Checks:
 *   unit_circle - all complex roots of the stratum generating polynomials on
 *                 |z| = 1, to the given tolerance;
 *   real_rooted - the series numerators have only real roots (exact);
 *   interlace   - numerator roots interlace those of the cap-split variant
 *                 (c_1, ..., c_{n-1}, c_n - 1, 1), exact, caps with c_n >= 2.
 */

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "prismslice/hstar.hpp"
#include "prismslice/roots.hpp"
#include "prismslice/serialize.hpp"
#include "prismslice/verify.hpp"

namespace prismslice {

struct ScanOptions {
    int max_n = 4;
    long long max_c = 3;
    double tol = 1e-9;
    std::vector<std::string> checks = {"unit_circle", "real_rooted", "interlace"};
    int threads = 0; // 0: pick from hardware, capped by PRISM_THREADS
};

struct ScanSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t resumed = 0;
    std::vector<json> failures;
};

namespace detail {

struct ScanInstance {
    std::string check;
    int n = 0;
    long long second = 0; // m for unit_circle, k for the numerator checks
    CapVector c{{1}};

    std::string key() const {
        const char* name = check == "unit_circle" ? "m" : "k";
        return check + "|n=" + std::to_string(n) + "|" + name + "=" + std::to_string(second) +
               "|c=" + c.to_string();
    }
};

inline std::vector<ScanInstance> scan_instances(const ScanOptions& opt) {
    std::vector<ScanInstance> out;
    auto wants = [&](const char* name) {
        for (const auto& c : opt.checks)
            if (c == name) return true;
        return false;
    };
    for (int n = 1; n <= opt.max_n; ++n) {
        for_each_cap_vector(n, opt.max_c, [&](const CapVector& c) {
            if (wants("unit_circle"))
                for (int m = 0; m <= n - 1; ++m)
                    out.push_back({"unit_circle", n, m, c});
            for (long long k = 1; k < c.sum(); ++k) {
                if (wants("real_rooted")) out.push_back({"real_rooted", n, k, c});
                if (wants("interlace") && c[c.n() - 1] >= 2)
                    out.push_back({"interlace", n, k, c});
            }
        });
    }
    return out;
}

inline json run_instance(const ScanInstance& inst, double tol) {
    json rec;
    rec["check"] = inst.check;
    rec["n"] = inst.n;
    if (inst.check == "unit_circle") {
        rec["m"] = inst.second;
        rec["c"] = inst.c.entries();
        IntPoly p = w_generating_poly(inst.n, static_cast<int>(inst.second), inst.c);
        rec["poly"] = to_json(p);
        UnitCircleReport r = unit_circle_check(p, tol);
        rec["pass"] = r.pass;
        json detail;
        detail["max_deviation"] = r.max_deviation;
        detail["self_inversive"] = self_inversive_check(p);
        if (r.inconclusive) detail["inconclusive"] = true;
        if (!r.detail.empty()) detail["note"] = r.detail;
        rec["detail"] = detail;
        return rec;
    }
    SliceSpec s(inst.second, inst.c);
    rec["k"] = inst.second;
    rec["c"] = inst.c.entries();
    IntPoly h = hstar_series(s);
    rec["poly"] = to_json(h);
    if (inst.check == "real_rooted") {
        bool ok = real_rooted_check(h);
        rec["pass"] = ok;
        rec["detail"] = json{{"degree", h.degree()}};
        return rec;
    }
    // interlace against the cap-split variant
    std::vector<long long> split = inst.c.entries();
    split.back() -= 1;
    split.push_back(1);
    CapVector c2(std::move(split));
    IntPoly h2 = hstar_series(SliceSpec(inst.second, c2));
    InterlaceStatus status = interlace_check(h, h2);
    rec["pass"] = status == InterlaceStatus::interlaced;
    rec["detail"] = json{{"partner_c", c2.entries()},
                         {"partner_poly", to_json(h2)},
                         {"status", to_string(status)}};
    return rec;
}

inline int worker_cap_from_env() {
    const char* env = std::getenv("PRISM_THREADS");
    if (!env) return 0;
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

} // namespace detail

/**
 * Runs the scan, appending one JSONL record per fresh instance to out.
 * Instances whose keys appear in already-present records are skipped;
 * previously recorded failures still surface in the summary.
 */
inline ScanSummary run_scan(const ScanOptions& opt, std::ostream& out,
                            const std::vector<json>& existing_records) {
    std::set<std::string> done;
    ScanSummary summary;
    for (const auto& rec : existing_records) {
        detail::ScanInstance key_inst;
        if (!rec.contains("check") || !rec.contains("n") || !rec.contains("c")) continue;
        key_inst.check = rec["check"].get<std::string>();
        key_inst.n = rec["n"].get<int>();
        key_inst.second = key_inst.check == "unit_circle" ? rec.value("m", 0LL)
                                                          : rec.value("k", 0LL);
        key_inst.c = CapVector(rec["c"].get<std::vector<long long>>());
        if (!done.insert(key_inst.key()).second) continue;
        ++summary.resumed;
        ++summary.total;
        if (rec.value("pass", false)) {
            ++summary.passed;
        } else {
            ++summary.failed;
            summary.failures.push_back(rec);
        }
    }

    std::vector<detail::ScanInstance> todo;
    for (auto& inst : detail::scan_instances(opt))
        if (done.find(inst.key()) == done.end()) todo.push_back(std::move(inst));

    int threads = opt.threads > 0 ? opt.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    int cap = detail::worker_cap_from_env();
    if (cap > 0 && threads > cap) threads = cap;
    if (threads > static_cast<int>(todo.size())) threads = static_cast<int>(todo.size());
    if (threads < 1) threads = 1;

    std::atomic<std::size_t> next{0};
    std::mutex write_mutex;
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= todo.size()) break;
            json rec = detail::run_instance(todo[i], opt.tol);
            bool pass = rec["pass"].get<bool>();
            std::lock_guard<std::mutex> lock(write_mutex);
            out << rec.dump() << "\n";
            out.flush();
            ++summary.total;
            if (pass) {
                ++summary.passed;
            } else {
                ++summary.failed;
                summary.failures.push_back(rec);
            }
        }
    };
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return summary;
}

} // namespace prismslice
