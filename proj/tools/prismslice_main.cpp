// Command-line front door: compute, verify and scan subcommands with
// machine-readable output. Exit codes: 0 success, 1 a mathematical identity
// failed (model violation or scan/verify finding), 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "prismslice/prismslice.hpp"
#include "prismslice/scan.hpp"
#include "prismslice/verify.hpp"

namespace {

using namespace prismslice;

struct JobConfig {
    std::string command;
    std::vector<long long> c;
    long long k = -1;
    long long a = -1;
    long long b = -1;
    long long n = -1;
    long long m = -1;
    long long ell = -1;
    long long t = 1;
    int max_n = 4;
    long long max_c = 3;
    double tol = 1e-9;
    std::string out;
    std::string format = "json";
    std::vector<std::string> checks;
    bool list_items = false;
};

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

CapVector caps_of(const JobConfig& cfg) {
    require(!cfg.c.empty(), "missing --c (comma-separated positive integers)");
    return CapVector(cfg.c);
}

/// Thin slice from either --k or the fat pair --a/--b.
SliceSpec slice_of(const JobConfig& cfg) {
    CapVector c = caps_of(cfg);
    if (cfg.a >= 0 || cfg.b >= 0) {
        require(cfg.a >= 0 && cfg.b >= 0, "fat slices need both --a and --b");
        require(cfg.k < 0, "--k conflicts with --a/--b");
        return fat_to_thin(FatSliceSpec(cfg.a, cfg.b, c));
    }
    require(cfg.k >= 0, "missing --k");
    return SliceSpec(cfg.k, c);
}

void render_text(const json& obj, std::ostream& os, const std::string& prefix = "") {
    for (const auto& [key, value] : obj.items()) {
        if (value.is_object()) {
            render_text(value, os, prefix + key + ".");
        } else if (value.is_array()) {
            os << prefix << key << ": ";
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (i) os << ",";
                if (value[i].is_string())
                    os << value[i].get<std::string>();
                else
                    os << value[i].dump();
            }
            os << "\n";
        } else if (value.is_string()) {
            os << prefix << key << ": " << value.get<std::string>() << "\n";
        } else {
            os << prefix << key << ": " << value.dump() << "\n";
        }
    }
}

void render_csv(const json& obj, std::ostream& os, const std::string& prefix = "") {
    for (const auto& [key, value] : obj.items()) {
        if (value.is_object()) {
            render_csv(value, os, prefix + key + ".");
        } else if (value.is_array()) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                os << prefix << key << "," << i << ",";
                if (value[i].is_string())
                    os << value[i].get<std::string>();
                else
                    os << value[i].dump();
                os << "\n";
            }
        } else if (value.is_string()) {
            os << prefix << key << "," << value.get<std::string>() << "\n";
        } else {
            os << prefix << key << "," << value.dump() << "\n";
        }
    }
}

void emit(const json& obj, const JobConfig& cfg) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        require(file.good(), "cannot open output file: " + cfg.out);
        os = &file;
    }
    if (cfg.format == "json")
        *os << obj.dump(2) << "\n";
    else if (cfg.format == "text")
        render_text(obj, *os);
    else if (cfg.format == "csv")
        render_csv(obj, *os);
    else
        throw std::invalid_argument("unknown format: " + cfg.format);
}

int cmd_count(const JobConfig& cfg) {
    json out;
    out["command"] = "count";
    CapVector c = caps_of(cfg);
    require(cfg.t >= 0, "--t must be nonnegative");
    BigInt value(0);
    if (cfg.a >= 0 || cfg.b >= 0) {
        require(cfg.a >= 0 && cfg.b >= 0, "fat slices need both --a and --b");
        FatSliceSpec fat(cfg.a, cfg.b, c);
        value = fat_brute_count(fat, cfg.t);
        out["a"] = cfg.a;
        out["b"] = cfg.b;
    } else {
        require(cfg.k >= 0, "missing --k");
        value = brute_count(SliceSpec(cfg.k, c), cfg.t);
        out["k"] = cfg.k;
    }
    out["c"] = c.entries();
    out["t"] = cfg.t;
    out["count"] = value.to_string();
    emit(out, cfg);
    return 0;
}

int cmd_ehrhart(const JobConfig& cfg) {
    SliceSpec s = slice_of(cfg);
    RatPoly p = ehrhart_formula(s);
    json out;
    out["command"] = "ehrhart";
    out["k"] = s.k;
    out["c"] = s.c.entries();
    if (cfg.a >= 0) {
        out["fat_a"] = cfg.a;
        out["fat_b"] = cfg.b;
    }
    out["poly"] = to_json(p);
    out["degree"] = p.degree();
    out["text"] = p.to_string();
    emit(out, cfg);
    return 0;
}

int cmd_hstar(const JobConfig& cfg) {
    SliceSpec s = slice_of(cfg);
    IntPoly h = hstar_series(s);
    json out;
    out["command"] = "hstar";
    out["k"] = s.k;
    out["c"] = s.c.entries();
    out["poly"] = to_json(h);
    out["degree"] = h.degree();
    out["normalized_volume"] = h.evaluate(BigInt(1)).to_string();
    emit(out, cfg);
    return 0;
}

int cmd_volume(const JobConfig& cfg) {
    SliceSpec s = slice_of(cfg);
    json out;
    out["command"] = "volume";
    out["k"] = s.k;
    out["c"] = s.c.entries();
    out["volume"] = volume(s).to_string();
    out["normalized_volume"] = normalized_volume(s).to_string();
    emit(out, cfg);
    return 0;
}

int cmd_flag(const JobConfig& cfg) {
    CapVector c = caps_of(cfg);
    int n = static_cast<int>(c.n());
    require(cfg.n < 0 || cfg.n == n, "--n must match the length of --c");
    require(cfg.k >= 0, "missing --k");
    json out;
    out["command"] = "flag";
    out["n"] = n;
    out["k"] = cfg.k;
    out["c"] = c.entries();
    out["enum"] = flag_eulerian_enum(n, cfg.k, c).to_string();
    out["convolution"] = flag_eulerian_convolution(n, cfg.k, c).to_string();
    if (cfg.k < c.sum()) {
        out["via_volume"] = flag_eulerian_via_volume(n, cfg.k, c).to_string();
        json refinement = json::array();
        for (const auto& v : flag_eulerian_hstar_refinement(n, cfg.k, c))
            refinement.push_back(v.to_string());
        out["refinement"] = refinement;
    }
    emit(out, cfg);
    return 0;
}

int cmd_wperm(const JobConfig& cfg) {
    CapVector c = caps_of(cfg);
    int n = static_cast<int>(c.n());
    require(cfg.n < 0 || cfg.n == n, "--n must match the length of --c");
    require(cfg.m >= 1 && cfg.m <= n, "--m must be between 1 and n");
    int m = static_cast<int>(cfg.m);
    json out;
    out["command"] = "wperm";
    out["n"] = n;
    out["m"] = m;
    out["c"] = c.entries();
    if (cfg.ell >= 0) {
        out["ell"] = cfg.ell;
        out["count_enum"] = w_count_enum(cfg.ell, n, m, c).to_string();
        out["count_formula"] = w_count_formula(cfg.ell, n, m - 1, c).to_string();
        if (cfg.list_items) {
            json items = json::array();
            for_each_weighted(n, m, cfg.ell, c,
                              [&](const WeightedPermutation& p) { items.push_back(to_json(p)); });
            out["items"] = items;
        }
    } else {
        json strata = json::array();
        for (long long ell = 0; ell < c.sum(); ++ell) {
            json row;
            row["ell"] = ell;
            row["count_enum"] = w_count_enum(ell, n, m, c).to_string();
            row["count_formula"] = w_count_formula(ell, n, m - 1, c).to_string();
            strata.push_back(row);
        }
        out["strata"] = strata;
    }
    emit(out, cfg);
    return 0;
}

int cmd_verify(const JobConfig& cfg) {
    require(cfg.max_n >= 1 && cfg.max_c >= 1, "grid bounds must be at least 1");
    VerifyReport report;
    run_all_checks(VerifyBounds{cfg.max_n, cfg.max_c}, report);
    json out;
    out["command"] = "verify";
    out["max_n"] = cfg.max_n;
    out["max_c"] = cfg.max_c;
    json per_check;
    for (const auto& [name, tally] : report.by_check())
        per_check[name] = json{{"run", tally.first}, {"failed", tally.second}};
    out["checks"] = per_check;
    out["total"] = report.total();
    out["failed"] = report.failed();
    out["pass"] = report.all_pass();
    if (!report.all_pass()) {
        json failures = json::array();
        for (const auto& r : report.records())
            failures.push_back(json{{"check", r.check},
                                    {"instance", r.instance},
                                    {"expected", r.expected},
                                    {"actual", r.actual}});
        out["failures"] = failures;
    }
    emit(out, cfg);
    return report.all_pass() ? 0 : 1;
}

int cmd_scan(const JobConfig& cfg) {
    require(cfg.max_n >= 1 && cfg.max_c >= 1, "grid bounds must be at least 1");
    require(cfg.tol > 0, "--tol must be positive");
    ScanOptions opt;
    opt.max_n = cfg.max_n;
    opt.max_c = cfg.max_c;
    opt.tol = cfg.tol;
    if (!cfg.checks.empty()) opt.checks = cfg.checks;

    std::vector<json> existing;
    if (!cfg.out.empty()) {
        std::ifstream in(cfg.out);
        std::string line;
        while (in && std::getline(in, line)) {
            if (line.empty()) continue;
            existing.push_back(json::parse(line)); // malformed lines abort the run
        }
    }

    ScanSummary summary;
    if (!cfg.out.empty()) {
        std::ofstream records(cfg.out, std::ios::app);
        require(records.good(), "cannot open output file: " + cfg.out);
        summary = run_scan(opt, records, existing);
    } else {
        summary = run_scan(opt, std::cout, existing);
    }

    json report;
    report["command"] = "scan";
    report["max_n"] = cfg.max_n;
    report["max_c"] = cfg.max_c;
    report["tol"] = cfg.tol;
    report["total"] = summary.total;
    report["passed"] = summary.passed;
    report["failed"] = summary.failed;
    report["resumed"] = summary.resumed;
    if (!summary.failures.empty()) report["counterexamples"] = summary.failures;
    // keep stdout valid JSONL when records stream there; the summary goes to stderr
    std::ostream& sink = cfg.out.empty() ? std::cerr : std::cout;
    sink << report.dump(2) << "\n";
    return summary.failed == 0 ? 0 : 1;
}

int run(const JobConfig& cfg) {
    if (cfg.command == "count") return cmd_count(cfg);
    if (cfg.command == "ehrhart") return cmd_ehrhart(cfg);
    if (cfg.command == "hstar") return cmd_hstar(cfg);
    if (cfg.command == "volume") return cmd_volume(cfg);
    if (cfg.command == "flag") return cmd_flag(cfg);
    if (cfg.command == "wperm") return cmd_wperm(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "scan") return cmd_scan(cfg);
    throw std::invalid_argument("unknown command: " + cfg.command);
}

JobConfig config_from_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open config file: " + path);
    json obj = json::parse(in);
    JobConfig cfg;
    cfg.command = obj.value("command", std::string{});
    require(!cfg.command.empty(), "config file needs a \"command\" field");
    if (obj.contains("c")) cfg.c = obj["c"].get<std::vector<long long>>();
    cfg.k = obj.value("k", cfg.k);
    cfg.a = obj.value("a", cfg.a);
    cfg.b = obj.value("b", cfg.b);
    cfg.n = obj.value("n", cfg.n);
    cfg.m = obj.value("m", cfg.m);
    cfg.ell = obj.value("ell", cfg.ell);
    cfg.t = obj.value("t", cfg.t);
    cfg.max_n = obj.value("max_n", cfg.max_n);
    cfg.max_c = obj.value("max_c", cfg.max_c);
    cfg.tol = obj.value("tol", cfg.tol);
    cfg.out = obj.value("out", cfg.out);
    cfg.format = obj.value("format", cfg.format);
    if (obj.contains("checks")) cfg.checks = obj["checks"].get<std::vector<std::string>>();
    cfg.list_items = obj.value("list", cfg.list_items);
    return cfg;
}

void add_common(CLI::App* sub, JobConfig& cfg) {
    sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
    sub->add_option("--format", cfg.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
}

} // namespace

int main(int argc, char** argv) {
    JobConfig cfg;
    std::string config_path;

    CLI::App app{"exact lattice-point counting for hyperplane slices of boxes"};
    app.require_subcommand(0, 1);
    app.add_option("--config", config_path, "JSON config file mirroring the flag names");

    auto bind_slice = [&](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "hyperplane level");
        sub->add_option("--c", cfg.c, "caps, comma separated")->delimiter(',');
        sub->add_option("--a", cfg.a, "fat slice lower level");
        sub->add_option("--b", cfg.b, "fat slice upper level");
        add_common(sub, cfg);
    };

    CLI::App* count = app.add_subcommand("count", "lattice points of a dilated slice");
    bind_slice(count);
    count->add_option("--t", cfg.t, "dilation factor (default 1)");

    CLI::App* ehrhart = app.add_subcommand("ehrhart", "counting polynomial of a slice");
    bind_slice(ehrhart);

    CLI::App* hstar = app.add_subcommand("hstar", "series numerator of a slice");
    bind_slice(hstar);

    CLI::App* vol = app.add_subcommand("volume", "volume and normalized volume of a slice");
    bind_slice(vol);

    CLI::App* flag = app.add_subcommand("flag", "flag descent counts for colored permutations");
    flag->add_option("--n", cfg.n, "number of letters (defaults to the length of --c)");
    flag->add_option("--k", cfg.k, "flag descent value");
    flag->add_option("--c", cfg.c, "caps, comma separated")->delimiter(',');
    add_common(flag, cfg);

    CLI::App* wperm = app.add_subcommand("wperm", "weighted permutation strata");
    wperm->add_option("--n", cfg.n, "number of elements (defaults to the length of --c)");
    wperm->add_option("--m", cfg.m, "number of cycles");
    wperm->add_option("--ell", cfg.ell, "restrict to one total weight");
    wperm->add_option("--c", cfg.c, "caps, comma separated")->delimiter(',');
    wperm->add_flag("--list", cfg.list_items, "list the stratum members (needs --ell)");
    add_common(wperm, cfg);

    CLI::App* verify = app.add_subcommand("verify", "run the full cross-check battery");
    verify->add_option("--max-n", cfg.max_n, "grid bound on the dimension");
    verify->add_option("--max-c", cfg.max_c, "grid bound on the cap entries");
    add_common(verify, cfg);

    CLI::App* scan = app.add_subcommand("scan", "conjecture scans, one JSONL record per instance");
    scan->add_option("--max-n", cfg.max_n, "grid bound on the dimension");
    scan->add_option("--max-c", cfg.max_c, "grid bound on the cap entries");
    scan->add_option("--tol", cfg.tol, "unit-circle tolerance (default 1e-9)");
    scan->add_option("--check", cfg.checks, "subset of checks to run")
        ->check(CLI::IsMember({"unit_circle", "real_rooted", "interlace"}));
    add_common(scan, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            return run(config_from_file(config_path));
        }
        if (count->parsed()) cfg.command = "count";
        else if (ehrhart->parsed()) cfg.command = "ehrhart";
        else if (hstar->parsed()) cfg.command = "hstar";
        else if (vol->parsed()) cfg.command = "volume";
        else if (flag->parsed()) cfg.command = "flag";
        else if (wperm->parsed()) cfg.command = "wperm";
        else if (verify->parsed()) cfg.command = "verify";
        else if (scan->parsed()) cfg.command = "scan";
        else {
            std::cerr << app.help() << std::flush;
            return 2;
        }
        return run(cfg);
    } catch (const prismslice::model_violation& e) {
        json err;
        err["error"] = "model violation";
        err["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err;
        err["error"] = "usage";
        err["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
}
