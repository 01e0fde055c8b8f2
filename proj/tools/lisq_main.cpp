// lisq command-line front end.  Talks to the shared library through the C
// API only; all exact counts flow through as decimal strings.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lisq.h"

using nlohmann::json;

namespace {

// 0 pass, 1 verdict failure, 2 usage error, 3 internal/solver error.
enum ExitCode { kPass = 0, kVerdictFail = 1, kUsage = 2, kInternal = 3 };

struct NRange {
    int lo = 0, hi = 0;
};

bool parse_range(const std::string& s, NRange& out) {
    const auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            out.lo = out.hi = std::stoi(s);
        } else {
            out.lo = std::stoi(s.substr(0, pos));
            out.hi = std::stoi(s.substr(pos + 2));
        }
    } catch (...) {
        return false;
    }
    return out.lo >= 1 && out.hi >= out.lo;
}

struct Output {
    std::string format = "csv";
    std::string path;

    // Rows are built as JSON objects; CSV rendering uses the same payload.
    std::vector<std::string> columns;
    json rows = json::array();

    void add(json row) { rows.push_back(std::move(row)); }

    int emit() const {
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!path.empty()) {
            file.open(path);
            if (!file) {
                std::cerr << "error: cannot open " << path << "\n";
                return kInternal;
            }
            os = &file;
        }
        if (format == "json") {
            *os << rows.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < columns.size(); ++i)
                *os << (i ? "," : "") << columns[i];
            *os << "\n";
            for (const auto& row : rows) {
                for (size_t i = 0; i < columns.size(); ++i) {
                    const auto& v = row.at(columns[i]);
                    *os << (i ? "," : "");
                    if (v.is_string())
                        *os << v.get<std::string>();
                    else
                        *os << v.dump();
                }
                *os << "\n";
            }
        }
        return kPass;
    }
};

int fail_status(lisq_status st, const std::string& what) {
    std::cerr << "error: " << what << ": " << lisq_status_message(st) << "\n";
    return st == LISQ_EINVAL || st == LISQ_ELIMIT ? kUsage : kInternal;
}

using SeqPtr = std::unique_ptr<lisq_seq, decltype(&lisq_seq_free)>;

int compute_seq(const std::string& stat, const std::string& family, int n, int jobs, SeqPtr& out) {
    lisq_seq* raw = nullptr;
    const lisq_status st = lisq_seq_compute(stat.c_str(), family.c_str(), n, jobs, &raw);
    if (st != LISQ_OK) return fail_status(st, "seq " + stat + "/" + family + " n=" + std::to_string(n));
    out = SeqPtr(raw, &lisq_seq_free);
    return kPass;
}

std::string seq_value(const lisq_seq* seq, int k) {
    char* s = lisq_seq_value(seq, k);
    std::string out = s ? s : "";
    lisq_string_free(s);
    return out;
}

int run_seq(const std::string& stat, const std::string& family, NRange nr, int jobs, Output& out) {
    out.columns = {"n", "k", "value"};
    for (int n = nr.lo; n <= nr.hi; ++n) {
        SeqPtr seq(nullptr, &lisq_seq_free);
        if (int rc = compute_seq(stat, family, n, jobs, seq)) return rc;
        for (int k = 1; k <= n; ++k)
            out.add({{"n", n}, {"k", k}, {"value", seq_value(seq.get(), k)}});
    }
    return out.emit();
}

int run_check(const std::string& kind, const std::string& stat, const std::string& family,
              NRange nr, int max_iter, int jobs, Output& out) {
    bool all_pass = true;
    if (kind == "qlogconvex") {
        out.columns = {"triple", "verdict", "fail_power"};
        for (int n = nr.lo + 1; n <= nr.hi - 1; ++n) {
            int ok = 0, power = 0;
            const lisq_status st =
                lisq_qlogconvex_triple(stat.c_str(), family.c_str(), n, jobs, &ok, &power);
            if (st != LISQ_OK) return fail_status(st, "qlogconvex n=" + std::to_string(n));
            all_pass = all_pass && ok;
            out.add({{"triple", std::to_string(n - 1) + "," + std::to_string(n) + "," +
                                    std::to_string(n + 1)},
                     {"verdict", ok ? "pass" : "fail"},
                     {"fail_power", ok ? json(nullptr) : json(power)}});
        }
    } else if (kind == "realrooted") {
        out.columns = {"n", "verdict", "real_roots"};
        for (int n = nr.lo; n <= nr.hi; ++n) {
            int rooted = 0, count = 0;
            const lisq_status st =
                lisq_real_rooted(stat.c_str(), family.c_str(), n, jobs, &rooted, &count);
            if (st != LISQ_OK) return fail_status(st, "realrooted n=" + std::to_string(n));
            all_pass = all_pass && rooted;
            out.add({{"n", n}, {"verdict", rooted ? "pass" : "fail"}, {"real_roots", count}});
        }
    } else {
        out.columns = {"n", "verdict", "iteration", "k"};
        for (int n = nr.lo; n <= nr.hi; ++n) {
            SeqPtr seq(nullptr, &lisq_seq_free);
            if (int rc = compute_seq(stat, family, n, jobs, seq)) return rc;
            if (kind == "logconcave") {
                int ok = 0, k = 0;
                lisq_seq_log_concave(seq.get(), &ok, &k);
                all_pass = all_pass && ok;
                out.add({{"n", n},
                         {"verdict", ok ? "pass" : "fail"},
                         {"iteration", json(nullptr)},
                         {"k", ok ? json(nullptr) : json(k)}});
            } else {  // infinite
                int verdict = 0, iter = 0, k = 0;
                const lisq_status st =
                    lisq_seq_certify_infinite(seq.get(), max_iter, &verdict, &iter, &k);
                if (st != LISQ_OK) return fail_status(st, "infinite n=" + std::to_string(n));
                const char* name = verdict == 0 ? "Certified"
                                   : verdict == 1 ? "FailedAt"
                                                  : "Inconclusive";
                all_pass = all_pass && verdict == 0;
                out.add({{"n", n},
                         {"verdict", name},
                         {"iteration", iter},
                         {"k", verdict == 1 ? json(k) : json(nullptr)}});
            }
        }
    }
    if (int rc = out.emit()) return rc;
    return all_pass ? kPass : kVerdictFail;
}

int run_inject(const std::string& family, NRange nr, Output& out) {
    out.columns = {"n", "k", "domain", "image", "collisions", "codomain_violations", "verdict"};
    bool all_clean = true;
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (int k = 1; k <= n; ++k) {
            lisq_inject_report rep;
            const lisq_status st = lisq_inject_verify(family.c_str(), n, k, &rep);
            if (st != LISQ_OK) return fail_status(st, "inject n=" + std::to_string(n));
            const bool clean = rep.collisions == 0 && rep.codomain_violations == 0;
            all_clean = all_clean && clean;
            out.add({{"n", n},
                     {"k", k},
                     {"domain", rep.domain_size},
                     {"image", rep.image_size},
                     {"collisions", rep.collisions},
                     {"codomain_violations", rep.codomain_violations},
                     {"verdict", clean ? "clean" : "dirty"}});
        }
    }
    if (int rc = out.emit()) return rc;
    return all_clean ? kPass : kVerdictFail;
}

int run_tw(double x0, double xmin, double tol, double dx, const std::string& table_path) {
    lisq_tw* raw = nullptr;
    lisq_status st = lisq_tw_build(x0, xmin, tol, &raw);
    if (st != LISQ_OK) return fail_status(st, "tw build");
    std::unique_ptr<lisq_tw, decltype(&lisq_tw_free)> tw(raw, &lisq_tw_free);

    double lo = 0, hi = 0;
    int truncated = 0;
    lisq_tw_range(tw.get(), &lo, &hi, &truncated);
    if (truncated) {
        std::cerr << "error: solver truncated at x=" << lo << " before reaching " << xmin << "\n";
        return kInternal;
    }
    if (!table_path.empty()) {
        st = lisq_tw_write_csv(tw.get(), table_path.c_str(), dx);
        if (st != LISQ_OK) return fail_status(st, "tw csv");
    }

    json summary;
    double mean = 0, var = 0;
    st = lisq_tw_moments(tw.get(), &mean, &var);
    if (st != LISQ_OK) return fail_status(st, "tw moments");
    double residual = 0;
    lisq_tw_max_residual(tw.get(), std::max(lo, -8.0), std::min(hi, 8.0), &residual);
    double scan_max = 0, scan_arg = 0;
    lisq_tw_scan_max(tw.get(), 0.0, hi, &scan_max, &scan_arg);
    summary["mean"] = mean;
    summary["variance"] = var;
    summary["max_residual"] = residual;
    summary["log_concave_on_nonneg"] = scan_max < 0;
    summary["scan_max"] = scan_max;
    summary["scan_argmax"] = scan_arg;
    summary["range"] = {lo, hi};
    std::cout << summary.dump(2) << "\n";
    return scan_max < 0 ? kPass : kVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longest-increasing-subsequence distributions and log-concavity checks"};
    app.require_subcommand(1);

    std::string stat = "ell", family = "all", nspec = "1", format = "csv", out_path;
    int max_iter = 100, jobs = 0;

    auto add_common = [&](CLI::App* cmd, bool with_stat) {
        if (with_stat) {
            cmd->add_option("--stat", stat, "statistic: ell or inv");
            cmd->add_option("--family", family, "all|hook|2row|ecol|dhook|d2row|skm");
        } else {
            cmd->add_option("--family", family, "hook|2row|lift");
        }
        cmd->add_option("--n", nspec, "size or range A..B")->required();
        cmd->add_option("--format", format, "csv or json");
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_option("--jobs", jobs, "worker threads for shape sums");
    };

    auto* seq_cmd = app.add_subcommand("seq", "emit a count sequence");
    add_common(seq_cmd, true);

    auto* check_cmd = app.add_subcommand("check", "run a log-concavity style check");
    std::string check_kind;
    check_cmd->add_option("kind", check_kind, "logconcave|infinite|qlogconvex|realrooted")
        ->required();
    add_common(check_cmd, true);
    check_cmd->add_option("--max-iter", max_iter, "L-operator iteration cap");

    auto* inject_cmd = app.add_subcommand("inject", "exhaustively verify an injection");
    add_common(inject_cmd, false);

    auto* tw_cmd = app.add_subcommand("tw", "tabulate the Tracy-Widom distribution");
    double x0 = 8.0, xmin = -10.0, tol = 1e-10, dx = 0.01;
    tw_cmd->add_option("--x0", x0, "Airy seed abscissa");
    tw_cmd->add_option("--xmin", xmin, "left end of the tabulation");
    tw_cmd->add_option("--tol", tol, "local error tolerance");
    tw_cmd->add_option("--dx", dx, "CSV grid spacing");
    tw_cmd->add_option("--out", out_path, "CSV table path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    NRange nr;
    if (!app.got_subcommand(tw_cmd) && !parse_range(nspec, nr)) {
        std::cerr << "error: bad --n range '" << nspec << "'\n";
        return kUsage;
    }
    if (format != "csv" && format != "json") {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kUsage;
    }

    Output out;
    out.format = format;
    out.path = out_path;

    if (app.got_subcommand(seq_cmd)) return run_seq(stat, family, nr, jobs, out);
    if (app.got_subcommand(check_cmd)) {
        if (check_kind != "logconcave" && check_kind != "infinite" && check_kind != "qlogconvex" &&
            check_kind != "realrooted") {
            std::cerr << "error: unknown check '" << check_kind << "'\n";
            return kUsage;
        }
        return run_check(check_kind, stat, family, nr, max_iter, jobs, out);
    }
    if (app.got_subcommand(inject_cmd)) {
        if (family == "all") family = "hook";
        return run_inject(family, nr, out);
    }
    return run_tw(x0, xmin, tol, dx, out_path);
}
