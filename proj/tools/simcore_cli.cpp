// Command-line front end for libsimcore.  Everything mathematical happens
// behind the C API; this file only parses flags and prints.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "simcore.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // counterexample or invariant failure
constexpr int kExitUsage = 2;

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { simcore_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

struct OwnedPartition {
    simcore_partition* p = nullptr;
    ~OwnedPartition() { simcore_partition_free(p); }
};

int status_to_exit(simcore_status st) {
    switch (st) {
        case SIMCORE_OK: return kExitOk;
        case SIMCORE_ERR_INTERNAL:
        case SIMCORE_ERR_OVERFLOW: return kExitFailure;
        default: return kExitUsage;
    }
}

int report_error(simcore_status st) {
    std::cerr << "error: " << simcore_last_error() << "\n";
    return status_to_exit(st);
}

int run_cores_list(long long a, long long b, bool self_conj, bool with_stats,
                   const std::string& format) {
    OwnedString out;
    simcore_status st = simcore_cores_list(a, b, self_conj ? 1 : 0, with_stats ? 1 : 0,
                                           format.c_str(), &out.s);
    if (st != SIMCORE_OK) return report_error(st);
    std::cout << out.s;
    if (format == "json") std::cout << "\n";
    return kExitOk;
}

int run_cores_count(long long a, long long b, bool self_conj) {
    int64_t formula = 0, enumerated = 0;
    simcore_status st = simcore_cores_count(a, b, self_conj ? 1 : 0, &formula, &enumerated);
    if (st != SIMCORE_OK) return report_error(st);
    std::cout << "formula    " << formula << "\n";
    std::cout << "enumerated " << enumerated << "\n";
    if (formula != enumerated) {
        std::cerr << "error: enumerated count disagrees with the closed formula\n";
        return kExitFailure;
    }
    return kExitOk;
}

int run_cores_reduce(const std::string& partition, long long a) {
    OwnedPartition p;
    simcore_status st = simcore_partition_parse(partition.c_str(), &p.p);
    if (st != SIMCORE_OK) return report_error(st);
    OwnedPartition reduced;
    st = simcore_partition_core_reduce(p.p, a, &reduced.p);
    if (st != SIMCORE_OK) return report_error(st);
    OwnedString out;
    st = simcore_partition_json(reduced.p, &out.s);
    if (st != SIMCORE_OK) return report_error(st);
    std::cout << out.s << "\n";
    return kExitOk;
}

int run_qcat(long long a, long long b, bool has_eval, long long q0) {
    if (has_eval) {
        int64_t v = 0;
        simcore_status st = simcore_qcatalan_eval(a, b, q0, &v);
        if (st != SIMCORE_OK) return report_error(st);
        std::cout << v << "\n";
        return kExitOk;
    }
    OwnedString out;
    simcore_status st = simcore_qcatalan_json(a, b, &out.s);
    if (st != SIMCORE_OK) return report_error(st);
    std::cout << out.s << "\n";
    return kExitOk;
}

int run_stats(const std::string& partition, long long a, long long b) {
    OwnedPartition p;
    simcore_status st = simcore_partition_parse(partition.c_str(), &p.p);
    if (st != SIMCORE_OK) return report_error(st);
    OwnedString out;
    st = simcore_partition_stats_json(p.p, a, b, &out.s);
    if (st != SIMCORE_OK) return report_error(st);
    std::cout << out.s << "\n";
    return kExitOk;
}

int run_shi_alcoves(const std::string& family, int rank, int m, const std::string& which,
                    const std::string& format) {
    OwnedString out;
    simcore_status st = simcore_shi_alcoves(family.empty() ? '?' : family[0], rank, m,
                                            which.c_str(), format.c_str(), &out.s);
    if (st != SIMCORE_OK) return report_error(st);
    std::cout << out.s;
    if (format == "json") std::cout << "\n";
    return kExitOk;
}

int run_shi_coords(const std::string& family, int rank, const std::string& window) {
    OwnedString out;
    simcore_status st =
        simcore_shi_coords(family.empty() ? '?' : family[0], rank, window.c_str(), &out.s);
    if (st != SIMCORE_OK) return report_error(st);
    std::cout << out.s << "\n";
    return kExitOk;
}

int run_verify(const std::string& claim, int max_ab, int max_n, int max_m,
               const std::string& report_file) {
    OwnedString out;
    int all_ok = 0;
    simcore_status st = simcore_verify(claim.c_str(), max_ab, max_n, max_m, &all_ok, &out.s);
    if (st != SIMCORE_OK) return report_error(st);
    nlohmann::json reports = nlohmann::json::parse(out.str());
    for (const auto& r : reports) {
        std::string claim_name = r.at("claim").get<std::string>();
        std::string status = r.at("status").get<std::string>();
        std::printf("%-14s %-24s %s  (%lld ms)\n", claim_name.c_str(),
                    r.at("params").dump().c_str(), status.c_str(),
                    static_cast<long long>(r.at("elapsed_ms").get<int64_t>()));
        if (r.contains("witness"))
            std::printf("  witness: %s\n", r.at("witness").dump().c_str());
    }
    if (!report_file.empty()) {
        std::ofstream f(report_file);
        if (!f) {
            std::cerr << "error: cannot write report to " << report_file << "\n";
            return kExitUsage;
        }
        f << out.s << "\n";
    }
    return all_ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simultaneous core partitions, abacus diagrams, q-Catalan polynomials, "
                 "and Shi-arrangement alcoves"};
    app.require_subcommand(1);

    // cores
    CLI::App* cores = app.add_subcommand("cores", "enumerate and reduce core partitions");
    cores->require_subcommand(1);

    long long a = 0, b = 0;
    bool self_conj = false, with_stats = false;
    std::string format = "json";
    CLI::App* list = cores->add_subcommand("list", "list an (a,b)-core family");
    list->add_option("--a", a, "first core parameter")->required();
    list->add_option("--b", b, "second core parameter")->required();
    list->add_flag("--self-conjugate", self_conj, "restrict to self-conjugate cores");
    list->add_flag("--stats", with_stats, "include ell/sl/maj statistics");
    list->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    long long ca = 0, cb = 0;
    bool c_self_conj = false;
    CLI::App* count = cores->add_subcommand("count", "closed-formula and enumerated counts");
    count->add_option("--a", ca, "first core parameter")->required();
    count->add_option("--b", cb, "second core parameter")->required();
    count->add_flag("--self-conjugate", c_self_conj, "count self-conjugate cores");

    std::string reduce_partition;
    long long reduce_a = 0;
    CLI::App* reduce = cores->add_subcommand("reduce", "a-core of a partition");
    reduce->add_option("--partition", reduce_partition, "comma-separated parts")->required();
    reduce->add_option("--a", reduce_a, "hook length to strip")->required();

    // qcat
    long long qa = 0, qb = 0, q0 = 0;
    CLI::App* qcat = app.add_subcommand("qcat", "rational q-Catalan polynomial Cat_q(a,b)");
    qcat->add_option("--a", qa, "first parameter")->required();
    qcat->add_option("--b", qb, "second parameter")->required();
    CLI::Option* eval_opt = qcat->add_option("--eval", q0, "evaluate at an integer q");

    // stats
    std::string stats_partition;
    long long sa = 0, sb = 0;
    CLI::App* stats = app.add_subcommand("stats", "length, skew length and major index");
    stats->add_option("--partition", stats_partition, "comma-separated parts")->required();
    stats->add_option("--a", sa, "first core parameter")->required();
    stats->add_option("--b", sb, "second core parameter")->required();

    // shi
    CLI::App* shi = app.add_subcommand("shi", "dominant alcoves of the m-Shi arrangement");
    shi->require_subcommand(1);

    std::string family;
    int rank = 0, m = 1;
    bool want_minimal = false, want_bounded = false;
    std::string shi_format = "text";
    CLI::App* alcoves = shi->add_subcommand("alcoves", "m-minimal / m-bounded alcoves");
    alcoves->add_option("--family", family, "A or C")->required();
    alcoves->add_option("--rank", rank, "rank n")->required();
    alcoves->add_option("--m", m, "Shi parameter m")->required();
    CLI::Option* flag_min = alcoves->add_flag("--minimal", want_minimal, "minimal alcoves");
    CLI::Option* flag_bound = alcoves->add_flag("--bounded", want_bounded, "bounded alcoves");
    flag_min->excludes(flag_bound);
    alcoves->add_option("--format", shi_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string coords_family, window;
    int coords_rank = 0;
    CLI::App* coords = shi->add_subcommand("coords", "Shi coordinates and right descents");
    coords->add_option("--family", coords_family, "A or C")->required();
    coords->add_option("--rank", coords_rank, "rank n")->required();
    coords->add_option("--window", window, "comma-separated window entries")->required();

    // verify
    std::string claim;
    int max_ab = -1, max_n = -1, max_m = -1;
    std::string report_file;
    CLI::App* verify = app.add_subcommand("verify", "run the verification harness");
    verify->add_option("claim", claim, "all|counts|avg|max|maj|skew|qt|sieving|shi")
        ->required()
        ->check(CLI::IsMember({"all", "counts", "avg", "max", "maj", "skew", "qt", "sieving",
                               "shi"}));
    verify->add_option("--max-ab", max_ab, "grid bound for a < b pairs");
    verify->add_option("--max-n", max_n, "grid bound for n (maj) or rank (shi)");
    verify->add_option("--max-m", max_m, "grid bound for the Shi parameter m");
    verify->add_option("--report", report_file, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (list->parsed()) return run_cores_list(a, b, self_conj, with_stats, format);
    if (count->parsed()) return run_cores_count(ca, cb, c_self_conj);
    if (reduce->parsed()) return run_cores_reduce(reduce_partition, reduce_a);
    if (qcat->parsed()) return run_qcat(qa, qb, eval_opt->count() > 0, q0);
    if (stats->parsed()) return run_stats(stats_partition, sa, sb);
    if (alcoves->parsed()) {
        std::string which = want_bounded ? "bounded" : "minimal";
        if (!want_minimal && !want_bounded) which = "minimal";
        return run_shi_alcoves(family, rank, m, which, shi_format);
    }
    if (coords->parsed()) return run_shi_coords(coords_family, coords_rank, window);
    if (verify->parsed()) return run_verify(claim, max_ab, max_n, max_m, report_file);
    return kExitUsage;
}
