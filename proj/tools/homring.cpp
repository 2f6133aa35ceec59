// homring: command-line front-end for the ring, trace, weight, code and graph
// analyses and the reproduction suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 other,
// 10 + ErrorKind for library errors (see `homring --help`).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "homring/report.hpp"

namespace {

using namespace homring;

struct Flags {
    std::string config_path;
    std::string ring, subring, trace, f, gamma, weight, format, budget, seed;
    bool timing = false;
};

void add_job_flags(CLI::App* cmd, Flags& fl) {
    cmd->add_option("--config", fl.config_path, "key=value config file; flags override it");
    cmd->add_option("--ring", fl.ring, "Zm:<m> | GR:<p>,<n>,<r> | FXY:<p> | Z4X");
    cmd->add_option("--subring", fl.subring, "subring S (default: the ring itself)");
    cmd->add_option("--trace", fl.trace, "galois | identity | fxy-sum | z4x:<l0>,<l1> | table:<path>");
    cmd->add_option("--f", fl.f, "pow:<d> | frank:<perm|id|rand:SEED> | sigmaquad:<frobenius|swapxy> | table:<path>");
    cmd->add_option("--gamma", fl.gamma, "average weight, e.g. 1, 1/2 or hamming-normalized");
    cmd->add_option("--weight", fl.weight, "homogeneous | hamming");
    cmd->add_option("--format", fl.format, "json | csv");
    cmd->add_option("--budget", fl.budget, "largest ring order for exhaustive code enumeration");
    cmd->add_option("--seed", fl.seed, "seed recorded in the report");
    cmd->add_flag("--timing", fl.timing, "print wall time to stderr");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::IoError, "cannot open config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

JobConfig config_from(const Flags& fl) {
    std::string text;
    if (!fl.config_path.empty()) text = read_file(fl.config_path) + "\n";
    auto put = [&](const char* key, const std::string& v) {
        if (!v.empty()) text += std::string(key) + "=" + v + "\n";
    };
    put("ring", fl.ring);
    put("subring", fl.subring);
    put("trace", fl.trace);
    put("f", fl.f);
    put("gamma", fl.gamma);
    put("weight", fl.weight);
    put("format", fl.format);
    put("budget", fl.budget);
    put("seed", fl.seed);
    return parse_config(text);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string exit_code_help() {
    std::string s = "Exit codes:\n  0  success\n  1  verification failure\n  2  usage error\n  3  unexpected error\n";
    for (int k = 0; k <= static_cast<int>(ErrorKind::IoError); ++k) {
        const auto kind = static_cast<ErrorKind>(k);
        s += "  " + std::to_string(exit_code(kind)) + " " + std::string(to_string(kind)) + "\n";
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homogeneous weights, trace codes and two-weight graphs over finite rings"};
    app.footer(exit_code_help());
    app.require_subcommand(1);
    Flags fl;

    auto* ring = app.add_subcommand("ring", "ring structure");
    auto* ring_info = ring->add_subcommand("info", "units, radical, socle and Teichmüller set");
    add_job_flags(ring_info, fl);
    ring->require_subcommand(1);

    auto* trace = app.add_subcommand("trace", "trace maps R -> S");
    auto* trace_list = trace->add_subcommand("list", "enumerate every trace map");
    auto* trace_check = trace->add_subcommand("check", "validate the configured trace map");
    add_job_flags(trace_list, fl);
    add_job_flags(trace_check, fl);
    trace->require_subcommand(1);

    auto* weight = app.add_subcommand("weight", "homogeneous weights");
    auto* weight_table = weight->add_subcommand("table", "weight of every element of S");
    add_job_flags(weight_table, fl);
    weight->require_subcommand(1);

    auto* code = app.add_subcommand("code", "subring subcodes C_{f,S}");
    auto* code_analyze = code->add_subcommand("analyze", "size, spectrum and weight enumerator");
    auto* code_graph = code->add_subcommand("graph", "two-weight graph, strong regularity and modularity");
    add_job_flags(code_analyze, fl);
    add_job_flags(code_graph, fl);
    code->require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "reproduction suite");
    auto* verify_paper_cmd = verify->add_subcommand("paper", "run every acceptance criterion");
    int only = 0;
    std::string verify_format = "text";
    verify_paper_cmd->add_option("--only", only, "run a single criterion")->check(CLI::Range(1, kCriteriaCount));
    verify_paper_cmd->add_option("--format", verify_format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (verify_paper_cmd->parsed()) {
            std::vector<VerifyRecord> records;
            if (only)
                records.push_back(run_criterion(only));
            else
                records = verify_paper();
            if (verify_format == "json") {
                emit(verify_report(records));
            } else if (verify_format == "csv") {
                std::cout << "id,pass,informational,name\n";
                for (const auto& r : records)
                    std::cout << r.id << "," << (r.pass ? "true" : "false") << ","
                              << (r.informational ? "true" : "false") << ",\"" << r.name << "\"\n";
            } else {
                for (const auto& r : records)
                    std::cout << (r.pass ? "PASS" : "FAIL") << (r.informational ? " (informational)" : "") << "  ["
                              << r.id << "] " << r.name << "\n      expected: " << r.expected
                              << "\n      computed: " << r.computed << "\n";
            }
            rc = suite_passes(records) ? 0 : 1;
        } else {
            const JobConfig cfg = config_from(fl);
            const bool csv = cfg.format == "csv";
            if (ring_info->parsed()) {
                emit(ring_info_report(*parse_ring(cfg.ring)));
            } else if (trace_list->parsed()) {
                emit(trace_list_report(parse_ring(cfg.ring), parse_ring(cfg.subring_spec())));
            } else if (trace_check->parsed()) {
                const auto j = trace_check_report(cfg);
                emit(j);
                rc = j["valid"].get<bool>() ? 0 : 1;
            } else {
                const Job job = build_job(cfg);
                if (weight_table->parsed()) {
                    const auto wt = job_weight(job);
                    if (csv)
                        std::cout << weight_table_csv(wt);
                    else
                        emit(weight_table_report(wt));
                } else if (code_analyze->parsed()) {
                    if (csv)
                        std::cout << analyze_csv(job);
                    else
                        emit(analyze_report(job));
                } else if (code_graph->parsed()) {
                    emit(graph_report(job));
                }
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 3;
    }
    if (fl.timing) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "time: " << secs << " s\n";
    }
    return rc;
}
