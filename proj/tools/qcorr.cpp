// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qcorr command-line front end.
//
//   qcorr [--seed N] [--restarts N] [--tol X] <subcommand> ...
//
//   q       <state.json> [--out result.json] [--json]
//   sweep   --family werner|isotropic --m M [--start a --stop b --steps k] --out rows.csv
//   verify  [--count N]
//   report  [--out report.json]
//   state   --family werner|isotropic|bell_diagonal [--m M] [--param p] [--c c1 c2 c3] --out f.json
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qcorr/io.hpp"
#include "qcorr/qopt.hpp"
#include "qcorr/report.hpp"
#include "qcorr/sweep.hpp"
#include "qcorr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct GlobalFlags {
    std::uint64_t seed = 0;
    std::size_t restarts = 0;  // 0: per-dimension default
    double tol = 1e-9;
};

qcorr::OptimizerConfig make_config(const GlobalFlags& g, Eigen::Index dim_a) {
    auto cfg = qcorr::OptimizerConfig::defaults_for(dim_a, g.seed);
    if (g.restarts > 0) cfg.restarts = g.restarts;
    cfg.convergence_tol = g.tol;
    return cfg;
}

std::string q_result_json(const qcorr::QResult& r) {
    using qcorr::io::format_double;
    std::ostringstream os;
    os << "{\n  \"value\": " << format_double(r.value)
       << ",\n  \"argmax\": " << qcorr::io::matrix_json(r.argmax.basis())
       << ",\n  \"argmax_dim\": " << r.argmax.dim() << ",\n  \"per_restart_values\": [";
    for (std::size_t i = 0; i < r.per_restart_values.size(); ++i) {
        os << (i ? ", " : "") << format_double(r.per_restart_values[i]);
    }
    os << "],\n  \"converged\": " << (r.converged ? "true" : "false")
       << ",\n  \"evaluations\": " << r.evaluations << "\n}\n";
    return os.str();
}

int cmd_q(const GlobalFlags& g, const std::string& path, const std::string& out, bool json) {
    const auto state = qcorr::io::load_state(path);
    const auto result = qcorr::q_numeric(state, make_config(g, state.dim_a()));
    const std::string doc = q_result_json(result);
    if (!out.empty()) qcorr::io::write_file(out, doc);
    if (json) {
        std::cout << doc;
        return kExitOk;
    }
    std::cout << "Q = " << qcorr::io::format_double(result.value) << '\n'
              << "restarts = " << result.per_restart_values.size()
              << ", converged = " << (result.converged ? "yes" : "no")
              << ", evaluations = " << result.evaluations << '\n'
              << "argmax basis (columns are measurement vectors):\n"
              << result.argmax.basis() << '\n';
    return kExitOk;
}

qcorr::states::Family parse_family(const std::string& name) {
    static const std::map<std::string, qcorr::states::Family> table = {
        {"werner", qcorr::states::Family::werner},
        {"isotropic", qcorr::states::Family::isotropic},
        {"bell_diagonal", qcorr::states::Family::bell_diagonal},
    };
    const auto it = table.find(name);
    if (it == table.end()) throw qcorr::ParameterError("unknown family '" + name + "'");
    return it->second;
}

int cmd_sweep(const GlobalFlags& g, const std::string& family, long m,
              const qcorr::sweep::Grid& grid, const std::string& out) {
    const auto fam = parse_family(family);
    const auto rows = qcorr::sweep::run(fam, m, grid, make_config(g, m));
    const std::string csv = qcorr::sweep::to_csv(rows);
    if (out.empty() || out == "-") {
        std::cout << csv;
    } else {
        qcorr::io::write_file(out, csv);
    }
    return kExitOk;
}

int cmd_verify(const GlobalFlags& g, int count) {
    qcorr::verify::Options opt;
    opt.seed = g.seed;
    opt.count = count;
    opt.restarts = g.restarts;
    const auto summary = qcorr::verify::run(opt);
    std::cout << summary.transcript();
    if (const auto* fail = summary.first_failure()) {
        std::cerr << "verification failed: " << fail->name << '\n';
        return kExitVerifyFailed;
    }
    std::cout << "all " << summary.checks.size() << " invariant checks passed\n";
    return kExitOk;
}

int cmd_report(const GlobalFlags& g, const std::string& out) {
    const auto entries = qcorr::report::build(g.seed, g.restarts);
    if (!out.empty()) qcorr::io::write_file(out, qcorr::report::to_json(entries));
    qcorr::report::write_table(std::cout, entries);
    return kExitOk;
}

int cmd_state(const std::string& family, long m, double param, const std::vector<double>& c,
              const std::string& out) {
    qcorr::states::FamilyParams fp;
    fp.family = parse_family(family);
    fp.m = m;
    fp.param = param;
    if (fp.family == qcorr::states::Family::bell_diagonal) {
        if (c.size() != 3) throw qcorr::ParameterError("bell_diagonal needs --c c1 c2 c3");
        fp.c = {c[0], c[1], c[2]};
    }
    const auto state = qcorr::states::make_family(fp);
    if (out.empty() || out == "-") {
        std::cout << qcorr::io::write_state(state);
    } else {
        qcorr::io::save_state(out, state);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Averaged-distance quantum correlation toolkit"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--seed", g.seed, "Seed for every random stream")->capture_default_str();
    app.add_option("--restarts", g.restarts, "Optimizer restarts (0 = 32 for m<=3, 64 otherwise)")
        ->capture_default_str();
    app.add_option("--tol", g.tol, "Optimizer convergence tolerance on objective improvement")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string out;

    auto* q = app.add_subcommand("q", "Compute Q for a state file");
    std::string state_path;
    bool json = false;
    q->add_option("state", state_path, "State file")->required();
    q->add_option("--out", out, "Write the machine-readable result here");
    q->add_flag("--json", json, "Print the machine-readable result instead of the summary");

    auto* sw = app.add_subcommand("sweep", "Tabulate a Werner or isotropic family as CSV");
    std::string family;
    long m = 2;
    qcorr::sweep::Grid grid;
    sw->add_option("--family", family, "werner or isotropic")->required();
    sw->add_option("--m", m, "Local dimension")->check(CLI::Range(2L, 64L));
    sw->add_option("--start", grid.start)->capture_default_str();
    sw->add_option("--stop", grid.stop)->capture_default_str();
    sw->add_option("--steps", grid.steps, "Number of grid intervals")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sw->add_option("--out", out, "CSV output path ('-' for stdout)");

    auto* ver = app.add_subcommand("verify", "Run the randomized invariant suite");
    int count = 20;
    ver->add_option("--count", count, "Random instances per check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* rep = app.add_subcommand("report", "Audit closed forms against the numeric optimizer");
    rep->add_option("--out", out, "Structured report output path");

    auto* st = app.add_subcommand("state", "Write a family state file");
    double param = 0.0;
    std::vector<double> c;
    st->add_option("--family", family, "werner, isotropic or bell_diagonal")->required();
    st->add_option("--m", m, "Local dimension")->check(CLI::Range(2L, 64L));
    st->add_option("--param", param, "x (Werner) or y (isotropic)");
    st->add_option("--c", c, "Bell-diagonal correlations c1 c2 c3")->expected(3);
    st->add_option("--out", out, "Output path ('-' for stdout)");

    for (auto* sub : {q, sw, ver, rep, st}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*q) return cmd_q(g, state_path, out, json);
        if (*sw) return cmd_sweep(g, family, m, grid, out);
        if (*ver) return cmd_verify(g, count);
        if (*rep) return cmd_report(g, out);
        if (*st) return cmd_state(family, m, param, c, out);
    } catch (const qcorr::NotAState& e) {
        std::cerr << "error: invalid state (" << e.invariant() << "): " << e.what() << '\n';
        return kExitInputError;
    } catch (const qcorr::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
