// holotor: invariants of SL2(C)-colored braid closures.
//
// Subcommands:
//   compute  evaluate torsion / T / F / K for a link spec (JSON object or array)
//   verify   run a named property suite (or "all")
//   burau    emit twisted Burau matrices and det(1 - B)
//
// Exit codes: 0 ok, 1 usage or malformed input, 2 mathematical precondition.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "holotor/burau.hpp"
#include "holotor/invariants.hpp"
#include "holotor/verify.hpp"

using json = nlohmann::ordered_json;
using namespace holotor;

namespace {

constexpr const char* kVersion = "1.0.0";

json jc(const cplx& z) { return json::array({z.real(), z.imag()}); }

json jphased(const PhasedValue& v) {
    return json{{"modulus", v.modulus}, {"phase_mod_quarter_turn", v.phase}};
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonFlags {
    std::string input = "-";
    double tol = -1.0;  // negative = keep spec value
    long long seed = -1;
    std::string gauge, stabilize;
    bool pretty = false;
};

void apply_overrides(LinkSpec& s, const CommonFlags& f) {
    if (f.tol >= 0) s.tol = f.tol;
    if (f.seed >= 0) s.seed = static_cast<unsigned long>(f.seed);
    if (!f.gauge.empty()) s.gauge_auto = (f.gauge == "auto");
    if (!f.stabilize.empty()) s.stabilize_auto = (f.stabilize == "auto");
}

json report_json(const LinkSpec& s, const InvariantReport& rep, const std::string& which) {
    json j;
    if (s.name) j["name"] = *s.name;
    j["invariant"] = which;
    if (rep.has_torsion) j["torsion"] = jc(rep.torsion);
    if (rep.has_T) j["T"] = jc(rep.T);
    if (rep.has_F) {
        j["F"] = jphased(rep.F);
        j["Fbar"] = jphased(rep.Fbar);
    }
    if (rep.has_K) j["K"] = jphased(rep.K);
    json mus = json::array();
    for (const auto& m : rep.mu) mus.push_back(jc(m));
    j["mu"] = mus;
    j["stabilizations"] = rep.stabilizations;
    j["gauged"] = rep.gauged;
    j["version"] = kVersion;
    j["seed"] = s.seed;
    j["tol"] = s.tol;
    return j;
}

int thread_cap() {
    if (const char* env = std::getenv("HOLOTOR_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 4;
}

void emit(const json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

int cmd_compute(const CommonFlags& flags, const std::string& which) {
    const std::string text = read_input(flags.input);
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    const bool batch = parsed.is_array();
    std::vector<LinkSpec> specs;
    if (batch) {
        for (const auto& item : parsed) specs.push_back(parse_linkspec(item.dump()));
    } else {
        specs.push_back(parse_linkspec(text));
    }
    for (auto& s : specs) apply_overrides(s, flags);

    std::vector<json> out(specs.size());
    std::vector<int> codes(specs.size(), 0);
    const int cap = thread_cap();
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex mx;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lk(mx);
                if (next >= specs.size()) return;
                i = next++;
            }
            try {
                out[i] = report_json(specs[i], compute_invariants(specs[i], which), which);
            } catch (const math_error& e) {
                out[i] = json{{"error", e.what()}};
                codes[i] = 2;
            }
        }
    };
    const int nthreads = std::min<int>(cap, static_cast<int>(specs.size()));
    for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    int code = 0;
    for (int c : codes) code = std::max(code, c);
    if (batch) {
        json arr = json::array();
        for (auto& j : out) arr.push_back(std::move(j));
        emit(arr, flags.pretty);
    } else {
        emit(out[0], flags.pretty);
    }
    return code;
}

int cmd_verify(const std::string& suite, int trials, unsigned long seed, bool as_json,
               bool pretty) {
    std::vector<std::string> names;
    if (suite == "all") {
        names = suite_names();
    } else {
        const auto& known = suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end())
            throw parse_error("unknown verification suite: " + suite);
        names.push_back(suite);
    }
    bool all_pass = true;
    json arr = json::array();
    for (const auto& name : names) {
        const SuiteResult r = run_suite(name, trials, seed);
        all_pass = all_pass && r.passed;
        if (as_json) {
            arr.push_back(json{{"suite", r.suite},
                               {"trials", r.trials},
                               {"passed", r.passed},
                               {"max_residual", r.max_residual},
                               {"detail", r.detail}});
        } else {
            std::printf("%-20s %s  trials=%d  max residual=%.3g%s%s\n", r.suite.c_str(),
                        r.passed ? "PASS" : "FAIL", r.trials, r.max_residual,
                        r.detail.empty() ? "" : "  ", r.detail.c_str());
        }
    }
    if (as_json) emit(arr, pretty);
    return all_pass ? 0 : 2;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(jc(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

int cmd_burau(const CommonFlags& flags, const std::string& variant) {
    LinkSpec s = parse_linkspec(read_input(flags.input));
    apply_overrides(s, flags);
    const BraidWord w = s.braid();
    const std::vector<SL2Elem> colors = s.sl2_colors();
    Matrix m;
    if (w.strands < 2) {
        m = Matrix(0, 0);  // no reduced homology on one strand
    } else if (variant == "boundary") {
        m = burau_boundary(w, colors).m;
    } else if (variant == "reduced") {
        m = burau_reduced(w, colors).m;
    } else {
        const auto star = factorize_tuple(colors);
        std::vector<ExtChar> xs;
        for (const auto& chi : star) xs.emplace_back(chi, default_mu(chi));
        m = burau_nice(w, xs).m;
    }
    json j;
    if (s.name) j["name"] = *s.name;
    j["variant"] = variant;
    j["matrix"] = matrix_json(m);
    j["det_one_minus_burau"] = jc(det(Matrix::identity(m.rows()) - m));
    j["version"] = kVersion;
    j["seed"] = s.seed;
    j["tol"] = s.tol;
    emit(j, flags.pretty);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of SL2(C)-colored braid closures"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string invariant = "all", variant = "reduced", suite = "all";
    int trials = 20;
    unsigned long vseed = 0;
    bool as_json = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", flags.input, "link spec path, or - for stdin");
        cmd->add_option("--tol", flags.tol, "tolerance override (default 1e-9)");
        cmd->add_option("--seed", flags.seed, "seed override (default 0)");
        cmd->add_option("--gauge", flags.gauge, "auto|off")
            ->check(CLI::IsMember({"auto", "off"}));
        cmd->add_option("--stabilize", flags.stabilize, "auto|off")
            ->check(CLI::IsMember({"auto", "off"}));
        cmd->add_flag("--pretty", flags.pretty, "indent JSON output");
        cmd->add_flag("--json", as_json, "JSON output (default for compute/burau)");
    };

    CLI::App* compute = app.add_subcommand("compute", "evaluate link invariants");
    add_common(compute);
    compute->add_option("--invariant", invariant, "torsion|T|F|K|all")
        ->check(CLI::IsMember({"torsion", "T", "F", "K", "all"}));

    CLI::App* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("suite", suite, "suite name or all");
    verify->add_option("--trials", trials, "trials per suite (default 20)");
    verify->add_option("--seed", vseed, "suite seed (default 0)");
    verify->add_flag("--json", as_json, "JSON report");
    verify->add_flag("--pretty", flags.pretty, "indent JSON output");

    CLI::App* burau = app.add_subcommand("burau", "emit twisted Burau matrices");
    add_common(burau);
    burau->add_option("--variant", variant, "boundary|reduced|nice")
        ->check(CLI::IsMember({"boundary", "reduced", "nice"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (compute->parsed()) return cmd_compute(flags, invariant);
        if (verify->parsed()) return cmd_verify(suite, trials, vseed, as_json, flags.pretty);
        return cmd_burau(flags, variant);
    } catch (const parse_error& e) {
        emit(json{{"error", e.what()}}, flags.pretty);
        return 1;
    } catch (const math_error& e) {
        emit(json{{"error", e.what()}}, flags.pretty);
        return 2;
    } catch (const dim_error& e) {
        emit(json{{"error", e.what()}}, flags.pretty);
        return 1;
    }
}
