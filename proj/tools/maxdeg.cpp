// maxdeg: compute, generate, verify and benchmark repeated-maximum-degree
// quantities on simple graphs. All reports are JSON on stdout; diagnostics
// go to stderr. Exit codes: 0 success, 1 operational error, 2 verification
// failure.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "maxdeg/bounds.hpp"
#include "maxdeg/certificate.hpp"
#include "maxdeg/errors.hpp"
#include "maxdeg/exactf.hpp"
#include "maxdeg/families.hpp"
#include "maxdeg/forest.hpp"
#include "maxdeg/harness.hpp"
#include "maxdeg/io.hpp"
#include "maxdeg/lowdeg.hpp"
#include "maxdeg/oracle.hpp"
#include "maxdeg/random.hpp"

namespace {

using nlohmann::json;

constexpr int kExitError = 1;
constexpr int kExitVerifyFailed = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

maxdeg::Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    if (format == "graph6") return maxdeg::parse_graph6(text);
    return maxdeg::parse_edge_list(text);
}

json certificate_json(const maxdeg::Certificate& cert) {
    return json{{"k", cert.k},
                {"deleted", cert.deleted},
                {"result_max_degree", cert.result_max_degree},
                {"realizing", cert.realizing},
                {"small_h", cert.small_h}};
}

// the CLI never prints a certificate it has not re-checked
void require_valid(const maxdeg::Graph& g, const maxdeg::Certificate& cert) {
    if (!maxdeg::verify_certificate(g, cert))
        throw maxdeg::internal_error("produced certificate failed validation");
}

int default_guard(int fallback) {
    if (const char* env = std::getenv("MAXDEG_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::runtime_error("MAXDEG_MAX_N is not an integer");
        }
    }
    return fallback;
}

struct ProbSpec {
    double fixed = 0.5;
    double over_n = 0.0;
    bool scaled = false;   // p = over_n / n

    double at(int n) const { return scaled ? std::min(1.0, over_n / n) : fixed; }
};

ProbSpec parse_prob(const std::string& text) {
    ProbSpec spec;
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        if (text.substr(slash + 1) != "n")
            throw std::runtime_error("probability must be a number or \"c/n\"");
        spec.scaled = true;
        spec.over_n = std::stod(text.substr(0, slash));
    } else {
        spec.fixed = std::stod(text);
    }
    return spec;
}

int run_compute_f(const std::string& path, const std::string& format) {
    maxdeg::Graph g = load_graph(path, format);
    maxdeg::ExactF res = maxdeg::exact_f(g);
    require_valid(g, res.cert);
    json trace = json::array();
    for (const maxdeg::TraceStep& s : res.trace.steps)
        trace.push_back({{"j", s.j},
                         {"deleted_vertex", s.deleted_vertex},
                         {"d1", s.d1},
                         {"d2", s.d2},
                         {"diff", s.diff}});
    json report{{"input", path},
                {"operation", "f"},
                {"params", json::object()},
                {"value", res.value},
                {"exact", true},
                {"certificate", certificate_json(res.cert)},
                {"trace", trace}};
    std::cout << report.dump(2) << '\n';
    return 0;
}

int run_compute_fk(const std::string& path, const std::string& format, int k,
                   const std::string& method, std::optional<int> max_n) {
    maxdeg::Graph g = load_graph(path, format);
    maxdeg::Certificate cert;
    bool exact = false;
    if (method == "oracle") {
        int guard = max_n.value_or(default_guard(maxdeg::kBruteFkMaxN));
        cert = maxdeg::brute_fk(g, k, guard).cert;
        exact = true;
    } else if (method == "greedy") {
        cert = maxdeg::greedy_fk(g, k);
    } else if (method == "forest") {
        cert = maxdeg::forest_fk(g, k);
    } else if (method == "deg2") {
        cert = maxdeg::equate_deg2(g, k);
    } else {
        throw std::runtime_error("unknown method: " + method);
    }
    require_valid(g, cert);
    json report{{"input", path},
                {"operation", "fk"},
                {"params", {{"k", k}, {"method", method}}},
                {"value", cert.deleted.size()},
                {"exact", exact},
                {"certificate", certificate_json(cert)}};
    std::cout << report.dump(2) << '\n';
    return 0;
}

int run_check_feasible(const std::string& path, const std::string& format, int k,
                       std::optional<int> max_n) {
    maxdeg::Graph g = load_graph(path, format);
    int guard = max_n.value_or(default_guard(maxdeg::kBruteFeasibleMaxN));
    maxdeg::FeasibilityResult res = maxdeg::brute_feasible(g, k, guard);
    json report{{"input", path},
                {"operation", "feasible"},
                {"params", {{"k", k}}},
                {"value", res.feasible},
                {"witness", res.witness ? json(*res.witness) : json(nullptr)}};
    std::cout << report.dump(2) << '\n';
    return 0;
}

int run_gen(const std::string& family, const maxdeg::FamilyParams& params,
            const std::string& out_path, const std::string& format) {
    maxdeg::FamilyInstance inst = maxdeg::make_family(family, params);
    std::string payload = format == "graph6" ? maxdeg::emit_graph6(inst.graph)
                                             : maxdeg::emit_edge_list(inst.graph);
    const char* kind = nullptr;
    switch (inst.claim.kind) {
        case maxdeg::ClaimKind::exact_f2: kind = "f"; break;
        case maxdeg::ClaimKind::exact_fk: kind = "fk"; break;
        case maxdeg::ClaimKind::lower_bound_fk: kind = "fk-lower-bound"; break;
        case maxdeg::ClaimKind::not_feasible: kind = "not-feasible"; break;
    }
    json sidecar{{"family", inst.family},
                 {"params", json::object()},
                 {"n", inst.graph.vertex_count()},
                 {"format", format},
                 {"claim", {{"kind", kind}, {"k", inst.claim.k}, {"value", inst.claim.value}}}};
    for (const auto& [name, value] : inst.params) sidecar["params"][name] = value;
    if (inst.claim.kind == maxdeg::ClaimKind::not_feasible) sidecar["claim"].erase("value");

    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << payload;
    out.close();
    sidecar["file"] = out_path;
    std::ofstream side(out_path + ".json");
    if (!side) throw std::runtime_error("cannot write " + out_path + ".json");
    side << sidecar.dump(2) << '\n';
    std::cout << sidecar.dump(2) << '\n';
    return 0;
}

int run_bound(const std::string& name, std::optional<long long> delta,
              std::optional<long long> n, std::optional<long long> k, double c,
              double beta) {
    auto need = [](const std::optional<long long>& v, const char* flag) {
        if (!v) throw std::runtime_error(std::string("missing --") + flag);
        return *v;
    };
    json value;
    if (name == "f-delta") value = maxdeg::bound_f_delta(need(delta, "delta"));
    else if (name == "f-n") value = maxdeg::bound_f_n(need(n, "n"));
    else if (name == "g") value = maxdeg::g_exact(need(delta, "delta"), need(k, "k"));
    else if (name == "h") value = maxdeg::h_exact(need(delta, "delta"), need(k, "k"));
    else if (name == "lemma") value = maxdeg::lemma_bound(need(k, "k"), need(delta, "delta"));
    else if (name == "sparse") value = maxdeg::sparse_bound(need(n, "n"), c, beta, need(k, "k"));
    else if (name == "g-lower-even") value = maxdeg::g_lower_even(need(delta, "delta"), need(k, "k"));
    else if (name == "ramsey-cap") value = maxdeg::h_ramsey_cap(need(k, "k"));
    else throw std::runtime_error("unknown bound: " + name);

    json params = json::object();
    if (delta) params["delta"] = *delta;
    if (n) params["n"] = *n;
    if (k) params["k"] = *k;
    if (name == "sparse") {
        params["c"] = c;
        params["beta"] = beta;
    }
    std::cout << json{{"operation", "bound"},
                      {"name", name},
                      {"params", params},
                      {"value", value}}
                     .dump(2)
              << '\n';
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, long long samples) {
    maxdeg::SuiteReport rep = maxdeg::run_suite(suite, seed, samples);
    json failures = json::array();
    for (const maxdeg::SuiteFailure& f : rep.failures)
        failures.push_back({{"case", f.case_id}, {"detail", f.detail}});
    json report{{"suite", rep.suite}, {"cases", rep.cases}, {"failures", failures}};
    std::cout << report.dump(2) << '\n';
    return rep.ok() ? 0 : kExitVerifyFailed;
}

int run_bench(const std::string& sizes, const std::string& prob, std::uint64_t seed,
              int reps) {
    ProbSpec spec = parse_prob(prob);
    std::vector<int> ladder;
    std::stringstream ss(sizes);
    for (std::string tok; std::getline(ss, tok, ',');) ladder.push_back(std::stoi(tok));
    if (ladder.empty() || reps < 1) throw std::runtime_error("empty size ladder");

    json runs = json::array();
    std::vector<double> log_n, log_t;
    for (int n : ladder) {
        double p = spec.at(n);
        maxdeg::Graph g = maxdeg::random_graph(n, p, seed);
        double best = 0;
        for (int rep = 0; rep < reps; ++rep) {
            auto start = std::chrono::steady_clock::now();
            maxdeg::ExactF res = maxdeg::exact_f(g);
            auto stop = std::chrono::steady_clock::now();
            double seconds = std::chrono::duration<double>(stop - start).count();
            if (rep == 0 || seconds < best) best = seconds;
            runs.push_back({{"n", n},
                            {"p", p},
                            {"rep", rep},
                            {"seconds", seconds},
                            {"value", res.value}});
        }
        log_n.push_back(std::log(static_cast<double>(n)));
        log_t.push_back(std::log(std::max(best, 1e-9)));
    }

    json report{{"operation", "bench"}, {"target", "exactf"}, {"runs", runs}};
    if (ladder.size() >= 2) {
        // least-squares slope of log(best time) against log(n)
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        auto m = static_cast<double>(log_n.size());
        for (std::size_t i = 0; i < log_n.size(); ++i) {
            sx += log_n[i];
            sy += log_t[i];
            sxx += log_n[i] * log_n[i];
            sxy += log_n[i] * log_t[i];
        }
        report["fit_exponent"] = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    }
    std::cout << report.dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"repeated maximum degree toolkit"};
    app.require_subcommand(1);

    std::string path, format = "edgelist", method = "oracle";
    int k = 2;
    std::optional<int> max_n;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "input format")
            ->check(CLI::IsMember({"edgelist", "graph6"}));
    };

    CLI::App* compute = app.add_subcommand("compute", "compute deletion quantities");
    compute->require_subcommand(1);
    CLI::App* compute_f =
        compute->add_subcommand("f", "exact f(G) with trace and certificate");
    compute_f->add_option("file", path, "graph file (\"-\" for stdin)")->required();
    add_format(compute_f);

    CLI::App* compute_fk =
        compute->add_subcommand("fk", "f_k(G) by oracle or a constructive method");
    compute_fk->add_option("file", path)->required();
    compute_fk->add_option("-k", k, "target multiplicity")->required();
    compute_fk->add_option("--method", method, "oracle|greedy|forest|deg2")
        ->check(CLI::IsMember({"oracle", "greedy", "forest", "deg2"}));
    compute_fk->add_option("--max-n", max_n, "oracle size guard");
    add_format(compute_fk);

    CLI::App* check = app.add_subcommand("check", "decision procedures");
    check->require_subcommand(1);
    CLI::App* feasible =
        check->add_subcommand("feasible", "k-feasibility by exhaustive search");
    feasible->add_option("file", path)->required();
    feasible->add_option("-k", k)->required();
    feasible->add_option("--max-n", max_n, "oracle size guard");
    add_format(feasible);

    std::string family, out_path;
    maxdeg::FamilyParams fam_params;
    CLI::App* gen = app.add_subcommand("gen", "generate an extremal family instance");
    gen->add_option("family", family, "family id")->required();
    gen->add_option("--delta", fam_params.delta);
    gen->add_option("--n", fam_params.n);
    gen->add_option("--t", fam_params.t);
    gen->add_option("--k", fam_params.k);
    gen->add_option("--m", fam_params.m);
    gen->add_option("-o,--output", out_path, "output file (stdout if omitted)");
    add_format(gen);

    std::string bound_name;
    std::optional<long long> bound_delta, bound_n, bound_k;
    double bound_c = 1.0, bound_beta = 0.0;
    CLI::App* bound = app.add_subcommand("bound", "closed-form bounds and exact values");
    bound->add_option("name", bound_name,
                      "f-delta|f-n|g|h|lemma|sparse|g-lower-even|ramsey-cap")
        ->required();
    bound->add_option("--delta", bound_delta);
    bound->add_option("--n", bound_n);
    bound->add_option("--k", bound_k);
    bound->add_option("--c", bound_c);
    bound->add_option("--beta", bound_beta);

    std::string suite;
    std::uint64_t seed = 1;
    long long samples = -1;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--seed", seed);
    verify->add_option("--samples", samples,
                       "random case count (suite default if omitted)");

    std::string bench_sizes = "1000,2000,4000,8000", bench_p = "4/n";
    int bench_reps = 3;
    CLI::App* bench = app.add_subcommand("bench", "timing runs");
    bench->require_subcommand(1);
    CLI::App* bench_exactf =
        bench->add_subcommand("exactf", "exact f(G) over a size ladder");
    bench_exactf->add_option("--n", bench_sizes, "comma-separated vertex counts");
    bench_exactf->add_option("--p", bench_p, "edge probability, fixed or \"c/n\"");
    bench_exactf->add_option("--seed", seed);
    bench_exactf->add_option("--reps", bench_reps);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute_f->parsed()) return run_compute_f(path, format);
        if (compute_fk->parsed()) return run_compute_fk(path, format, k, method, max_n);
        if (feasible->parsed()) return run_check_feasible(path, format, k, max_n);
        if (gen->parsed()) return run_gen(family, fam_params, out_path, format);
        if (bound->parsed())
            return run_bound(bound_name, bound_delta, bound_n, bound_k, bound_c,
                             bound_beta);
        if (verify->parsed()) return run_verify(suite, seed, samples);
        if (bench->parsed() && bench_exactf->parsed())
            return run_bench(bench_sizes, bench_p, seed, bench_reps);
    } catch (const maxdeg::unknown_value_error& e) {
        std::cerr << "maxdeg: unknown (open problem): " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "maxdeg: " << e.what() << '\n';
        return kExitError;
    }
    std::cerr << "maxdeg: no subcommand\n";
    return kExitError;
}
