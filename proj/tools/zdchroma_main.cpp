// zdchroma: zero-divisor graphs of finite commutative rings, exact chromatic
// and clique numbers, and certificate-producing constructions for the
// families where both invariants provably coincide.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "zdchroma/harness.hpp"

namespace {

// 0 all good, 1 verification failure, 2 usage or parse error, 3 timeout
enum ExitCode { kOk = 0, kVerifyFail = 1, kUsage = 2, kTimeout = 3 };

uint64_t env_max_order(uint64_t fallback) {
    const char* env = std::getenv("ZDCHROMA_MAX_ORDER");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 2) return static_cast<uint64_t>(v);
    std::cerr << "warning: ignoring unparsable ZDCHROMA_MAX_ORDER\n";
    return fallback;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

void print_report(const zdchroma::Report& r, std::ostream& os) {
    os << "ring:        " << r.ring_canonical << "  (|R| = " << r.order << ")\n";
    os << "graph:       " << zdchroma::graph_kind_name(r.kind) << "  |V| = " << r.vertices
       << ", |E| = " << r.edges << "\n";
    if (r.solver_omega) os << "solver:      omega = " << *r.solver_omega
                           << ", chi = " << *r.solver_chi << "\n";
    if (r.certificate_value) os << "certificate: chi = omega = " << *r.certificate_value << "\n";
    if (r.formula_value) os << "formula:     " << *r.formula_value << "\n";
    for (const auto& n : r.notes) os << "note:        " << n << "\n";
    os << "status:      " << (r.consistent ? "OK" : "FAILURE") << "\n";
    os << "timings:     build " << r.build_ms << " ms, exact " << r.exact_ms
       << " ms, construct " << r.construct_ms << " ms\n";
}

struct AnalyzeArgs {
    std::string ring;
    std::string graph = "gamma0";
    bool exact = false;
    bool construct = false;
    bool formula = false;
    int64_t budget_ms = zdchroma::kDefaultBudgetMs;
    uint64_t max_order = 0;
    uint64_t seed = 0;
    std::string out;
    std::string format;
};

void add_common_flags(CLI::App* cmd, AnalyzeArgs& a) {
    cmd->add_option("--ring", a.ring, "ring spec, e.g. \"Z8 x Z16\", \"Z[3^2]xGF(4)\", \"Z360\"")
        ->required();
    cmd->add_option("--graph", a.graph, "gamma0 | gamma | complement_gamma")
        ->check(CLI::IsMember({"gamma0", "gamma", "complement_gamma"}));
    cmd->add_flag("--exact", a.exact, "run the exact clique/chromatic solvers");
    cmd->add_flag("--construct", a.construct, "run the applicable certificate construction");
    cmd->add_flag("--formula", a.formula, "evaluate the applicable closed form");
    cmd->add_option("--budget-ms", a.budget_ms, "per-solver time budget");
    cmd->add_option("--max-order", a.max_order, "ring order cap (default 65536)");
    cmd->add_option("--seed", a.seed, "seed for randomized checks");
    cmd->add_option("--out", a.out, "output file ('-' for stdout)");
    cmd->add_option("--format", a.format, "json | csv | dot")
        ->check(CLI::IsMember({"json", "csv", "dot"}));
}

int run_analyze(const AnalyzeArgs& a, bool export_mode) {
    zdchroma::AnalyzeOptions opt;
    opt.kind = *zdchroma::graph_kind_from(a.graph);
    opt.exact = a.exact;
    opt.construct = a.construct;
    opt.formula = a.formula;
    opt.budget_ms = a.budget_ms;
    opt.max_order = a.max_order ? a.max_order : env_max_order(zdchroma::kDefaultMaxOrder);

    std::string format = a.format;
    if (export_mode && format.empty()) format = "json";

    if (format == "dot") {
        // graph export does not need the solvers
        zdchroma::RingSpec spec = zdchroma::parse_ring_spec(a.ring, opt.max_order);
        zdchroma::Graph g = [&] {
            switch (opt.kind) {
            case zdchroma::GraphKind::gamma0:
                return zdchroma::build_gamma0(spec, opt.max_order);
            case zdchroma::GraphKind::gamma:
                return zdchroma::build_gamma(spec, opt.max_order);
            default:
                return zdchroma::complement(zdchroma::build_gamma(spec, opt.max_order));
            }
        }();
        write_output(a.out, zdchroma::graph_to_dot(g, &spec));
        return kOk;
    }

    zdchroma::Report rep = zdchroma::analyze(a.ring, opt);
    if (format == "json")
        write_output(a.out, zdchroma::report_to_json(rep));
    else if (format == "csv")
        write_output(a.out, zdchroma::report_to_csv(rep));
    else
        print_report(rep, std::cout);
    return rep.consistent ? kOk : kVerifyFail;
}

int run_table(int64_t budget_ms, uint64_t max_order) {
    using namespace zdchroma;
    std::cout << "worked examples\n";
    std::cout << "  ring        graph             omega  chi  certificate\n";
    {
        AnalyzeOptions opt;
        opt.kind = GraphKind::gamma0;
        opt.exact = opt.construct = opt.formula = true;
        opt.budget_ms = budget_ms;
        opt.max_order = max_order;
        Report r = analyze("Z8xZ16", opt);
        std::cout << "  Z8 x Z16    gamma0            " << *r.solver_omega << "      "
                  << *r.solver_chi << "    " << *r.certificate_value
                  << (r.consistent ? "" : "   FAILURE") << "\n";
        opt.kind = GraphKind::complement_gamma;
        opt.formula = false;
        Report c = analyze("Z8xZ16", opt);
        std::cout << "  Z8 x Z16    complement_gamma  " << *c.solver_omega << "     "
                  << *c.solver_chi << "   " << *c.certificate_value
                  << (c.consistent ? "" : "   FAILURE") << "\n";
        if (!r.consistent || !c.consistent) return kVerifyFail;
    }
    std::cout << "\nlocal rings Z[p^r]: certified chi = omega of gamma0\n";
    std::cout << "  p\\r";
    for (int r = 1; r <= 4; ++r) std::cout << "\t" << r;
    std::cout << "\n";
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        std::cout << "  " << p;
        for (uint32_t r = 1; r <= 4; ++r) {
            uint64_t q = 1;
            for (uint32_t i = 0; i < r; ++i) q *= p;
            if (q > max_order) {
                std::cout << "\t-";
                continue;
            }
            RingSpec spec({FactorSpec::local(p, r)}, q);
            auto cert = theorem1_coloring(spec, default_plans(spec));
            std::cout << "\t" << cert.value;
        }
        std::cout << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-divisor graph chromatic/clique analyzer"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* cmd_analyze = app.add_subcommand("analyze", "analyze one ring/graph instance");
    add_common_flags(cmd_analyze, analyze_args);

    AnalyzeArgs export_args;
    CLI::App* cmd_export = app.add_subcommand("export", "write a report (json/csv) or graph (dot)");
    add_common_flags(cmd_export, export_args);

    std::string theorem;
    zdchroma::GridBounds bounds;
    unsigned workers = 0;
    std::string grid_out, grid_format;
    bool verbose = false;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification grid");
    cmd_verify->add_option("--theorem", theorem,
                           "lem1 | coll_domains | maintheo1 | maincoll1 | lembar | "
                           "maintheo2 | lemmas23")
        ->required()
        ->check(CLI::IsMember({"lem1", "coll_domains", "maintheo1", "maincoll1", "lembar",
                               "maintheo2", "lemmas23"}));
    cmd_verify->add_option("--p-max", bounds.p_max, "largest prime");
    cmd_verify->add_option("--r-max", bounds.r_max, "largest exponent");
    cmd_verify->add_option("--k-max", bounds.k_max, "largest factor count");
    cmd_verify->add_option("--max-order", bounds.max_order, "ring order bound");
    cmd_verify->add_option("--max-graph", bounds.max_graph, "gamma vertex bound");
    cmd_verify->add_option("--solver-cap", bounds.solver_cap,
                           "run exact solvers only up to this vertex count");
    cmd_verify->add_option("--budget-ms", bounds.budget_ms, "per-solver time budget");
    cmd_verify->add_option("--seed", bounds.seed, "sampling seed");
    cmd_verify->add_option("--samples", bounds.samples, "sample count per part");
    cmd_verify->add_option("--workers", workers, "worker threads (0 = hardware)");
    cmd_verify->add_option("--out", grid_out, "output file");
    cmd_verify->add_option("--format", grid_format, "csv")->check(CLI::IsMember({"csv"}));
    cmd_verify->add_flag("--verbose", verbose, "print every row, not only failures");

    int64_t table_budget = zdchroma::kDefaultBudgetMs;
    uint64_t table_max_order = 0;
    CLI::App* cmd_table = app.add_subcommand("table", "reproduce the worked examples");
    cmd_table->add_option("--budget-ms", table_budget, "per-solver time budget");
    cmd_table->add_option("--max-order", table_max_order, "ring order cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (cmd_analyze->parsed()) return run_analyze(analyze_args, false);
        if (cmd_export->parsed()) return run_analyze(export_args, true);
        if (cmd_table->parsed())
            return run_table(table_budget,
                             table_max_order ? table_max_order
                                             : env_max_order(zdchroma::kDefaultMaxOrder));
        if (cmd_verify->parsed()) {
            if (cmd_verify->count("--max-order") == 0)
                bounds.max_order = env_max_order(bounds.max_order);
            auto summary =
                zdchroma::verify_grid(*zdchroma::grid_theorem_from(theorem), bounds, workers);
            std::cout << zdchroma::grid_to_text(summary, verbose);
            if (!grid_out.empty()) write_output(grid_out, zdchroma::grid_to_csv(summary));
            return summary.all_pass ? kOk : kVerifyFail;
        }
    } catch (const zdchroma::SolverTimeout& e) {
        std::cerr << "timeout: " << e.what() << " (bounds [" << e.lower_bound << ", "
                  << e.upper_bound << "])\n";
        return kTimeout;
    } catch (const zdchroma::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const zdchroma::RingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFail;
    }
    return kUsage;
}
