#ifndef ZDCHROMA_HARNESS_HPP
#define ZDCHROMA_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdchroma/constructions.hpp"
#include "zdchroma/graph.hpp"
#include "zdchroma/ring.hpp"
#include "zdchroma/solvers.hpp"

namespace zdchroma {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Grammar: spec := factor ('x' factor)*
//          factor := 'Z' n | 'Z[' p '^' r ']' | 'GF(' q ')'
// Whitespace-insensitive, separator case-insensitive. Composite Z_n splits
// into its prime-power parts; GF requires a prime power.
RingSpec parse_ring_spec(const std::string& text, uint64_t max_order = kDefaultMaxOrder);

enum class GraphKind { gamma0, gamma, complement_gamma };

std::string graph_kind_name(GraphKind k);
std::optional<GraphKind> graph_kind_from(const std::string& name);

struct AnalyzeOptions {
    GraphKind kind = GraphKind::gamma0;
    bool exact = false;
    bool construct = false;
    bool formula = false;
    int64_t budget_ms = kDefaultBudgetMs;
    uint64_t max_order = kDefaultMaxOrder;
};

struct WitnessInfo {
    std::vector<uint64_t> labels;           // canonical ring indices
    std::vector<std::string> elements;      // pretty-printed ring elements
};

struct Report {
    std::string ring_text;
    std::string ring_canonical;
    GraphKind kind = GraphKind::gamma0;
    uint64_t order = 0;
    uint64_t vertices = 0;
    uint64_t edges = 0;

    std::optional<uint64_t> solver_omega;
    std::optional<uint64_t> solver_chi;
    std::optional<uint64_t> certificate_value;
    std::optional<uint64_t> formula_value;

    WitnessInfo solver_clique;
    WitnessInfo certificate_clique;
    std::vector<std::pair<uint64_t, int>> solver_coloring;       // label -> color
    std::vector<std::pair<uint64_t, int>> certificate_coloring;

    bool witnesses_valid = true;   // every emitted witness re-validated
    bool consistent = true;        // all reported values pairwise agree
    std::vector<std::string> notes;

    double build_ms = 0.0;
    double exact_ms = 0.0;
    double construct_ms = 0.0;
};

// Parse, build the requested graph, then run whichever of the three value
// sources the options ask for, cross-checking them against each other.
Report analyze(const std::string& ring_text, const AnalyzeOptions& opt);

enum class GridTheorem {
    lem1,          // single local factor, gamma0 closed form
    coll_domains,  // products of distinct finite fields, chi = omega = k+1
    maintheo1,     // product coloring from per-factor cliques
    maincoll1,     // closed form for products of prime powers (+ domain count)
    lembar,        // single local factor, complement closed form
    maintheo2,     // complement certificate for 2+ local factors
    lemmas23,      // two-factor composition: equality / lower bound
};

std::string grid_theorem_name(GridTheorem t);
std::optional<GridTheorem> grid_theorem_from(const std::string& name);

struct GridBounds {
    uint32_t p_max = 7;
    uint32_t r_max = 5;
    uint32_t k_max = 3;
    uint64_t max_order = 1024;      // ring order filter (and cap)
    uint64_t max_graph = 600;       // |gamma| filter for complement grids
    uint64_t solver_cap = 256;      // exact solvers only below this vertex count
    int64_t budget_ms = kDefaultBudgetMs;
    uint64_t seed = 0;              // sampling grids only
    std::size_t samples = 20;       // lemmas23 pairs per part
};

struct GridRow {
    std::string instance;
    std::optional<uint64_t> formula;
    std::optional<uint64_t> certificate;
    std::optional<uint64_t> solver_omega;
    std::optional<uint64_t> solver_chi;
    bool pass = false;
    std::string note;
};

struct GridSummary {
    GridTheorem theorem = GridTheorem::lem1;
    std::vector<GridRow> rows;
    bool all_pass = false;
};

// Runs one verification grid; rows are deterministic and computed on a small
// worker pool (workers = 0 picks the hardware count).
GridSummary verify_grid(GridTheorem theorem, const GridBounds& bounds, unsigned workers = 0);

std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);
std::string graph_to_dot(const Graph& g, const RingSpec* spec = nullptr);
std::string grid_to_csv(const GridSummary& s);
std::string grid_to_text(const GridSummary& s, bool verbose);

} // namespace zdchroma

#endif
