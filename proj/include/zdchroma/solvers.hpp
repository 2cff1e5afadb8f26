#ifndef ZDCHROMA_SOLVERS_HPP
#define ZDCHROMA_SOLVERS_HPP

#include <cstdint>
#include <stdexcept>

#include "zdchroma/graph.hpp"

namespace zdchroma {

inline constexpr int64_t kDefaultBudgetMs = 120000;

// Raised when a solver runs out of budget. Carries the bracketing bounds
// established before the deadline hit.
class SolverTimeout : public std::runtime_error {
public:
    SolverTimeout(const std::string& what, std::size_t lower, std::size_t upper)
        : std::runtime_error(what), lower_bound(lower), upper_bound(upper) {}

    std::size_t lower_bound;
    std::size_t upper_bound;
};

struct CliqueResult {
    std::size_t omega = 0;
    VertexSet witness;      // passes check(g, witness, clique)
};

struct ChromaticResult {
    int chi = 0;
    Coloring coloring;              // proper, color_count == chi
    std::size_t lower_bound_used = 0;
};

// DSATUR greedy coloring: highest saturation first, ties by degree then by
// smallest vertex id. Deterministic; color count is an upper bound for chi.
Coloring greedy_dsatur(const Graph& g);

// Exact maximum clique, branch and bound over bitset candidate sets with
// greedy-coloring pruning. Vertex order: descending degree, ties by id.
CliqueResult max_clique(const Graph& g, int64_t budget_ms = kDefaultBudgetMs);

// Exact chromatic number: clique lower bound + DSATUR upper bound, and when
// they disagree an iterative-deepening k-colorability search closes the gap.
ChromaticResult chromatic_number(const Graph& g, int64_t budget_ms = kDefaultBudgetMs);

// Exhaustive oracle, independent of the machinery above. Refuses |V| > 12.
int brute_force_chi(const Graph& g);

} // namespace zdchroma

#endif
