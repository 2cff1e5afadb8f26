#ifndef ZDCHROMA_CONSTRUCTIONS_HPP
#define ZDCHROMA_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdchroma/graph.hpp"
#include "zdchroma/ring.hpp"

namespace zdchroma {

// A matching clique/coloring pair of equal size n; together they pin the
// chromatic and clique numbers of the graph they were verified against.
struct Certificate {
    uint64_t value = 0;
    VertexSet clique;
    Coloring coloring;
};

// Distinguished maximal clique of gamma0 for a single factor, with its
// square-zero part. For Z_{p^r}: multiples of p^{ceil(r/2)}, plus
// p^{(r-1)/2} when r is odd. For GF(q) and Z_p: {0, 1}.
struct LocalCliqueData {
    FactorSpec factor;
    std::vector<uint64_t> clique_members;       // S, component codes ascending
    std::vector<uint64_t> square_zero_members;  // N = {a in S : a^2 = 0}
    uint64_t s = 0;                             // |S|
    uint64_t n = 0;                             // |N|
};

LocalCliqueData maximal_clique_zpr(uint32_t p, uint32_t r);
LocalCliqueData factor_clique_plan(const FactorSpec& f);

struct HypothesisIssue {
    std::size_t factor_index;
    std::string condition;   // "clique", "maximal", "outside_square", "outside_product"
    uint64_t a;
    uint64_t b;
};

struct HypothesisReport {
    bool pass = true;
    std::vector<HypothesisIssue> issues;
};

// Exhaustive per-factor check of the two product-theorem hypotheses:
// each plan's S is a maximal clique, and outside S there are no zero
// products (including squares).
HypothesisReport check_theorem1_hypotheses(const RingSpec& spec,
                                           const std::vector<LocalCliqueData>& plans);

// Product-ring coloring of gamma0 built from per-factor cliques. The clique
// is N_1 x ... x N_k together with the one-hot vectors of each S_i \ N_i;
// every other vertex reuses the color of a one-hot clique member chosen by
// its least non-conforming coordinate. Certifies chi = omega =
// prod n_i + sum (s_i - n_i). Throws if the hypothesis check fails.
Certificate theorem1_coloring(const RingSpec& spec,
                              const std::vector<LocalCliqueData>& plans,
                              const Graph& gamma0);
Certificate theorem1_coloring(const RingSpec& spec,
                              const std::vector<LocalCliqueData>& plans);
std::vector<LocalCliqueData> default_plans(const RingSpec& spec);

// prod p_i^{floor(r_i/2)} + #{odd r_i} + n_domains
uint64_t formula_chi_gamma0(const std::vector<std::pair<uint32_t, uint32_t>>& prime_powers,
                            uint64_t n_domains);
uint64_t formula_chi_gamma0(const RingSpec& spec);   // GF factors count as domains

// Union of the low associate classes of Z_{p^r}: valuations 1..r/2-1 for
// even r, 1..(r-1)/2 for odd r. Independent in gamma, so a clique in the
// complement. Only defined for r >= 3.
struct ComplementCliqueData {
    uint32_t p = 2;
    uint32_t r = 3;
    std::vector<uint64_t> members;   // component codes, ascending
    uint64_t size = 0;
};

ComplementCliqueData complement_clique_zpr(uint32_t p, uint32_t r);

// Closed-form size of that class union (r >= 2):
// p^{r-1} - p^{r/2} for even r, p^{r-1} - p^{(r-1)/2} for odd r.
uint64_t formula_complement_zpr(uint32_t p, uint32_t r);

// Tuple bookkeeping behind the complement-graph construction.
struct Theorem2Plan {
    std::vector<uint32_t> lengths;                    // valuation range per factor
    std::vector<std::vector<uint32_t>> tuples;        // T, lexicographic
    std::vector<std::vector<uint32_t>> t1;            // |A(t)| > |A(dual t)|
    std::vector<std::vector<uint32_t>> t2;            // sizes equal, t != dual
    std::vector<std::vector<uint32_t>> t0;            // t1 plus lex-min of each t2 pair
    std::optional<std::vector<uint32_t>> center;      // all lengths even
    uint64_t clique_size = 0;                         // sum over t0 + center vertex
};

Theorem2Plan theorem2_plan(const RingSpec& spec);

// Certificate for complement(gamma(R)): the associate-class clique C from
// the plan (plus one center vertex when every valuation range is even),
// colored by reusing each chosen class's colors on its dual class.
Certificate theorem2_construction(const RingSpec& spec, const Graph& complement_gamma);
Certificate theorem2_construction(const RingSpec& spec);

struct Composition {
    uint64_t value = 0;
    bool exact = false;   // equality holds when the second factor is reduced
};

// chi or omega of a two-factor product from the factor values:
// v1 + v2 - 1, a lower bound in general, exact for reduced second factor.
Composition product_composition(uint64_t v1, uint64_t v2, bool second_factor_reduced);

// Bits of the graph's vertex space corresponding to the given ring indices.
VertexSet vertex_set_from_labels(const Graph& g, const std::vector<uint64_t>& labels);

} // namespace zdchroma

#endif
