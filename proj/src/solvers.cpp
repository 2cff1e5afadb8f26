#include "zdchroma/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>

namespace zdchroma {

namespace {

using Clock = std::chrono::steady_clock;

Clock::time_point deadline_from(int64_t budget_ms) {
    return Clock::now() + std::chrono::milliseconds(budget_ms);
}

// Vertices by descending degree, ties by id. All solvers work in this order
// so results are reproducible.
std::vector<std::size_t> degree_order(const Graph& g) {
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.degree(a) > g.degree(b);
    });
    return order;
}

struct CliqueSearch {
    std::vector<Bitset> adj;             // in search order
    std::vector<std::size_t> to_orig;
    std::size_t n = 0;
    std::size_t best = 0;
    std::vector<std::size_t> current, best_clique;
    Clock::time_point deadline;
    uint64_t ticks = 0;

    void check_budget() {
        if ((++ticks & 1023) == 0 && Clock::now() > deadline)
            throw SolverTimeout("max_clique: budget exhausted", best, n);
    }

    // Greedy coloring of P; emits vertices grouped by color class, so the
    // color sequence is non-decreasing and works as a pruning bound.
    void color_sort(const Bitset& P, std::vector<std::size_t>& order,
                    std::vector<std::size_t>& bound) {
        order.clear();
        bound.clear();
        Bitset left = P;
        std::size_t color = 0;
        while (!left.empty()) {
            ++color;
            Bitset cand = left;
            while (!cand.empty()) {
                std::size_t v = cand.first();
                order.push_back(v);
                bound.push_back(color);
                left.reset(v);
                cand.reset(v);
                cand.and_not(adj[v]);
            }
        }
    }

    void expand(Bitset P) {
        check_budget();
        std::vector<std::size_t> order, bound;
        color_sort(P, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best) return;
            std::size_t v = order[i];
            Bitset next = P;
            next &= adj[v];
            current.push_back(v);
            if (next.empty()) {
                if (current.size() > best) {
                    best = current.size();
                    best_clique = current;
                }
            } else {
                expand(next);
            }
            current.pop_back();
            P.reset(v);
        }
    }
};

} // namespace

Coloring greedy_dsatur(const Graph& g) {
    const std::size_t n = g.size();
    Coloring out;
    out.assignment.assign(n, -1);
    if (n == 0) return out;

    std::vector<Bitset> seen(n, Bitset(n + 1));   // colors adjacent to v
    std::vector<std::size_t> sat(n, 0);
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);

    int used = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = Bitset::npos;
        for (std::size_t v = 0; v < n; ++v) {
            if (out.assignment[v] >= 0) continue;
            if (pick == Bitset::npos || sat[v] > sat[pick] ||
                (sat[v] == sat[pick] && deg[v] > deg[pick]))
                pick = v;
        }
        std::size_t c = 0;
        while (seen[pick].test(c)) ++c;
        out.assignment[pick] = static_cast<int>(c);
        used = std::max(used, static_cast<int>(c) + 1);
        g.neighbors(pick).for_each([&](std::size_t u) {
            if (out.assignment[u] < 0 && !seen[u].test(c)) {
                seen[u].set(c);
                ++sat[u];
            }
        });
    }
    out.color_count = used;
    return out;
}

CliqueResult max_clique(const Graph& g, int64_t budget_ms) {
    const std::size_t n = g.size();
    CliqueResult res;
    res.witness = Bitset(n);
    if (n == 0) return res;
    if (budget_ms <= 0)
        throw SolverTimeout("max_clique: no budget", 0, n);

    CliqueSearch s;
    s.n = n;
    s.deadline = deadline_from(budget_ms);
    s.to_orig = degree_order(g);
    std::vector<std::size_t> to_new(n);
    for (std::size_t i = 0; i < n; ++i) to_new[s.to_orig[i]] = i;
    s.adj.assign(n, Bitset(n));
    for (std::size_t v = 0; v < n; ++v) {
        g.neighbors(s.to_orig[v]).for_each([&](std::size_t u) {
            s.adj[v].set(to_new[u]);
        });
    }

    Bitset all(n);
    for (std::size_t v = 0; v < n; ++v) all.set(v);
    s.expand(all);

    res.omega = s.best;
    for (std::size_t v : s.best_clique) res.witness.set(s.to_orig[v]);
    return res;
}

namespace {

// Backtracking k-colorability with the maximum clique pre-assigned to the
// first colors and new-color symmetry breaking. DSATUR-style dynamic vertex
// selection.
struct KColorSearch {
    const Graph& g;
    std::size_t n;
    int k;
    Clock::time_point deadline;
    std::vector<int> color;
    std::vector<Bitset> seen;           // per-vertex forbidden colors
    std::vector<std::size_t> sat;
    std::vector<std::size_t> deg;
    int used = 0;
    uint64_t ticks = 0;

    KColorSearch(const Graph& graph, int colors, Clock::time_point dl)
        : g(graph), n(graph.size()), k(colors), deadline(dl),
          color(n, -1), seen(n, Bitset(colors)), sat(n, 0), deg(n) {
        for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
    }

    void assign(std::size_t v, int c, std::vector<std::size_t>& touched) {
        color[v] = c;
        g.neighbors(v).for_each([&](std::size_t u) {
            if (color[u] < 0 && !seen[u].test(static_cast<std::size_t>(c))) {
                seen[u].set(static_cast<std::size_t>(c));
                ++sat[u];
                touched.push_back(u);
            }
        });
    }

    void unassign(std::size_t v, int c, const std::vector<std::size_t>& touched) {
        color[v] = -1;
        for (std::size_t u : touched) {
            seen[u].reset(static_cast<std::size_t>(c));
            --sat[u];
        }
    }

    bool dfs(std::size_t colored) {
        if ((++ticks & 1023) == 0 && Clock::now() > deadline)
            throw SolverTimeout("chromatic_number: budget exhausted",
                                static_cast<std::size_t>(k), n);
        if (colored == n) return true;
        std::size_t pick = Bitset::npos;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (pick == Bitset::npos || sat[v] > sat[pick] ||
                (sat[v] == sat[pick] && deg[v] > deg[pick]))
                pick = v;
        }
        if (sat[pick] >= static_cast<std::size_t>(k)) return false;
        const int limit = std::min(used, k - 1);
        for (int c = 0; c <= limit; ++c) {
            if (seen[pick].test(static_cast<std::size_t>(c))) continue;
            std::vector<std::size_t> touched;
            int prev_used = used;
            used = std::max(used, c + 1);
            assign(pick, c, touched);
            if (dfs(colored + 1)) return true;
            unassign(pick, c, touched);
            used = prev_used;
        }
        return false;
    }
};

std::optional<Coloring> try_k_coloring(const Graph& g, int k, const VertexSet& clique,
                                       Clock::time_point deadline) {
    if (clique.count() > static_cast<std::size_t>(k)) return std::nullopt;
    KColorSearch s(g, k, deadline);
    std::size_t preset = 0;
    std::vector<std::size_t> sink;
    clique.for_each([&](std::size_t v) {
        s.assign(v, static_cast<int>(preset), sink);
        ++preset;
    });
    s.used = static_cast<int>(preset);
    if (!s.dfs(preset)) return std::nullopt;
    Coloring c;
    c.assignment = s.color;
    c.color_count = k;
    return c;
}

} // namespace

ChromaticResult chromatic_number(const Graph& g, int64_t budget_ms) {
    const std::size_t n = g.size();
    ChromaticResult res;
    if (n == 0) return res;
    if (budget_ms <= 0)
        throw SolverTimeout("chromatic_number: no budget", 0, n);

    auto deadline = deadline_from(budget_ms);
    Coloring ub_coloring = greedy_dsatur(g);
    int ub = ub_coloring.color_count;

    CliqueResult lb;
    try {
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                        deadline - Clock::now()).count();
        lb = max_clique(g, std::max<int64_t>(left, 0));
    } catch (const SolverTimeout& t) {
        throw SolverTimeout("chromatic_number: budget exhausted in clique bound",
                            t.lower_bound, static_cast<std::size_t>(ub));
    }
    res.lower_bound_used = lb.omega;

    if (static_cast<int>(lb.omega) == ub) {
        res.chi = ub;
        res.coloring = std::move(ub_coloring);
        return res;
    }

    for (int k = static_cast<int>(lb.omega); k < ub; ++k) {
        std::optional<Coloring> found;
        try {
            found = try_k_coloring(g, k, lb.witness, deadline);
        } catch (const SolverTimeout&) {
            throw SolverTimeout("chromatic_number: budget exhausted",
                                lb.omega, static_cast<std::size_t>(ub));
        }
        if (found) {
            res.chi = k;
            res.coloring = std::move(*found);
            return res;
        }
    }
    res.chi = ub;
    res.coloring = std::move(ub_coloring);
    return res;
}

int brute_force_chi(const Graph& g) {
    const std::size_t n = g.size();
    if (n > 12)
        throw RingError(ErrorCode::too_large, "brute_force_chi: refuses |V| > 12");
    if (n == 0) return 0;

    uint16_t adj[12] = {0};
    for (std::size_t v = 0; v < n; ++v)
        g.neighbors(v).for_each([&](std::size_t u) {
            adj[v] = static_cast<uint16_t>(adj[v] | (1u << u));
        });

    int colors[12];
    // colors are interchangeable, so vertex v may open at most one new color
    auto colorable = [&](int k) {
        auto rec = [&](auto&& self, std::size_t v, int used) -> bool {
            if (v == n) return true;
            int limit = std::min(used, k - 1);
            for (int c = 0; c <= limit; ++c) {
                bool clash = false;
                for (std::size_t u = 0; u < v; ++u)
                    if ((adj[v] >> u & 1) && colors[u] == c) { clash = true; break; }
                if (clash) continue;
                colors[v] = c;
                if (self(self, v + 1, std::max(used, c + 1))) return true;
            }
            return false;
        };
        return rec(rec, 0, 0);
    };

    for (int k = 1; k < static_cast<int>(n); ++k)
        if (colorable(k)) return k;
    return static_cast<int>(n);
}

} // namespace zdchroma
