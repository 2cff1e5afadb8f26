#include "zdchroma/graph.hpp"

#include <algorithm>

namespace zdchroma {

std::string provenance_name(Provenance p) {
    switch (p) {
    case Provenance::gamma0: return "gamma0";
    case Provenance::gamma: return "gamma";
    case Provenance::complement: return "complement";
    case Provenance::synthetic: return "synthetic";
    }
    return "?";
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

GraphBuilder::GraphBuilder(std::size_t n, Provenance prov) {
    g_.labels_.resize(n);
    for (std::size_t v = 0; v < n; ++v) g_.labels_[v] = v;
    g_.adj_.assign(n, Bitset(n));
    g_.provenance_ = prov;
}

void GraphBuilder::add_edge(std::size_t u, std::size_t v) {
    if (u == v)
        throw RingError(ErrorCode::invalid_input, "graph: self-loops are not allowed");
    if (u >= g_.adj_.size() || v >= g_.adj_.size())
        throw RingError(ErrorCode::invalid_input, "graph: vertex out of range");
    g_.adj_[u].set(v);
    g_.adj_[v].set(u);
}

Graph GraphBuilder::finish() {
    return std::move(g_);
}

Graph build_gamma0(const RingSpec& spec, uint64_t max_vertices) {
    if (spec.order() > max_vertices)
        throw RingError(ErrorCode::resource_limit, "gamma0: ring order exceeds graph cap");
    const std::size_t n = static_cast<std::size_t>(spec.order());
    GraphBuilder b(n, Provenance::gamma0);

    // 0 annihilates everything; a unit annihilates only 0. Only the nonzero
    // zero-divisors need pairwise products.
    std::vector<RingElement> zd;
    std::vector<std::size_t> zd_idx;
    for (uint64_t i = 1; i < spec.order(); ++i) {
        b.add_edge(0, static_cast<std::size_t>(i));
        RingElement e = spec.element_of_index(i);
        if (spec.is_zero_divisor(e)) {
            zd.push_back(std::move(e));
            zd_idx.push_back(static_cast<std::size_t>(i));
        }
    }
    for (std::size_t a = 0; a < zd.size(); ++a)
        for (std::size_t c = a + 1; c < zd.size(); ++c)
            if (spec.product_is_zero(zd[a], zd[c]))
                b.add_edge(zd_idx[a], zd_idx[c]);
    return b.finish();
}

Graph build_gamma(const RingSpec& spec, uint64_t max_vertices) {
    std::vector<RingElement> zd;
    std::vector<uint64_t> zd_idx;
    for (uint64_t i = 1; i < spec.order(); ++i) {
        RingElement e = spec.element_of_index(i);
        if (spec.is_zero_divisor(e)) {
            zd.push_back(std::move(e));
            zd_idx.push_back(i);
        }
    }
    if (zd.size() > max_vertices)
        throw RingError(ErrorCode::resource_limit, "gamma: vertex count exceeds graph cap");
    GraphBuilder b(zd.size(), Provenance::gamma);
    for (std::size_t v = 0; v < zd.size(); ++v) b.set_label(v, zd_idx[v]);
    for (std::size_t a = 0; a < zd.size(); ++a)
        for (std::size_t c = a + 1; c < zd.size(); ++c)
            if (spec.product_is_zero(zd[a], zd[c]))
                b.add_edge(a, c);
    return b.finish();
}

Graph complement(const Graph& g) {
    const std::size_t n = g.size();
    GraphBuilder b(n, Provenance::complement);
    for (std::size_t v = 0; v < n; ++v) b.set_label(v, g.label(v));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return b.finish();
}

Graph delete_vertices(const Graph& g, const VertexSet& drop) {
    if (drop.universe() != g.size())
        throw RingError(ErrorCode::invalid_input, "delete_vertices: set universe mismatch");
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (!drop.test(v)) keep.push_back(v);
    GraphBuilder b(keep.size(), g.provenance());
    for (std::size_t v = 0; v < keep.size(); ++v) b.set_label(v, g.label(keep[v]));
    for (std::size_t u = 0; u < keep.size(); ++u)
        for (std::size_t v = u + 1; v < keep.size(); ++v)
            if (g.adjacent(keep[u], keep[v])) b.add_edge(u, v);
    return b.finish();
}

Graph graph_from_edges(std::size_t n,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                       Provenance prov) {
    GraphBuilder b(n, prov);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.finish();
}

bool check(const Graph& g, const VertexSet& s, SetMode mode) {
    if (s.universe() != g.size())
        throw RingError(ErrorCode::invalid_input, "check: set universe mismatch");
    bool ok = true;
    s.for_each([&](std::size_t v) {
        if (!ok) return;
        if (mode == SetMode::clique) {
            Bitset rest = s;
            rest.reset(v);
            if (!rest.subset_of(g.neighbors(v))) ok = false;
        } else {
            if (s.intersects(g.neighbors(v))) ok = false;
        }
    });
    return ok;
}

bool verify_coloring(const Graph& g, const Coloring& c) {
    if (c.assignment.size() != g.size()) return false;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (c.assignment[v] < 0 || c.assignment[v] >= c.color_count) return false;
    for (std::size_t v = 0; v < g.size(); ++v) {
        bool ok = true;
        g.neighbors(v).for_each([&](std::size_t u) {
            if (c.assignment[u] == c.assignment[v]) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

std::size_t vertex_by_label(const Graph& g, uint64_t label) {
    const auto& ls = g.labels();
    auto it = std::lower_bound(ls.begin(), ls.end(), label);
    if (it != ls.end() && *it == label)
        return static_cast<std::size_t>(it - ls.begin());
    // labels are ascending for ring graphs but not for arbitrary ones
    for (std::size_t v = 0; v < ls.size(); ++v)
        if (ls[v] == label) return v;
    return Bitset::npos;
}

} // namespace zdchroma
