#ifndef ZDCHROMA_GRAPH_HPP
#define ZDCHROMA_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zdchroma/bitset.hpp"
#include "zdchroma/ring.hpp"

namespace zdchroma {

using VertexSet = Bitset;

enum class Provenance { gamma0, gamma, complement, synthetic };

std::string provenance_name(Provenance p);

struct Coloring {
    std::vector<int> assignment;   // one color per vertex, in [0, color_count)
    int color_count = 0;
};

// Simple undirected graph over bitset rows. Vertices carry a label (the
// canonical ring index of the element they stand for, or a synthetic id).
// Instances are immutable; build through GraphBuilder.
class Graph {
public:
    std::size_t size() const { return adj_.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
    const Bitset& neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].count(); }
    uint64_t label(std::size_t v) const { return labels_[v]; }
    const std::vector<uint64_t>& labels() const { return labels_; }
    Provenance provenance() const { return provenance_; }

    std::size_t edge_count() const;

private:
    friend class GraphBuilder;
    Graph() = default;

    std::vector<uint64_t> labels_;
    std::vector<Bitset> adj_;
    Provenance provenance_ = Provenance::synthetic;
};

class GraphBuilder {
public:
    GraphBuilder(std::size_t n, Provenance prov);

    void set_label(std::size_t v, uint64_t label) { g_.labels_[v] = label; }
    void add_edge(std::size_t u, std::size_t v);

    Graph finish();

private:
    Graph g_;
};

// Vertices are all ring elements (label = canonical index), x ~ y iff x != y
// and xy = 0. Vertex count equals the ring order.
Graph build_gamma0(const RingSpec& spec, uint64_t max_vertices = kDefaultMaxOrder);

// Induced subgraph on the nonzero zero-divisors. Empty for fields.
Graph build_gamma(const RingSpec& spec, uint64_t max_vertices = kDefaultMaxOrder);

Graph complement(const Graph& g);

// Induced subgraph on the vertices outside `drop`; labels carry over.
Graph delete_vertices(const Graph& g, const VertexSet& drop);

Graph graph_from_edges(std::size_t n,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                       Provenance prov = Provenance::synthetic);

enum class SetMode { clique, independent };

bool check(const Graph& g, const VertexSet& s, SetMode mode);
bool verify_coloring(const Graph& g, const Coloring& c);

// Position of a label in the graph's vertex list, or npos.
std::size_t vertex_by_label(const Graph& g, uint64_t label);

} // namespace zdchroma

#endif
