#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hsp {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Finite simple undirected graph. Vertices are 0..n-1 and adjacency is one
// bitset row per vertex. Instances are immutable after construction and safe
// to share between threads.
class Graph {
public:
    Graph() = default; // the empty graph (n = 0)

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const Bitset& neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return static_cast<int>(rows_[v].count()); }

    bool operator==(const Graph& other) const = default;

private:
    friend class GraphBuilder;

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> rows_;
};

// The only way to assemble a Graph; add_edge keeps adjacency symmetric and
// loop-free so every built graph satisfies the invariants by construction.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    // throws InvalidEdge on u == v, IndexOutOfRange on u or v >= n;
    // duplicate edges are fine
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return rows_[u].test(v); }
    int vertex_count() const { return n_; }

    Graph build() &&;

private:
    int n_ = 0;
    std::vector<Bitset> rows_;
};

Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

// Subgraph induced by s; vertex i of the result is the i-th smallest member
// of s (so the sorted, deduplicated s is the new-to-old index map).
Graph induced_subgraph(const Graph& g, std::span<const int> s);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

// disjoint union plus every cross edge
Graph join(const Graph& g, const Graph& h);

// Strong product: vertex (u,v) gets index u*n(h)+v, so the copies of a g
// vertex form a contiguous block. (u,v)~(u',v') iff both coordinates are
// adjacent-or-equal and the pairs differ.
Graph strong_product(const Graph& g, const Graph& h);

Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph disjoint_cliques(int t, int c); // t disjoint copies of K_c

// sorted + deduplicated copy of s; throws IndexOutOfRange unless all < n
std::vector<int> normalized_vertex_set(std::span<const int> s, int n);

std::vector<int> bitset_to_vector(const Bitset& bits);
Bitset vector_to_bitset(std::span<const int> members, int n);

// --- labeled-graph enumeration plumbing ---------------------------------
//
// Vertex pairs are ordered (0,1),(0,2),...,(0,n-1),(1,2),...; an edge mask
// has bit b set iff the b-th pair is an edge.

int pair_count(int n);
std::vector<std::pair<int, int>> vertex_pairs(int n);
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask(const Graph& g); // requires pair_count(n) <= 64

// Streams every labeled n-vertex graph once, in ascending edge-mask order.
class GraphStream {
public:
    explicit GraphStream(int n);
    bool next(Graph& out);

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
    std::uint64_t total_ = 0;
    std::vector<std::pair<int, int>> pairs_;
};

} // namespace hsp
