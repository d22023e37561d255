#include "hsp/graph.hpp"

#include "hsp/error.hpp"

#include <algorithm>
#include <string>

namespace hsp {

namespace {

constexpr int kMaxVertices = 1 << 16; // desk-scale tool, see README

void check_vertex_count(int n) {
    if (n < 0) raise(ErrorKind::InvalidArgument, "vertex count must be nonnegative");
    if (n >= kMaxVertices)
        raise(ErrorKind::TooLarge,
              "graphs with 2^16 or more vertices are not supported (n = " + std::to_string(n) + ")");
}

} // namespace

GraphBuilder::GraphBuilder(int n) : n_(n) {
    check_vertex_count(n);
    rows_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        raise(ErrorKind::IndexOutOfRange,
              "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n = " +
                  std::to_string(n_));
    if (u == v)
        raise(ErrorKind::InvalidEdge, "self-loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
}

Graph GraphBuilder::build() && {
    Graph g;
    g.n_ = n_;
    long long twice = 0;
    for (const auto& row : rows_) twice += static_cast<long long>(row.count());
    g.m_ = twice / 2;
    g.rows_ = std::move(rows_);
    return g;
}

Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

std::vector<int> normalized_vertex_set(std::span<const int> s, int n) {
    std::vector<int> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (int v : out)
        if (v < 0 || v >= n)
            raise(ErrorKind::IndexOutOfRange,
                  "vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> s) {
    const std::vector<int> verts = normalized_vertex_set(s, g.vertex_count());
    const int k = static_cast<int>(verts.size());
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(verts[i], verts[j])) b.add_edge(i, j);
    return std::move(b).build();
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    check_vertex_count(ng + nh);
    GraphBuilder b(ng + nh);
    for (int u = 0; u < ng; ++u)
        for (int v = u + 1; v < ng; ++v)
            if (g.adjacent(u, v)) b.add_edge(u, v);
    for (int u = 0; u < nh; ++u)
        for (int v = u + 1; v < nh; ++v)
            if (h.adjacent(u, v)) b.add_edge(ng + u, ng + v);
    return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    check_vertex_count(ng + nh);
    GraphBuilder b(ng + nh);
    for (int u = 0; u < ng; ++u)
        for (int v = u + 1; v < ng; ++v)
            if (g.adjacent(u, v)) b.add_edge(u, v);
    for (int u = 0; u < nh; ++u)
        for (int v = u + 1; v < nh; ++v)
            if (h.adjacent(u, v)) b.add_edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) b.add_edge(u, ng + v);
    return std::move(b).build();
}

Graph strong_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    const long long total = static_cast<long long>(ng) * nh;
    if (total >= kMaxVertices)
        raise(ErrorKind::TooLarge, "strong product would have " + std::to_string(total) + " vertices");
    const int n = static_cast<int>(total);
    GraphBuilder b(n);
    for (int a = 0; a < n; ++a) {
        const int ua = a / nh, va = a % nh;
        for (int c = a + 1; c < n; ++c) {
            const int uc = c / nh, vc = c % nh;
            const bool first_ok = (ua == uc) || g.adjacent(ua, uc);
            const bool second_ok = (va == vc) || h.adjacent(va, vc);
            if (first_ok && second_ok) b.add_edge(a, c);
        }
    }
    return std::move(b).build();
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph edgeless_graph(int n) { return GraphBuilder(n).build(); }

Graph disjoint_cliques(int t, int c) {
    if (t < 0 || c < 0) raise(ErrorKind::InvalidArgument, "disjoint_cliques wants t, c >= 0");
    const long long total = static_cast<long long>(t) * c;
    if (total >= kMaxVertices)
        raise(ErrorKind::TooLarge, "disjoint_cliques would have " + std::to_string(total) + " vertices");
    GraphBuilder b(static_cast<int>(total));
    for (int block = 0; block < t; ++block)
        for (int u = 0; u < c; ++u)
            for (int v = u + 1; v < c; ++v) b.add_edge(block * c + u, block * c + v);
    return std::move(b).build();
}

std::vector<int> bitset_to_vector(const Bitset& bits) {
    std::vector<int> out;
    out.reserve(bits.count());
    for (auto v = bits.find_first(); v != Bitset::npos; v = bits.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

Bitset vector_to_bitset(std::span<const int> members, int n) {
    Bitset out(static_cast<std::size_t>(n));
    for (int v : members) {
        if (v < 0 || v >= n)
            raise(ErrorKind::IndexOutOfRange,
                  "vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
        out.set(static_cast<std::size_t>(v));
    }
    return out;
}

int pair_count(int n) { return n * (n - 1) / 2; }

std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(pair_count(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    if (pair_count(n) > 64) raise(ErrorKind::TooLarge, "edge mask only covers up to 64 pairs");
    GraphBuilder b(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1ULL) b.add_edge(u, v);
    return std::move(b).build();
}

std::uint64_t edge_mask(const Graph& g) {
    const int n = g.vertex_count();
    if (pair_count(n) > 64) raise(ErrorKind::TooLarge, "edge mask only covers up to 64 pairs");
    std::uint64_t mask = 0;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (g.adjacent(u, v)) mask |= 1ULL << bit;
    return mask;
}

GraphStream::GraphStream(int n) : n_(n), pairs_(vertex_pairs(n)) {
    if (pair_count(n) > 62)
        raise(ErrorKind::TooLarge, "cannot stream graphs on " + std::to_string(n) + " vertices");
    total_ = 1ULL << pairs_.size();
}

bool GraphStream::next(Graph& out) {
    if (mask_ >= total_) return false;
    GraphBuilder b(n_);
    for (std::size_t bit = 0; bit < pairs_.size(); ++bit)
        if (mask_ >> bit & 1ULL) b.add_edge(pairs_[bit].first, pairs_[bit].second);
    out = std::move(b).build();
    ++mask_;
    return true;
}

} // namespace hsp
