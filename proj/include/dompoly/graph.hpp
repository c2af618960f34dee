#ifndef DOMPOLY_GRAPH_HPP
#define DOMPOLY_GRAPH_HPP

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dompoly/errors.hpp"
#include "dompoly/sets.hpp"

namespace dompoly {

inline constexpr int kMaxVertices = 64;

/// Finite simple graph on at most 64 vertices {0, ..., n-1}. Adjacency is one
/// 64-bit neighbor mask per vertex; the edge list is kept sorted
/// lexicographically with u < v, which fixes the indices EdgeSet masks refer
/// to. Immutable after construction; duplicate input edges collapse.
class Graph {
public:
    Graph() = default; // the null graph

    explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n_), 0) {}

    Graph(int n, std::span<const std::pair<int, int>> edge_list)
        : n_(checked_order(n)), adj_(static_cast<std::size_t>(n_), 0) {
        for (auto [u, v] : edge_list) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw VertexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                       ") out of range for order " + std::to_string(n_));
            if (u == v)
                throw SelfLoop("self-loop at vertex " + std::to_string(u));
            adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }
        for (int u = 0; u < n_; ++u)
            for (int v : VertexSet{adj_[static_cast<std::size_t>(u)]})
                if (v > u) edges_.emplace_back(u, v);
    }

    Graph(int n, std::initializer_list<std::pair<int, int>> edge_list)
        : Graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size())) {}

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    VertexSet vertices() const { return VertexSet::first(n_); }
    VertexSet neighbors(int v) const { return VertexSet{adj_[static_cast<std::size_t>(v)]}; }
    VertexSet closed(int v) const { return neighbors(v).with(v); }
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
    int degree(int v) const { return neighbors(v).count(); }

    /// Open neighbor masks, indexed by vertex.
    std::span<const std::uint64_t> adjacency_masks() const { return adj_; }

    /// Canonical edge list: lexicographically sorted pairs with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// All edge indices as a mask. Requires m <= 64.
    EdgeSet edge_mask() const {
        require_edge_mask();
        return EdgeSet::first(size());
    }

    /// Index of edge {u,v} in the canonical edge list.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
        if (it == edges_.end() || *it != std::make_pair(u, v))
            throw std::invalid_argument("no edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        return static_cast<int>(it - edges_.begin());
    }

    void require_edge_mask() const {
        if (size() > 64)
            throw CapExceeded("edge masks need m <= 64, graph has m = " + std::to_string(size()));
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static int checked_order(int n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("graph order must lie in [0, 64], got " + std::to_string(n));
        return n;
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::pair<int, int>> edges_;
};

/// Multiset of component orders, sorted descending.
struct TypePartition {
    std::vector<int> parts;

    int sum() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    friend bool operator==(const TypePartition&, const TypePartition&) = default;
};

/// Proper 2-coloring of a graph without odd cycles. Components with at least
/// one edge get a (Y_i, Z_i) pair with the smallest vertex of the component in
/// Y_i; order-1 components are only counted.
struct Bipartition {
    std::vector<VertexSet> side_y;
    std::vector<VertexSet> side_z;
    std::vector<VertexSet> component_vertices;
    std::vector<int> component_edge_counts;
    int isolated_count = 0;

    int edge_component_count() const { return static_cast<int>(side_y.size()); }
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map; // new index -> original vertex
};

namespace detail {

inline void require_subset_of_vertices(const Graph& g, VertexSet w) {
    if (!w.subset_of(g.vertices()))
        throw std::invalid_argument("vertex set reaches outside the graph");
}

/// Connected component of `seed` in the subgraph induced on `scope`, over raw
/// neighbor masks.
inline std::uint64_t component_mask(std::span<const std::uint64_t> open_adj, int seed,
                                    std::uint64_t scope) {
    std::uint64_t comp = std::uint64_t{1} << seed;
    std::uint64_t frontier = comp;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1)
            next |= open_adj[static_cast<std::size_t>(std::countr_zero(rest))];
        next &= scope & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

/// Number of components of the subgraph induced on `w`; -1 if any component
/// has odd order.
inline int conformal_component_count(std::span<const std::uint64_t> open_adj, std::uint64_t w) {
    int k = 0;
    std::uint64_t rest = w;
    while (rest != 0) {
        std::uint64_t comp = component_mask(open_adj, std::countr_zero(rest), rest);
        if (std::popcount(comp) % 2 != 0) return -1;
        rest &= ~comp;
        ++k;
    }
    return k;
}

/// Calls `f` once for every connected superset of `cur` within `scope` that
/// avoids `banned`. `nbhd` must equal the union of closed neighborhoods of
/// `cur`. Each extension vertex is branched on once and then banned for the
/// later branches, so no set is produced twice.
template <class F>
void grow_connected(std::span<const std::uint64_t> open_adj, std::uint64_t cur,
                    std::uint64_t nbhd, std::uint64_t banned, std::uint64_t scope, F& f) {
    f(cur);
    const std::uint64_t ext = nbhd & scope & ~cur & ~banned;
    for (std::uint64_t rest = ext; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const std::uint64_t vbit = std::uint64_t{1} << v;
        grow_connected(open_adj, cur | vbit,
                       nbhd | open_adj[static_cast<std::size_t>(v)] | vbit, banned, scope, f);
        banned |= vbit;
    }
}

} // namespace detail

inline VertexSet closed_neighborhood(const Graph& g, VertexSet w) {
    detail::require_subset_of_vertices(g, w);
    VertexSet result = w;
    for (int v : w) result |= g.neighbors(v);
    return result;
}

inline bool is_dominating(const Graph& g, VertexSet w) {
    return closed_neighborhood(g, w) == g.vertices();
}

/// Edges with exactly one endpoint in w, as a mask over canonical edge
/// indices. Requires m <= 64.
inline EdgeSet boundary_edges(const Graph& g, VertexSet w) {
    detail::require_subset_of_vertices(g, w);
    g.require_edge_mask();
    EdgeSet result;
    int i = 0;
    for (auto [u, v] : g.edges()) {
        if (w.contains(u) != w.contains(v)) result |= EdgeSet::single(i);
        ++i;
    }
    return result;
}

/// Vertex sets of the connected components, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> result;
    std::uint64_t rest = g.vertices().bits;
    while (rest != 0) {
        std::uint64_t comp =
            detail::component_mask(g.adjacency_masks(), std::countr_zero(rest), rest);
        result.push_back(VertexSet{comp});
        rest &= ~comp;
    }
    return result;
}

inline TypePartition type_partition(const Graph& g) {
    TypePartition t;
    for (VertexSet comp : components(g)) t.parts.push_back(comp.count());
    std::sort(t.parts.begin(), t.parts.end(), std::greater<>());
    return t;
}

/// Proper 2-coloring per component, or nullopt if some component carries an
/// odd cycle.
inline std::optional<Bipartition> bipartition(const Graph& g) {
    Bipartition b;
    std::uint64_t rest = g.vertices().bits;
    while (rest != 0) {
        const int seed = std::countr_zero(rest);
        const std::uint64_t comp = detail::component_mask(g.adjacency_masks(), seed, rest);
        rest &= ~comp;
        if (std::popcount(comp) == 1) {
            ++b.isolated_count;
            continue;
        }
        // Layer BFS from the smallest vertex; even layers form Y.
        std::uint64_t y = std::uint64_t{1} << seed, z = 0;
        std::uint64_t frontier = y;
        bool to_z = true;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t r = frontier; r != 0; r &= r - 1)
                next |= g.adjacency_masks()[static_cast<std::size_t>(std::countr_zero(r))];
            next &= comp & ~(y | z);
            (to_z ? z : y) |= next;
            frontier = next;
            to_z = !to_z;
        }
        int edge_count = 0;
        for (std::uint64_t r = comp; r != 0; r &= r - 1) {
            const int u = std::countr_zero(r);
            const std::uint64_t same = g.neighbors(u).bits & ((y >> u) & 1u ? y : z);
            if (same != 0) return std::nullopt;
            edge_count += g.degree(u);
        }
        b.side_y.push_back(VertexSet{y});
        b.side_z.push_back(VertexSet{z});
        b.component_vertices.push_back(VertexSet{comp});
        b.component_edge_counts.push_back(edge_count / 2);
    }
    return b;
}

/// Subgraph induced on w, relabeled to {0, ..., |w|-1} preserving order.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet w) {
    detail::require_subset_of_vertices(g, w);
    std::vector<int> map;
    map.reserve(static_cast<std::size_t>(w.count()));
    int inverse[kMaxVertices];
    for (int v : w) {
        inverse[v] = static_cast<int>(map.size());
        map.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (w.contains(u) && w.contains(v)) edges.emplace_back(inverse[u], inverse[v]);
    return {Graph(static_cast<int>(map.size()), edges), std::move(map)};
}

/// Same vertices, edge set restricted to the mask f over canonical indices.
inline Graph spanning_subgraph(const Graph& g, EdgeSet f) {
    g.require_edge_mask();
    if (!f.subset_of(g.edge_mask()))
        throw std::invalid_argument("edge set reaches outside the graph");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(f.count()));
    for (int i : f) edges.push_back(g.edges()[static_cast<std::size_t>(i)]);
    return Graph(g.order(), edges);
}

inline Graph delete_vertices(const Graph& g, VertexSet w) {
    return induced_subgraph(g, g.vertices().minus(w)).graph;
}

/// Calls f(W) for every vertex set W containing v whose induced subgraph is
/// connected. Cost is linear in the number of such sets.
template <class F>
void for_each_connected_induced_containing(const Graph& g, int v, F&& f) {
    if (v < 0 || v >= g.order())
        throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
    auto call = [&f](std::uint64_t w) { f(VertexSet{w}); };
    detail::grow_connected(g.adjacency_masks(), std::uint64_t{1} << v, g.closed(v).bits,
                           std::uint64_t{0}, g.vertices().bits, call);
}

/// Calls f(W, k) for every W whose induced components all have even order,
/// where k is the component count. The empty set qualifies with k = 0. Scans
/// all 2^n subsets.
template <class F>
void for_each_conformal_induced(const Graph& g, F&& f) {
    const std::uint64_t full = g.vertices().bits;
    std::uint64_t w = 0;
    while (true) {
        const int k = detail::conformal_component_count(g.adjacency_masks(), w);
        if (k >= 0) f(VertexSet{w}, k);
        if (w == full) break;
        ++w;
    }
}

/// Largest size of a set with no internal edges, by subset scan.
inline int independence_number_brute(const Graph& g, int enumeration_cap = 24) {
    if (g.order() > enumeration_cap)
        throw CapExceeded("independence scan capped at n <= " + std::to_string(enumeration_cap) +
                          ", graph has n = " + std::to_string(g.order()));
    int best = 0;
    const std::uint64_t full = g.vertices().bits;
    std::uint64_t w = 0;
    while (true) {
        bool independent = true;
        for (std::uint64_t rest = w; rest != 0; rest &= rest - 1) {
            if ((g.adjacency_masks()[static_cast<std::size_t>(std::countr_zero(rest))] & w) != 0) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, std::popcount(w));
        if (w == full) break;
        ++w;
    }
    return best;
}

} // namespace dompoly

#endif // DOMPOLY_GRAPH_HPP
