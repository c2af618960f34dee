#ifndef DOMPOLY_ALGORITHMS_HPP
#define DOMPOLY_ALGORITHMS_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

/// Caps and parallelism for the exponential subset loops. Caps bound the
/// exponent, so the worst admitted loop is 2^cap iterations.
struct AlgoConfig {
    int vertex_enum_cap = 24;
    int edge_enum_cap = 20;
    bool parallel = false;
};

namespace detail {

inline void require_vertex_cap(const Graph& g, const AlgoConfig& cfg, std::string_view what) {
    if (cfg.vertex_enum_cap < 0 || cfg.vertex_enum_cap > 64)
        throw std::invalid_argument("vertex_enum_cap must lie in [0, 64]");
    if (g.order() > cfg.vertex_enum_cap)
        throw CapExceeded(std::string(what) + ": vertex enumeration cap " +
                          std::to_string(cfg.vertex_enum_cap) + " exceeded, n = " +
                          std::to_string(g.order()));
    if (g.order() >= 64)
        throw CapExceeded(std::string(what) + ": a 2^64 subset loop is not runnable");
}

inline void require_edge_cap(const Graph& g, const AlgoConfig& cfg, std::string_view what) {
    if (cfg.edge_enum_cap < 0 || cfg.edge_enum_cap > 64)
        throw std::invalid_argument("edge_enum_cap must lie in [0, 64]");
    if (g.size() > cfg.edge_enum_cap)
        throw CapExceeded(std::string(what) + ": edge enumeration cap " +
                          std::to_string(cfg.edge_enum_cap) + " exceeded, m = " +
                          std::to_string(g.size()));
    if (g.size() >= 64)
        throw CapExceeded(std::string(what) + ": a 2^64 subset loop is not runnable");
}

/// Splits [0, count) into fixed chunks, evaluates them (concurrently when
/// asked), and merges the partials in chunk order. Chunking depends only on
/// count and worker count, never on scheduling, so results are reproducible.
template <class Partial, class RangeFn, class MergeFn>
Partial reduce_ranges(std::uint64_t count, bool parallel, RangeFn range_fn, MergeFn merge,
                      std::uint64_t min_chunk = 1024) {
    std::uint64_t workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    workers = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count / min_chunk, 1));
    if (workers <= 1) return range_fn(std::uint64_t{0}, count);

    const std::uint64_t chunk = count / workers;
    std::vector<std::future<Partial>> futures;
    futures.reserve(static_cast<std::size_t>(workers));
    for (std::uint64_t t = 0; t < workers; ++t) {
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = (t + 1 == workers) ? count : lo + chunk;
        futures.push_back(std::async(std::launch::async,
                                     [lo, hi, &range_fn] { return range_fn(lo, hi); }));
    }
    Partial acc = futures.front().get();
    for (std::size_t t = 1; t < futures.size(); ++t) merge(acc, futures[t].get());
    return acc;
}

inline std::vector<std::uint64_t> closed_masks(const Graph& g) {
    std::vector<std::uint64_t> closed(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) closed[static_cast<std::size_t>(v)] = g.closed(v).bits;
    return closed;
}

inline std::uint64_t neighborhood_mask(const std::vector<std::uint64_t>& closed, std::uint64_t w) {
    std::uint64_t nb = 0;
    for (std::uint64_t rest = w; rest != 0; rest &= rest - 1)
        nb |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
    return nb;
}

/// diff[r] = sum over vertex sets W with |V \ N[W]| = r of (-1)^{|W|}.
/// Feeds the neighborhood-complement expansion, the single-coefficient
/// formula and the vanishing test for the domination number.
inline std::vector<long long> neighborhood_deficiency_counts(const Graph& g,
                                                             const AlgoConfig& cfg,
                                                             std::string_view what) {
    require_vertex_cap(g, cfg, what);
    const int n = g.order();
    const auto closed = closed_masks(g);
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
        for (std::uint64_t w = lo; w < hi; ++w) {
            const int deficiency = n - std::popcount(neighborhood_mask(closed, w));
            counts[static_cast<std::size_t>(deficiency)] += (std::popcount(w) & 1) ? -1 : 1;
        }
        return counts;
    };
    auto add = [](std::vector<long long>& acc, const std::vector<long long>& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
    };
    return reduce_ranges<std::vector<long long>>(std::uint64_t{1} << n, cfg.parallel, scan, add);
}

/// Bipartiteness of the spanning subgraph (V, F) plus the number of its
/// components containing at least one edge, via a parity union-find. Returns
/// nullopt when F closes an odd cycle.
inline std::optional<int> bipartite_edge_components(const Graph& g, std::uint64_t edge_bits) {
    std::array<int, kMaxVertices> parent;
    std::array<std::uint8_t, kMaxVertices> parity{};
    for (int v = 0; v < g.order(); ++v) parent[static_cast<std::size_t>(v)] = v;

    auto find = [&](int v, int& parity_out) {
        int p = 0;
        while (parent[static_cast<std::size_t>(v)] != v) {
            p ^= parity[static_cast<std::size_t>(v)];
            v = parent[static_cast<std::size_t>(v)];
        }
        parity_out = p;
        return v;
    };

    std::uint64_t touched = 0;
    for (std::uint64_t rest = edge_bits; rest != 0; rest &= rest - 1) {
        const auto [u, v] = g.edges()[static_cast<std::size_t>(std::countr_zero(rest))];
        touched |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        int pu = 0, pv = 0;
        const int ru = find(u, pu), rv = find(v, pv);
        if (ru == rv) {
            if (pu == pv) return std::nullopt; // closes an odd cycle
        } else {
            parent[static_cast<std::size_t>(ru)] = rv;
            parity[static_cast<std::size_t>(ru)] = static_cast<std::uint8_t>(pu ^ pv ^ 1);
        }
    }
    std::uint64_t roots = 0;
    for (std::uint64_t rest = touched; rest != 0; rest &= rest - 1) {
        int p = 0;
        roots |= std::uint64_t{1} << find(std::countr_zero(rest), p);
    }
    return std::popcount(roots);
}

} // namespace detail

/// Definitional count: for every vertex subset, test domination and tally by
/// size. Serves as the oracle for all other representations.
inline Polynomial dp_brute_force(const Graph& g, const AlgoConfig& cfg = {}) {
    detail::require_vertex_cap(g, cfg, "dp_brute_force");
    const int n = g.order();
    const auto closed = detail::closed_masks(g);
    const std::uint64_t full = g.vertices().bits;
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
        for (std::uint64_t w = lo; w < hi; ++w)
            if (detail::neighborhood_mask(closed, w) == full)
                ++counts[static_cast<std::size_t>(std::popcount(w))];
        return counts;
    };
    auto add = [](std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
    };
    auto counts =
        detail::reduce_ranges<std::vector<std::uint64_t>>(std::uint64_t{1} << n, cfg.parallel, scan, add);
    std::vector<BigInt> coef(counts.begin(), counts.end());
    return Polynomial(std::move(coef));
}

/// Neighborhood-complement expansion: sum over all W of
/// (-1)^{|W|} (1+x)^{|V \ N[W]|}.
inline Polynomial dp_inclusion_exclusion(const Graph& g, const AlgoConfig& cfg = {}) {
    const auto diff = detail::neighborhood_deficiency_counts(g, cfg, "dp_inclusion_exclusion");
    Polynomial result;
    Polynomial power = Polynomial::one();
    const Polynomial base = binomial_power(1);
    for (std::size_t r = 0; r < diff.size(); ++r) {
        if (diff[r] != 0) result += power * BigInt(diff[r]);
        power = power * base;
    }
    return result;
}

/// Component-type expansion: sum over all W of the product, over the orders i
/// of the components of G[W], of (x^i + (-1)^i).
inline Polynomial dp_type_sum(const Graph& g, const AlgoConfig& cfg = {}) {
    detail::require_vertex_cap(g, cfg, "dp_type_sum");
    const int n = g.order();
    std::vector<std::uint64_t> open(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) open[static_cast<std::size_t>(v)] = g.neighbors(v).bits;
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        Polynomial sum;
        for (std::uint64_t w = lo; w < hi; ++w) {
            Polynomial term = Polynomial::one();
            std::uint64_t rest = w;
            while (rest != 0) {
                const std::uint64_t comp = detail::component_mask(open, std::countr_zero(rest), rest);
                rest &= ~comp;
                const int i = std::popcount(comp);
                term *= Polynomial::monomial(i) + Polynomial::constant((i & 1) ? -1 : 1);
            }
            sum += term;
        }
        return sum;
    };
    auto add = [](Polynomial& acc, const Polynomial& part) { acc += part; };
    return detail::reduce_ranges<Polynomial>(std::uint64_t{1} << n, cfg.parallel, scan, add);
}

struct RecursionStats {
    std::uint64_t subproblems = 0;    // distinct induced subgraphs solved
    std::uint64_t connected_sets = 0; // connected sets enumerated across pivots
};

namespace detail {

struct RecursiveSolver {
    std::span<const std::uint64_t> open;
    std::vector<std::uint64_t> closed;
    std::unordered_map<std::uint64_t, Polynomial> memo;
    RecursionStats* stats;

    Polynomial solve(std::uint64_t s) {
        if (s == 0) return Polynomial::one();
        if (auto it = memo.find(s); it != memo.end()) return it->second;
        if (stats) ++stats->subproblems;

        // Pivot on a vertex of maximum degree within G[s], lowest index first.
        int pivot = -1, best_degree = -1;
        for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int d = std::popcount(open[static_cast<std::size_t>(v)] & s);
            if (d > best_degree) {
                best_degree = d;
                pivot = v;
            }
        }

        Polynomial result = solve(s & ~(std::uint64_t{1} << pivot));
        auto accumulate = [&](std::uint64_t w) {
            if (stats) ++stats->connected_sets;
            std::uint64_t closed_nbhd = 0;
            for (std::uint64_t rest = w; rest != 0; rest &= rest - 1)
                closed_nbhd |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
            const int size = std::popcount(w);
            Polynomial weight =
                Polynomial::monomial(size) + Polynomial::constant((size & 1) ? -1 : 1);
            result += weight * solve(s & ~closed_nbhd);
        };
        grow_connected(open, std::uint64_t{1} << pivot,
                       closed[static_cast<std::size_t>(pivot)], std::uint64_t{0}, s, accumulate);

        return memo.emplace(s, std::move(result)).first->second;
    }
};

} // namespace detail

/// Vertex decomposition: D(G) = D(G - v) + sum over connected sets W
/// containing v of (x^{|W|} + (-1)^{|W|}) D(G - N[W]), memoized on the
/// surviving vertex set.
inline Polynomial dp_recursive(const Graph& g, const AlgoConfig& cfg = {},
                               RecursionStats* stats = nullptr) {
    detail::require_vertex_cap(g, cfg, "dp_recursive");
    detail::RecursiveSolver solver{g.adjacency_masks(), detail::closed_masks(g), {}, stats};
    return solver.solve(g.vertices().bits);
}

/// Weight of one spanning subgraph (V, F) in the bipartite expansion: zero
/// when F closes an odd cycle, otherwise
///   x^l * prod_i (-1)^{|E_i|} ((-1)^{|Y_i|} x^{|Z_i|} + (-1)^{|Z_i|} x^{|Y_i|})
/// over the edge-having components, with l the number of isolated vertices.
inline Polynomial h_value(const Graph& g, EdgeSet f) {
    const Graph sub = spanning_subgraph(g, f);
    const auto parts = bipartition(sub);
    if (!parts) return {};
    Polynomial result = Polynomial::monomial(parts->isolated_count);
    for (std::size_t i = 0; i < parts->side_y.size(); ++i) {
        const int a = parts->side_y[i].count();
        const int b = parts->side_z[i].count();
        Polynomial bracket = Polynomial::monomial(b, (a & 1) ? -1 : 1);
        bracket += Polynomial::monomial(a, (b & 1) ? -1 : 1);
        if (parts->component_edge_counts[i] & 1) bracket *= BigInt(-1);
        result *= bracket;
    }
    return result;
}

/// Spanning-subgraph expansion: D(G) = sum of h_value over all F subseteq E.
/// Only odd-cycle-free F contribute; they are filtered with a parity
/// union-find before any subgraph is materialized.
inline Polynomial dp_bipartite_spanning(const Graph& g, const AlgoConfig& cfg = {}) {
    detail::require_edge_cap(g, cfg, "dp_bipartite_spanning");
    const int m = g.size();
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        Polynomial sum;
        for (std::uint64_t f = lo; f < hi; ++f)
            if (detail::bipartite_edge_components(g, f)) sum += h_value(g, EdgeSet{f});
        return sum;
    };
    auto add = [](Polynomial& acc, const Polynomial& part) { acc += part; };
    return detail::reduce_ranges<Polynomial>(std::uint64_t{1} << m, cfg.parallel, scan, add);
}

/// Essential-set expansion: with Ess the sets U containing some vertex whose
/// closed neighborhood lies inside U,
///   D(G) = (-1)^n sum_{U in Ess} (-1)^{|U|} ((1+x)^{p(U)} - 1),
/// p(U) = #{u in U : N[u] subseteq U}. Requires n >= 1.
inline Polynomial dp_essential_sets(const Graph& g, const AlgoConfig& cfg = {}) {
    if (g.order() == 0)
        throw EmptyGraph("dp_essential_sets needs at least one vertex");
    detail::require_vertex_cap(g, cfg, "dp_essential_sets");
    const int n = g.order();
    const auto closed = detail::closed_masks(g);
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
        for (std::uint64_t u = lo; u < hi; ++u) {
            int p = 0;
            for (std::uint64_t rest = u; rest != 0; rest &= rest - 1)
                if ((closed[static_cast<std::size_t>(std::countr_zero(rest))] & ~u) == 0) ++p;
            if (p > 0) counts[static_cast<std::size_t>(p)] += (std::popcount(u) & 1) ? -1 : 1;
        }
        return counts;
    };
    auto add = [](std::vector<long long>& acc, const std::vector<long long>& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
    };
    const auto counts =
        detail::reduce_ranges<std::vector<long long>>(std::uint64_t{1} << n, cfg.parallel, scan, add);
    Polynomial result;
    for (int p = 1; p <= n; ++p)
        if (counts[static_cast<std::size_t>(p)] != 0)
            result += (binomial_power(p) - Polynomial::one()) *
                      BigInt(counts[static_cast<std::size_t>(p)]);
    if (n & 1) result *= BigInt(-1);
    return result;
}

/// Single coefficient of x^k without assembling the polynomial:
/// d_k = sum over W with |V \ N[W]| >= k of (-1)^{|W|} C(|V \ N[W]|, k).
inline BigInt coefficient_by_binomial(const Graph& g, int k, const AlgoConfig& cfg = {}) {
    if (k < 0 || k > g.order())
        throw std::invalid_argument("coefficient index must lie in [0, n]");
    const auto diff = detail::neighborhood_deficiency_counts(g, cfg, "coefficient_by_binomial");
    BigInt sum = 0;
    for (int r = k; r <= g.order(); ++r)
        sum += BigInt(diff[static_cast<std::size_t>(r)]) * binomial_coefficient(r, k);
    return sum;
}

/// Number of dominating sets as a sum of 2^{components} over the induced
/// subgraphs whose components all have even order.
inline BigInt count_dominating_conformal(const Graph& g, const AlgoConfig& cfg = {}) {
    detail::require_vertex_cap(g, cfg, "count_dominating_conformal");
    const int n = g.order();
    std::vector<std::uint64_t> open(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) open[static_cast<std::size_t>(v)] = g.neighbors(v).bits;
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        BigInt sum = 0;
        for (std::uint64_t w = lo; w < hi; ++w) {
            const int k = detail::conformal_component_count(open, w);
            if (k >= 0) sum += BigInt(1) << k;
        }
        return sum;
    };
    auto add = [](BigInt& acc, const BigInt& part) { acc += part; };
    return detail::reduce_ranges<BigInt>(std::uint64_t{1} << n, cfg.parallel, scan, add);
}

/// Domination number as the least k whose coefficient (by the binomial
/// formula) is nonzero.
inline int domination_number_by_vanishing(const Graph& g, const AlgoConfig& cfg = {}) {
    const auto diff = detail::neighborhood_deficiency_counts(g, cfg, "domination_number_by_vanishing");
    for (int k = 0; k <= g.order(); ++k) {
        BigInt sum = 0;
        for (int r = k; r <= g.order(); ++r)
            sum += BigInt(diff[static_cast<std::size_t>(r)]) * binomial_coefficient(r, k);
        if (sum != 0) return k;
    }
    return g.order(); // unreachable: the coefficient of x^n is always 1
}

/// Domination number by scanning subsets in increasing size.
inline int domination_number_direct(const Graph& g, const AlgoConfig& cfg = {}) {
    detail::require_vertex_cap(g, cfg, "domination_number_direct");
    const int n = g.order();
    if (n == 0) return 0;
    const auto closed = detail::closed_masks(g);
    const std::uint64_t full = g.vertices().bits;
    for (int s = 1; s <= n; ++s) {
        // Gosper's hack walks all masks of popcount s in increasing value.
        std::uint64_t w = (std::uint64_t{1} << s) - 1;
        while (w <= full) {
            if (detail::neighborhood_mask(closed, w) == full) return s;
            const std::uint64_t c = w & -w;
            const std::uint64_t r = w + c;
            if (r > full) break;
            w = (((w ^ r) >> 2) / c) | r;
        }
    }
    return n;
}

enum class Algorithm {
    brute,
    inclusion_exclusion,
    type_sum,
    recursive,
    bipartite_spanning,
    essential,
};

inline constexpr std::array<Algorithm, 6> kAllAlgorithms{
    Algorithm::brute,          Algorithm::inclusion_exclusion, Algorithm::type_sum,
    Algorithm::recursive,      Algorithm::bipartite_spanning,  Algorithm::essential,
};

constexpr std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::brute: return "brute";
        case Algorithm::inclusion_exclusion: return "inclexcl";
        case Algorithm::type_sum: return "typesum";
        case Algorithm::recursive: return "recursive";
        case Algorithm::bipartite_spanning: return "bipartite-spanning";
        case Algorithm::essential: return "essential";
    }
    return "unknown";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (Algorithm a : kAllAlgorithms)
        if (algorithm_name(a) == name) return a;
    return std::nullopt;
}

inline Polynomial dominating_polynomial(const Graph& g, Algorithm a, const AlgoConfig& cfg = {}) {
    switch (a) {
        case Algorithm::brute: return dp_brute_force(g, cfg);
        case Algorithm::inclusion_exclusion: return dp_inclusion_exclusion(g, cfg);
        case Algorithm::type_sum: return dp_type_sum(g, cfg);
        case Algorithm::recursive: return dp_recursive(g, cfg);
        case Algorithm::bipartite_spanning: return dp_bipartite_spanning(g, cfg);
        case Algorithm::essential: return dp_essential_sets(g, cfg);
    }
    throw std::invalid_argument("unknown algorithm selector");
}

/// Multiplies the polynomials of the connected components, computed by the
/// selected algorithm. Caps apply per component.
inline Polynomial dp_product_of_components(const Graph& g, Algorithm a,
                                           const AlgoConfig& cfg = {}) {
    Polynomial result = Polynomial::one();
    for (VertexSet comp : components(g))
        result *= dominating_polynomial(induced_subgraph(g, comp).graph, a, cfg);
    return result;
}

} // namespace dompoly

#endif // DOMPOLY_ALGORITHMS_HPP
