#ifndef DOMPOLY_IDENTITIES_HPP
#define DOMPOLY_IDENTITIES_HPP

#include <json.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dompoly/algorithms.hpp"
#include "dompoly/formats.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

enum class CheckStatus { pass, fail, skipped };

constexpr std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

/// One identity checked on one graph. A fail always carries a witness with
/// both sides in full; a skip carries the violated cap.
struct ReportEntry {
    std::string identity;
    std::string graph; // graph6
    CheckStatus status = CheckStatus::pass;
    std::string witness;
};

struct VerificationReport {
    std::vector<ReportEntry> entries;

    std::size_t count(CheckStatus s) const {
        std::size_t k = 0;
        for (const auto& e : entries) k += (e.status == s);
        return k;
    }
    bool all_passed() const { return count(CheckStatus::fail) == 0; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["pass"] = count(CheckStatus::pass);
        j["fail"] = count(CheckStatus::fail);
        j["skipped"] = count(CheckStatus::skipped);
        j["all_passed"] = all_passed();
        auto& list = j["entries"] = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
            nlohmann::ordered_json row;
            row["identity"] = e.identity;
            row["graph"] = e.graph;
            row["status"] = std::string(to_string(e.status));
            if (!e.witness.empty()) row["witness"] = e.witness;
            list.push_back(std::move(row));
        }
        return j;
    }

    std::string to_table() const {
        std::size_t id_width = 8, graph_width = 5;
        for (const auto& e : entries) {
            id_width = std::max(id_width, e.identity.size());
            graph_width = std::max(graph_width, e.graph.size());
        }
        auto pad = [](std::string s, std::size_t width) {
            s.resize(std::max(width, s.size()), ' ');
            return s;
        };
        std::string out = pad("identity", id_width) + "  " + pad("graph", graph_width) +
                          "  status   witness\n";
        for (const auto& e : entries) {
            out += pad(e.identity, id_width) + "  " + pad(e.graph, graph_width) + "  " +
                   pad(std::string(to_string(e.status)), 7) + "  " + e.witness + "\n";
        }
        out += std::to_string(count(CheckStatus::pass)) + " pass, " +
               std::to_string(count(CheckStatus::fail)) + " fail, " +
               std::to_string(count(CheckStatus::skipped)) + " skipped\n";
        return out;
    }
};

/// Expected value of the alternating edge-subset sum on an odd-cycle-free
/// graph: x^l * prod_i ((-1)^{|Y_i|} x^{|Z_i|} + (-1)^{|Z_i|} x^{|Y_i|}).
/// Unlike the per-subgraph weight in the spanning expansion, no (-1)^{|E_i|}
/// factor appears: the alternation over edge subsets is already the sum of
/// those signed weights.
inline Polynomial edge_alternating_closed_form(const Bipartition& parts) {
    Polynomial result = Polynomial::monomial(parts.isolated_count);
    for (std::size_t i = 0; i < parts.side_y.size(); ++i) {
        const int a = parts.side_y[i].count();
        const int b = parts.side_z[i].count();
        Polynomial bracket = Polynomial::monomial(b, (a & 1) ? -1 : 1);
        bracket += Polynomial::monomial(a, (b & 1) ? -1 : 1);
        result *= bracket;
    }
    return result;
}

namespace detail {

template <class Body>
ReportEntry checked_entry(std::string identity, const Graph& g, Body body) {
    ReportEntry entry{std::move(identity), graph6_encode(g), CheckStatus::pass, ""};
    try {
        body(entry);
    } catch (const CapExceeded& e) {
        entry.status = CheckStatus::skipped;
        entry.witness = e.what();
    }
    return entry;
}

inline void fail(ReportEntry& entry, std::string witness) {
    entry.status = CheckStatus::fail;
    entry.witness = std::move(witness);
}

} // namespace detail

/// S(G) = sum over F subseteq E of (-1)^{|F|} D((V, F), x) equals the closed
/// form above when G has no odd cycle (and is then nonzero), and vanishes
/// exactly when G has one.
inline ReportEntry check_edge_alternating_sum(const Graph& g, const AlgoConfig& cfg = {}) {
    return detail::checked_entry("edge-alternating-sum", g, [&](ReportEntry& entry) {
        detail::require_edge_cap(g, cfg, "check_edge_alternating_sum");
        Polynomial sum;
        const std::uint64_t subsets = std::uint64_t{1} << g.size();
        for (std::uint64_t f = 0; f < subsets; ++f) {
            const Polynomial d = dp_brute_force(spanning_subgraph(g, EdgeSet{f}), cfg);
            if (std::popcount(f) & 1)
                sum -= d;
            else
                sum += d;
        }
        if (const auto parts = bipartition(g)) {
            const Polynomial expected = edge_alternating_closed_form(*parts);
            if (sum != expected || sum.is_zero())
                detail::fail(entry, "sum = " + sum.to_string() + ", closed form = " +
                                        expected.to_string());
        } else if (!sum.is_zero()) {
            detail::fail(entry, "graph has an odd cycle but sum = " + sum.to_string());
        }
    });
}

/// When the spanning subgraph (V, A) contains an odd cycle,
/// sum over F subseteq A of (-1)^{|F|} D(G - F, x) = 0.
inline ReportEntry check_local_odd_cycle(const Graph& g, EdgeSet a, const AlgoConfig& cfg = {}) {
    g.require_edge_mask();
    if (!a.subset_of(g.edge_mask()))
        throw std::invalid_argument("edge set reaches outside the graph");
    if (bipartition(spanning_subgraph(g, a)))
        throw NotOddCyclic("designated edges span no odd cycle");
    return detail::checked_entry("local-odd-cycle", g, [&](ReportEntry& entry) {
        if (a.count() > cfg.edge_enum_cap)
            throw CapExceeded("check_local_odd_cycle: edge enumeration cap " +
                              std::to_string(cfg.edge_enum_cap) + " exceeded, |A| = " +
                              std::to_string(a.count()));
        Polynomial sum;
        const EdgeSet all = g.edge_mask();
        std::uint64_t f = a.bits;
        while (true) { // all submasks of a, including the empty one
            const Polynomial d =
                dp_brute_force(spanning_subgraph(g, all.minus(EdgeSet{f})), cfg);
            if (std::popcount(f) & 1)
                sum -= d;
            else
                sum += d;
            if (f == 0) break;
            f = (f - 1) & a.bits;
        }
        if (!sum.is_zero())
            detail::fail(entry, "alternating deletion sum = " + sum.to_string());
    });
}

/// Sum over W subseteq V of (-1)^{|W|} D(G[W], x) equals
/// prod over component orders i of (1 + (-x)^i).
inline ReportEntry check_vertex_alternating_sum(const Graph& g, const AlgoConfig& cfg = {}) {
    return detail::checked_entry("vertex-alternating-sum", g, [&](ReportEntry& entry) {
        detail::require_vertex_cap(g, cfg, "check_vertex_alternating_sum");
        Polynomial sum;
        const std::uint64_t subsets = std::uint64_t{1} << g.order();
        for (std::uint64_t w = 0; w < subsets; ++w) {
            const Polynomial d = dp_brute_force(induced_subgraph(g, VertexSet{w}).graph, cfg);
            if (std::popcount(w) & 1)
                sum -= d;
            else
                sum += d;
        }
        Polynomial expected = Polynomial::one();
        for (int i : type_partition(g).parts)
            expected *= Polynomial::one() + Polynomial::monomial(i, (i & 1) ? -1 : 1);
        if (sum != expected)
            detail::fail(entry, "sum = " + sum.to_string() + ", product form = " +
                                    expected.to_string());
    });
}

/// Parity facts: d(G) is odd; |D(G, -1)| is odd; d(G) - d(G - v) is even for
/// every vertex v.
inline std::vector<ReportEntry> check_parity_suite(const Graph& g, const AlgoConfig& cfg = {}) {
    const std::string g6 = graph6_encode(g);
    std::vector<ReportEntry> entries{
        {"parity-count-odd", g6, CheckStatus::pass, ""},
        {"parity-minus-one-odd", g6, CheckStatus::pass, ""},
        {"parity-vertex-deletion-even", g6, CheckStatus::pass, ""},
    };
    try {
        const Polynomial d = dp_brute_force(g, cfg);
        const BigInt total = d.evaluate(BigInt(1));
        if (total % 2 == 0)
            detail::fail(entries[0], "d(G) = " + total.str());
        const BigInt at_minus_one = d.evaluate(BigInt(-1));
        if (at_minus_one % 2 == 0)
            detail::fail(entries[1], "D(G, -1) = " + at_minus_one.str());
        for (int v = 0; v < g.order(); ++v) {
            const BigInt deleted =
                dp_brute_force(delete_vertices(g, VertexSet::single(v)), cfg).evaluate(BigInt(1));
            if ((total - deleted) % 2 != 0) {
                detail::fail(entries[2], "vertex " + std::to_string(v) + ": d(G) = " +
                                             total.str() + ", d(G - v) = " + deleted.str());
                break;
            }
        }
    } catch (const CapExceeded& e) {
        for (auto& entry : entries) {
            entry.status = CheckStatus::skipped;
            entry.witness = e.what();
        }
    }
    return entries;
}

/// D(G, -1) = (-1)^n * sum over odd-cycle-free F subseteq E of
/// (-1)^{|F|} 2^{c(F)}, with c(F) the number of components of (V, F) having
/// at least one edge.
inline ReportEntry check_minus_one_bipartite_formula(const Graph& g, const AlgoConfig& cfg = {}) {
    return detail::checked_entry("minus-one-bipartite", g, [&](ReportEntry& entry) {
        detail::require_edge_cap(g, cfg, "check_minus_one_bipartite_formula");
        const BigInt lhs = dp_brute_force(g, cfg).evaluate(BigInt(-1));
        BigInt rhs = 0;
        const std::uint64_t subsets = std::uint64_t{1} << g.size();
        for (std::uint64_t f = 0; f < subsets; ++f) {
            if (const auto c = detail::bipartite_edge_components(g, f)) {
                const BigInt weight = BigInt(1) << *c;
                rhs += (std::popcount(f) & 1) ? -weight : weight;
            }
        }
        if (g.order() & 1) rhs = -rhs;
        if (lhs != rhs)
            detail::fail(entry, "D(G, -1) = " + lhs.str() + ", signed subgraph sum = " + rhs.str());
    });
}

/// D(G, x) = sum over W subseteq V of
/// (-1)^{|W|} (1+x)^{n-|W|} x^{|W|} D(G[W], 1/x), with the reversal taken as
/// a polynomial via reversed_to_degree(|W|).
inline ReportEntry check_reciprocity(const Graph& g, const AlgoConfig& cfg = {}) {
    return detail::checked_entry("reciprocity", g, [&](ReportEntry& entry) {
        detail::require_vertex_cap(g, cfg, "check_reciprocity");
        const int n = g.order();
        std::vector<Polynomial> powers(static_cast<std::size_t>(n) + 1);
        powers[0] = Polynomial::one();
        for (int r = 1; r <= n; ++r)
            powers[static_cast<std::size_t>(r)] = powers[static_cast<std::size_t>(r - 1)] * binomial_power(1);
        const Polynomial lhs = dp_brute_force(g, cfg);
        Polynomial rhs;
        const std::uint64_t subsets = std::uint64_t{1} << n;
        for (std::uint64_t w = 0; w < subsets; ++w) {
            const int size = std::popcount(w);
            const Polynomial d = dp_brute_force(induced_subgraph(g, VertexSet{w}).graph, cfg);
            const Polynomial term =
                powers[static_cast<std::size_t>(n - size)] * d.reversed_to_degree(size);
            if (size & 1)
                rhs -= term;
            else
                rhs += term;
        }
        if (lhs != rhs)
            detail::fail(entry, "D(G, x) = " + lhs.to_string() + ", reciprocal sum = " +
                                    rhs.to_string());
    });
}

/// Alternating sum over proper subsets: with S = sum over W strictly inside V
/// of (-1)^{|W|} d(G[W]) 2^{n-|W|}, S = d(G) (1 - (-1)^n). For even n this is
/// the vanishing of the weighted half sum; the n = 1 edge case and all odd
/// orders give 2 d(G) instead, because only the two terms of (1 + (-1)^n)
/// d(G) cancel the W = V contribution. Requires n >= 1.
inline ReportEntry check_half_sum(const Graph& g, const AlgoConfig& cfg = {}) {
    if (g.order() == 0) throw EmptyGraph("check_half_sum needs at least one vertex");
    return detail::checked_entry("half-sum", g, [&](ReportEntry& entry) {
        detail::require_vertex_cap(g, cfg, "check_half_sum");
        const int n = g.order();
        BigInt sum = 0;
        const std::uint64_t full = g.vertices().bits;
        for (std::uint64_t w = 0; w < full; ++w) {
            const BigInt d = dp_brute_force(induced_subgraph(g, VertexSet{w}).graph, cfg)
                                 .evaluate(BigInt(1));
            const BigInt term = d << (n - std::popcount(w));
            sum += (std::popcount(w) & 1) ? -term : term;
        }
        const BigInt expected =
            (n & 1) ? BigInt(2) * dp_brute_force(g, cfg).evaluate(BigInt(1)) : BigInt(0);
        if (sum != expected)
            detail::fail(entry, "scaled proper-subset sum = " + sum.str() + ", expected " +
                                    expected.str());
    });
}

/// Runs every applicable identity on every graph of the corpus. The
/// odd-cycle deletion identity is exercised with A = E on the graphs that
/// contain an odd cycle; the half-sum identity on graphs with n >= 1. Caps
/// become skipped entries, never errors.
inline VerificationReport run_all(std::span<const Graph> corpus, const AlgoConfig& cfg = {}) {
    auto verify_one = [&cfg](const Graph& g) {
        std::vector<ReportEntry> entries;
        entries.push_back(check_edge_alternating_sum(g, cfg));
        if (!bipartition(g)) {
            if (g.size() <= 64) {
                entries.push_back(check_local_odd_cycle(g, g.edge_mask(), cfg));
            } else {
                entries.push_back({"local-odd-cycle", graph6_encode(g), CheckStatus::skipped,
                                   "edge masks need m <= 64, graph has m = " +
                                       std::to_string(g.size())});
            }
        }
        entries.push_back(check_vertex_alternating_sum(g, cfg));
        for (auto& e : check_parity_suite(g, cfg)) entries.push_back(std::move(e));
        entries.push_back(check_minus_one_bipartite_formula(g, cfg));
        entries.push_back(check_reciprocity(g, cfg));
        if (g.order() >= 1) entries.push_back(check_half_sum(g, cfg));
        return entries;
    };

    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<ReportEntry> out;
        for (std::uint64_t i = lo; i < hi; ++i)
            for (auto& e : verify_one(corpus[static_cast<std::size_t>(i)]))
                out.push_back(std::move(e));
        return out;
    };
    auto splice = [](std::vector<ReportEntry>& acc, std::vector<ReportEntry> part) {
        for (auto& e : part) acc.push_back(std::move(e));
    };
    VerificationReport report;
    report.entries = detail::reduce_ranges<std::vector<ReportEntry>>(
        corpus.size(), cfg.parallel, scan, splice, /*min_chunk=*/1);
    return report;
}

} // namespace dompoly

#endif // DOMPOLY_IDENTITIES_HPP
