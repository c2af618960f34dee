#ifndef DOMPOLY_FORMATS_HPP
#define DOMPOLY_FORMATS_HPP

#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dompoly/algorithms.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

// --- graph6 ---------------------------------------------------------------
//
// Printable encoding of the upper adjacency triangle, column-major: bit k
// covers the pair (i, j), i < j, at position j(j-1)/2 + i. Six bits per
// character, value + 63. Orders up to 62 use a single size byte; 63 and 64
// use the '~' prefix with an 18-bit size.

inline Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw MalformedGraph6("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw MalformedGraph6("byte outside the printable graph6 range");

    std::size_t pos = 0;
    int n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw MalformedGraph6("graph order exceeds 64");
        if (text.size() < 4) throw MalformedGraph6("truncated size prefix");
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        pos = 4;
    } else {
        n = text[0] - 63;
        pos = 1;
    }
    if (n > kMaxVertices)
        throw MalformedGraph6("graph order " + std::to_string(n) + " exceeds 64");

    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (text.size() != pos + byte_count)
        throw MalformedGraph6("expected " + std::to_string(pos + byte_count) +
                              " bytes, got " + std::to_string(text.size()));

    std::vector<std::pair<int, int>> edges;
    std::size_t b = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++b) {
            const int value = text[pos + b / 6] - 63;
            if ((value >> (5 - b % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

inline std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<int> group((bit_count + 5) / 6, 0);
    for (auto [u, v] : g.edges()) {
        const std::size_t b = static_cast<std::size_t>(v) * (v - 1) / 2 + static_cast<std::size_t>(u);
        group[b / 6] |= 1 << (5 - b % 6);
    }
    for (int value : group) out.push_back(static_cast<char>(63 + value));
    return out;
}

// --- edge list text --------------------------------------------------------
//
// Header "n <count>", then one "u v" pair per line. '#' lines are comments;
// blank lines are ignored.

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

inline long long parse_integer(std::string_view token, int line_no) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
    if (ec != std::errc{} || ptr != token.end())
        throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

} // namespace detail

inline Graph parse_edge_list(std::string_view text) {
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t stop = std::min(text.find('\n', start), text.size());
        const std::string_view line = text.substr(start, stop - start);
        start = stop + 1;
        ++line_no;
        const auto tokens = detail::split_tokens(line);
        if (tokens.empty() || tokens[0].front() == '#') {
            if (stop == text.size()) break;
            continue;
        }
        if (!have_header) {
            if (tokens[0] != "n" || tokens.size() != 2)
                throw ParseError(line_no, "expected header 'n <count>'");
            const long long count = detail::parse_integer(tokens[1], line_no);
            if (count < 0 || count > kMaxVertices)
                throw ParseError(line_no, "vertex count must lie in [0, 64]");
            n = static_cast<int>(count);
            have_header = true;
        } else {
            if (tokens.size() != 2)
                throw ParseError(line_no, "expected an edge 'u v'");
            const long long u = detail::parse_integer(tokens[0], line_no);
            const long long v = detail::parse_integer(tokens[1], line_no);
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw VertexOutOfRange("line " + std::to_string(line_no) + ": edge (" +
                                       std::to_string(u) + "," + std::to_string(v) +
                                       ") out of range for order " + std::to_string(n));
            if (u == v)
                throw SelfLoop("line " + std::to_string(line_no) + ": self-loop at vertex " +
                               std::to_string(u));
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        if (stop == text.size()) break;
    }
    if (!have_header) throw ParseError(line_no, "missing header 'n <count>'");
    return Graph(n, edges);
}

inline std::string render_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// --- families ---------------------------------------------------------------

/// Fixed-stream generator with portable, platform-independent output.
struct Splitmix64 {
    std::uint64_t state;

    constexpr explicit Splitmix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

namespace detail {

inline int checked_family_order(long long n, std::string_view family) {
    if (n < 0 || n > kMaxVertices)
        throw BadSpec(std::string(family) + ": order must lie in [0, 64], got " +
                      std::to_string(n));
    return static_cast<int>(n);
}

} // namespace detail

inline Graph path_graph(long long n) {
    const int k = detail::checked_family_order(n, "path");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(k, edges);
}

inline Graph cycle_graph(long long n) {
    const int k = detail::checked_family_order(n, "cycle");
    if (k < 3) throw BadSpec("cycle: order must be at least 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, k - 1);
    return Graph(k, edges);
}

inline Graph complete_graph(long long n) {
    const int k = detail::checked_family_order(n, "complete");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return Graph(k, edges);
}

inline Graph complete_bipartite_graph(long long a, long long b) {
    if (a < 0 || b < 0 || a > kMaxVertices || b > kMaxVertices || a + b > kMaxVertices)
        throw BadSpec("complete-bipartite: sides must be nonnegative with total order <= 64");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, static_cast<int>(a) + v);
    return Graph(static_cast<int>(a + b), edges);
}

inline Graph star_graph(long long n) {
    const int k = detail::checked_family_order(n, "star");
    if (k < 1) throw BadSpec("star: order must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < k; ++v) edges.emplace_back(0, v);
    return Graph(k, edges);
}

inline Graph edgeless_graph(long long n) {
    return Graph(detail::checked_family_order(n, "edgeless"));
}

/// Includes each pair (u, v), scanned in lexicographic order, with probability
/// num/den, consuming exactly one Splitmix64 draw per pair.
inline Graph random_graph(long long n, long long num, long long den, std::uint64_t seed) {
    const int k = detail::checked_family_order(n, "random");
    if (den <= 0 || num < 0 || num > den)
        throw BadSpec("random: probability must be a fraction num/den with 0 <= num <= den");
    Splitmix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (rng.next() % static_cast<std::uint64_t>(den) < static_cast<std::uint64_t>(num))
                edges.emplace_back(u, v);
    return Graph(k, edges);
}

struct FamilySpec {
    std::string name;
    std::vector<long long> params;
    std::optional<std::uint64_t> seed;
};

inline Graph generate_family(const FamilySpec& spec) {
    auto arity = [&](std::size_t want) {
        if (spec.params.size() != want)
            throw BadSpec(spec.name + ": expected " + std::to_string(want) +
                          " parameter(s), got " + std::to_string(spec.params.size()));
    };
    if (spec.name == "path") {
        arity(1);
        return path_graph(spec.params[0]);
    }
    if (spec.name == "cycle") {
        arity(1);
        return cycle_graph(spec.params[0]);
    }
    if (spec.name == "complete") {
        arity(1);
        return complete_graph(spec.params[0]);
    }
    if (spec.name == "complete-bipartite") {
        arity(2);
        return complete_bipartite_graph(spec.params[0], spec.params[1]);
    }
    if (spec.name == "star") {
        arity(1);
        return star_graph(spec.params[0]);
    }
    if (spec.name == "edgeless") {
        arity(1);
        return edgeless_graph(spec.params[0]);
    }
    if (spec.name == "random") {
        arity(3);
        if (!spec.seed) throw BadSpec("random: a seed is required");
        return random_graph(spec.params[0], spec.params[1], spec.params[2], *spec.seed);
    }
    throw BadSpec("unknown family '" + spec.name + "'");
}

// --- rendering and JSON ------------------------------------------------------

inline std::string vertex_set_to_string(VertexSet w) {
    std::string out = "{";
    bool sep = false;
    for (int v : w) {
        if (sep) out += ",";
        out += std::to_string(v);
        sep = true;
    }
    return out + "}";
}

/// Result record for one polynomial computation. Coefficients are decimal
/// strings, low to high degree; "millis" is present only when provided.
inline nlohmann::ordered_json compute_result_json(const Graph& g, std::string_view algorithm,
                                                  const Polynomial& p,
                                                  std::optional<double> millis = std::nullopt) {
    nlohmann::ordered_json j;
    j["graph"] = graph6_encode(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["algorithm"] = std::string(algorithm);
    j["coefficients"] = p.coefficient_strings();
    j["d"] = p.evaluate(BigInt(1)).str();
    j["gamma"] = lowest_nonzero_degree(p);
    if (millis) j["millis"] = *millis;
    return j;
}

} // namespace dompoly

#endif // DOMPOLY_FORMATS_HPP
