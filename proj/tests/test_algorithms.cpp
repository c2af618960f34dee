#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "test_support.hpp"

using namespace dompoly;

namespace {

Graph path3() { return path_graph(3); }
Graph path4() { return path_graph(4); }
Graph cycle4() { return cycle_graph(4); }
Graph triangle() { return complete_graph(3); }

const std::array<Algorithm, 6>& algos() { return kAllAlgorithms; }

} // namespace

TEST_CASE("brute force on hand-counted graphs", "[algorithms]") {
    CHECK(dp_brute_force(Graph()) == Polynomial{1});
    CHECK(dp_brute_force(Graph(1)) == Polynomial{0, 1});
    CHECK(dp_brute_force(complete_graph(2)) == Polynomial{0, 2, 1});
    CHECK(dp_brute_force(path3()) == Polynomial{0, 1, 3, 1});
    CHECK(dp_brute_force(path4()) == Polynomial{0, 0, 4, 4, 1});
    CHECK(dp_brute_force(cycle4()) == Polynomial{0, 0, 6, 4, 1});
    CHECK(dp_brute_force(Graph(3)) == Polynomial{0, 0, 0, 1});
}

TEST_CASE("complete graphs miss only the empty set", "[algorithms]") {
    // K_0 is the one exception: its empty vertex set is vacuously dominating,
    // so D = 1 rather than (1+x)^0 - 1 = 0.
    CHECK(dp_brute_force(complete_graph(0)) == Polynomial::one());
    for (int n = 1; n <= 8; ++n)
        CHECK(dp_brute_force(complete_graph(n)) == binomial_power(n) - Polynomial::one());
}

TEST_CASE("all representations match the brute count on small corpora", "[algorithms]") {
    auto corpus = testsup::exhaustive_corpus(4);
    for (const Graph& g : testsup::seeded_sample(5, 8, 6)) corpus.push_back(g);
    for (const Graph& g : corpus) {
        const Polynomial want = dp_brute_force(g);
        CHECK(dp_inclusion_exclusion(g) == want);
        CHECK(dp_type_sum(g) == want);
        CHECK(dp_recursive(g) == want);
        if (g.size() <= 20) CHECK(dp_bipartite_spanning(g) == want);
        if (g.order() >= 1) CHECK(dp_essential_sets(g) == want);
        for (Algorithm a : algos()) {
            if (a == Algorithm::bipartite_spanning && g.size() > 20) continue;
            CHECK(dp_product_of_components(g, a) == want);
        }
    }
}

TEST_CASE("single-representation spot values", "[algorithms]") {
    CHECK(dp_inclusion_exclusion(Graph(1)) == Polynomial{0, 1});
    CHECK(dp_type_sum(Graph(1)) == Polynomial{0, 1});
    CHECK(dp_recursive(Graph(1)) == Polynomial{0, 1});
    CHECK(dp_essential_sets(Graph(1)) == Polynomial{0, 1});
    CHECK(dp_essential_sets(complete_graph(2)) == Polynomial{0, 2, 1});
    CHECK(dp_bipartite_spanning(triangle()) == Polynomial{0, 3, 3, 1});
    CHECK(dp_bipartite_spanning(Graph(5)) == Polynomial::monomial(5));
    CHECK_THROWS_AS(dp_essential_sets(Graph()), EmptyGraph);
}

TEST_CASE("spanning subgraph weights on the 3-path", "[algorithms]") {
    const Graph g = path3();
    CHECK(h_value(g, EdgeSet{}) == Polynomial::monomial(3));
    CHECK(h_value(g, EdgeSet::single(g.edge_index(0, 1))) == Polynomial{0, 0, 2});
    CHECK(h_value(g, g.edge_mask()) == Polynomial{0, 1, -1});
}

TEST_CASE("spanning subgraph weights vanish exactly on odd cycles", "[algorithms]") {
    const Graph k3 = triangle();
    CHECK(h_value(k3, k3.edge_mask()).is_zero());
    CHECK_FALSE(h_value(k3, EdgeSet{0b011}).is_zero());
    // summing the weights over all edge subsets recovers the polynomial
    Polynomial sum;
    for (std::uint64_t f = 0; f < 8; ++f) sum += h_value(k3, EdgeSet{f});
    CHECK(sum == dp_brute_force(k3));
}

TEST_CASE("single coefficients by the binomial formula", "[algorithms]") {
    CHECK(coefficient_by_binomial(path4(), 2) == 4);
    CHECK(coefficient_by_binomial(path4(), 1) == 0);
    CHECK(coefficient_by_binomial(path4(), 0) == 0);
    CHECK(coefficient_by_binomial(path4(), 4) == 1);
    CHECK(coefficient_by_binomial(triangle(), 1) == 3);
    CHECK(coefficient_by_binomial(Graph(), 0) == 1);
    CHECK_THROWS_AS(coefficient_by_binomial(path4(), 5), std::invalid_argument);
    CHECK_THROWS_AS(coefficient_by_binomial(path4(), -1), std::invalid_argument);

    for (const Graph& g : testsup::seeded_sample(1, 8, 5)) {
        const Polynomial want = dp_brute_force(g);
        for (int k = 0; k <= g.order(); ++k)
            CHECK(coefficient_by_binomial(g, k) == want.coeff(k));
    }
}

TEST_CASE("conformal counting", "[algorithms]") {
    CHECK(count_dominating_conformal(path4()) == 9);
    CHECK(count_dominating_conformal(cycle4()) == 11);
    CHECK(count_dominating_conformal(Graph(1)) == 1);
    CHECK(count_dominating_conformal(Graph()) == 1);

    auto corpus = testsup::exhaustive_corpus(4);
    for (const Graph& g : testsup::seeded_sample(5, 8, 6)) corpus.push_back(g);
    for (const Graph& g : corpus)
        CHECK(count_dominating_conformal(g) == dp_brute_force(g).evaluate(BigInt(1)));
}

TEST_CASE("domination number", "[algorithms]") {
    CHECK(domination_number_direct(path4()) == 2);
    CHECK(domination_number_direct(triangle()) == 1);
    CHECK(domination_number_direct(star_graph(9)) == 1);
    CHECK(domination_number_direct(Graph()) == 0);
    CHECK(domination_number_direct(Graph(4)) == 4);
    CHECK(domination_number_by_vanishing(path4()) == 2);
    CHECK(domination_number_by_vanishing(Graph()) == 0);

    for (const Graph& g : testsup::seeded_sample(1, 8, 6)) {
        const int direct = domination_number_direct(g);
        CHECK(domination_number_by_vanishing(g) == direct);
        CHECK(lowest_nonzero_degree(dp_brute_force(g)) == direct);
    }
}

TEST_CASE("product over components", "[algorithms]") {
    const Graph p3k1(4, {{0, 1}, {1, 2}});
    CHECK(dp_product_of_components(p3k1, Algorithm::recursive) == Polynomial{0, 0, 1, 3, 1});
    CHECK(dp_product_of_components(p3k1, Algorithm::recursive) == dp_brute_force(p3k1));
    CHECK(dp_product_of_components(Graph(), Algorithm::brute) == Polynomial{1});

    const Graph two_k2(4, {{0, 1}, {2, 3}});
    CHECK(dp_product_of_components(two_k2, Algorithm::type_sum) == Polynomial{0, 0, 4, 4, 1});
}

TEST_CASE("coefficient bounds", "[algorithms]") {
    for (const Graph& g : testsup::seeded_sample(1, 8, 6)) {
        const Polynomial p = dp_brute_force(g);
        CHECK(p.degree() == g.order());
        CHECK(p.coeff(g.order()) == 1);
        CHECK(p.coeff(0) == (g.order() == 0 ? 1 : 0));
        for (int k = 0; k <= g.order(); ++k) {
            CHECK(p.coeff(k) >= 0);
            CHECK(p.coeff(k) <= binomial_coefficient(g.order(), k));
        }
    }
}

TEST_CASE("caps are enforced", "[algorithms]") {
    const AlgoConfig tight{.vertex_enum_cap = 3, .edge_enum_cap = 2, .parallel = false};
    CHECK_THROWS_AS(dp_brute_force(path4(), tight), CapExceeded);
    CHECK_THROWS_AS(dp_inclusion_exclusion(path4(), tight), CapExceeded);
    CHECK_THROWS_AS(dp_type_sum(path4(), tight), CapExceeded);
    CHECK_THROWS_AS(dp_recursive(path4(), tight), CapExceeded);
    CHECK_THROWS_AS(dp_bipartite_spanning(path4(), tight), CapExceeded);
    CHECK_THROWS_AS(dp_essential_sets(path4(), tight), CapExceeded);
    CHECK_THROWS_AS(count_dominating_conformal(path4(), tight), CapExceeded);
    CHECK_THROWS_AS(domination_number_direct(path4(), tight), CapExceeded);
    CHECK_THROWS_AS(coefficient_by_binomial(path4(), 2, tight), CapExceeded);
    CHECK_NOTHROW(dp_brute_force(path3(), tight));

    CHECK_THROWS_AS(dp_brute_force(Graph(25)), CapExceeded);
    CHECK_THROWS_AS(dp_bipartite_spanning(complete_graph(7)), CapExceeded); // m = 21

    const AlgoConfig bad{.vertex_enum_cap = 65, .edge_enum_cap = 20, .parallel = false};
    CHECK_THROWS_AS(dp_brute_force(path3(), bad), std::invalid_argument);
    const AlgoConfig bad_edge{.vertex_enum_cap = 24, .edge_enum_cap = -1, .parallel = false};
    CHECK_THROWS_AS(dp_bipartite_spanning(path3(), bad_edge), std::invalid_argument);
}

TEST_CASE("parallel runs reproduce sequential results exactly", "[algorithms]") {
    const Graph g = random_graph(13, 1, 2, 404);
    const AlgoConfig seq{.vertex_enum_cap = 24, .edge_enum_cap = 20, .parallel = false};
    AlgoConfig par = seq;
    par.parallel = true;
    if (g.size() <= 20) CHECK(dp_bipartite_spanning(g, par) == dp_bipartite_spanning(g, seq));
    CHECK(dp_brute_force(g, par) == dp_brute_force(g, seq));
    CHECK(dp_inclusion_exclusion(g, par) == dp_inclusion_exclusion(g, seq));
    CHECK(dp_type_sum(g, par) == dp_type_sum(g, seq));
    CHECK(dp_essential_sets(g, par) == dp_essential_sets(g, seq));
    CHECK(count_dominating_conformal(g, par) == count_dominating_conformal(g, seq));
}

TEST_CASE("recursion statistics are populated", "[algorithms]") {
    RecursionStats stats;
    const Polynomial p = dp_recursive(path4(), {}, &stats);
    CHECK(p == Polynomial{0, 0, 4, 4, 1});
    CHECK(stats.subproblems > 0);
    CHECK(stats.connected_sets > 0);
}

TEST_CASE("algorithm names round-trip", "[algorithms]") {
    for (Algorithm a : algos()) {
        const auto parsed = parse_algorithm(algorithm_name(a));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == a);
    }
    CHECK_FALSE(parse_algorithm("magic").has_value());
    CHECK(algorithm_name(Algorithm::bipartite_spanning) == "bipartite-spanning");

    for (Algorithm a : algos())
        CHECK(dominating_polynomial(path4(), a) == Polynomial{0, 0, 4, 4, 1});
}
