// Small tour of the library: build graphs, compute the domination polynomial
// several ways, count dominating sets through conformal subgraphs, and run the
// identity checks on a tiny corpus.

#include <cstdio>
#include <vector>

#include "dompoly/dompoly.hpp"

using namespace dompoly;

int main() {
    const Graph p4 = path_graph(4);
    const Graph petersen{10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                              {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                              {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}}};

    std::printf("P4 in graph6: %s\n", graph6_encode(p4).c_str());
    for (Algorithm algo : kAllAlgorithms) {
        const Polynomial d = dominating_polynomial(p4, algo);
        std::printf("  %-18s D(P4, x) = %s\n", std::string(algorithm_name(algo)).c_str(),
                    d.to_string().c_str());
    }

    const Polynomial dp = dp_recursive(petersen);
    std::printf("\nPetersen graph: D(G, 1) = %s dominating sets, gamma = %d\n",
                dp.evaluate(BigInt(1)).str().c_str(), lowest_nonzero_degree(dp));
    std::printf("lowest coefficient d_%d = %s\n", lowest_nonzero_degree(dp),
                dp.coeff(lowest_nonzero_degree(dp)).str().c_str());

    std::printf("\nconformal induced subgraphs of P4 (every component even):\n");
    for_each_conformal_induced(p4, [&](VertexSet w, int components) {
        std::printf("  %-12s contributes 2^%d\n", vertex_set_to_string(w).c_str(), components);
    });
    std::printf("total: d(P4) = %s\n", count_dominating_conformal(p4).str().c_str());

    const std::vector<Graph> corpus{p4, cycle_graph(5), complete_graph(4), star_graph(6)};
    const VerificationReport report = run_all(corpus);
    std::printf("\nidentity checks on a 4-graph corpus:\n%s", report.to_table().c_str());
    return report.all_passed() ? 0 : 1;
}
