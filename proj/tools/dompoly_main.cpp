// Command line front end: exact domination polynomials of small graphs by
// several independent representations, identity verification, conformal-set
// counting and family generation.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dompoly/dompoly.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitCap = 66;
constexpr int kExitInternal = 70;

struct InputOpts {
    std::optional<std::string> g6;
    std::optional<std::string> edges_path;
    std::vector<std::string> family;
    std::optional<std::uint64_t> seed;
};

struct RunOpts {
    InputOpts input;
    int vertex_cap = 24;
    int edge_cap = 20;
    bool parallel = false;
    bool json = false;
    bool no_timing = false;
    std::string algo_csv;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
    auto* g6 = cmd->add_option("--g6", in.g6, "graph6 string");
    auto* edges = cmd->add_option("--edges", in.edges_path,
                                  "edge list file ('n <count>' header, one 'u v' per line; "
                                  "'-' reads stdin)");
    auto* family = cmd->add_option("--family", in.family,
                                   "family name and integer parameters, e.g. path 5 or "
                                   "random 9 1 2")
                       ->expected(1, 65);
    cmd->add_option("--seed", in.seed, "seed for the random family");
    g6->excludes(edges)->excludes(family);
    edges->excludes(family);
}

void add_run_options(CLI::App* cmd, RunOpts& o, bool with_algo, const char* algo_default) {
    add_input_options(cmd, o.input);
    cmd->add_option("--vertex-cap", o.vertex_cap, "largest n admitted to 2^n vertex loops")
        ->capture_default_str();
    cmd->add_option("--edge-cap", o.edge_cap, "largest m admitted to 2^m edge loops")
        ->capture_default_str();
    cmd->add_flag("--parallel", o.parallel, "chunked deterministic parallel scans");
    auto* json = cmd->add_flag("--json", o.json, "machine readable output");
    auto* table = cmd->add_flag_function(
        "--table", [&o](std::int64_t) { o.json = false; }, "human readable output (default)");
    json->excludes(table);
    table->excludes(json);
    cmd->add_flag("--no-timing", o.no_timing, "omit wall-clock fields from the output");
    if (with_algo) {
        o.algo_csv = algo_default;
        cmd->add_option("--algo", o.algo_csv, "comma separated algorithm selectors: brute, "
                                              "inclexcl, typesum, recursive, "
                                              "bipartite-spanning, essential")
            ->capture_default_str();
    }
}

dompoly::Graph load_graph(const InputOpts& in) {
    const int given = (in.g6.has_value() ? 1 : 0) + (in.edges_path.has_value() ? 1 : 0) +
                      (in.family.empty() ? 0 : 1);
    if (given != 1)
        throw std::invalid_argument("exactly one of --g6, --edges, --family is required");
    if (in.g6) return dompoly::graph6_decode(*in.g6);
    if (in.edges_path) {
        std::string text;
        if (*in.edges_path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream file(*in.edges_path);
            if (!file) throw std::invalid_argument("cannot open '" + *in.edges_path + "'");
            std::ostringstream buf;
            buf << file.rdbuf();
            text = buf.str();
        }
        return dompoly::parse_edge_list(text);
    }
    dompoly::FamilySpec spec;
    spec.name = in.family.front();
    for (std::size_t i = 1; i < in.family.size(); ++i) {
        try {
            spec.params.push_back(std::stoll(in.family[i]));
        } catch (const std::exception&) {
            throw dompoly::BadSpec(spec.name + ": parameter '" + in.family[i] +
                                   "' is not an integer");
        }
    }
    spec.seed = in.seed;
    return dompoly::generate_family(spec);
}

dompoly::AlgoConfig config_of(const RunOpts& o) {
    return {.vertex_enum_cap = o.vertex_cap, .edge_enum_cap = o.edge_cap, .parallel = o.parallel};
}

std::vector<dompoly::Algorithm> parse_algo_list(const std::string& csv) {
    std::vector<dompoly::Algorithm> out;
    std::string token;
    std::istringstream stream(csv);
    while (std::getline(stream, token, ',')) {
        if (token.empty()) continue;
        const auto algo = dompoly::parse_algorithm(token);
        if (!algo) throw std::invalid_argument("unknown algorithm '" + token + "'");
        out.push_back(*algo);
    }
    if (out.empty()) throw std::invalid_argument("no algorithm selected");
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int cmd_compute(const RunOpts& o) {
    const dompoly::Graph g = load_graph(o.input);
    const auto cfg = config_of(o);
    const auto algos = parse_algo_list(o.algo_csv);

    struct Row {
        dompoly::Algorithm algo;
        dompoly::Polynomial poly;
        double millis;
    };
    std::vector<Row> rows;
    for (const auto algo : algos) {
        const auto start = std::chrono::steady_clock::now();
        dompoly::Polynomial p = dompoly::dp_product_of_components(g, algo, cfg);
        rows.push_back({algo, std::move(p), elapsed_ms(start)});
    }
    bool agree = true;
    for (const auto& row : rows) agree = agree && row.poly == rows.front().poly;

    if (o.json) {
        auto row_json = [&](const Row& row) {
            return dompoly::compute_result_json(
                g, dompoly::algorithm_name(row.algo), row.poly,
                o.no_timing ? std::nullopt : std::optional<double>(row.millis));
        };
        if (rows.size() == 1) {
            std::cout << row_json(rows.front()).dump(2) << "\n";
        } else {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& row : rows) arr.push_back(row_json(row));
            std::cout << arr.dump(2) << "\n";
        }
    } else {
        for (const auto& row : rows) {
            std::cout << dompoly::algorithm_name(row.algo) << ": D(G, x) = "
                      << row.poly.to_string();
            if (!o.no_timing) std::cout << "  [" << row.millis << " ms]";
            std::cout << "\n";
        }
    }
    if (!agree) {
        std::cerr << "error: the selected algorithms disagree\n";
        return kExitDisagreement;
    }
    return 0;
}

int cmd_verify(const RunOpts& o) {
    const dompoly::Graph g = load_graph(o.input);
    const auto report = dompoly::run_all(std::vector<dompoly::Graph>{g}, config_of(o));
    if (o.json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_table();
    return report.all_passed() ? 0 : kExitVerifyFailed;
}

int cmd_gamma(const RunOpts& o) {
    const dompoly::Graph g = load_graph(o.input);
    const auto cfg = config_of(o);
    const int direct = dompoly::domination_number_direct(g, cfg);
    const int vanishing = dompoly::domination_number_by_vanishing(g, cfg);
    if (o.json) {
        nlohmann::ordered_json j;
        j["graph"] = dompoly::graph6_encode(g);
        j["gamma_direct"] = direct;
        j["gamma_vanishing"] = vanishing;
        j["agree"] = direct == vanishing;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "gamma (direct scan)        = " << direct << "\n"
                  << "gamma (coefficient method) = " << vanishing << "\n";
    }
    if (direct != vanishing) {
        std::cerr << "error: the two domination number computations disagree\n";
        return kExitDisagreement;
    }
    return 0;
}

int cmd_conformal(const RunOpts& o) {
    const dompoly::Graph g = load_graph(o.input);
    const auto cfg = config_of(o);
    if (g.order() > cfg.vertex_enum_cap)
        throw dompoly::CapExceeded("conformal enumeration: vertex enumeration cap " +
                                   std::to_string(cfg.vertex_enum_cap) + " exceeded, n = " +
                                   std::to_string(g.order()));
    const auto start = std::chrono::steady_clock::now();
    dompoly::BigInt total = 0;
    std::size_t member_count = 0;
    if (o.json) {
        nlohmann::ordered_json j;
        j["graph"] = dompoly::graph6_encode(g);
        j["n"] = g.order();
        j["m"] = g.size();
        auto& members = j["members"] = nlohmann::ordered_json::array();
        dompoly::for_each_conformal_induced(g, [&](dompoly::VertexSet w, int k) {
            nlohmann::ordered_json row;
            auto& vertices = row["vertices"] = nlohmann::ordered_json::array();
            for (int v : w) vertices.push_back(v);
            row["components"] = k;
            members.push_back(std::move(row));
            total += dompoly::BigInt(1) << k;
            ++member_count;
        });
        j["member_count"] = member_count;
        j["d"] = total.str();
        if (!o.no_timing) j["millis"] = elapsed_ms(start);
        std::cout << j.dump(2) << "\n";
    } else {
        dompoly::for_each_conformal_induced(g, [&](dompoly::VertexSet w, int k) {
            std::cout << dompoly::vertex_set_to_string(w) << " components=" << k << "\n";
            total += dompoly::BigInt(1) << k;
            ++member_count;
        });
        std::cout << "members = " << member_count << "\n";
        std::cout << "d = " << total.str() << "\n";
    }
    return 0;
}

int cmd_bench(const RunOpts& o) {
    const dompoly::Graph g = load_graph(o.input);
    const auto cfg = config_of(o);
    const auto algos = parse_algo_list(o.algo_csv);

    struct Row {
        std::string name;
        bool ran = false;
        double millis = 0.0;
        std::uint64_t terms = 0;
        std::string note;
    };
    std::vector<Row> rows;
    for (const auto algo : algos) {
        Row row;
        row.name = std::string(dompoly::algorithm_name(algo));
        try {
            dompoly::RecursionStats stats;
            const auto start = std::chrono::steady_clock::now();
            dompoly::Polynomial p;
            if (algo == dompoly::Algorithm::recursive)
                p = dompoly::dp_recursive(g, cfg, &stats);
            else
                p = dompoly::dominating_polynomial(g, algo, cfg);
            row.millis = elapsed_ms(start);
            row.ran = true;
            if (algo == dompoly::Algorithm::recursive)
                row.terms = stats.subproblems + stats.connected_sets;
            else if (algo == dompoly::Algorithm::bipartite_spanning)
                row.terms = std::uint64_t{1} << g.size();
            else
                row.terms = std::uint64_t{1} << g.order();
            (void)p;
        } catch (const dompoly::CapExceeded& e) {
            row.note = e.what();
        }
        rows.push_back(std::move(row));
    }

    if (o.json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json j;
            j["algorithm"] = row.name;
            if (row.ran) {
                if (!o.no_timing) j["millis"] = row.millis;
                j["terms"] = row.terms;
            } else {
                j["skipped"] = row.note;
            }
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << row.name << ": ";
            if (row.ran) {
                std::cout << "terms=" << row.terms;
                if (!o.no_timing) std::cout << "  millis=" << row.millis;
                std::cout << "\n";
            } else {
                std::cout << "skipped (" << row.note << ")\n";
            }
        }
    }
    return 0;
}

int cmd_gen(const InputOpts& in) {
    if (in.family.empty()) throw std::invalid_argument("gen requires --family");
    if (in.g6 || in.edges_path)
        throw std::invalid_argument("gen takes only --family and --seed");
    std::cout << dompoly::graph6_encode(load_graph(in)) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact domination polynomials of graphs on at most 64 vertices"};
    app.require_subcommand(1);

    RunOpts compute_opts, verify_opts, gamma_opts, conformal_opts, bench_opts;
    InputOpts gen_opts;

    auto* compute = app.add_subcommand("compute", "compute D(G, x), optionally by several "
                                                  "algorithms, and cross-check them");
    add_run_options(compute, compute_opts, true, "recursive");

    auto* verify = app.add_subcommand("verify", "check the identity suite on the graph");
    add_run_options(verify, verify_opts, false, "");

    auto* gamma = app.add_subcommand("gamma", "domination number by scan and by coefficient "
                                              "vanishing");
    add_run_options(gamma, gamma_opts, false, "");

    auto* conformal = app.add_subcommand("conformal", "list induced subgraphs with all even "
                                                      "components and count dominating sets");
    add_run_options(conformal, conformal_opts, false, "");

    auto* bench = app.add_subcommand("bench", "wall time and term counts per algorithm");
    add_run_options(bench, bench_opts, true,
                    "brute,inclexcl,typesum,recursive,bipartite-spanning,essential");

    auto* gen = app.add_subcommand("gen", "print a family graph as graph6");
    add_input_options(gen, gen_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(compute_opts);
        if (verify->parsed()) return cmd_verify(verify_opts);
        if (gamma->parsed()) return cmd_gamma(gamma_opts);
        if (conformal->parsed()) return cmd_conformal(conformal_opts);
        if (bench->parsed()) return cmd_bench(bench_opts);
        if (gen->parsed()) return cmd_gen(gen_opts);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const dompoly::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const dompoly::MalformedGraph6& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dompoly::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dompoly::SelfLoop& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dompoly::VertexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dompoly::BadSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
