// Command-line front end: decide singularity of vertex-weighted block
// graphs, print reduction traces, compute exact determinants, generate the
// named graph families, enumerate small block graphs, and run the
// verification suites.
//
// Exit codes: 0 success, 1 command-line error, 2 file or parse error,
// 3 precondition violation (reported with a one-line diagnostic).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blockgraph/blockgraph.hpp"

namespace {

using namespace blockgraph;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

WeightedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    return read_graph(in);
}

void emit(const WeightedGraph& g, const std::string& output_path) {
    if (output_path.empty()) {
        write_graph(std::cout, g);
        return;
    }
    std::ofstream out(output_path);
    if (!out)
        throw ParseError(0, "cannot open '" + output_path + "' for writing");
    write_graph(out, g);
}

// Spec file for the coalesced-clique generator:
//   n <central order>
//   a <order> <order> ...     (one line per central vertex; may be empty)
// '#' starts a comment line.
CoalescedCliqueSpec read_coalesced_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    CoalescedCliqueSpec spec;
    spec.n = -1;
    int line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive) || directive[0] == '#')
            continue;
        if (directive == "n") {
            if (spec.n >= 0)
                throw ParseError(line_no, "duplicate central-order line");
            if (!(ls >> spec.n) || spec.n < 2)
                throw ParseError(line_no, "expected central clique order >= 2");
        } else if (directive == "a") {
            if (spec.n < 0)
                throw ParseError(line_no, "attachments before central order");
            std::vector<int> orders;
            int order;
            while (ls >> order)
                orders.push_back(order);
            spec.attachments.push_back(std::move(orders));
        } else {
            throw ParseError(line_no, "unknown directive '" + directive + "'");
        }
    }
    if (spec.n < 0)
        throw ParseError(line_no, "missing central-order line");
    if (static_cast<int>(spec.attachments.size()) != spec.n)
        throw ParseError(line_no, "expected " + std::to_string(spec.n) +
                                      " attachment lines");
    return spec;
}

int run(int argc, char** argv) {
    CLI::App app{"nonsingularity of vertex-weighted block graphs"};
    app.require_subcommand(1);

    std::string path, output_path, suite = "all", spec_path;
    bool with_trace = false;
    std::uint64_t seed = 12345;
    int samples = 10000;
    int gen_n = 0, gen_m = 0, gen_k = 0, max_vertices = 0;

    auto* check = app.add_subcommand("check", "decide singular / nonsingular");
    check->add_option("file", path, "graph file")->required();

    auto* reduce = app.add_subcommand("reduce", "run the pendant-block reduction");
    reduce->add_option("file", path, "graph file")->required();
    reduce->add_flag("--trace", with_trace, "print every reduction step");

    auto* det = app.add_subcommand("det", "exact determinant of A(G) + diag(x)");
    det->add_option("file", path, "graph file")->required();

    auto* gen = app.add_subcommand("gen", "generate graph families");
    gen->require_subcommand(1);
    auto* gen_nmk = gen->add_subcommand("nmk", "uniform pendant-clique family");
    gen_nmk->add_option("n", gen_n, "central clique order")->required();
    gen_nmk->add_option("m", gen_m, "pendant clique order")->required();
    gen_nmk->add_option("k", gen_k, "pendant cliques per vertex")->required();
    gen_nmk->add_option("-o,--output", output_path, "output file");
    auto* gen_random = gen->add_subcommand("random", "seeded random block graph");
    gen_random->add_option("--seed", seed, "generator seed")->required();
    gen_random->add_option("--max-vertices", max_vertices, "vertex budget")->required();
    gen_random->add_option("-o,--output", output_path, "output file");
    auto* gen_coalesced = gen->add_subcommand("coalesced", "central clique with attachments");
    gen_coalesced->add_option("spec", spec_path, "spec file")->required();
    gen_coalesced->add_option("-o,--output", output_path, "output file");

    auto* enumerate = app.add_subcommand("enumerate", "all small connected block graphs");
    enumerate->add_option("--max-vertices", max_vertices, "largest vertex count")
        ->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--suite", suite, "oracle|identities|families|all")
        ->check(CLI::IsMember({"oracle", "identities", "families", "all"}));
    verify_cmd->add_option("--seed", seed, "suite seed");
    verify_cmd->add_option("--samples", samples, "randomized-oracle sample count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) {
            Verdict v = decide(load_graph(path));
            std::cout << (v.singular ? "singular" : "nonsingular") << "\n";
        } else if (reduce->parsed()) {
            Verdict v = decide(load_graph(path));
            if (with_trace)
                for (const auto& step : v.trace)
                    std::cout << to_string(step) << "\n";
            std::cout << verdict_line(v) << "\n";
        } else if (det->parsed()) {
            std::cout << det_exact(load_graph(path)).str() << "\n";
        } else if (gen_nmk->parsed()) {
            emit(make_nmk({gen_n, gen_m, gen_k}), output_path);
        } else if (gen_random->parsed()) {
            emit(random_block_graph(seed, max_vertices), output_path);
        } else if (gen_coalesced->parsed()) {
            emit(make_coalesced_cliques(read_coalesced_spec(spec_path)), output_path);
        } else if (enumerate->parsed()) {
            bool first = true;
            for (const auto& g : enumerate_block_graphs(max_vertices)) {
                if (!first)
                    std::cout << "---\n";
                first = false;
                write_graph(std::cout, g);
            }
        } else if (verify_cmd->parsed()) {
            verify::Options options{seed, samples};
            bool all_passed = true;
            struct Suite {
                std::string name;
                std::vector<verify::CheckResult> results;
            };
            std::vector<std::string> names =
                suite == "all" ? std::vector<std::string>{"oracle", "identities", "families"}
                               : std::vector<std::string>{suite};
            for (const auto& name : names) {
                bool passed = true;
                for (const auto& result : verify::run_suite(name, options)) {
                    if (!result.passed) {
                        passed = false;
                        std::cerr << result.id << " " << result.name << ": FAIL ("
                                  << result.detail << ")\n";
                    }
                }
                std::cout << name << ": " << (passed ? "PASS" : "FAIL") << "\n";
                all_passed = all_passed && passed;
            }
            return all_passed ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
