#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "evengraphs/cli.hpp"

namespace ev = evengraphs;

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of unlabelled graphs, tournaments and odd/even graphs,"
                 " with a brute-force verification oracle"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "Print one exact count");
    std::string count_kind;
    int count_n = 0;
    int count_cap = ev::kDefaultCountCap;
    std::string count_cache;
    count->add_option("--kind", count_kind, "graphs|tournaments|odd|even")->required();
    count->add_option("--n", count_n, "number of vertices")->required();
    auto* count_cap_opt = count->add_option("--cap", count_cap, "override the n cap");
    count->add_option("--cache", count_cache, "count cache file");

    // table
    auto* table = app.add_subcommand("table", "Print counts for n = 1..max-n");
    int table_max_n = 0;
    int table_cap = ev::kDefaultCountCap;
    std::string table_cache;
    table->add_option("--max-n", table_max_n, "largest number of vertices")->required();
    auto* table_cap_opt = table->add_option("--cap", table_cap, "override the n cap");
    table->add_option("--cache", table_cache, "count cache file");

    // classify
    auto* classify = app.add_subcommand("classify", "Classify an edge-list graph as even or odd");
    std::string classify_input;
    int classify_cap = ev::kAutomorphismCap;
    classify->add_option("--input", classify_input, "edge-list file (default: stdin)");
    auto* classify_cap_opt = classify->add_option("--cap", classify_cap, "override the n cap");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List canonical class representatives");
    std::string enum_kind;
    int enum_n = 0;
    int enum_cap = ev::kClassEnumerationCap;
    enumerate->add_option("--kind", enum_kind, "graphs|tournaments|even|odd")->required();
    enumerate->add_option("--n", enum_n, "number of vertices")->required();
    auto* enum_cap_opt = enumerate->add_option("--cap", enum_cap, "override the n cap");

    // selfcheck
    auto* selfcheck = app.add_subcommand("selfcheck", "Run the full verification suite");
    int selfcheck_max_n = 0;
    std::uint64_t seed = 0x5eed;
    selfcheck->add_option("--max-n", selfcheck_max_n, "largest number of vertices")->required();
    selfcheck->add_option("--seed", seed, "seed for randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (const auto* opt : {count_cap_opt, table_cap_opt, classify_cap_opt, enum_cap_opt})
        if (opt->count() > 0)
            std::cerr << "warning: overriding the default cap; cost grows steeply with n\n";

    if (count->parsed())
        return ev::cli::run_count(count_kind, count_n, count_cap, count_cache,
                                  std::cout, std::cerr);
    if (table->parsed())
        return ev::cli::run_table(table_max_n, table_cap, table_cache, std::cout,
                                  std::cerr);
    if (classify->parsed()) {
        if (classify_input.empty())
            return ev::cli::run_classify(std::cin, classify_cap, std::cout, std::cerr);
        std::ifstream in(classify_input);
        if (!in) {
            std::cerr << "cannot open " << classify_input << "\n";
            return 2;
        }
        return ev::cli::run_classify(in, classify_cap, std::cout, std::cerr);
    }
    if (enumerate->parsed())
        return ev::cli::run_enumerate(enum_kind, enum_n, enum_cap, std::cout, std::cerr);
    if (selfcheck->parsed())
        return ev::cli::run_selfcheck(selfcheck_max_n, seed, std::cout, std::cerr);
    return 2;
}
