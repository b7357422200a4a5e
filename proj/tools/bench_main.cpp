// Experiment runner: BFS vs. EBFS on n-queens with configurable known states.
//
//   bench --problem nqueens --n 5..8 --algo bfs,ebfs --known solution-prefix:2 --format csv
//
// Exit status: 0 when every run succeeds, 1 when any run ends in failure or
// a resource limit, 2 on a configuration error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ebfs/bench.hpp"

namespace {

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::size_t start = 0;
        while (start <= item.size()) {
            const auto comma = item.find(',', start);
            const auto end = comma == std::string::npos ? item.size() : comma;
            if (end > start) out.push_back(item.substr(start, end - start));
            start = end + 1;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace ebfs::bench;

    CLI::App app{"Compare classical BFS and extended BFS (multiple known states) on n-queens"};

    std::string problem = "nqueens";
    std::string n_range = "5..8";
    std::vector<std::string> algos{"bfs,ebfs"};
    std::vector<std::string> known;
    std::string format = "csv";
    bool trace = false;
    std::string trace_file;
    std::size_t max_nodes = 0;
    std::size_t max_expansions = 0;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    bool compare_reference = false;

    app.add_option("--problem", problem, "Problem id")->capture_default_str();
    app.add_option("--n", n_range, "Board size or range, e.g. 5..8")->capture_default_str();
    app.add_option("--algo", algos, "Algorithms: bfs, ebfs (comma separated)")->capture_default_str();
    app.add_option("--known", known,
                   "Known state after the empty board: solution-prefix[:DEPTH|:half], false-heuristic, or a "
                   "state such as 5:0,0;1,2 (repeatable)");
    app.add_option("--format", format, "Output format: csv or json")->capture_default_str();
    app.add_flag("--trace", trace, "Write the EBFS selection trace to stderr (or --trace-file)");
    app.add_option("--trace-file", trace_file, "Trace destination instead of stderr");
    app.add_option("--max-nodes", max_nodes, "Stop a run after this many nodes (0 = unlimited)");
    app.add_option("--max-expansions", max_expansions, "Stop a run after this many expansions (0 = unlimited)");
    app.add_option("--seed", seed, "Reserved; all generators are deterministic");
    app.add_option("--jobs", jobs, "Runs executed concurrently")->capture_default_str();
    app.add_flag("--compare-reference", compare_reference, "Print deviation from the published counts to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    ExperimentConfig config;
    RunArtifacts artifacts;
    try {
        config.problem = problem;
        std::tie(config.n_min, config.n_max) = parse_n_range(n_range);
        config.algorithms.clear();
        for (const auto& a : split_commas(algos)) config.algorithms.push_back(parse_algorithm(a));
        for (const auto& k : known) config.known.push_back(KnownSpecifier::parse(k));
        config.format = parse_format(format);
        config.trace = trace || !trace_file.empty();
        if (max_nodes) config.limits.max_nodes = max_nodes;
        if (max_expansions) config.limits.max_expansions = max_expansions;
        config.seed = seed;
        config.jobs = jobs;
        validate(config);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    try {
        artifacts = run_experiment(config);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    for (const auto& w : artifacts.warnings) std::cerr << "warning: " << w << '\n';

    if (config.trace) {
        std::ofstream file;
        if (!trace_file.empty()) file.open(trace_file);
        std::ostream& out = trace_file.empty() ? std::cerr : file;
        for (std::size_t i = 0; i < artifacts.reports.size(); ++i) {
            if (artifacts.traces[i].empty()) continue;
            const auto& r = artifacts.reports[i];
            out << "# n=" << r.n << " algorithm=" << r.algorithm << " seeding=" << r.seeding << '\n'
                << artifacts.traces[i];
        }
    }

    std::cout << emit(artifacts.reports, config.format);
    if (compare_reference) print_reference_deviation(std::cerr, artifacts.reports);

    for (const auto& r : artifacts.reports)
        if (r.outcome != "success") return 1;
    return 0;
}
