#include <doctest.h>

#include <sstream>

#include "ebfs/bench.hpp"

using namespace ebfs::bench;

namespace {

ExperimentConfig config_for(int lo, int hi, std::vector<Algorithm> algos, std::vector<std::string> known) {
    ExperimentConfig c;
    c.n_min = lo;
    c.n_max = hi;
    c.algorithms = std::move(algos);
    for (const auto& k : known) c.known.push_back(KnownSpecifier::parse(k));
    return c;
}

std::string without_millis(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
    return out;
}

std::vector<ExperimentReport> zero_millis(std::vector<ExperimentReport> r) {
    for (auto& x : r) x.millis = 0;
    return r;
}

}  // namespace

TEST_CASE("known specifier parsing") {
    auto p = KnownSpecifier::parse("solution-prefix");
    CHECK(p.kind == KnownSpecifier::Kind::solution_prefix);
    CHECK(p.depth == 2);
    CHECK(KnownSpecifier::parse("solution-prefix:3").depth == 3);
    CHECK(KnownSpecifier::parse("solution-prefix:half").half_depth);
    CHECK(KnownSpecifier::parse("solution-prefix:half").describe() == "solution-prefix:half");
    CHECK(KnownSpecifier::parse("false-heuristic").kind == KnownSpecifier::Kind::false_heuristic);
    CHECK(KnownSpecifier::parse("5:0,0;1,2").kind == KnownSpecifier::Kind::explicit_state);
    CHECK_THROWS_AS(KnownSpecifier::parse("solution-prefix:0"), ConfigError);
    CHECK_THROWS_AS(KnownSpecifier::parse("solution-prefix:x"), ConfigError);
}

TEST_CASE("n range parsing") {
    CHECK(parse_n_range("5..8") == std::pair{5, 8});
    CHECK(parse_n_range("6") == std::pair{6, 6});
    CHECK_THROWS_AS(parse_n_range("5-8"), ConfigError);
    CHECK_THROWS_AS(parse_n_range("a..b"), ConfigError);
    CHECK_THROWS_AS(parse_algorithm("dfs"), ConfigError);
    CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("configuration errors are raised before any run") {
    CHECK_THROWS_AS(validate(config_for(5, 6, {Algorithm::ebfs}, {"5:0,0;1,2"})), ConfigError);
    CHECK_THROWS_AS(validate(config_for(5, 5, {Algorithm::ebfs}, {"5:0,0;1,1"})), ConfigError);
    CHECK_THROWS_AS(validate(config_for(5, 5, {Algorithm::ebfs}, {"5:0,0;9,9"})), ConfigError);
    CHECK_THROWS_AS(validate(config_for(5, 5, {Algorithm::ebfs}, {"false-heuristic"})), ConfigError);
    CHECK_THROWS_AS(validate(config_for(3, 4, {Algorithm::ebfs}, {"solution-prefix:1"})), ConfigError);
    CHECK_THROWS_AS(validate(config_for(4, 4, {Algorithm::ebfs}, {"solution-prefix:5"})), ConfigError);
    CHECK_THROWS_AS(validate(config_for(5, 5, {Algorithm::ebfs}, {"5:0,0;1,2", "solution-prefix:2"})),
                    ConfigError);
    CHECK_THROWS_AS(validate(config_for(6, 5, {Algorithm::ebfs}, {})), ConfigError);
    CHECK_THROWS_AS(validate(config_for(5, 5, {}, {})), ConfigError);
    auto bad_problem = config_for(5, 5, {Algorithm::bfs}, {});
    bad_problem.problem = "8-puzzle";
    CHECK_THROWS_AS(validate(bad_problem), ConfigError);
    CHECK_THROWS_AS(run_experiment(config_for(5, 6, {Algorithm::ebfs}, {"5:0,0;1,2"})), ConfigError);
    CHECK_NOTHROW(validate(config_for(5, 8, {Algorithm::bfs, Algorithm::ebfs},
                                      {"solution-prefix:2", "false-heuristic"})));
}

TEST_CASE("table shape and row order") {
    const auto run = run_experiment(config_for(5, 6, {Algorithm::bfs, Algorithm::ebfs}, {"solution-prefix:half"}));
    REQUIRE(run.reports.size() == 4);
    CHECK(run.reports[0].n == 5);
    CHECK(run.reports[0].algorithm == "bfs");
    CHECK(run.reports[1].algorithm == "ebfs");
    CHECK(run.reports[2].n == 6);
    CHECK(run.reports[1].k_count == 2);
    CHECK(run.reports[1].seeding == "empty+solution-prefix:half");
    CHECK(run.reports[0].seeding == "empty");
    CHECK(run.reports[0].nodes_created == 453);
    for (const auto& r : run.reports) {
        CHECK(r.outcome == "success");
        CHECK(r.solution_length == static_cast<std::size_t>(r.n));
    }
    REQUIRE(run.warnings.size() == 1);
    CHECK(run.warnings[0].find("bfs ignores") != std::string::npos);
}

TEST_CASE("single known state reproduces the bfs row") {
    const auto run = run_experiment(config_for(5, 6, {Algorithm::bfs, Algorithm::ebfs}, {}));
    for (std::size_t i = 0; i < run.reports.size(); i += 2) {
        CHECK(run.reports[i].nodes_created == run.reports[i + 1].nodes_created);
        CHECK(run.reports[i].expansions == run.reports[i + 1].expansions);
        CHECK(run.reports[i + 1].k_count == 1);
    }
    CHECK(run.warnings.empty());
}

TEST_CASE("deterministic output, also when runs are concurrent") {
    auto cfg = config_for(4, 6, {Algorithm::bfs, Algorithm::ebfs}, {"solution-prefix:2", "false-heuristic"});
    const auto a = run_experiment(cfg);
    cfg.jobs = 4;
    const auto b = run_experiment(cfg);
    CHECK(without_millis(emit_csv(a.reports)) == without_millis(emit_csv(b.reports)));
    CHECK(zero_millis(a.reports) == zero_millis(b.reports));
}

TEST_CASE("emit") {
    CHECK(emit_csv({}) ==
          "problem,n,algorithm,k_count,seeding,nodes_created,expansions,closed_count,solution_length,outcome,millis\n");
    CHECK(emit_json({}) == "[]\n");

    const auto failed = run_experiment(config_for(3, 3, {Algorithm::ebfs}, {}));
    REQUIRE(failed.reports.size() == 1);
    CHECK(failed.reports[0].outcome == "failure");
    const auto csv = emit_csv(failed.reports);
    CHECK(csv.find("\nnqueens,3,ebfs,1,empty,") != std::string::npos);
    CHECK(csv.find(",,failure,") != std::string::npos);
    CHECK(emit_json(failed.reports).find("\"solution_length\": null") != std::string::npos);

    const auto limited = run_experiment([] {
        auto c = config_for(6, 6, {Algorithm::ebfs}, {});
        c.limits.max_nodes = 50;
        return c;
    }());
    CHECK(limited.reports[0].outcome == "resource_limit");
}

TEST_CASE("csv quotes fields containing commas") {
    const auto run = run_experiment(config_for(5, 5, {Algorithm::ebfs}, {"5:0,0;1,2"}));
    CHECK(run.reports[0].seeding == "empty+5:0,0;1,2");
    CHECK(emit_csv(run.reports).find(",\"empty+5:0,0;1,2\",") != std::string::npos);
}

TEST_CASE("json round trip") {
    const auto run = run_experiment(config_for(4, 5, {Algorithm::bfs, Algorithm::ebfs}, {"solution-prefix"}));
    const auto json = emit(run.reports, Format::json);
    const auto back = parse_json(json);
    CHECK(back == run.reports);
    // key order is fixed
    CHECK(json.find("\"problem\"") < json.find("\"n\""));
    CHECK(json.find("\"outcome\"") < json.find("\"millis\""));
}

TEST_CASE("trace records are produced for ebfs runs only") {
    auto cfg = config_for(4, 4, {Algorithm::bfs, Algorithm::ebfs}, {});
    cfg.trace = true;
    const auto run = run_experiment(cfg);
    CHECK(run.traces[0].empty());
    CHECK(run.traces[1].rfind("0,\"4:\",0,1,1\n", 0) == 0);
}

TEST_CASE("reference count lookup") {
    ExperimentReport r;
    r.problem = "nqueens";
    r.n = 7;
    r.algorithm = "ebfs";
    r.k_count = 3;
    CHECK(reference_count(r) == std::size_t{4439});
    r.k_count = 1;
    CHECK(reference_count(r) == std::size_t{16831});
    r.n = 9;
    CHECK_FALSE(reference_count(r));
    r.n = 5;
    r.algorithm = "bfs";
    r.nodes_created = 453;
    std::ostringstream os;
    print_reference_deviation(os, {r});
    CHECK(os.str().find("reference=453 deviation=+0.0%") != std::string::npos);
}
