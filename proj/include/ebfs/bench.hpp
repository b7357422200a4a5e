#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebfs/search.hpp"

namespace ebfs::bench {

/// Invalid experiment configuration; reported before any run starts.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Algorithm { bfs, ebfs };
enum class Format { csv, json };

const char* to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& text);
Format parse_format(const std::string& text);

/*
  One --known argument:
    solution-prefix[:<depth>|:half]  first queens of the first solution
                                     (depth defaults to 2; half = ceil(n/2))
    false-heuristic                  placement incomparable with the
                                     preceding known state
    <state text>                     an explicit board, e.g. 5:0,0;1,2
*/
struct KnownSpecifier {
    enum class Kind { solution_prefix, false_heuristic, explicit_state };
    Kind kind = Kind::solution_prefix;
    /// Prefix depth; nullopt with half_depth set means ceil(n/2).
    std::optional<int> depth;
    bool half_depth = false;
    std::string text;

    static KnownSpecifier parse(const std::string& text);
    std::string describe() const;
};

struct ExperimentConfig {
    std::string problem = "nqueens";
    int n_min = 5;
    int n_max = 8;
    std::vector<Algorithm> algorithms{Algorithm::bfs, Algorithm::ebfs};
    std::vector<KnownSpecifier> known;
    Limits limits;
    Format format = Format::csv;
    bool trace = false;
    /// Reserved; every generator is deterministic.
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

/// Parses "5" or "5..8".
std::pair<int, int> parse_n_range(const std::string& text);

struct ExperimentReport {
    std::string problem;
    int n = 0;
    std::string algorithm;
    std::size_t k_count = 0;
    std::string seeding;
    std::size_t nodes_created = 0;
    std::size_t expansions = 0;
    std::size_t closed_count = 0;
    std::optional<std::size_t> solution_length;
    std::string outcome;
    double millis = 0.0;

    friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

struct RunArtifacts {
    std::vector<ExperimentReport> reports;
    /// Per-report EBFS trace (empty unless config.trace).
    std::vector<std::string> traces;
    std::vector<std::string> warnings;
};

/// Checks the whole configuration, including every known state against
/// every n in range. Throws ConfigError.
void validate(const ExperimentConfig& config);

/// One report per (n, algorithm), in config order. Success rows are audited
/// with validate_path before they are returned.
RunArtifacts run_experiment(const ExperimentConfig& config);

std::string emit(const std::vector<ExperimentReport>& reports, Format format);
std::string emit_csv(const std::vector<ExperimentReport>& reports);
std::string emit_json(const std::vector<ExperimentReport>& reports);
std::vector<ExperimentReport> parse_json(const std::string& text);

/// Published state counts for n = 5..8: BFS, EBFS with 2 and 3 known states.
struct ReferenceCounts {
    std::size_t bfs;
    std::size_t ebfs_two_known;
    std::size_t ebfs_three_known;
};
std::optional<ReferenceCounts> reference_counts(int n);

/// Published count matching a report's (algorithm, k_count), if any.
std::optional<std::size_t> reference_count(const ExperimentReport& report);

/// One line per report that has a published counterpart.
void print_reference_deviation(std::ostream& os, const std::vector<ExperimentReport>& reports);

}  // namespace ebfs::bench
