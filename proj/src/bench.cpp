#include "ebfs/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ebfs/bfs.hpp"
#include "ebfs/engine.hpp"
#include "ebfs/nqueens.hpp"

namespace ebfs::bench {

using nqueens::Board;
using nqueens::KnownStateSpec;

const char* to_string(Algorithm a) { return a == Algorithm::bfs ? "bfs" : "ebfs"; }

Algorithm parse_algorithm(const std::string& text) {
    if (text == "bfs") return Algorithm::bfs;
    if (text == "ebfs") return Algorithm::ebfs;
    throw ConfigError("unknown algorithm '" + text + "'");
}

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    throw ConfigError("unknown output format '" + text + "'");
}

KnownSpecifier KnownSpecifier::parse(const std::string& text) {
    static const std::string prefix = "solution-prefix";
    KnownSpecifier spec;
    spec.text = text;
    if (text == "false-heuristic") {
        spec.kind = Kind::false_heuristic;
    } else if (text == prefix) {
        spec.kind = Kind::solution_prefix;
        spec.depth = 2;
    } else if (text.rfind(prefix + ":", 0) == 0) {
        spec.kind = Kind::solution_prefix;
        const std::string arg = text.substr(prefix.size() + 1);
        if (arg == "half") {
            spec.half_depth = true;
        } else {
            try {
                std::size_t used = 0;
                spec.depth = std::stoi(arg, &used);
                if (used != arg.size() || *spec.depth < 1) throw std::invalid_argument(arg);
            } catch (const std::exception&) {
                throw ConfigError("bad solution-prefix depth '" + arg + "'");
            }
        }
    } else {
        spec.kind = Kind::explicit_state;
    }
    return spec;
}

std::string KnownSpecifier::describe() const {
    if (kind == Kind::solution_prefix) {
        return half_depth ? "solution-prefix:half" : "solution-prefix:" + std::to_string(depth.value_or(2));
    }
    return text;
}

std::pair<int, int> parse_n_range(const std::string& text) {
    auto number = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("bad n range '" + text + "'");
        }
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int n = number(text);
        return {n, n};
    }
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

namespace {

KnownStateSpec build_known(const ExperimentConfig& config, int n) {
    KnownStateSpec known;
    known.entries.push_back({Board(n), KnownStateSpec::Role::initial});
    for (const auto& spec : config.known) {
        switch (spec.kind) {
            case KnownSpecifier::Kind::solution_prefix: {
                const int depth = spec.half_depth ? (n + 1) / 2 : spec.depth.value_or(2);
                if (depth > n)
                    throw ConfigError(spec.describe() + ": depth exceeds n = " + std::to_string(n));
                try {
                    known.entries.push_back({nqueens::on_solution_state(n, depth), KnownStateSpec::Role::on_solution});
                } catch (const std::exception& e) {
                    throw ConfigError(spec.describe() + ": " + e.what());
                }
                break;
            }
            case KnownSpecifier::Kind::false_heuristic: {
                auto ref = std::find_if(known.entries.rbegin(), known.entries.rend(),
                                        [](const auto& e) { return e.state.queen_count() > 0; });
                if (ref == known.entries.rend())
                    throw ConfigError("false-heuristic needs a preceding non-empty known state");
                try {
                    known.entries.push_back(
                        {nqueens::false_heuristic_state(n, ref->state), KnownStateSpec::Role::false_heuristic});
                } catch (const std::exception& e) {
                    throw ConfigError(std::string("false-heuristic: ") + e.what());
                }
                break;
            }
            case KnownSpecifier::Kind::explicit_state: {
                std::optional<Board> board;
                try {
                    board = nqueens::parse_board(spec.text);
                } catch (const std::exception& e) {
                    throw ConfigError("known state '" + spec.text + "': " + e.what());
                }
                if (board->n() != n)
                    throw ConfigError("known state '" + spec.text + "' does not fit n = " + std::to_string(n));
                if (!board->is_safe()) throw ConfigError("known state '" + spec.text + "' has attacking queens");
                known.entries.push_back({*board, KnownStateSpec::Role::given});
                break;
            }
        }
    }
    for (std::size_t i = 0; i < known.entries.size(); ++i)
        for (std::size_t j = i + 1; j < known.entries.size(); ++j)
            if (known.entries[i].state == known.entries[j].state)
                throw ConfigError("duplicate known state " + nqueens::format_board(known.entries[i].state) +
                                  " for n = " + std::to_string(n));
    return known;
}

std::string seeding_text(const ExperimentConfig& config, Algorithm algo) {
    std::string out = "empty";
    if (algo == Algorithm::bfs) return out;
    for (const auto& k : config.known) out += "+" + k.describe();
    return out;
}

template <class S>
void audit(const Representation<S>& rep, const SearchResult<S>& result, bool through_known) {
    if (result.outcome != Outcome::success) return;
    const auto& sol = *result.solution;
    if (!sol.is_degenerate() && !validate_path(rep, sol.path()))
        throw InternalConsistencyError("reported solution is not a valid path");
    if (!rep.is_initial(sol.start())) throw InternalConsistencyError("solution does not start at an initial state");
    if (!rep.is_goal(sol.end())) throw InternalConsistencyError("solution does not end at a goal state");
    if (through_known) {
        const auto states = sol.states();
        const bool hits = std::any_of(states.begin(), states.end(), [&](const S& s) {
            const auto& k = rep.known_states();
            return std::find(k.begin(), k.end(), s) != k.end();
        });
        if (!hits) throw InternalConsistencyError("solution does not pass through a known state");
    }
}

ExperimentReport run_one(const ExperimentConfig& config, int n, Algorithm algo, std::string& trace) {
    const KnownStateSpec known = build_known(config, n);
    const auto rep = nqueens::nqueens_rep(n, known);

    ExperimentReport report;
    report.problem = config.problem;
    report.n = n;
    report.algorithm = to_string(algo);
    report.seeding = seeding_text(config, algo);

    const auto start = std::chrono::steady_clock::now();
    SearchResult<Board> result;
    if (algo == Algorithm::bfs) {
        report.k_count = 1;
        result = Bfs<Board>(rep, config.limits).run();
        audit(rep, result, false);
    } else {
        report.k_count = rep.k_count();
        std::ostringstream trace_out;
        SearchObserver<Board> observer;
        if (config.trace) observer.on_select = [&](const TraceRecord& r) { write_trace(trace_out, r); };
        result = Ebfs<Board>(rep, config.limits, observer).run();
        audit(rep, result, true);
        trace = trace_out.str();
    }
    report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    report.nodes_created = result.stats.nodes_created;
    report.expansions = result.stats.expansions;
    report.closed_count = result.stats.closed_count;
    report.outcome = ebfs::to_string(result.outcome);
    if (result.solution) report.solution_length = result.solution->length();
    return report;
}

}  // namespace

void validate(const ExperimentConfig& config) {
    if (config.problem != "nqueens") throw ConfigError("unknown problem '" + config.problem + "'");
    if (config.n_min < 1 || config.n_max < config.n_min)
        throw ConfigError("empty or invalid n range " + std::to_string(config.n_min) + ".." +
                          std::to_string(config.n_max));
    if (config.algorithms.empty()) throw ConfigError("no algorithm selected");
    if (config.jobs == 0) throw ConfigError("jobs must be positive");
    for (int n = config.n_min; n <= config.n_max; ++n) build_known(config, n);
}

RunArtifacts run_experiment(const ExperimentConfig& config) {
    validate(config);

    struct Task {
        int n;
        Algorithm algo;
    };
    std::vector<Task> tasks;
    for (int n = config.n_min; n <= config.n_max; ++n)
        for (Algorithm a : config.algorithms) tasks.push_back({n, a});

    RunArtifacts out;
    if (!config.known.empty() &&
        std::find(config.algorithms.begin(), config.algorithms.end(), Algorithm::bfs) != config.algorithms.end()) {
        out.warnings.push_back("bfs ignores " + std::to_string(config.known.size()) +
                               " extra known state(s); it searches from the initial state only");
    }

    out.reports.resize(tasks.size());
    out.traces.resize(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                out.reports[i] = run_one(config, tasks[i].n, tasks[i].algo, out.traces[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::min<std::size_t>(config.jobs, tasks.size());
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string emit_csv(const std::vector<ExperimentReport>& reports) {
    std::ostringstream os;
    os << "problem,n,algorithm,k_count,seeding,nodes_created,expansions,closed_count,solution_length,outcome,millis\n";
    for (const auto& r : reports) {
        os << csv_field(r.problem) << ',' << r.n << ',' << r.algorithm << ',' << r.k_count << ','
           << csv_field(r.seeding) << ',' << r.nodes_created << ',' << r.expansions << ',' << r.closed_count << ',';
        if (r.solution_length) os << *r.solution_length;
        os << ',' << r.outcome << ',' << std::fixed << std::setprecision(3) << r.millis << '\n';
    }
    return os.str();
}

std::string emit_json(const std::vector<ExperimentReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["problem"] = r.problem;
        j["n"] = r.n;
        j["algorithm"] = r.algorithm;
        j["k_count"] = r.k_count;
        j["seeding"] = r.seeding;
        j["nodes_created"] = r.nodes_created;
        j["expansions"] = r.expansions;
        j["closed_count"] = r.closed_count;
        j["solution_length"] = r.solution_length ? nlohmann::ordered_json(*r.solution_length) : nullptr;
        j["outcome"] = r.outcome;
        j["millis"] = r.millis;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<ExperimentReport> parse_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    std::vector<ExperimentReport> out;
    for (const auto& j : arr) {
        ExperimentReport r;
        r.problem = j.at("problem").get<std::string>();
        r.n = j.at("n").get<int>();
        r.algorithm = j.at("algorithm").get<std::string>();
        r.k_count = j.at("k_count").get<std::size_t>();
        r.seeding = j.at("seeding").get<std::string>();
        r.nodes_created = j.at("nodes_created").get<std::size_t>();
        r.expansions = j.at("expansions").get<std::size_t>();
        r.closed_count = j.at("closed_count").get<std::size_t>();
        if (!j.at("solution_length").is_null()) r.solution_length = j.at("solution_length").get<std::size_t>();
        r.outcome = j.at("outcome").get<std::string>();
        r.millis = j.at("millis").get<double>();
        out.push_back(std::move(r));
    }
    return out;
}

std::string emit(const std::vector<ExperimentReport>& reports, Format format) {
    return format == Format::csv ? emit_csv(reports) : emit_json(reports);
}

std::optional<ReferenceCounts> reference_counts(int n) {
    switch (n) {
        case 5: return ReferenceCounts{453, 216, 220};
        case 6: return ReferenceCounts{2632, 1409, 1417};
        case 7: return ReferenceCounts{16831, 4434, 4439};
        case 8: return ReferenceCounts{118878, 46286, 46319};
        default: return std::nullopt;
    }
}

std::optional<std::size_t> reference_count(const ExperimentReport& report) {
    if (report.problem != "nqueens") return std::nullopt;
    const auto counts = reference_counts(report.n);
    if (!counts) return std::nullopt;
    // A single known state (the empty board) behaves exactly like BFS.
    if (report.algorithm == "bfs" || report.k_count == 1) return counts->bfs;
    if (report.k_count == 2) return counts->ebfs_two_known;
    if (report.k_count == 3) return counts->ebfs_three_known;
    return std::nullopt;
}

void print_reference_deviation(std::ostream& os, const std::vector<ExperimentReport>& reports) {
    for (const auto& r : reports) {
        const auto ref = reference_count(r);
        if (!ref) continue;
        const double dev = 100.0 * (static_cast<double>(r.nodes_created) - static_cast<double>(*ref)) /
                           static_cast<double>(*ref);
        os << "n=" << r.n << ' ' << r.algorithm << " k=" << r.k_count << " seeding=" << r.seeding
           << " nodes_created=" << r.nodes_created << " expansions=" << r.expansions << " reference=" << *ref
           << " deviation=" << std::showpos << std::fixed << std::setprecision(1) << dev << std::noshowpos << "%\n";
    }
}

}  // namespace ebfs::bench
