#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ebfs/distance.hpp"
#include "ebfs/essm.hpp"

namespace ebfs {

/// A forward function failed while being applied during a search.
class ProblemDefinitionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Stored search data contradicts the distance invariants.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Outcome { success, failure, resource_limit };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::success: return "success";
        case Outcome::failure: return "failure";
        case Outcome::resource_limit: return "resource_limit";
    }
    return "?";
}

struct Limits {
    std::optional<std::size_t> max_nodes;
    std::optional<std::size_t> max_expansions;
};

struct SearchStats {
    std::size_t nodes_created = 0;
    std::size_t expansions = 0;
    std::size_t max_open_size = 0;
    std::size_t duplicate_hits = 0;
    std::size_t closed_count = 0;
};

template <SearchState S>
struct SearchResult {
    Outcome outcome = Outcome::failure;
    std::optional<Solution<S>> solution;
    SearchStats stats;
    /// Known-state index the solution runs through (EBFS only).
    std::optional<std::size_t> via_known;
};

/// One line per selection: step, selected state, its min distance, open
/// nodes at selection time, nodes created so far.
struct TraceRecord {
    std::size_t step = 0;
    std::string state;
    Distance min_distance;
    std::size_t open_count = 0;
    std::size_t nodes_created = 0;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// Comma separated; the state is double-quoted since state text may
/// itself contain commas.
inline void write_trace(std::ostream& os, const TraceRecord& r) {
    os << r.step << ",\"" << r.state << "\"," << r.min_distance << ',' << r.open_count << ',' << r.nodes_created
       << '\n';
}

inline TraceRecord parse_trace_line(const std::string& line) {
    auto fail = [&] { return std::invalid_argument("malformed trace line: " + line); };
    TraceRecord r;
    const auto q1 = line.find('"');
    const auto q2 = q1 == std::string::npos ? q1 : line.find('"', q1 + 1);
    if (q2 == std::string::npos || q1 == 0 || line[q1 - 1] != ',') throw fail();
    r.step = std::stoull(line.substr(0, q1 - 1));
    r.state = line.substr(q1 + 1, q2 - q1 - 1);
    std::string rest = line.substr(q2 + 1);
    if (rest.empty() || rest[0] != ',') throw fail();
    rest.erase(0, 1);
    const auto c1 = rest.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : rest.find(',', c1 + 1);
    if (c2 == std::string::npos) throw fail();
    const std::string dist = rest.substr(0, c1);
    r.min_distance = dist == "inf" ? Distance::infinite() : Distance(static_cast<std::uint32_t>(std::stoul(dist)));
    r.open_count = std::stoull(rest.substr(c1 + 1, c2 - c1 - 1));
    r.nodes_created = std::stoull(rest.substr(c2 + 1));
    return r;
}

}  // namespace ebfs
