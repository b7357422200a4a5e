#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <exception>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ebfs/essm.hpp"
#include "ebfs/search.hpp"

namespace ebfs {

/*
  Classical breadth-first search, the baseline EBFS is compared against.

  The frontier starts from the known states that are initial (for a
  classical representation, the single s0). A node is expanded with every
  forward function before the goal test runs on the states it generated,
  which is the same granularity at which EBFS checks its goal condition.
*/
template <SearchState S>
class Bfs {
public:
    explicit Bfs(const Representation<S>& rep, Limits limits = {}) : rep_(rep), limits_(limits) {
        if (!rep.backward_fns().empty())
            throw ModelError("BFS supports one-way forward representations only (B must be empty)");
    }

    SearchResult<S> run() {
        if (!states_.empty()) throw std::logic_error("Bfs::run called twice");
        std::deque<std::size_t> frontier;
        for (const S& k : rep_.known_states()) {
            if (!rep_.is_initial(k)) continue;
            const std::size_t id = discover(k, std::nullopt);
            if (rep_.is_goal(k)) return finish(Outcome::success, id);
            frontier.push_back(id);
        }

        while (!frontier.empty()) {
            stats_.max_open_size = std::max(stats_.max_open_size, frontier.size());
            if (limits_.max_expansions && stats_.expansions >= *limits_.max_expansions)
                return finish(Outcome::resource_limit);
            const std::size_t curr = frontier.front();
            frontier.pop_front();

            std::optional<std::size_t> first_goal;
            const S state = states_[curr];
            for (std::size_t f = 0; f < rep_.forward_fns().size(); ++f) {
                std::vector<S> successors;
                try {
                    successors = rep_.forward_fns()[f](state);
                } catch (const std::exception& e) {
                    throw ProblemDefinitionError("forward function " + std::to_string(f) + " failed on " +
                                                 format_state(state) + ": " + e.what());
                }
                for (S& next : successors) {
                    if (index_.contains(next)) {
                        ++stats_.duplicate_hits;
                        continue;
                    }
                    const bool is_goal = rep_.is_goal(next);
                    const std::size_t id = discover(std::move(next), Parent{curr, f});
                    if (is_goal && !first_goal) first_goal = id;
                    frontier.push_back(id);
                }
            }
            ++stats_.expansions;
            if (first_goal) return finish(Outcome::success, first_goal);
            if (limits_.max_nodes && states_.size() > *limits_.max_nodes) return finish(Outcome::resource_limit);
        }
        return finish(Outcome::failure);
    }

    /// Every discovered state, in discovery order.
    const std::vector<S>& discovered() const { return states_; }

private:
    struct Parent {
        std::size_t node;
        std::size_t op;
    };

    std::size_t discover(S state, std::optional<Parent> parent) {
        const std::size_t id = states_.size();
        index_.emplace(state, id);
        states_.push_back(std::move(state));
        parents_.push_back(parent);
        return id;
    }

    SearchResult<S> finish(Outcome outcome, std::optional<std::size_t> goal = {}) {
        SearchResult<S> result;
        result.outcome = outcome;
        stats_.nodes_created = states_.size();
        stats_.closed_count = stats_.expansions;
        result.stats = stats_;
        if (goal) {
            Path<S> reversed;
            for (std::size_t at = *goal; parents_[at]; at = parents_[at]->node)
                reversed.push_back({states_[parents_[at]->node], states_[at], OpRef{Direction::forward, parents_[at]->op}});
            std::reverse(reversed.begin(), reversed.end());
            result.solution = reversed.empty() ? Solution<S>(states_[*goal]) : Solution<S>(std::move(reversed));
        }
        return result;
    }

    const Representation<S>& rep_;
    Limits limits_;
    SearchStats stats_;
    std::vector<S> states_;
    std::vector<std::optional<Parent>> parents_;
    std::unordered_map<S, std::size_t> index_;
};

template <SearchState S>
SearchResult<S> bfs(const Representation<S>& rep, Limits limits = {}) {
    return Bfs<S>(rep, limits).run();
}

}  // namespace ebfs
