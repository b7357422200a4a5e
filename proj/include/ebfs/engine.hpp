#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ebfs/essm.hpp"
#include "ebfs/node_database.hpp"
#include "ebfs/search.hpp"

namespace ebfs {

/// Optional hooks into a running EBFS search. Unset members are skipped.
template <SearchState S>
struct SearchObserver {
    std::function<void(const TraceRecord&)> on_select;
    /// Every f-distance assignment made by f_update, with old and new vectors.
    std::function<void(NodeId, const DistanceVector&, const DistanceVector&)> on_distance_change;
    /// After each expansion, once curr has been closed.
    std::function<void(const NodeDatabase<S>&, NodeId)> on_expanded;
};

/// One open node per known state, k_i at distance 0 in slot i, inserted in K order.
template <SearchState S>
void seed(NodeDatabase<S>& db, const Representation<S>& rep) {
    if (!db.empty()) throw std::logic_error("seed: database is not empty");
    if (db.k_count() != rep.k_count()) throw std::invalid_argument("seed: database sized for a different K");
    for (std::size_t i = 0; i < rep.k_count(); ++i) {
        auto node = new_node(rep.known_states()[i], rep.k_count());
        node.f_status = NodeStatus::open;
        node.f_distance[i] = Distance(0);
        node.b_distance[i] = Distance(0);
        db.insert(std::move(node));
    }
}

/// Open node with the smallest min f-distance; FIFO among ties.
template <SearchState S>
std::optional<NodeId> select(const NodeDatabase<S>& db) {
    return db.first_open();
}

/*
  new_i = min(f_distance_i, 1 + parent_i). When the vector changes and the
  node is closed, the new vector is pushed on to every child. Open nodes
  have no children yet; they propagate when expanded.

  Runs on an explicit stack rather than by recursion. Every re-visit
  strictly lowers some finite entry, so the cascade terminates. Returns
  the number of nodes whose vector changed.
*/
template <SearchState S>
std::size_t f_update(NodeDatabase<S>& db, NodeId node, const DistanceVector& parent_distance,
                     const SearchObserver<S>* observer = nullptr) {
    std::size_t changes = 0;
    std::vector<std::pair<NodeId, DistanceVector>> work;
    work.emplace_back(node, parent_distance);
    while (!work.empty()) {
        auto [id, parent] = std::move(work.back());
        work.pop_back();
        const auto& current = db.node(id).f_distance;
        DistanceVector updated = relaxed(current, parent);
        if (updated == current) continue;
        ++changes;
        if (observer && observer->on_distance_change) observer->on_distance_change(id, current, updated);
        db.set_f_distance(id, updated);
        const auto& n = db.node(id);
        if (n.f_status != NodeStatus::closed) continue;
        for (auto it = n.f_children.rbegin(); it != n.f_children.rend(); ++it) work.emplace_back(it->node, updated);
    }
    return changes;
}

/*
  Applies every forward function to curr's state. Each successor is looked
  up in the database and created if missing; new (or not-relevant) nodes
  become open. The pair is linked both ways and the successor's distances
  are relaxed through curr. curr is closed at the end.

  A cascade that cycles back to curr cannot lower curr's own vector, so
  the children linked here already carry curr's final distances.
*/
template <SearchState S>
void expand(NodeDatabase<S>& db, const Representation<S>& rep, NodeId curr, SearchStats* stats = nullptr,
            const SearchObserver<S>* observer = nullptr) {
    if (db.node(curr).f_status != NodeStatus::open) throw std::logic_error("expand: node is not open");
    const S state = db.node(curr).state;

    for (std::size_t f = 0; f < rep.forward_fns().size(); ++f) {
        std::vector<S> successors;
        try {
            successors = rep.forward_fns()[f](state);
        } catch (const std::exception& e) {
            throw ProblemDefinitionError("forward function " + std::to_string(f) + " failed on " +
                                         format_state(state) + ": " + e.what());
        }
        for (S& next : successors) {
            auto found = db.find(next);
            NodeId child;
            if (!found) {
                child = db.insert(new_node(std::move(next), db.k_count()));
                db.set_status(child, NodeStatus::open);
            } else {
                child = *found;
                if (stats) ++stats->duplicate_hits;
                // Only a backward search could mark a node not relevant.
                assert(db.node(child).f_status != NodeStatus::not_relevant);
                if (db.node(child).f_status == NodeStatus::not_relevant) db.set_status(child, NodeStatus::open);
            }
            db.link(curr, child, f);
            f_update(db, child, db.node(curr).f_distance, observer);
        }
    }

    db.set_status(curr, NodeStatus::closed);
    if (stats) ++stats->expansions;
    if (observer && observer->on_expanded) observer->on_expanded(db, curr);
}

/// Brute-force goal condition: some initial node s, goal node g and index i
/// with b_distance(s)_i and f_distance(g)_i both finite.
template <SearchState S>
bool goal_condition(const NodeDatabase<S>& db, const Representation<S>& rep) {
    for (const auto& s : db.nodes()) {
        if (!rep.is_initial(s.state)) continue;
        for (const auto& g : db.nodes()) {
            if (!rep.is_goal(g.state)) continue;
            for (std::size_t i = 0; i < db.k_count(); ++i) {
                if (s.b_distance[i].is_finite() && g.f_distance[i].is_finite()) return true;
            }
        }
    }
    return false;
}

/*
  Walks f_parents back from goal_node, each step choosing the
  earliest-discovered parent whose i-th distance is exactly one less,
  until the node at distance 0 (k_i itself) is reached.
*/
template <SearchState S>
Solution<S> reconstruct_path(const NodeDatabase<S>& db, NodeId goal_node, std::size_t i) {
    if (i >= db.k_count()) throw std::out_of_range("reconstruct_path: known-state index out of range");
    NodeId current = goal_node;
    Distance d = db.node(current).f_distance[i];
    if (!d.is_finite()) throw std::invalid_argument("reconstruct_path: goal is not reachable from this known state");

    Path<S> reversed;
    while (d.value() > 0) {
        const Distance want(d.value() - 1);
        std::optional<Link> best;
        for (const Link& p : db.node(current).f_parents) {
            if (db.node(p.node).f_distance[i] == want && (!best || p.node < best->node)) best = p;
        }
        if (!best)
            throw InternalConsistencyError("no parent at distance " + want.to_string() + " for " +
                                           format_state(db.node(current).state));
        reversed.push_back({db.node(best->node).state, db.node(current).state, OpRef{Direction::forward, best->op}});
        current = best->node;
        d = want;
    }
    if (reversed.empty()) return Solution<S>(db.node(current).state);
    std::reverse(reversed.begin(), reversed.end());
    return Solution<S>(std::move(reversed));
}

/*
  Extended breadth-first search: a multi-source BFS seeded with every
  known state, where each node carries one distance per known state.

  The goal condition is tracked incrementally. Backward distances are set
  only at seeding, so the set of indices i for which an initial node has
  a finite b-distance is fixed once seeded; the search succeeds when some
  goal node gets a finite f-distance at one of those indices.

  The condition is also checked right after seeding, so that a known
  state that is both initial and goal is reported without expansion.
*/
template <SearchState S>
class Ebfs {
public:
    explicit Ebfs(const Representation<S>& rep, Limits limits = {}, SearchObserver<S> observer = {})
        : rep_(rep), limits_(limits), observer_(std::move(observer)), db_(rep.k_count()) {
        if (!rep.backward_fns().empty())
            throw ModelError("EBFS supports one-way forward representations only (B must be empty)");
    }

    SearchResult<S> run() {
        if (!db_.empty()) throw std::logic_error("Ebfs::run called twice");
        seed(db_, rep_);
        for (NodeId id = 0; id < db_.size(); ++id) {
            const auto& n = db_.node(id);
            if (!rep_.is_initial(n.state)) continue;
            for (std::size_t i = 0; i < rep_.k_count(); ++i)
                if (n.b_distance[i].is_finite()) connected_indices_.push_back(i);
        }
        std::sort(connected_indices_.begin(), connected_indices_.end());
        connected_indices_.erase(std::unique(connected_indices_.begin(), connected_indices_.end()),
                                 connected_indices_.end());
        track_new_nodes(0);

        std::size_t step = 0;
        while (true) {
            stats_.max_open_size = std::max(stats_.max_open_size, db_.open_count());
            if (auto found = satisfied()) return finish(Outcome::success, found);
            if (db_.open_count() == 0) return finish(Outcome::failure);
            if (limits_.max_expansions && stats_.expansions >= *limits_.max_expansions)
                return finish(Outcome::resource_limit);

            const NodeId curr = *select(db_);
            if (observer_.on_select) {
                observer_.on_select({step, format_state(db_.node(curr).state), min_entry(db_.node(curr).f_distance),
                                     db_.open_count(), db_.size()});
            }
            ++step;
            const std::size_t before = db_.size();
            expand(db_, rep_, curr, &stats_, &observer_);
            track_new_nodes(before);

            if (limits_.max_nodes && db_.size() > *limits_.max_nodes && !satisfied())
                return finish(Outcome::resource_limit);
        }
    }

    const NodeDatabase<S>& database() const { return db_; }
    const Representation<S>& representation() const { return rep_; }

private:
    void track_new_nodes(std::size_t from) {
        for (NodeId id = static_cast<NodeId>(from); id < db_.size(); ++id)
            if (rep_.is_goal(db_.node(id).state)) goal_nodes_.push_back(id);
    }

    std::optional<std::pair<NodeId, std::size_t>> satisfied() const {
        for (NodeId g : goal_nodes_) {
            for (std::size_t i : connected_indices_)
                if (db_.node(g).f_distance[i].is_finite()) return std::pair{g, i};
        }
        return std::nullopt;
    }

    SearchResult<S> finish(Outcome outcome, std::optional<std::pair<NodeId, std::size_t>> found = {}) {
        SearchResult<S> result;
        result.outcome = outcome;
        stats_.nodes_created = db_.size();
        stats_.closed_count = db_.count_with_status(NodeStatus::closed);
        result.stats = stats_;
        if (found) {
            result.solution = reconstruct_path(db_, found->first, found->second);
            result.via_known = found->second;
        }
        return result;
    }

    const Representation<S>& rep_;
    Limits limits_;
    SearchObserver<S> observer_;
    NodeDatabase<S> db_;
    SearchStats stats_;
    std::vector<std::size_t> connected_indices_;
    std::vector<NodeId> goal_nodes_;
};

template <SearchState S>
SearchResult<S> ebfs(const Representation<S>& rep, Limits limits = {}) {
    return Ebfs<S>(rep, limits).run();
}

}  // namespace ebfs
