#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ebfs/distance.hpp"
#include "ebfs/state.hpp"

namespace ebfs {

/// Position of a node in discovery (FIFO) order.
using NodeId = std::uint32_t;

enum class NodeStatus { unset, open, closed, not_relevant };

inline const char* to_string(NodeStatus s) {
    switch (s) {
        case NodeStatus::unset: return "unset";
        case NodeStatus::open: return "open";
        case NodeStatus::closed: return "closed";
        case NodeStatus::not_relevant: return "not_relevant";
    }
    return "?";
}

/// A stored edge end: the neighbouring node and the forward function index.
struct Link {
    NodeId node = 0;
    std::size_t op = 0;

    friend bool operator==(const Link&, const Link&) = default;
};

template <SearchState S>
struct SearchNode {
    S state;
    NodeStatus f_status = NodeStatus::unset;
    std::vector<Link> f_parents;
    std::vector<Link> f_children;
    DistanceVector f_distance;
    DistanceVector b_distance;
};

/// Fresh record: status unset, no links, both vectors all-inf.
/// Does not deduplicate; that is the database's job.
template <SearchState S>
SearchNode<S> new_node(S state, std::size_t k_count) {
    if (k_count == 0) throw std::invalid_argument("new_node: k_count must be positive");
    return SearchNode<S>{std::move(state), NodeStatus::unset, {}, {}, all_infinite(k_count), all_infinite(k_count)};
}

/*
  State-indexed store of search nodes. Nodes live in a vector in the order
  they were inserted, which doubles as the FIFO discovery order; NodeId is
  the position in that vector.

  The open nodes are additionally indexed by (min f-distance, NodeId) so
  that selection of the earliest-discovered closest open node is a
  lookup. All mutation goes through the database to keep that index
  consistent.
*/
template <SearchState S>
class NodeDatabase {
public:
    explicit NodeDatabase(std::size_t k_count) : k_count_(k_count) {
        if (k_count == 0) throw std::invalid_argument("NodeDatabase: k_count must be positive");
    }

    std::size_t k_count() const { return k_count_; }
    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }

    std::optional<NodeId> find(const S& state) const {
        auto it = index_.find(state);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    NodeId insert(SearchNode<S> node) {
        if (node.f_distance.size() != k_count_ || node.b_distance.size() != k_count_)
            throw std::invalid_argument("node distance vectors do not match k_count");
        const auto id = static_cast<NodeId>(nodes_.size());
        if (!index_.emplace(node.state, id).second)
            throw std::logic_error("state already stored: " + format_state(node.state));
        nodes_.push_back(std::move(node));
        if (nodes_.back().f_status == NodeStatus::open) open_.emplace(min_entry(nodes_.back().f_distance), id);
        return id;
    }

    const SearchNode<S>& node(NodeId id) const { return nodes_.at(id); }
    const std::vector<SearchNode<S>>& nodes() const { return nodes_; }

    void set_status(NodeId id, NodeStatus status) {
        auto& n = nodes_.at(id);
        if (n.f_status == status) return;
        if (n.f_status == NodeStatus::open) open_.erase({min_entry(n.f_distance), id});
        n.f_status = status;
        if (status == NodeStatus::open) open_.emplace(min_entry(n.f_distance), id);
    }

    void set_f_distance(NodeId id, DistanceVector distance) {
        if (distance.size() != k_count_) throw std::invalid_argument("distance vector length mismatch");
        auto& n = nodes_.at(id);
        if (n.f_status == NodeStatus::open) {
            open_.erase({min_entry(n.f_distance), id});
            open_.emplace(min_entry(distance), id);
        }
        n.f_distance = std::move(distance);
    }

    void set_b_distance(NodeId id, DistanceVector distance) {
        if (distance.size() != k_count_) throw std::invalid_argument("distance vector length mismatch");
        nodes_.at(id).b_distance = std::move(distance);
    }

    /// Adds parent -> child in both adjacency lists. Returns false if the
    /// two nodes were already linked.
    bool link(NodeId parent, NodeId child, std::size_t op) {
        auto& parents = nodes_.at(child).f_parents;
        for (const Link& l : parents)
            if (l.node == parent) return false;
        parents.push_back({parent, op});
        nodes_.at(parent).f_children.push_back({child, op});
        return true;
    }

    /// Earliest-discovered open node among those with the smallest min-entry.
    std::optional<NodeId> first_open() const {
        if (open_.empty()) return std::nullopt;
        return open_.begin()->second;
    }

    std::size_t open_count() const { return open_.size(); }

    std::size_t count_with_status(NodeStatus status) const {
        std::size_t c = 0;
        for (const auto& n : nodes_)
            if (n.f_status == status) ++c;
        return c;
    }

private:
    std::size_t k_count_;
    std::vector<SearchNode<S>> nodes_;
    std::unordered_map<S, NodeId> index_;
    std::set<std::pair<Distance, NodeId>> open_;
};

}  // namespace ebfs
