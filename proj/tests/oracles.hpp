#pragma once

// Test-only oracles. Nothing here calls into the engine; each helper
// recomputes its answer from first principles.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ebfs/engine.hpp"
#include "ebfs/essm.hpp"
#include "ebfs/nqueens.hpp"

namespace oracle {

/// Hop distances from `source` over an adjacency list; -1 when unreachable.
inline std::vector<long> bfs_distances(const std::vector<std::vector<std::size_t>>& adj, std::size_t source) {
    std::vector<long> dist(adj.size(), -1);
    std::deque<std::size_t> q{source};
    dist[source] = 0;
    while (!q.empty()) {
        const auto u = q.front();
        q.pop_front();
        for (auto v : adj[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
        }
    }
    return dist;
}

/// Adjacency of the stored f_children edges of a database.
template <class S>
std::vector<std::vector<std::size_t>> stored_adjacency(const ebfs::NodeDatabase<S>& db) {
    std::vector<std::vector<std::size_t>> adj(db.size());
    for (std::size_t i = 0; i < db.size(); ++i)
        for (const auto& c : db.node(static_cast<ebfs::NodeId>(i)).f_children) adj[i].push_back(c.node);
    return adj;
}

/// Every stored f-distance vector equals per-source BFS over stored edges.
/// Returns a description of the first mismatch, or nullopt.
template <class S>
std::optional<std::string> distance_mismatch(const ebfs::NodeDatabase<S>& db) {
    const auto adj = stored_adjacency(db);
    for (std::size_t i = 0; i < db.k_count(); ++i) {
        // Seeds are inserted first, in K order.
        const auto dist = bfs_distances(adj, i);
        for (std::size_t n = 0; n < db.size(); ++n) {
            const auto stored = db.node(static_cast<ebfs::NodeId>(n)).f_distance[i];
            const bool ok = dist[n] < 0 ? !stored.is_finite()
                                        : stored.is_finite() && stored.value() == static_cast<std::uint32_t>(dist[n]);
            if (!ok)
                return "node " + std::to_string(n) + " index " + std::to_string(i) + ": stored " + stored.to_string() +
                       ", oracle " + std::to_string(dist[n]);
        }
    }
    return std::nullopt;
}

/// Parent/child lists mirror each other.
template <class S>
bool links_symmetric(const ebfs::NodeDatabase<S>& db) {
    std::set<std::pair<std::size_t, std::size_t>> down, up;
    for (std::size_t i = 0; i < db.size(); ++i) {
        const auto& n = db.node(static_cast<ebfs::NodeId>(i));
        for (const auto& c : n.f_children) down.emplace(i, c.node);
        for (const auto& p : n.f_parents) up.emplace(p.node, i);
    }
    return down == up;
}

inline bool queens_attack(int r1, int c1, int r2, int c2) {
    return r1 == r2 || c1 == c2 || std::abs(r1 - r2) == std::abs(c1 - c2);
}

/// Every set of mutually non-attacking queens on an n x n board, by
/// brute-force enumeration of square subsets (ascending square index).
inline std::vector<std::vector<int>> safe_placements(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto& self, int from) -> void {
        out.push_back(cur);
        for (int sq = from; sq < n * n; ++sq) {
            bool ok = true;
            for (int q : cur)
                if (queens_attack(q / n, q % n, sq / n, sq % n)) ok = false;
            if (!ok) continue;
            cur.push_back(sq);
            self(self, sq + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline ebfs::nqueens::Board to_board(int n, const std::vector<int>& squares) {
    std::vector<ebfs::nqueens::Square> q;
    for (int s : squares) q.push_back({s / n, s % n});
    return ebfs::nqueens::Board(n, q);
}

/// Textbook BFS over the n-queens placement graph from the empty board,
/// independent of the library's search code. Expands whole levels of a
/// FIFO queue, stops after the expansion that first generates a goal.
/// Returns the set of discovered boards and the goal depth (or -1).
inline std::pair<std::set<std::vector<int>>, int> nqueens_textbook_bfs(int n) {
    std::set<std::vector<int>> seen{{}};
    std::deque<std::vector<int>> q{{}};
    while (!q.empty()) {
        auto cur = q.front();
        q.pop_front();
        bool goal = false;
        for (int sq = 0; sq < n * n; ++sq) {
            bool ok = true;
            for (int x : cur)
                if (x == sq || queens_attack(x / n, x % n, sq / n, sq % n)) ok = false;
            if (!ok) continue;
            auto next = cur;
            next.insert(std::lower_bound(next.begin(), next.end(), sq), sq);
            if (seen.insert(next).second) {
                if (static_cast<int>(next.size()) == n) goal = true;
                q.push_back(next);
            }
        }
        if (goal) return {seen, n};
    }
    return {seen, -1};
}

inline std::vector<int> squares_of(const ebfs::nqueens::Board& b) {
    std::vector<int> out;
    for (const auto& q : b.queens()) out.push_back(q.row * b.n() + q.col);
    return out;
}

/*
  Explicit directed graph on int states, as a deterministic representation:
  forward function j maps s to its j-th listed successor, if it has one.
*/
inline ebfs::Representation<int> graph_rep(std::vector<int> known, const std::map<int, std::vector<int>>& edges,
                                           std::set<int> goals, std::set<int> initials) {
    std::size_t width = 1;
    for (const auto& [s, succ] : edges) width = std::max(width, succ.size());
    std::vector<ebfs::Representation<int>::SetFunction> fns;
    for (std::size_t j = 0; j < width; ++j) {
        fns.emplace_back([edges, j](const int& s) -> std::vector<int> {
            auto it = edges.find(s);
            if (it == edges.end() || j >= it->second.size()) return {};
            return {it->second[j]};
        });
    }
    return ebfs::Representation<int>(
        std::move(known), [initials](const int& s) { return initials.contains(s); },
        [goals](const int& s) { return goals.contains(s); }, std::move(fns));
}

}  // namespace oracle
