#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ebfs/state.hpp"

namespace ebfs {

/// Raised when a representation violates its structural invariants.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Direction { forward, backward };

/// Identifies one function of F or B by position.
struct OpRef {
    Direction direction = Direction::forward;
    std::size_t index = 0;

    friend bool operator==(const OpRef&, const OpRef&) = default;
};

/*
  Extended state-space representation <K, initial, goal, F, B>.

  K is kept as an ordered list: distance vectors are indexed by position
  in K, so the order fixed at construction is the index order.

  Forward and backward functions are set-valued; a function returning an
  empty vector is not applicable to its argument. All callables must be
  pure, since one representation may be shared by concurrent searches.
*/
template <SearchState S>
class Representation {
public:
    using State = S;
    using Predicate = std::function<bool(const S&)>;
    using SetFunction = std::function<std::vector<S>(const S&)>;

    Representation(std::vector<S> known_states, Predicate initial, Predicate goal,
                   std::vector<SetFunction> forward_fns, std::vector<SetFunction> backward_fns = {})
        : known_(std::move(known_states)),
          initial_(std::move(initial)),
          goal_(std::move(goal)),
          forward_(std::move(forward_fns)),
          backward_(std::move(backward_fns)) {
        if (known_.empty()) throw ModelError("set of known states is empty");
        if (forward_.empty() && backward_.empty())
            throw ModelError("representation has neither forward nor backward functions");
        if (!initial_ || !goal_) throw ModelError("initial and goal predicates are required");
        std::unordered_set<S> seen;
        for (const S& k : known_) {
            if (!seen.insert(k).second)
                throw ModelError("duplicate known state " + format_state(k));
        }
        for (const auto& f : forward_)
            if (!f) throw ModelError("empty forward function");
        for (const auto& b : backward_)
            if (!b) throw ModelError("empty backward function");
    }

    const std::vector<S>& known_states() const { return known_; }
    std::size_t k_count() const { return known_.size(); }

    bool is_initial(const S& s) const { return initial_(s); }
    bool is_goal(const S& s) const { return goal_(s); }

    const std::vector<SetFunction>& forward_fns() const { return forward_; }
    const std::vector<SetFunction>& backward_fns() const { return backward_; }

    std::vector<S> apply(OpRef op, const S& s) const {
        const auto& fns = op.direction == Direction::forward ? forward_ : backward_;
        if (op.index >= fns.size()) return {};
        return fns[op.index](s);
    }

private:
    std::vector<S> known_;
    Predicate initial_;
    Predicate goal_;
    std::vector<SetFunction> forward_;
    std::vector<SetFunction> backward_;
};

/// <from, to, op>: for a forward op, to is in op(from); for a backward op, from is in op(to).
template <SearchState S>
struct Edge {
    S from;
    S to;
    OpRef op;

    friend bool operator==(const Edge&, const Edge&) = default;
};

template <SearchState S>
using Path = std::vector<Edge<S>>;

/// A found solution. Zero edges means the start state is itself a goal
/// (the degenerate case, which is not a Path).
template <SearchState S>
class Solution {
public:
    explicit Solution(S start) : start_(std::move(start)) {}
    explicit Solution(Path<S> path) : start_(path.at(0).from), path_(std::move(path)) {}

    bool is_degenerate() const { return path_.empty(); }
    std::size_t length() const { return path_.size(); }
    const S& start() const { return start_; }
    const S& end() const { return path_.empty() ? start_ : path_.back().to; }
    const Path<S>& path() const { return path_; }

    std::vector<S> states() const {
        std::vector<S> out{start_};
        for (const auto& e : path_) out.push_back(e.to);
        return out;
    }

private:
    S start_;
    Path<S> path_;
};

namespace detail {
template <class S>
bool contains(const std::vector<S>& v, const S& s) {
    for (const auto& x : v)
        if (x == s) return true;
    return false;
}
}  // namespace detail

/// True iff every edge is a genuine edge of rep and consecutive edges chain.
/// An empty sequence is not a path.
template <SearchState S>
bool validate_path(const Representation<S>& rep, const Path<S>& path) {
    if (path.empty()) return false;
    for (std::size_t j = 0; j < path.size(); ++j) {
        const Edge<S>& e = path[j];
        if (j > 0 && !(path[j - 1].to == e.from)) return false;
        const auto& fns = e.op.direction == Direction::forward ? rep.forward_fns() : rep.backward_fns();
        if (e.op.index >= fns.size()) return false;
        if (e.op.direction == Direction::forward) {
            if (!detail::contains(fns[e.op.index](e.from), e.to)) return false;
        } else {
            if (!detail::contains(fns[e.op.index](e.to), e.from)) return false;
        }
    }
    return true;
}

/// Embeds a classical representation: K = {s0}, initial(s) <=> s == s0,
/// one forward function per operator, B empty. A partial operator
/// returning nullopt is not applicable to that state.
template <SearchState S>
Representation<S> make_classical(std::vector<std::function<std::optional<S>(const S&)>> operators, S s0,
                                 typename Representation<S>::Predicate goal) {
    if (operators.empty()) throw ModelError("classical representation needs at least one operator");
    std::vector<typename Representation<S>::SetFunction> forward;
    forward.reserve(operators.size());
    for (auto& op : operators) {
        if (!op) throw ModelError("empty operator");
        forward.emplace_back([op = std::move(op)](const S& s) -> std::vector<S> {
            if (auto next = op(s)) return {std::move(*next)};
            return {};
        });
    }
    auto initial = [s0](const S& s) { return s == s0; };
    return Representation<S>({s0}, std::move(initial), std::move(goal), std::move(forward), {});
}

}  // namespace ebfs
