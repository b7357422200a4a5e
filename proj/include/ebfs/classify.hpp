#pragma once

#include <algorithm>
#include <optional>
#include <cstddef>
#include <istream>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ebfs/essm.hpp"

namespace ebfs {

class ClassificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Explicit enumeration of a small state space.
template <SearchState S>
class FiniteSpace {
public:
    explicit FiniteSpace(std::vector<S> states) : states_(std::move(states)) {
        for (std::size_t i = 0; i < states_.size(); ++i) {
            if (!index_.emplace(states_[i], i).second)
                throw std::invalid_argument("duplicate state in finite space: " + format_state(states_[i]));
        }
    }

    const std::vector<S>& states() const { return states_; }
    std::size_t size() const { return states_.size(); }

    std::optional<std::size_t> index_of(const S& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// One serialized state per line; blank lines are skipped.
    static FiniteSpace load(std::istream& in) {
        std::vector<S> states;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            states.push_back(parse_state<S>(line));
        }
        return FiniteSpace(std::move(states));
    }

private:
    std::vector<S> states_;
    std::unordered_map<S, std::size_t> index_;
};

struct ClassificationReport {
    bool deterministic = false;
    bool symmetric = false;
    bool antisymmetric = false;
    bool strictly_symmetric = false;
    bool one_way_forward = false;
    bool one_way_backward = false;
    std::size_t initial_state_count = 0;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/*
  Decides the representation properties by exhaustive quantification over
  space x space x function index.

  Edges are collected as ordered index pairs (s, s'):
    forward pairs:  s' in f_k(s)
    backward pairs: s in b_l(s')
  so that "symmetric" is equality of the two pair sets, "antisymmetric" is
  their disjointness, and "strictly symmetric" is per-index equality.

  The published antisymmetry formula ends with s' in f_k(s'); that is read
  as s' in f_k(s), i.e. an edge given by B must not also be given by F.
*/
template <SearchState S>
ClassificationReport classify(const Representation<S>& rep, const FiniteSpace<S>& space) {
    using Pair = std::pair<std::size_t, std::size_t>;
    using PairSet = std::set<Pair>;

    for (const S& k : rep.known_states()) {
        if (!space.index_of(k)) throw ClassificationError("known state " + format_state(k) + " is not in the space");
    }

    auto locate = [&](const S& s) {
        auto idx = space.index_of(s);
        if (!idx) throw ClassificationError("space is not closed: state " + format_state(s) + " escapes it");
        return *idx;
    };

    ClassificationReport report;
    report.deterministic = true;

    std::vector<PairSet> forward_by_fn(rep.forward_fns().size());
    std::vector<PairSet> backward_by_fn(rep.backward_fns().size());
    const auto& states = space.states();

    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t k = 0; k < rep.forward_fns().size(); ++k) {
            std::vector<std::size_t> image;
            for (const S& t : rep.forward_fns()[k](states[i])) image.push_back(locate(t));
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (image.size() > 1) report.deterministic = false;
            for (std::size_t j : image) forward_by_fn[k].emplace(i, j);
        }
        // states[i] plays s'; each s in b_l(s') yields the pair (s, s').
        for (std::size_t l = 0; l < rep.backward_fns().size(); ++l) {
            for (const S& t : rep.backward_fns()[l](states[i])) backward_by_fn[l].emplace(locate(t), i);
        }
        if (rep.is_initial(states[i])) ++report.initial_state_count;
    }

    PairSet forward_all, backward_all;
    for (const auto& p : forward_by_fn) forward_all.insert(p.begin(), p.end());
    for (const auto& p : backward_by_fn) backward_all.insert(p.begin(), p.end());

    report.symmetric = forward_all == backward_all;
    report.antisymmetric = std::none_of(forward_all.begin(), forward_all.end(),
                                        [&](const Pair& p) { return backward_all.contains(p); });
    report.strictly_symmetric = forward_by_fn.size() == backward_by_fn.size() && forward_by_fn == backward_by_fn;
    report.one_way_forward = rep.backward_fns().empty();
    report.one_way_backward = rep.forward_fns().empty();
    return report;
}

}  // namespace ebfs
