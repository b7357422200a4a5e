#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ebfs {

/// Extended natural number: a nonnegative edge count or infinity.
class Distance {
public:
    constexpr Distance() = default;  // infinity
    constexpr explicit Distance(std::uint32_t value) : value_(value) {
        if (value == kInfinite) throw std::out_of_range("distance overflow");
    }

    static constexpr Distance infinite() { return Distance(); }

    constexpr bool is_finite() const { return value_ != kInfinite; }

    constexpr std::uint32_t value() const {
        if (!is_finite()) throw std::logic_error("value() on infinite distance");
        return value_;
    }

    /// 1 + d, with 1 + inf = inf.
    constexpr Distance successor() const {
        return is_finite() ? Distance(value_ + 1) : Distance();
    }

    friend constexpr bool operator==(Distance, Distance) = default;
    friend constexpr auto operator<=>(Distance a, Distance b) { return a.value_ <=> b.value_; }

    std::string to_string() const { return is_finite() ? std::to_string(value_) : "inf"; }

    friend std::ostream& operator<<(std::ostream& os, Distance d) { return os << d.to_string(); }

private:
    static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t value_ = kInfinite;
};

/// One entry per known state, indexed in known-state order.
using DistanceVector = std::vector<Distance>;

inline DistanceVector all_infinite(std::size_t k_count) { return DistanceVector(k_count); }

/// Smallest entry of the vector (inf for an all-inf vector).
inline Distance min_entry(const DistanceVector& v) {
    Distance best;
    for (Distance d : v) best = std::min(best, d);
    return best;
}

/// Componentwise min(current_i, 1 + parent_i).
inline DistanceVector relaxed(const DistanceVector& current, const DistanceVector& parent) {
    if (current.size() != parent.size()) throw std::invalid_argument("distance vectors differ in length");
    DistanceVector out(current.size());
    for (std::size_t i = 0; i < current.size(); ++i) out[i] = std::min(current[i], parent[i].successor());
    return out;
}

inline std::string to_string(const DistanceVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].to_string();
    }
    return out + ")";
}

}  // namespace ebfs
