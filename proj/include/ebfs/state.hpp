#pragma once

#include <charconv>
#include <concepts>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ebfs {

/// Text serialization for a state type. Problems specialize this.
/// Equal states must format identically.
template <class S>
struct StateTraits;

template <class S>
concept SearchState = std::equality_comparable<S> && std::copy_constructible<S> &&
    requires(const S& s, std::string_view text) {
        { std::hash<S>{}(s) } -> std::convertible_to<std::size_t>;
        { StateTraits<S>::format(s) } -> std::convertible_to<std::string>;
        { StateTraits<S>::parse(text) } -> std::same_as<S>;
    };

template <SearchState S>
std::string format_state(const S& s) {
    return StateTraits<S>::format(s);
}

template <SearchState S>
S parse_state(std::string_view text) {
    return StateTraits<S>::parse(text);
}

/// Plain integers, used by hand-built graphs and micro representations.
template <>
struct StateTraits<int> {
    static std::string format(int s) { return std::to_string(s); }
    static int parse(std::string_view text) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw std::invalid_argument("not an integer state: '" + std::string(text) + "'");
        return value;
    }
};

}  // namespace ebfs
