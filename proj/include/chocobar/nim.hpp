#pragma once

#include <concepts>
#include <initializer_list>
#include <ranges>
#include <vector>

#include "chocobar/errors.hpp"

namespace chocobar {

template <std::unsigned_integral T>
constexpr T nim_sum(T x, T y) {
  return x ^ y;
}

template <std::ranges::input_range R>
  requires std::unsigned_integral<std::ranges::range_value_t<R>>
constexpr auto grundy_sum(R&& values) {
  std::ranges::range_value_t<R> acc = 0;
  for (auto v : values) acc ^= v;
  return acc;
}

inline Value grundy_sum(std::initializer_list<Value> values) {
  return grundy_sum(std::vector<Value>(values));
}

namespace detail {

// mex(S) <= |S|, so a presence bitmap of |S| + 1 slots suffices. The scratch
// buffer is reused across calls by the table builder.
template <std::ranges::input_range R>
Value mex_with_scratch(R&& values, std::size_t count, std::vector<char>& seen) {
  seen.assign(count + 1, 0);
  for (auto v : values) {
    if (v <= count) seen[static_cast<std::size_t>(v)] = 1;
  }
  Value m = 0;
  while (seen[static_cast<std::size_t>(m)]) ++m;
  return m;
}

}  // namespace detail

/// Least non-negative integer absent from values.
template <std::ranges::forward_range R>
  requires std::unsigned_integral<std::ranges::range_value_t<R>>
Value mex(R&& values) {
  std::vector<char> seen;
  const auto count = static_cast<std::size_t>(std::ranges::distance(values));
  return detail::mex_with_scratch(values, count, seen);
}

inline Value mex(std::initializer_list<Value> values) {
  return mex(std::vector<Value>(values));
}

}  // namespace chocobar
