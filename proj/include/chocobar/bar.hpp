#pragma once

#include <algorithm>
#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "chocobar/width_function.hpp"

namespace chocobar {

/// Bar coordinates: y = largest width - 1, z = longest distance from the
/// bitter square - 1.
struct Position2 {
  Value y = 0;
  Value z = 0;

  friend auto operator<=>(const Position2&, const Position2&) = default;
};

/// A strip of length x beside the bar {y, z}.
struct Position3 {
  Value x = 0;
  Value y = 0;
  Value z = 0;

  friend auto operator<=>(const Position3&, const Position3&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Position2& p) {
  return os << '{' << p.y << ',' << p.z << '}';
}

inline std::ostream& operator<<(std::ostream& os, const Position3& p) {
  return os << '{' << p.x << ',' << p.y << ',' << p.z << '}';
}

inline Value eval_width(const WidthFunction& f, Value t) { return f(t); }

inline Value column_height(const WidthFunction& f, Value y, Value i) {
  return std::min(f(i), y) + 1;
}

inline bool is_canonical(const WidthFunction& f, Position2 p) { return p.y <= f(p.z); }

inline Position2 canonicalize(const WidthFunction& f, Position2 p) {
  return {std::min(p.y, f(p.z)), p.z};
}

inline Position3 canonicalize(const WidthFunction& f, Position3 p) {
  return {p.x, std::min(p.y, f(p.z)), p.z};
}

/// All positions reachable in one break, sorted and duplicate-free.
inline std::vector<Position2> moves2(const WidthFunction& f, Position2 p) {
  if (!is_canonical(f, p)) {
    throw PreconditionError("moves2 requires a canonical position");
  }
  std::vector<Position2> out;
  out.reserve(p.y + p.z);
  for (Value v = 0; v < p.y; ++v) out.push_back({v, p.z});
  for (Value w = 0; w < p.z; ++w) out.push_back({std::min(p.y, f(w)), w});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Moves of the strip+bar sum: shorten the strip, or break the bar.
inline std::vector<Position3> moves3(const WidthFunction& h, Position3 p) {
  if (p.z > h.domain_max()) {
    throw DomainError("position z " + std::to_string(p.z) + " exceeds domain_max " +
                      std::to_string(h.domain_max()));
  }
  std::vector<Position3> out;
  out.reserve(p.x + p.y + p.z);
  for (Value u = 0; u < p.x; ++u) out.push_back({u, p.y, p.z});
  for (Value v = 0; v < p.y; ++v) out.push_back({p.x, v, p.z});
  for (Value w = 0; w < p.z; ++w) out.push_back({p.x, std::min(p.y, h(w)), w});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline constexpr char kBitterCell = 'X';
inline constexpr char kChocolateCell = '#';

/// One text row per unit of height, top row first; the bitter square is the
/// bottom cell of column 0. Rows carry no trailing blanks.
inline std::string render_ascii(const WidthFunction& f, Position2 p) {
  std::vector<Value> heights;
  heights.reserve(p.z + 1);
  for (Value i = 0; i <= p.z; ++i) heights.push_back(column_height(f, p.y, i));
  const Value rows = *std::max_element(heights.begin(), heights.end());

  std::string out;
  for (Value r = rows; r-- > 0;) {
    std::string line;
    for (Value i = 0; i <= p.z; ++i) {
      if (heights[i] <= r) {
        line.push_back(' ');
      } else if (i == 0 && r == 0) {
        line.push_back(kBitterCell);
      } else {
        line.push_back(kChocolateCell);
      }
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out.push_back('\n');
  }
  return out;
}

}  // namespace chocobar
