#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "chocobar/conditions.hpp"
#include "chocobar/grundy_table.hpp"

namespace chocobar {

enum class Outcome { P, N };

inline const char* to_string(Outcome o) { return o == Outcome::P ? "P" : "N"; }

/// Backward-induction outcome classes of strip+bar positions {x, y, z} with
/// x <= x_max, z <= z_max and y <= h(z). Computed without Grundy numbers:
/// a position is N iff some option is P.
class OutcomeTable {
 public:
  static OutcomeTable build(const WidthFunction& h, Value x_max, Value z_max) {
    OutcomeTable t(h, x_max, z_max);
    t.fill();
    return t;
  }

  Value x_max() const { return x_max_; }
  Value z_max() const { return z_max_; }
  const WidthFunction& function() const { return h_; }
  const std::string& fingerprint() const { return fingerprint_; }

  bool contains(Position3 p) const {
    return p.x <= x_max_ && p.z <= z_max_ && p.y <= widths_[p.z];
  }

  /// Outcome of p after capping y at h(z).
  Outcome at(Position3 p) const {
    if (p.x > x_max_ || p.z > z_max_) {
      std::ostringstream msg;
      msg << "position " << p << " outside search bounds (x_max " << x_max_ << ", z_max " << z_max_ << ')';
      throw BoundsError(msg.str());
    }
    p.y = std::min(p.y, widths_[p.z]);
    return cells_[index(p)] ? Outcome::N : Outcome::P;
  }

 private:
  OutcomeTable(const WidthFunction& h, Value x_max, Value z_max)
      : h_(h), x_max_(x_max), z_max_(z_max), fingerprint_(chocobar::fingerprint(h)) {
    if (z_max > h.domain_max()) {
      throw DomainError("z_max " + std::to_string(z_max) + " exceeds domain_max " +
                        std::to_string(h.domain_max()));
    }
    offsets_.reserve(z_max + 2);
    offsets_.push_back(0);
    for (Value z = 0; z <= z_max; ++z) {
      widths_.push_back(h(z));
      offsets_.push_back(offsets_.back() + (widths_.back() + 1) * (x_max + 1));
    }
    cells_.assign(offsets_.back(), 0);
  }

  std::size_t index(Position3 p) const { return offsets_[p.z] + p.y * (x_max_ + 1) + p.x; }

  bool is_p(Position3 p) const { return cells_[index(p)] == 0; }

  // Options of {x,y,z} have smaller z, or equal z and smaller y, or equal
  // (y, z) and smaller x; the z/y/x loop nest visits them first.
  void fill() {
    for (Value z = 0; z <= z_max_; ++z) {
      for (Value y = 0; y <= widths_[z]; ++y) {
        for (Value x = 0; x <= x_max_; ++x) {
          bool reaches_p = false;
          for (Value u = 0; u < x && !reaches_p; ++u) reaches_p = is_p({u, y, z});
          for (Value v = 0; v < y && !reaches_p; ++v) reaches_p = is_p({x, v, z});
          for (Value w = 0; w < z && !reaches_p; ++w) reaches_p = is_p({x, std::min(y, widths_[w]), w});
          cells_[index({x, y, z})] = reaches_p ? 1 : 0;
        }
      }
    }
  }

  WidthFunction h_;
  Value x_max_;
  Value z_max_;
  std::string fingerprint_;
  std::vector<Value> widths_;
  std::vector<Value> offsets_;
  std::vector<std::uint8_t> cells_;
};

inline Outcome classify3_search(const WidthFunction& h, Position3 p, const OutcomeTable& table) {
  if (fingerprint(h) != table.fingerprint()) {
    throw FingerprintMismatch("search table was built for a different width function");
  }
  return table.at(p);
}

inline Outcome classify3_search(const WidthFunction& h, Position3 p) {
  return OutcomeTable::build(h, p.x, p.z).at(p);
}

/// Closed-form classifier: P iff x xor y xor z == 0. Refuses to answer unless
/// h passes the block-compatibility check on a window covering the position
/// and y <= h(z).
class FormulaClassifier {
 public:
  FormulaClassifier(const WidthFunction& h, Value window) : h_(h), report_(check_condition_a(h, window)) {
    if (!report_.holds) {
      const auto& c = *report_.counterexample;
      throw PreconditionError("width function fails the block condition at (i=" + std::to_string(c.i) +
                              ", z=" + std::to_string(c.z) + ", z'=" + std::to_string(c.z_prime) + ")");
    }
  }

  const ConditionReport& certificate() const { return report_; }

  Outcome classify(Position3 p) const {
    if (p.z > report_.z_max) {
      throw PreconditionError("position z " + std::to_string(p.z) + " lies outside the certified window " +
                              std::to_string(report_.z_max));
    }
    if (p.y > h_(p.z)) throw PreconditionError("closed form needs y <= h(z)");
    return nim_sum(nim_sum(p.x, p.y), p.z) == 0 ? Outcome::P : Outcome::N;
  }

 private:
  WidthFunction h_;
  ConditionReport report_;
};

inline Outcome classify3(const WidthFunction& h, Position3 p) { return FormulaClassifier(h, p.z).classify(p); }

/// Every option of p that is a P-position, sorted; empty iff p is P.
inline std::vector<Position3> winning_moves3(const WidthFunction& h, Position3 p, const OutcomeTable& table) {
  std::vector<Position3> out;
  for (const Position3& q : moves3(h, canonicalize(h, p))) {
    if (classify3_search(h, q, table) == Outcome::P) out.push_back(q);
  }
  return out;
}

inline std::vector<Position3> winning_moves3(const WidthFunction& h, Position3 p) {
  return winning_moves3(h, p, OutcomeTable::build(h, p.x, p.z));
}

/// Every option of the bar p with Grundy number 0, sorted.
inline std::vector<Position2> winning_moves2(const WidthFunction& f, Position2 p, const GrundyTable& table) {
  std::vector<Position2> out;
  for (const Position2& q : moves2(f, canonicalize(f, p))) {
    if (grundy(f, q, table) == 0) out.push_back(q);
  }
  return out;
}

inline json position_to_json(Position3 p) { return {{"x", p.x}, {"y", p.y}, {"z", p.z}}; }

inline json solve_to_json(Position3 p, Outcome o, const std::vector<Position3>& winning) {
  json moves = json::array();
  for (const auto& q : winning) moves.push_back(position_to_json(q));
  return {{"position", position_to_json(p)}, {"class", to_string(o)}, {"winning_moves", moves}};
}

}  // namespace chocobar
