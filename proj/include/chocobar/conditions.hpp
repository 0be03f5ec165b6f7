#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <vector>

#include "chocobar/function_spec.hpp"
#include "chocobar/nim.hpp"

namespace chocobar {

/// A pair z < z_prime sharing floor(./2^i) whose widths differ in
/// floor(./2^(i-1)).
struct ConditionCounterexample {
  Value i = 0;
  Value z = 0;
  Value z_prime = 0;

  friend auto operator<=>(const ConditionCounterexample&, const ConditionCounterexample&) = default;
};

struct ConditionReport {
  bool holds = true;
  Value z_max = 0;
  Value i_max = 0;
  std::optional<ConditionCounterexample> counterexample;
};

/// Block-compatibility check on the window [0, z_max]: for every
/// 1 <= i <= bit_width(z_max) and every aligned block of 2^i arguments, the
/// widths must stay inside one aligned block of 2^(i-1).
///
/// Since h is monotone, a block violates the rule iff its first and last
/// entries do, and then the first z' with a different quotient than the
/// block start gives the lexicographically smallest pair. Work is
/// O(z_max) per i.
inline ConditionReport check_condition_a(const WidthFunction& h, Value z_max) {
  if (z_max > h.domain_max()) {
    throw DomainError("window " + std::to_string(z_max) + " exceeds domain_max " +
                      std::to_string(h.domain_max()));
  }
  std::vector<Value> widths(z_max + 1);
  for (Value z = 0; z <= z_max; ++z) widths[z] = h(z);

  ConditionReport report;
  report.z_max = z_max;
  report.i_max = std::bit_width(z_max);
  for (Value i = 1; i <= report.i_max; ++i) {
    const Value block = Value{1} << i;
    const Value shift = i - 1;
    for (Value start = 0; start <= z_max; start += block) {
      const Value last = std::min(start + block - 1, z_max);
      const Value base = widths[start] >> shift;
      if ((widths[last] >> shift) == base) continue;
      Value z_prime = start + 1;
      while ((widths[z_prime] >> shift) == base) ++z_prime;
      report.holds = false;
      report.counterexample = ConditionCounterexample{i, start, z_prime};
      return report;
    }
  }
  return report;
}

inline json report_to_json(const ConditionReport& r) {
  json ce = nullptr;
  if (r.counterexample) {
    ce = {{"i", r.counterexample->i}, {"z", r.counterexample->z}, {"z_prime", r.counterexample->z_prime}};
  }
  return {{"holds", r.holds}, {"window", {{"z_max", r.z_max}, {"i_max", r.i_max}}}, {"counterexample", ce}};
}

/// i xor s == i + s for every 0 <= i <= h(s).
inline bool check_shift_admissible(const WidthFunction& h, Value s) {
  if (s == 0) throw ValidationError("shift must be positive");
  const Value top = h(s);
  for (Value i = 0; i <= top; ++i) {
    if (nim_sum(i, s) != i + s) return false;
  }
  return true;
}

struct PowerForm {
  Value u = 0;  // odd
  Value v = 0;

  friend bool operator==(const PowerForm&, const PowerForm&) = default;
};

/// s = u * 2^v with u odd, present iff 2^v > p; equivalent to
/// i xor s == i + s for all i <= p.
inline std::optional<PowerForm> power_form(Value s, Value p) {
  if (s == 0) throw ValidationError("shift must be positive");
  const auto v = static_cast<Value>(std::countr_zero(s));
  if ((Value{1} << v) <= p) return std::nullopt;
  return PowerForm{s >> v, v};
}

inline WidthFunction shift(const WidthFunction& h, Value s) { return WidthFunction::shifted(h, s); }

inline WidthFunction unshift(const WidthFunction& g, Value s) { return WidthFunction::unshifted(g, s); }

/// Every 1 <= s <= s_max of the form m * 2^v with 0 <= m <= 2k - 1.
inline std::vector<Value> admissible_shifts_floor(Value k, Value s_max) {
  if (k == 0) throw ValidationError("k must be positive");
  std::set<Value> found;
  for (Value m = 1; m <= 2 * k - 1 && m <= s_max; ++m) {
    for (Value s = m; s <= s_max; s *= 2) found.insert(s);
  }
  return {found.begin(), found.end()};
}

}  // namespace chocobar
