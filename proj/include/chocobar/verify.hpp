#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "chocobar/grundy_table.hpp"

namespace chocobar {

/// y xor z.
inline Value formula_plain(Value y, Value z) { return nim_sum(y, z); }

/// (y xor (z + s)) - s, signed; negative means (y, z, s) is inadmissible.
inline std::int64_t formula_shifted_signed(Value y, Value z, Value s) {
  return static_cast<std::int64_t>(nim_sum(y, z + s)) - static_cast<std::int64_t>(s);
}

/// (y xor (z + s)) - s; throws UnderflowError if the difference is negative.
inline Value formula_shifted(Value y, Value z, Value s) {
  const Value x = nim_sum(y, z + s);
  if (x < s) {
    throw UnderflowError("(" + std::to_string(y) + " xor " + std::to_string(z + s) + ") - " +
                         std::to_string(s) + " is negative");
  }
  return x - s;
}

/// Closed form under test: y xor z, or the s-shifted form when shift is set.
struct Formula {
  std::optional<Value> shift;

  static Formula plain() { return {}; }
  static Formula shifted(Value s) { return {s}; }

  std::int64_t evaluate(Value y, Value z) const {
    return shift ? formula_shifted_signed(y, z, *shift) : static_cast<std::int64_t>(formula_plain(y, z));
  }
};

struct Mismatch {
  Value y = 0;
  Value z = 0;
  std::int64_t formula_value = 0;
  Value engine_value = 0;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
  Value y_max = 0;
  Value z_max = 0;
  std::optional<Value> shift;
  Value positions_checked = 0;
  Value mismatches = 0;
  std::optional<Mismatch> first_mismatch;

  bool passed() const { return mismatches == 0; }
};

/// Compares a table against a closed form over every stored position. Walks
/// z outer, y inner, and counts all mismatches.
inline VerificationReport verify_formula(const GrundyTable& table, Formula formula) {
  VerificationReport report;
  report.y_max = table.y_max();
  report.z_max = table.z_max();
  report.shift = formula.shift;
  for (Value z = 0; z <= table.z_max(); ++z) {
    for (Value y = 0; y <= table.column_top(z); ++y) {
      const Value engine = table.at({y, z});
      const std::int64_t expected = formula.evaluate(y, z);
      ++report.positions_checked;
      if (expected < 0 || static_cast<Value>(expected) != engine) {
        if (!report.first_mismatch) report.first_mismatch = Mismatch{y, z, expected, engine};
        ++report.mismatches;
      }
    }
  }
  return report;
}

inline VerificationReport verify_formula(const WidthFunction& f, Formula formula, Value y_max, Value z_max) {
  return verify_formula(GrundyTable::build(f, y_max, z_max), formula);
}

inline json report_to_json(const VerificationReport& r) {
  json bounds{{"y_max", r.y_max}, {"z_max", r.z_max}};
  if (r.shift) bounds["s"] = *r.shift;
  json first = nullptr;
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    first = {{"y", m.y}, {"z", m.z}, {"formula_value", m.formula_value}, {"engine_value", m.engine_value}};
  }
  return {{"bounds", bounds},
          {"positions_checked", r.positions_checked},
          {"mismatches", r.mismatches},
          {"first_mismatch", first}};
}

}  // namespace chocobar
