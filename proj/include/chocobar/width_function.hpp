#pragma once

#include <bit>
#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "chocobar/errors.hpp"

namespace chocobar {

class WidthFunction;

/// floor(t / divisor); the divisor is the full even value 2k.
struct FloorDiv {
  Value divisor;
};

/// 0 for t in {0,1}, 2^(floor(log2 t) - 1) for t >= 2.
struct Log2Step {};

/// slope * t.
struct Linear {
  Value slope;
};

/// base(t + s).
struct Shifted {
  std::shared_ptr<const WidthFunction> base;
  Value s;
};

/// base(0) for t < s, base(t - s) for t >= s.
struct Unshifted {
  std::shared_ptr<const WidthFunction> base;
  Value s;
};

/// values[t].
struct Tabulated {
  std::vector<Value> values;
};

using Family = std::variant<FloorDiv, Log2Step, Linear, Shifted, Unshifted, Tabulated>;

inline constexpr Value kDefaultDomainMax = Value{1} << 20;
inline constexpr Value kMaxDomain = Value{1} << 40;

/// A monotone non-decreasing step profile on [0, domain_max].
///
/// Instances are immutable; composite families share their base through a
/// shared_ptr, so copies are cheap and safe to hand across threads. Every
/// factory validates its invariants and throws ValidationError on failure.
class WidthFunction {
 public:
  static WidthFunction floor_div(Value divisor, Value domain_max = kDefaultDomainMax) {
    if (divisor < 2 || divisor % 2 != 0) {
      throw ValidationError("floor_div divisor must be even and >= 2, got " + std::to_string(divisor));
    }
    check_domain(domain_max);
    return WidthFunction(FloorDiv{divisor}, domain_max);
  }

  static WidthFunction log2_step(Value domain_max = kDefaultDomainMax) {
    check_domain(domain_max);
    return WidthFunction(Log2Step{}, domain_max);
  }

  static WidthFunction linear(Value slope, Value domain_max = kDefaultDomainMax) {
    if (slope == 0) throw ValidationError("linear slope must be positive");
    check_domain(domain_max);
    if (domain_max != 0 && slope > (Value{1} << 62) / domain_max) {
      throw ValidationError("linear slope * domain_max overflows");
    }
    return WidthFunction(Linear{slope}, domain_max);
  }

  static WidthFunction table(std::vector<Value> values) {
    if (values.empty()) throw ValidationError("table must have at least one value");
    for (std::size_t t = 1; t < values.size(); ++t) {
      if (values[t] < values[t - 1]) {
        throw ValidationError("table is not monotone at index " + std::to_string(t));
      }
    }
    const Value domain_max = values.size() - 1;
    return WidthFunction(Tabulated{std::move(values)}, domain_max);
  }

  /// base(t + s) on [0, base.domain_max - s].
  static WidthFunction shifted(const WidthFunction& base, Value s) {
    if (s > base.domain_max()) {
      throw ValidationError("shift " + std::to_string(s) + " exceeds base domain_max " +
                            std::to_string(base.domain_max()));
    }
    return shifted(base, s, base.domain_max() - s);
  }

  static WidthFunction shifted(const WidthFunction& base, Value s, Value domain_max) {
    if (s == 0) throw ValidationError("shift must be positive");
    if (s > base.domain_max() || domain_max > base.domain_max() - s) {
      throw ValidationError("shifted function needs base domain_max >= domain_max + s");
    }
    return WidthFunction(Shifted{std::make_shared<const WidthFunction>(base), s}, domain_max);
  }

  /// Constant base(0) on [0, s), then base(t - s); domain grows by s.
  static WidthFunction unshifted(const WidthFunction& base, Value s) {
    if (s == 0) throw ValidationError("shift must be positive");
    check_domain(base.domain_max() + s);
    return WidthFunction(Unshifted{std::make_shared<const WidthFunction>(base), s},
                         base.domain_max() + s);
  }

  Value domain_max() const { return domain_max_; }
  const Family& family() const { return family_; }

  /// Evaluates at t; throws DomainError past domain_max.
  Value operator()(Value t) const {
    if (t > domain_max_) {
      throw DomainError("argument " + std::to_string(t) + " exceeds domain_max " +
                        std::to_string(domain_max_));
    }
    return eval_unchecked(t);
  }

 private:
  WidthFunction(Family family, Value domain_max)
      : family_(std::move(family)), domain_max_(domain_max) {}

  static void check_domain(Value domain_max) {
    if (domain_max > kMaxDomain) {
      throw ValidationError("domain_max " + std::to_string(domain_max) + " is too large");
    }
  }

  Value eval_unchecked(Value t) const {
    struct Visitor {
      Value t;
      Value operator()(const FloorDiv& f) const { return t / f.divisor; }
      Value operator()(const Log2Step&) const {
        if (t < 2) return 0;
        return Value{1} << (std::bit_width(t) - 2);
      }
      Value operator()(const Linear& f) const { return f.slope * t; }
      Value operator()(const Shifted& f) const { return (*f.base)(t + f.s); }
      Value operator()(const Unshifted& f) const { return (*f.base)(t < f.s ? 0 : t - f.s); }
      Value operator()(const Tabulated& f) const { return f.values[t]; }
    };
    return std::visit(Visitor{t}, family_);
  }

  Family family_;
  Value domain_max_;
};

/// Materializes f on [0, f.domain_max()] as a table.
inline WidthFunction tabulate(const WidthFunction& f) {
  std::vector<Value> values;
  values.reserve(f.domain_max() + 1);
  for (Value t = 0; t <= f.domain_max(); ++t) values.push_back(f(t));
  return WidthFunction::table(std::move(values));
}

}  // namespace chocobar
