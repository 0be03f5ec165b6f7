#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chocobar/bar.hpp"
#include "chocobar/function_spec.hpp"
#include "chocobar/nim.hpp"

namespace chocobar {

/// Memoized Grundy numbers of CB(f, y, z) for every canonical position with
/// y <= min(y_max, f(z)) and z <= z_max.
///
/// Storage is column-major: column z holds min(y_max, f(z)) + 1 entries,
/// filled in increasing z then increasing y. Every option of {y, z} either
/// has smaller z, or equal z and smaller y, so it is always present when
/// {y, z} is computed. A built table is immutable.
class GrundyTable {
 public:
  static GrundyTable build(const WidthFunction& f, Value y_max, Value z_max) {
    GrundyTable t(f, y_max, z_max);
    t.fill();
    return t;
  }

  Value y_max() const { return y_max_; }
  Value z_max() const { return z_max_; }
  const std::string& fingerprint() const { return fingerprint_; }
  const WidthFunction& function() const { return f_; }

  /// Largest stored y in column z.
  Value column_top(Value z) const { return offsets_[z + 1] - offsets_[z] - 1; }

  bool contains(Position2 p) const { return p.z <= z_max_ && p.y <= column_top(p.z); }

  std::size_t size() const { return values_.size(); }

  /// Stored value of a canonical in-bounds position.
  Value at(Position2 p) const {
    if (!contains(p)) {
      std::ostringstream msg;
      msg << "position " << p << " outside table bounds (y_max " << y_max_ << ", z_max " << z_max_ << ')';
      throw BoundsError(msg.str());
    }
    return values_[offsets_[p.z] + p.y];
  }

  /// Writes `y,z,grundy` rows in (z, y) order.
  void write_csv(std::ostream& os) const {
    os << "y,z,grundy\n";
    for (Value z = 0; z <= z_max_; ++z) {
      for (Value y = 0; y <= column_top(z); ++y) {
        os << y << ',' << z << ',' << values_[offsets_[z] + y] << '\n';
      }
    }
  }

  /// Reads a table previously written by write_csv for the same function and
  /// bounds. The rows must cover exactly the canonical rectangle in order.
  static GrundyTable read_csv(const WidthFunction& f, Value y_max, Value z_max, std::istream& is) {
    GrundyTable t(f, y_max, z_max);
    std::string line;
    if (!std::getline(is, line) || line != "y,z,grundy") {
      throw ValidationError("table CSV must start with header y,z,grundy");
    }
    std::size_t next = 0;
    for (Value z = 0; z <= z_max; ++z) {
      for (Value y = 0; y <= t.column_top(z); ++y) {
        if (!std::getline(is, line)) throw ValidationError("table CSV ends early");
        Value ry = 0, rz = 0, g = 0;
        char c1 = 0, c2 = 0;
        std::istringstream row(line);
        if (!(row >> ry >> c1 >> rz >> c2 >> g) || c1 != ',' || c2 != ',' || ry != y || rz != z) {
          throw ValidationError("unexpected table CSV row: " + line);
        }
        t.values_[next++] = static_cast<std::uint32_t>(g);
      }
    }
    return t;
  }

 private:
  GrundyTable(const WidthFunction& f, Value y_max, Value z_max)
      : f_(f), y_max_(y_max), z_max_(z_max), fingerprint_(chocobar::fingerprint(f)) {
    if (z_max > f.domain_max()) {
      throw DomainError("z_max " + std::to_string(z_max) + " exceeds domain_max " +
                        std::to_string(f.domain_max()));
    }
    offsets_.reserve(z_max + 2);
    offsets_.push_back(0);
    for (Value z = 0; z <= z_max; ++z) {
      offsets_.push_back(offsets_.back() + std::min(y_max, f(z)) + 1);
    }
    values_.assign(offsets_.back(), 0);
  }

  void fill() {
    std::vector<Value> widths(z_max_ + 1);
    for (Value z = 0; z <= z_max_; ++z) widths[z] = f_(z);

    std::vector<std::uint32_t> options;
    std::vector<char> scratch;
    for (Value z = 0; z <= z_max_; ++z) {
      const Value top = column_top(z);
      const std::uint32_t* column = values_.data() + offsets_[z];
      for (Value y = 0; y <= top; ++y) {
        options.assign(column, column + y);
        for (Value w = 0; w < z; ++w) {
          options.push_back(values_[offsets_[w] + std::min(y, widths[w])]);
        }
        values_[offsets_[z] + y] =
            static_cast<std::uint32_t>(detail::mex_with_scratch(options, options.size(), scratch));
      }
    }
  }

  WidthFunction f_;
  Value y_max_;
  Value z_max_;
  std::string fingerprint_;
  std::vector<Value> offsets_;
  std::vector<std::uint32_t> values_;
};

/// Grundy number of {y, z} (canonicalized first) looked up in a table built
/// for the same function.
inline Value grundy(const WidthFunction& f, Position2 p, const GrundyTable& table) {
  if (fingerprint(f) != table.fingerprint()) {
    throw FingerprintMismatch("table was built for a different width function");
  }
  return table.at(canonicalize(f, p));
}

/// Persisted-table cache: `<dir>/<fingerprint>_<y_max>_<z_max>.csv` next to a
/// `.meta.json` carrying the full function description.
namespace table_cache {

inline std::filesystem::path stem(const std::filesystem::path& dir, const std::string& fp, Value y_max,
                                  Value z_max) {
  return dir / (fp + "_" + std::to_string(y_max) + "_" + std::to_string(z_max));
}

inline void save(const std::filesystem::path& dir, const GrundyTable& table) {
  std::filesystem::create_directories(dir);
  const auto base = stem(dir, table.fingerprint(), table.y_max(), table.z_max());
  std::ofstream csv(base.string() + ".csv");
  table.write_csv(csv);
  std::ofstream meta(base.string() + ".meta.json");
  meta << json{{"fingerprint", table.fingerprint()},
               {"function", function_to_json(table.function())},
               {"y_max", table.y_max()},
               {"z_max", table.z_max()}}
              .dump()
       << '\n';
}

/// Loads a table file pair; throws FingerprintMismatch when the metadata
/// names a different function than f.
inline GrundyTable load(const std::filesystem::path& csv_path, const std::filesystem::path& meta_path,
                        const WidthFunction& f) {
  std::ifstream meta_in(meta_path);
  if (!meta_in) throw ValidationError("cannot open " + meta_path.string());
  json meta;
  try {
    meta = json::parse(meta_in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed table metadata: ") + e.what());
  }
  const std::string expected = fingerprint(f);
  if (meta.value("fingerprint", std::string{}) != expected) {
    throw FingerprintMismatch("persisted table fingerprint " + meta.value("fingerprint", std::string{"?"}) +
                              " does not match function fingerprint " + expected);
  }
  std::ifstream csv(csv_path);
  if (!csv) throw ValidationError("cannot open " + csv_path.string());
  return GrundyTable::read_csv(f, meta.at("y_max").get<Value>(), meta.at("z_max").get<Value>(), csv);
}

inline std::optional<GrundyTable> try_load(const std::filesystem::path& dir, const WidthFunction& f,
                                           Value y_max, Value z_max) {
  const auto base = stem(dir, fingerprint(f), y_max, z_max);
  const std::filesystem::path csv = base.string() + ".csv";
  const std::filesystem::path meta = base.string() + ".meta.json";
  if (!std::filesystem::exists(csv) || !std::filesystem::exists(meta)) return std::nullopt;
  return load(csv, meta, f);
}

}  // namespace table_cache

}  // namespace chocobar
