#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chocobar/chocobar.hpp"

namespace chocobar::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

struct CommandConfig {
  std::string command;
  std::string func_spec;  // path to a JSON file, or inline JSON
  std::optional<Value> y_max;
  std::optional<Value> z_max;
  std::string pos;
  std::optional<Value> strip;
  std::string formula = "plain";
  std::optional<Value> s;
  Value k = 1;
  Value max = 64;
  std::string format = "text";
  std::string out;
  std::string expect;
};

inline WidthFunction load_function(const std::string& spec) {
  if (spec.empty()) throw ValidationError("--func is required");
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') return parse_function_spec(spec);
  std::ifstream in(spec);
  if (!in) throw ValidationError("cannot open function spec " + spec);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_function_spec(buf.str());
}

inline std::vector<Value> parse_coords(const std::string& text) {
  std::vector<Value> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t{}");
    const auto e = item.find_last_not_of(" \t{}\r");
    if (b == std::string::npos) throw ValidationError("bad coordinate list: " + text);
    const std::string digits = item.substr(b, e - b + 1);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 18) {
      throw ValidationError("bad coordinate list: " + text);
    }
    out.push_back(std::stoull(digits));
  }
  return out;
}

inline Position2 parse_pos2(const std::string& text) {
  const auto c = parse_coords(text);
  if (c.size() != 2) throw ValidationError("expected y,z but got " + text);
  return {c[0], c[1]};
}

inline Position3 parse_pos3(const std::string& text) {
  const auto c = parse_coords(text);
  if (c.size() == 2) return {0, c[0], c[1]};
  if (c.size() != 3) throw ValidationError("expected x,y,z or y,z but got " + text);
  return {c[0], c[1], c[2]};
}

inline Value require(const std::optional<Value>& v, const char* flag) {
  if (!v) throw ValidationError(std::string(flag) + " is required");
  return *v;
}

/// Builds a Grundy table, going through GRUNDY_BAR_TABLE_DIR when set.
inline GrundyTable obtain_table(const WidthFunction& f, Value y_max, Value z_max) {
  const char* dir = std::getenv("GRUNDY_BAR_TABLE_DIR");
  if (dir == nullptr || *dir == '\0') return GrundyTable::build(f, y_max, z_max);
  if (auto cached = table_cache::try_load(dir, f, y_max, z_max)) return std::move(*cached);
  GrundyTable t = GrundyTable::build(f, y_max, z_max);
  table_cache::save(dir, t);
  return t;
}

/// Engine reply in play: the smallest winning move if one exists, else the
/// smallest legal move.
inline Position3 engine_reply(const WidthFunction& h, Position3 p, const OutcomeTable& table) {
  const auto winning = winning_moves3(h, p, table);
  if (!winning.empty()) return winning.front();
  const auto all = moves3(h, p);
  if (all.empty()) throw PreconditionError("engine has no move from a terminal position");
  return all.front();
}

namespace detail {

inline void print_moves(std::ostream& os, const std::vector<Position3>& moves, bool with_strip) {
  bool first = true;
  for (const auto& q : moves) {
    if (!first) os << ' ';
    first = false;
    if (with_strip) {
      os << q;
    } else {
      os << Position2{q.y, q.z};
    }
  }
}

inline int play(const WidthFunction& h, Position3 pos, bool with_strip, std::istream& in, std::ostream& out) {
  const OutcomeTable table = OutcomeTable::build(h, pos.x, pos.z);
  pos = canonicalize(h, pos);
  auto show = [&](Position3 p) {
    if (with_strip) out << "strip " << p.x << '\n';
    out << render_ascii(h, {p.y, p.z});
    out << "position ";
    if (with_strip) {
      out << p;
    } else {
      out << Position2{p.y, p.z};
    }
    out << '\n';
  };

  show(pos);
  if (moves3(h, pos).empty()) {
    out << "position is terminal; nobody can move\n";
    return kOk;
  }
  const char* prompt = with_strip ? "your move (x,y,z)> " : "your move (y,z)> ";
  while (true) {
    const auto legal = moves3(h, pos);
    Position3 next{};
    while (true) {
      out << prompt << std::flush;
      std::string line;
      if (!std::getline(in, line)) {
        out << "\ninput ended\n";
        return kUsage;
      }
      if (line == "q" || line == "quit") {
        out << "bye\n";
        return kOk;
      }
      try {
        if (with_strip) {
          next = parse_pos3(line);
        } else {
          const Position2 q = parse_pos2(line);
          next = {pos.x, q.y, q.z};
        }
      } catch (const ValidationError&) {
        next = pos;
      }
      if (std::binary_search(legal.begin(), legal.end(), next)) break;
      out << "illegal move; legal moves: ";
      print_moves(out, legal, with_strip);
      out << '\n';
    }
    pos = next;
    show(pos);
    if (moves3(h, pos).empty()) {
      out << "you win\n";
      return kOk;
    }
    pos = engine_reply(h, pos, table);
    out << "engine plays ";
    print_moves(out, {pos}, with_strip);
    out << '\n';
    show(pos);
    if (moves3(h, pos).empty()) {
      out << "engine wins\n";
      return kOk;
    }
  }
}

}  // namespace detail

/// Dispatches one command; returns the process exit code.
inline int run(const CommandConfig& cfg, std::istream& in, std::ostream& out_default, std::ostream& err) {
  try {
    std::ofstream file;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw ValidationError("cannot write " + cfg.out);
    }
    std::ostream& out = cfg.out.empty() ? out_default : file;
    const std::string& fmt = cfg.format;
    if (fmt != "text" && fmt != "json" && fmt != "csv") throw ValidationError("unknown format " + fmt);

    if (cfg.command == "shifts") {
      const auto shifts = admissible_shifts_floor(cfg.k, cfg.max);
      if (fmt == "json") {
        out << json(shifts).dump() << '\n';
      } else {
        for (std::size_t i = 0; i < shifts.size(); ++i) out << (i ? " " : "") << shifts[i];
        out << '\n';
      }
      return kOk;
    }

    const WidthFunction f = load_function(cfg.func_spec);

    if (cfg.command == "table") {
      const Value z_max = require(cfg.z_max, "--zmax");
      const GrundyTable t = obtain_table(f, cfg.y_max.value_or(f(z_max)), z_max);
      if (fmt == "csv") {
        t.write_csv(out);
      } else if (fmt == "json") {
        json rows = json::array();
        for (Value z = 0; z <= t.z_max(); ++z) {
          for (Value y = 0; y <= t.column_top(z); ++y) rows.push_back({y, z, t.at({y, z})});
        }
        out << json{{"fingerprint", t.fingerprint()},
                    {"function", function_to_json(f)},
                    {"y_max", t.y_max()},
                    {"z_max", t.z_max()},
                    {"rows", rows}}
                   .dump()
            << '\n';
      } else {
        for (Value z = 0; z <= t.z_max(); ++z) {
          out << "z=" << z << ':';
          for (Value y = 0; y <= t.column_top(z); ++y) out << ' ' << t.at({y, z});
          out << '\n';
        }
      }
      return kOk;
    }

    if (cfg.command == "check-a") {
      const auto r = check_condition_a(f, require(cfg.z_max, "--zmax"));
      if (fmt == "json") {
        out << report_to_json(r).dump() << '\n';
      } else if (r.holds) {
        out << "holds on window z <= " << r.z_max << " (i <= " << r.i_max << ")\n";
      } else {
        const auto& c = *r.counterexample;
        out << "counterexample i=" << c.i << " z=" << c.z << " z'=" << c.z_prime << " (window z <= " << r.z_max
            << ")\n";
      }
      return r.holds ? kOk : kViolation;
    }

    if (cfg.command == "check-shift") {
      const Value s = require(cfg.s, "--s");
      const bool ok = check_shift_admissible(f, s);
      const auto pf = power_form(s, f(s));
      if (fmt == "json") {
        json p = nullptr;
        if (pf) p = {{"u", pf->u}, {"v", pf->v}};
        out << json{{"s", s}, {"width_at_s", f(s)}, {"admissible", ok}, {"power_form", p}}.dump() << '\n';
      } else {
        out << "s=" << s << " h(s)=" << f(s) << ' ' << (ok ? "admissible" : "inadmissible");
        if (pf) out << " (s = " << pf->u << " * 2^" << pf->v << ')';
        out << '\n';
      }
      return ok ? kOk : kViolation;
    }

    if (cfg.command == "verify") {
      const Value z_max = require(cfg.z_max, "--zmax");
      Formula formula;
      if (cfg.formula == "shifted") {
        formula = Formula::shifted(require(cfg.s, "--s"));
      } else if (cfg.formula != "plain") {
        throw ValidationError("--formula must be plain or shifted");
      }
      const auto r = verify_formula(obtain_table(f, cfg.y_max.value_or(f(z_max)), z_max), formula);
      if (fmt == "json") {
        out << report_to_json(r).dump() << '\n';
      } else {
        out << "checked " << r.positions_checked << " positions, " << r.mismatches << " mismatches\n";
        if (r.first_mismatch) {
          const auto& m = *r.first_mismatch;
          out << "first mismatch at {" << m.y << ',' << m.z << "}: formula " << m.formula_value << ", engine "
              << m.engine_value << '\n';
        }
      }
      return r.passed() ? kOk : kViolation;
    }

    if (cfg.command == "solve") {
      const Position3 p = canonicalize(f, parse_pos3(cfg.pos));
      const OutcomeTable table = OutcomeTable::build(f, p.x, p.z);
      const Outcome o = classify3_search(f, p, table);
      const auto winning = winning_moves3(f, p, table);
      if (fmt == "json") {
        out << solve_to_json(p, o, winning).dump() << '\n';
      } else {
        out << "position " << p << ": " << to_string(o) << '\n';
        out << "winning moves:";
        for (const auto& q : winning) out << ' ' << q;
        out << '\n';
      }
      if (!cfg.expect.empty()) {
        if (cfg.expect != "P" && cfg.expect != "N") throw ValidationError("--expect must be P or N");
        return cfg.expect == to_string(o) ? kOk : kViolation;
      }
      return kOk;
    }

    if (cfg.command == "render") {
      out << render_ascii(f, parse_pos2(cfg.pos));
      return kOk;
    }

    if (cfg.command == "play") {
      const Position2 p = parse_pos2(cfg.pos);
      return detail::play(f, {cfg.strip.value_or(0), p.y, p.z}, cfg.strip.has_value(), in, out);
    }

    throw ValidationError("unknown command " + cfg.command);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

/// Parses argv-style arguments (without the program name) and runs.
inline int main_with_args(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                          std::ostream& err) {
  CLI::App app{"Grundy numbers of step chocolate bars", "chocobar"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_func = [&](CLI::App* sub) { sub->add_option("--func", cfg.func_spec, "function spec (JSON file or inline)")->required(); };
  auto add_fmt = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text, json or csv");
    sub->add_option("--out", cfg.out, "write output to this path");
  };

  auto* table = app.add_subcommand("table", "export the Grundy table");
  add_func(table);
  table->add_option("--ymax", cfg.y_max);
  table->add_option("--zmax", cfg.z_max)->required();
  add_fmt(table);

  auto* check_a = app.add_subcommand("check-a", "check the block condition on a window");
  add_func(check_a);
  check_a->add_option("--zmax", cfg.z_max)->required();
  add_fmt(check_a);

  auto* check_shift = app.add_subcommand("check-shift", "check shift admissibility");
  add_func(check_shift);
  check_shift->add_option("--s", cfg.s)->required();
  add_fmt(check_shift);

  auto* shifts = app.add_subcommand("shifts", "list admissible shifts of floor(z/2k)");
  shifts->add_option("--k", cfg.k)->required();
  shifts->add_option("--max", cfg.max)->required();
  add_fmt(shifts);

  auto* verify = app.add_subcommand("verify", "compare the engine with a closed form");
  add_func(verify);
  verify->add_option("--formula", cfg.formula, "plain or shifted");
  verify->add_option("--s", cfg.s);
  verify->add_option("--ymax", cfg.y_max);
  verify->add_option("--zmax", cfg.z_max)->required();
  add_fmt(verify);

  auto* solve = app.add_subcommand("solve", "classify a strip+bar position");
  add_func(solve);
  solve->add_option("--pos", cfg.pos, "x,y,z or y,z")->required();
  solve->add_option("--expect", cfg.expect, "P or N");
  add_fmt(solve);

  auto* render = app.add_subcommand("render", "draw a bar");
  add_func(render);
  render->add_option("--pos", cfg.pos, "y,z")->required();
  add_fmt(render);

  auto* play = app.add_subcommand("play", "play against the engine");
  add_func(play);
  play->add_option("--pos", cfg.pos, "y,z")->required();
  play->add_option("--strip", cfg.strip);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return run(cfg, in, out, err);
}

}  // namespace chocobar::cli
