#include "fracmax/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "fracmax/errors.hpp"
#include "fracmax/expr.hpp"
#include "fracmax/format.hpp"
#include "fracmax/problems/ball.hpp"
#include "fracmax/problems/linear.hpp"
#include "fracmax/problems/logratio.hpp"
#include "fracmax/problems/quadratic.hpp"

namespace fracmax {

const char* family_name(Family f) {
  switch (f) {
    case Family::Linear: return "linear";
    case Family::Quadratic: return "quadratic";
    case Family::LogRatio: return "logratio";
    case Family::Ball: return "ball";
  }
  return "?";
}

namespace {

struct RawEntry {
  std::string value;
  int line = 0;
  bool used = false;
};

struct RawConfig {
  std::string origin;
  std::map<std::string, RawEntry> entries;
  int family_line = 1;

  [[noreturn]] void fail(const std::string& msg, int line) const {
    throw ConfigParseError(origin + ":" + std::to_string(line) + ": " + msg, line);
  }

  RawEntry& require(const std::string& key) {
    auto it = entries.find(key);
    if (it == entries.end())
      fail("missing required key '" + key + "' for this family", family_line);
    it->second.used = true;
    return it->second;
  }

  RawEntry* optional(const std::string& key) {
    auto it = entries.find(key);
    if (it == entries.end()) return nullptr;
    it->second.used = true;
    return &it->second;
  }
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const RawConfig& raw, const RawEntry& entry, const std::string& key) {
  const std::string v = trim(entry.value);
  double out = 0.0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
    raw.fail("value of '" + key + "' is not a number: '" + v + "'", entry.line);
  return out;
}

int parse_int(const RawConfig& raw, const RawEntry& entry, const std::string& key) {
  const std::string v = trim(entry.value);
  int out = 0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
    raw.fail("value of '" + key + "' is not an integer: '" + v + "'", entry.line);
  return out;
}

std::vector<double> parse_vector(const RawConfig& raw, const RawEntry& entry,
                                 const std::string& key) {
  std::vector<double> out;
  std::string item;
  std::istringstream ss(entry.value);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      raw.fail("empty component in vector '" + key + "'", entry.line);
    double v = 0.0;
    auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size())
      raw.fail("component '" + item + "' of vector '" + key + "' is not a number",
               entry.line);
    out.push_back(v);
  }
  if (out.empty()) raw.fail("vector '" + key + "' is empty", entry.line);
  return out;
}

Strategy parse_strategy(const RawConfig& raw, const RawEntry& entry) {
  const std::string v = trim(entry.value);
  if (v == "bisect" || v == "bisection") return Strategy::Bisection;
  if (v == "dinkelbach") return Strategy::Dinkelbach;
  if (v == "hybrid") return Strategy::Hybrid;
  raw.fail("unknown strategy '" + v + "' (expected bisect, dinkelbach or hybrid)",
           entry.line);
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Bisection: return "bisect";
    case Strategy::Dinkelbach: return "dinkelbach";
    case Strategy::Hybrid: return "hybrid";
  }
  return "?";
}

RawConfig tokenize(const std::string& text, const std::string& origin) {
  RawConfig raw;
  raw.origin = origin;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      raw.fail("expected 'key = value', got '" + line + "'", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) raw.fail("empty key", line_no);
    if (raw.entries.count(key)) raw.fail("duplicate key '" + key + "'", line_no);
    raw.entries[key] = {value, line_no, false};
  }
  return raw;
}

}  // namespace

ProblemConfig parse_config(const std::string& text, const std::string& origin) {
  RawConfig raw = tokenize(text, origin);

  ProblemConfig cfg;
  RawEntry& fam = raw.require("family");
  raw.family_line = fam.line;
  const std::string fam_name = trim(fam.value);
  if (fam_name == "linear")
    cfg.family = Family::Linear;
  else if (fam_name == "quadratic")
    cfg.family = Family::Quadratic;
  else if (fam_name == "logratio")
    cfg.family = Family::LogRatio;
  else if (fam_name == "ball")
    cfg.family = Family::Ball;
  else
    raw.fail("unknown family '" + fam_name +
                 "' (expected linear, quadratic, logratio or ball)",
             fam.line);

  switch (cfg.family) {
    case Family::Linear:
      cfg.a = parse_double(raw, raw.require("a"), "a");
      cfg.b = parse_double(raw, raw.require("b"), "b");
      cfg.a0 = parse_double(raw, raw.require("a0"), "a0");
      cfg.b0 = parse_double(raw, raw.require("b0"), "b0");
      cfg.x1 = parse_double(raw, raw.require("x1"), "x1");
      cfg.x2 = parse_double(raw, raw.require("x2"), "x2");
      break;
    case Family::Quadratic:
      cfg.a = parse_double(raw, raw.require("a"), "a");
      cfg.b = parse_double(raw, raw.require("b"), "b");
      cfg.c = parse_double(raw, raw.require("c"), "c");
      cfg.a0 = parse_double(raw, raw.require("a0"), "a0");
      cfg.b0 = parse_double(raw, raw.require("b0"), "b0");
      cfg.c0 = parse_double(raw, raw.require("c0"), "c0");
      cfg.x1 = parse_double(raw, raw.require("x1"), "x1");
      cfg.x2 = parse_double(raw, raw.require("x2"), "x2");
      break;
    case Family::LogRatio: {
      RawEntry& f0e = raw.require("f0_expr");
      RawEntry& fe = raw.require("f_expr");
      cfg.f0_expr = trim(f0e.value);
      cfg.f_expr = trim(fe.value);
      try {
        Expression::parse(cfg.f0_expr);
      } catch (const ExprParseError& e) {
        raw.fail(std::string("f0_expr: ") + e.what(), f0e.line);
      }
      try {
        Expression::parse(cfg.f_expr);
      } catch (const ExprParseError& e) {
        raw.fail(std::string("f_expr: ") + e.what(), fe.line);
      }
      cfg.x1 = parse_double(raw, raw.require("x1"), "x1");
      cfg.x2 = parse_double(raw, raw.require("x2"), "x2");
      if (RawEntry* e = raw.optional("grid_resolution"))
        cfg.grid_resolution = parse_int(raw, *e, "grid_resolution");
      if (RawEntry* e = raw.optional("refine_tolerance"))
        cfg.refine_tolerance = parse_double(raw, *e, "refine_tolerance");
      break;
    }
    case Family::Ball:
      cfg.w0 = parse_vector(raw, raw.require("w0"), "w0");
      cfg.w = parse_vector(raw, raw.require("w"), "w");
      cfg.h0 = parse_double(raw, raw.require("h0"), "h0");
      cfg.h = parse_double(raw, raw.require("h"), "h");
      cfg.r = parse_double(raw, raw.require("r"), "r");
      break;
  }

  if (RawEntry* e = raw.optional("tolerance_j"))
    cfg.solver.tolerance_j = parse_double(raw, *e, "tolerance_j");
  if (RawEntry* e = raw.optional("tolerance_beta"))
    cfg.solver.tolerance_beta = parse_double(raw, *e, "tolerance_beta");
  if (RawEntry* e = raw.optional("max_iterations"))
    cfg.solver.max_iterations = parse_int(raw, *e, "max_iterations");
  if (RawEntry* e = raw.optional("strategy")) cfg.solver.strategy = parse_strategy(raw, *e);

  for (const auto& [key, entry] : raw.entries)
    if (!entry.used)
      raw.fail("unknown key '" + key + "' for family '" + std::string(family_name(cfg.family)) +
                   "'",
               entry.line);

  // run the family validators now so a bad file fails on load, not on solve
  try {
    make_problem(cfg);
  } catch (const std::invalid_argument& e) {
    raw.fail(std::string("invalid ") + family_name(cfg.family) + " problem: " + e.what(),
             raw.family_line);
  }
  return cfg;
}

ProblemConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError("cannot open config file '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

std::string dump_config(const ProblemConfig& cfg) {
  std::ostringstream out;
  out << "family = " << family_name(cfg.family) << "\n";
  auto emit = [&](const char* key, double v) {
    out << key << " = " << to_full_precision(v) << "\n";
  };
  auto emit_vec = [&](const char* key, const std::vector<double>& v) {
    out << key << " = ";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ",";
      out << to_full_precision(v[i]);
    }
    out << "\n";
  };
  switch (cfg.family) {
    case Family::Linear:
      emit("a", cfg.a);
      emit("b", cfg.b);
      emit("a0", cfg.a0);
      emit("b0", cfg.b0);
      emit("x1", cfg.x1);
      emit("x2", cfg.x2);
      break;
    case Family::Quadratic:
      emit("a", cfg.a);
      emit("b", cfg.b);
      emit("c", cfg.c);
      emit("a0", cfg.a0);
      emit("b0", cfg.b0);
      emit("c0", cfg.c0);
      emit("x1", cfg.x1);
      emit("x2", cfg.x2);
      break;
    case Family::LogRatio:
      out << "f0_expr = " << cfg.f0_expr << "\n";
      out << "f_expr = " << cfg.f_expr << "\n";
      emit("x1", cfg.x1);
      emit("x2", cfg.x2);
      out << "grid_resolution = " << cfg.grid_resolution << "\n";
      emit("refine_tolerance", cfg.refine_tolerance);
      break;
    case Family::Ball:
      emit_vec("w0", cfg.w0);
      emit_vec("w", cfg.w);
      emit("h0", cfg.h0);
      emit("h", cfg.h);
      emit("r", cfg.r);
      break;
  }
  if (cfg.solver.tolerance_j) emit("tolerance_j", *cfg.solver.tolerance_j);
  if (cfg.solver.tolerance_beta) emit("tolerance_beta", *cfg.solver.tolerance_beta);
  if (cfg.solver.max_iterations)
    out << "max_iterations = " << *cfg.solver.max_iterations << "\n";
  if (cfg.solver.strategy) out << "strategy = " << strategy_name(*cfg.solver.strategy) << "\n";
  return out.str();
}

std::unique_ptr<RatioProblem> make_problem(const ProblemConfig& cfg) {
  switch (cfg.family) {
    case Family::Linear:
      return std::make_unique<LinearIntervalProblem>(cfg.a, cfg.b, cfg.a0, cfg.b0, cfg.x1,
                                                     cfg.x2);
    case Family::Quadratic:
      return std::make_unique<QuadraticIntervalProblem>(cfg.a, cfg.b, cfg.c, cfg.a0, cfg.b0,
                                                        cfg.c0, cfg.x1, cfg.x2);
    case Family::LogRatio: {
      Expression f0 = Expression::parse(cfg.f0_expr);
      Expression f = Expression::parse(cfg.f_expr);
      return std::make_unique<LogRatioProblem>(
          [f0](double x) { return f0(x); }, [f](double x) { return f(x); }, cfg.x1, cfg.x2,
          cfg.grid_resolution, cfg.refine_tolerance);
    }
    case Family::Ball:
      return std::make_unique<HilbertBallProblem>(cfg.w0, cfg.w, cfg.h0, cfg.h, cfg.r);
  }
  throw std::invalid_argument("make_problem: unknown family");
}

SolverOptions solver_options_for(const ProblemConfig& cfg, const SolverOptions& base) {
  SolverOptions opts = base;
  if (cfg.solver.tolerance_j) opts.tolerance_j = *cfg.solver.tolerance_j;
  if (cfg.solver.tolerance_beta) opts.tolerance_beta = *cfg.solver.tolerance_beta;
  if (cfg.solver.max_iterations) opts.max_iterations = *cfg.solver.max_iterations;
  if (cfg.solver.strategy) opts.strategy = *cfg.solver.strategy;
  return opts;
}

}  // namespace fracmax
