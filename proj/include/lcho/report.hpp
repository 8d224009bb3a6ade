#pragma once

// Machine-readable run reports: a table of results plus a list of named
// checks. CSV carries only the table; JSON carries everything.

#include <cstdio>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace lcho::report {

struct Check {
  std::string name;
  bool pass = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
};

using Cell = std::variant<double, long long, std::string>;

struct Report {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<Check> checks;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  void check(std::string name, double deviation, double tolerance) {
    checks.push_back({std::move(name), deviation <= tolerance, deviation, tolerance});
  }
  [[nodiscard]] bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// 17 significant digits: enough for an exact round trip of any double.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

inline void write_csv(const Report& r, std::ostream& out) {
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["all_pass"] = r.all_pass();
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"max_deviation", c.max_deviation}, {"tolerance", c.tolerance}});
  }
  j["columns"] = r.columns;
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    auto& out = rows.emplace_back(nlohmann::ordered_json::array());
    for (const auto& cell : row) std::visit([&](const auto& v) { out.push_back(v); }, cell);
  }
  for (const auto& [key, value] : r.extra.items()) j[key] = value;
  return j;
}

inline void write_json(const Report& r, std::ostream& out) { out << to_json(r).dump(2) << '\n'; }

}  // namespace lcho::report
