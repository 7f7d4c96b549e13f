#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace lmgcli {

// A cell is empty, an integer, a real, a boolean or free text.
using Field = std::variant<std::monostate, std::int64_t, double, bool, std::string>;
using Row = std::vector<Field>;

struct Table {
  std::vector<std::string> header;
  std::vector<Row> rows;
};

// Shortest decimal that reads back to the same double.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string csv_cell(const Field& f) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, f);
}

inline nlohmann::ordered_json json_cell(const Field& f) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return format_double(v);
      return v;
    }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, f);
}

inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t c = 0; c < t.header.size(); ++c) os << (c ? "," : "") << t.header[c];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
    os << '\n';
  }
}

inline nlohmann::ordered_json rows_json(const Table& t) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[t.header[c]] = json_cell(row[c]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

}  // namespace lmgcli
