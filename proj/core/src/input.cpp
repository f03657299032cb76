#include <slabcy/input.hpp>

#include <fstream>
#include <sstream>

#include <slabcy/errors.hpp>

namespace slabcy {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  int line;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(errc::parse_error, "line " + std::to_string(line) + ": " + what);
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) error("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }
  std::vector<std::int64_t> int_list() {
    if (!eat('[')) error("expected '['");
    std::vector<std::int64_t> out;
    if (eat(']')) return out;
    while (true) {
      out.push_back(integer());
      if (eat(']')) return out;
      if (!eat(',')) error("expected ',' or ']'");
    }
  }
  std::vector<std::vector<std::int64_t>> int_list_list() {
    if (!eat('[')) error("expected '['");
    std::vector<std::vector<std::int64_t>> out;
    if (eat(']')) return out;
    while (true) {
      out.push_back(int_list());
      if (eat(']')) return out;
      if (!eat(',')) error("expected ',' or ']'");
    }
  }
  void expect_end() {
    skip_ws();
    if (pos != s.size()) error("trailing characters");
  }
};

}  // namespace

ParsedInput parse_input_text(const std::string& text) {
  ParsedInput parsed;
  bool have_dim = false, have_points = false, have_cells = false, have_base = false;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t'))
      raw.pop_back();
    std::size_t start = raw.find_first_not_of(" \t");
    if (start == std::string::npos) continue;

    auto eq = raw.find('=');
    if (eq == std::string::npos)
      fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected 'key = value'");
    std::string key = raw.substr(start, eq - start);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::string value = raw.substr(eq + 1);
    Cursor cur{value, 0, line_no};

    if (key == "dim") {
      parsed.polytope.dim = static_cast<int>(cur.integer());
      have_dim = true;
    } else if (key == "points") {
      parsed.polytope.points = cur.int_list_list();
      have_points = true;
    } else if (key == "cells") {
      parsed.polytope.cells.clear();
      for (const auto& cell : cur.int_list_list()) {
        std::vector<int> c;
        for (auto v : cell) c.push_back(static_cast<int>(v));
        parsed.polytope.cells.push_back(std::move(c));
      }
      have_cells = true;
    } else if (key == "base_cell") {
      parsed.polytope.base_cell = static_cast<int>(cur.integer());
      have_base = true;
    } else if (key == "grading") {
      parsed.grading = cur.int_list();
    } else {
      cur.error("unknown key '" + key + "'");
    }
    cur.expect_end();
  }

  if (!have_dim) fail(errc::parse_error, "missing 'dim'");
  if (!have_points) fail(errc::parse_error, "missing 'points'");
  if (!have_cells) fail(errc::parse_error, "missing 'cells'");
  if (!have_base) fail(errc::parse_error, "missing 'base_cell'");

  validate_polytope(parsed.polytope);
  return parsed;
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str());
}

}  // namespace slabcy
