#include <slabcy/render.hpp>

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace slabcy {

namespace {

using nlohmann::json;

std::string exp_brackets(const Exponent& e) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ",";
    os << e[i];
  }
  os << "]";
  return os.str();
}

std::string term_string(const Monomial& mono, const Rational& c) {
  return fraction_string(c) + " q^" + exp_brackets(mono.exp);
}

json series_terms_json(const QSeries& s) {
  json terms = json::array();
  for (const auto& [mono, c] : s.terms())
    terms.push_back({{"e", mono.exp}, {"c", fraction_string(c)}});
  return terms;
}

std::string z_var_name(int k, int n) {
  if (n <= 3) return k == 0 ? "x" : "y";
  return "z" + std::to_string(k + 1);
}

bool is_zero_exp(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

std::string render_series(const QSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : s.terms()) {
    if (!first) os << "\n";
    os << term_string(mono, c);
    first = false;
  }
  return os.str();
}

std::string render_series_inline(const QSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : s.terms()) {
    if (!first) os << " + ";
    os << term_string(mono, c);
    first = false;
  }
  return os.str();
}

std::string render_series_json(const QSeries& s) {
  json j{{"order", s.order()}, {"weights", s.grading().weights}, {"terms", series_terms_json(s)}};
  return j.dump();
}

std::string render_z_monomial(const ZMonomial& z, int n) {
  if (z.is_trivial()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < z.exps.size(); ++k) {
    if (z.exps[k] == 0) continue;
    if (!first) os << "*";
    os << z_var_name(static_cast<int>(k), n);
    if (z.exps[k] != 1) os << "^" << z.exps[k];
    first = false;
  }
  return os.str();
}

std::string render_slab(const FanData& fan, const SlabFunction& f) {
  std::ostringstream os;
  os << "f_" << f.j + 1 << " (order " << f.order << ")";

  std::vector<int> order_of_blocks;
  for (int i = 0; i < fan.m; ++i)
    if (i != f.j) order_of_blocks.push_back(i);
  std::sort(order_of_blocks.begin(), order_of_blocks.end(), [&](int a, int b) {
    return f.blocks[a].z_exp < f.blocks[b].z_exp;
  });

  os << "\n(" << render_series_inline(f.blocks[f.j].a) << ")";
  for (int i : order_of_blocks) {
    const SlabBlock& b = f.blocks[i];
    os << "\n+ (" << render_series_inline(b.a) << ")";
    if (!is_zero_exp(b.q_shift)) os << " q^" << exp_brackets(b.q_shift);
    os << " " << render_z_monomial(b.z_exp, fan.n);
  }
  return os.str();
}

std::string render_slab_json(const FanData& fan, const SlabFunction& f) {
  json blocks = json::array();
  auto block_json = [&](int i) {
    const SlabBlock& b = f.blocks[i];
    return json{{"ray", i + 1},
                {"z", b.z_exp.exps},
                {"q_shift", b.q_shift},
                {"series", series_terms_json(b.a)}};
  };
  blocks.push_back(block_json(f.j));
  std::vector<int> rest;
  for (int i = 0; i < fan.m; ++i)
    if (i != f.j) rest.push_back(i);
  std::sort(rest.begin(), rest.end(),
            [&](int a, int b) { return f.blocks[a].z_exp < f.blocks[b].z_exp; });
  for (int i : rest) blocks.push_back(block_json(i));
  json j{{"j", f.j + 1}, {"order", f.order}, {"blocks", blocks}};
  return j.dump();
}

std::string render_fan_info(const FanData& fan, const Grading& grading) {
  std::ostringstream os;
  os << "n = " << fan.n << "\n";
  os << "m = " << fan.m << "\n";
  os << "permutation (ray <- input point, 0-based): [";
  for (int i = 0; i < fan.m; ++i) os << (i ? "," : "") << fan.perm[i];
  os << "]\n";
  os << "rays:\n";
  for (int i = 0; i < fan.m; ++i) {
    os << "  v" << i + 1 << " = (";
    for (int k = 0; k < fan.n; ++k) os << (k ? "," : "") << fan.rays[i][k];
    os << ")\n";
  }
  os << "base coordinates v_i = sum_l c_l v_l:\n";
  for (int i = fan.n; i < fan.m; ++i) {
    os << "  v" << i + 1 << ": c = (";
    for (int l = 0; l < fan.n; ++l) os << (l ? "," : "") << fan.coords[i][l];
    os << ")\n";
  }
  os << "curve classes (beta coordinates):\n";
  for (std::size_t t = 0; t < fan.num_classes(); ++t) {
    os << "  C" << fan.n + t + 1 << " = " << exp_brackets(fan.curve_basis[t]) << "\n";
  }
  os << "pairing D_p . C_i (rows p = 1.." << fan.m << "):\n";
  for (int p = 0; p < fan.m; ++p) os << "  " << exp_brackets(fan.pairing[p]) << "\n";
  os << "grading = " << exp_brackets(grading.weights) << "\n";
  os << "wall classes:\n";
  auto walls = wall_curve_classes(fan);
  if (walls.empty()) os << "  none\n";
  for (const auto& w : walls) os << "  " << exp_brackets(w.coeffs) << "\n";
  return os.str();
}

std::string render_fan_info_json(const FanData& fan, const Grading& grading) {
  json walls = json::array();
  for (const auto& w : wall_curve_classes(fan)) walls.push_back(w.coeffs);
  json j{{"n", fan.n},
         {"m", fan.m},
         {"permutation", fan.perm},
         {"rays", fan.rays},
         {"coords", fan.coords},
         {"curve_basis", fan.curve_basis},
         {"pairing", fan.pairing},
         {"grading", grading.weights},
         {"wall_classes", walls}};
  return j.dump();
}

std::string render_mirror_map(const FanData& fan, const MirrorMap& map, bool inverse) {
  std::ostringstream os;
  const auto& side = inverse ? map.inverse : map.forward;
  if (side.empty()) return inverse ? "qcheck = q (no curve classes)" : "q = qcheck (no curve classes)";
  for (std::size_t t = 0; t < side.size(); ++t) {
    if (t) os << "\n";
    if (inverse)
      os << "qcheck_" << fan.n + t + 1 << "(q):\n";
    else
      os << "q_" << fan.n + t + 1 << "(qcheck):\n";
    os << render_series(side[t]);
  }
  return os.str();
}

std::string render_mirror_map_json(const FanData& fan, const MirrorMap& map, bool inverse) {
  const auto& side = inverse ? map.inverse : map.forward;
  json vars = json::array();
  for (std::size_t t = 0; t < side.size(); ++t)
    vars.push_back({{"variable", fan.n + t + 1}, {"terms", series_terms_json(side[t])}});
  json j{{"order", map.order}, {"inverse", inverse}, {"map", vars}};
  return j.dump();
}

std::string render_report(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.passed) {
      os << "\n      at: " << c.where;
      if (!c.expected.empty()) os << "\n      expected: " << c.expected;
      if (!c.actual.empty()) os << "\n      actual:   " << c.actual;
    }
    os << "\n";
  }
  os << (report.all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

std::string render_report_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) {
      e["where"] = c.where;
      e["expected"] = c.expected;
      e["actual"] = c.actual;
    }
    checks.push_back(e);
  }
  json j{{"checks", checks}, {"all_passed", report.all_passed()}};
  return j.dump();
}

}  // namespace slabcy
