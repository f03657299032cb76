#include <slabcy/run.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include <slabcy/cache.hpp>
#include <slabcy/errors.hpp>
#include <slabcy/fan.hpp>
#include <slabcy/input.hpp>
#include <slabcy/mirror.hpp>
#include <slabcy/render.hpp>
#include <slabcy/slab.hpp>
#include <slabcy/verify.hpp>

namespace slabcy {

namespace {

constexpr std::int64_t kOracleBox = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int check_ray_flag(const std::optional<int>& idx, int m, const char* flag) {
  if (!idx)
    fail(errc::validation_error, std::string("subcommand requires --") + flag);
  if (*idx < 1 || *idx > m)
    fail(errc::validation_error,
         std::string("--") + flag + " must be between 1 and " + std::to_string(m));
  return *idx - 1;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::gs: return "gs";
    case Method::omt: return "omt";
    case Method::both: return "both";
  }
  return "?";
}

std::string command_signature(const RunConfig& c, const Grading& grading) {
  std::ostringstream os;
  os << c.subcommand;
  if (c.j) os << " j=" << *c.j;
  if (c.i) os << " i=" << *c.i;
  if (c.subcommand == "slab") os << " method=" << method_name(c.method);
  if (c.subcommand == "mirror-map") os << " inverse=" << (c.inverse ? 1 : 0);
  os << " format=" << (c.format == OutputFormat::machine ? "machine" : "text");
  os << " grading=[";
  for (std::size_t i = 0; i < grading.weights.size(); ++i)
    os << (i ? "," : "") << grading.weights[i];
  os << "]";
  return os.str();
}

struct SlabRender {
  std::string text;
  SlabFunction f;
};

SlabRender render_slab_method(const FanData& fan, int j, std::int64_t order,
                              const Grading& grading, bool gs_route,
                              OutputFormat format) {
  std::vector<QSeries> a =
      gs_route ? solve_normalized(fan, order, grading) : ogw_all_series(fan, order, grading);
  SlabFunction f = assemble(fan, j, a, order);
  std::string text =
      format == OutputFormat::machine ? render_slab_json(fan, f) : render_slab(fan, f);
  return {std::move(text), std::move(f)};
}

// first differing block coefficient between the two routes, if any
std::string slab_diff(const FanData& fan, const SlabFunction& gs, const SlabFunction& omt) {
  for (int i = 0; i < fan.m; ++i) {
    std::map<Monomial, std::pair<Rational, Rational>> merged;
    for (const auto& [mono, c] : gs.blocks[i].a.terms()) merged[mono].first = c;
    for (const auto& [mono, c] : omt.blocks[i].a.terms()) merged[mono].second = c;
    for (const auto& [mono, cs] : merged) {
      if (cs.first != cs.second) {
        std::ostringstream os;
        os << "first mismatch at block i=" << i + 1 << ", q^[";
        for (std::size_t t = 0; t < mono.exp.size(); ++t)
          os << (t ? "," : "") << mono.exp[t];
        os << "]: gs=" << fraction_string(cs.first) << " omt=" << fraction_string(cs.second);
        return os.str();
      }
    }
  }
  return "";
}

RunResult dispatch(const RunConfig& config, const std::string& input_bytes) {
  ParsedInput parsed = parse_input_text(input_bytes);
  FanData fan = build_fan(parsed.polytope);

  Grading grading;
  if (config.grading_override) {
    grading.weights = *config.grading_override;
    validate_grading(fan, grading);
  } else if (parsed.grading) {
    grading.weights = *parsed.grading;
    validate_grading(fan, grading);
  } else {
    grading = default_grading(fan);
  }

  if (config.order < 1) fail(errc::validation_error, "--order must be at least 1");
  const std::int64_t order = config.order;
  const bool machine = config.format == OutputFormat::machine;

  if (config.subcommand == "info") {
    return {0, machine ? render_fan_info_json(fan, grading) : render_fan_info(fan, grading)};
  }
  if (config.subcommand == "g") {
    int j = check_ray_flag(config.j, fan.m, "j");
    QSeries g = g_series(fan, j, order, grading);
    return {0, machine ? render_series_json(g) : render_series(g)};
  }
  if (config.subcommand == "mirror-map") {
    MirrorMap map = mirror_map(fan, order, grading);
    return {0, machine ? render_mirror_map_json(fan, map, config.inverse)
                       : render_mirror_map(fan, map, config.inverse)};
  }
  if (config.subcommand == "ogw") {
    int i = check_ray_flag(config.i, fan.m, "i");
    QSeries s = ogw_series(fan, i, order, grading);
    return {0, machine ? render_series_json(s) : render_series(s)};
  }
  if (config.subcommand == "slab") {
    int j = check_ray_flag(config.j, fan.m, "j");
    if (config.method == Method::gs || config.method == Method::omt) {
      auto r = render_slab_method(fan, j, order, grading, config.method == Method::gs,
                                  config.format);
      return {0, r.text};
    }
    auto gs = render_slab_method(fan, j, order, grading, true, config.format);
    auto omt = render_slab_method(fan, j, order, grading, false, config.format);
    std::string diff = slab_diff(fan, gs.f, omt.f);
    if (machine) {
      nlohmann::json out{{"gs", nlohmann::json::parse(gs.text)},
                         {"omt", nlohmann::json::parse(omt.text)},
                         {"identical", diff.empty()}};
      if (!diff.empty()) out["diff"] = diff;
      return {diff.empty() ? 0 : 1, out.dump()};
    }
    std::string text = "method = gs\n" + gs.text + "\n\nmethod = omt\n" + omt.text +
                       "\n\ndiff: " + (diff.empty() ? "identical" : diff);
    return {diff.empty() ? 0 : 1, text};
  }
  if (config.subcommand == "verify") {
    VerifyReport report = run_all_checks(fan, order, kOracleBox, grading);
    return {report.all_passed() ? 0 : 1,
            machine ? render_report_json(report) : render_report(report)};
  }
  fail(errc::validation_error, "unknown subcommand '" + config.subcommand + "'");
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    std::string input_bytes = read_file(config.input_path);

    // the cache key needs the resolved grading, so parse eagerly
    bool cacheable = config.use_cache && config.subcommand != "verify";
    std::string key;
    ResultCache cache(ResultCache::resolve_dir(config.input_path, config.cache_dir_override));
    if (cacheable) {
      ParsedInput parsed = parse_input_text(input_bytes);
      FanData fan = build_fan(parsed.polytope);
      Grading grading;
      if (config.grading_override) {
        grading.weights = *config.grading_override;
        validate_grading(fan, grading);
      } else if (parsed.grading) {
        grading.weights = *parsed.grading;
        validate_grading(fan, grading);
      } else {
        grading = default_grading(fan);
      }
      key = ResultCache::make_key(input_bytes, config.order,
                                  command_signature(config, grading));
      if (auto hit = cache.lookup(key)) return {0, *hit};
    }

    RunResult result = dispatch(config, input_bytes);
    if (cacheable && result.exit_code == 0) cache.store(key, result.output);
    return result;
  } catch (const error& e) {
    switch (e.code()) {
      case errc::round_trip_failure:
      case errc::internal_laurent_leak:
      case errc::relation_not_integral:
        return {1, std::string("error: ") + e.what()};
      default:
        return {2, std::string("error: ") + e.what()};
    }
  } catch (const std::exception& e) {
    return {2, std::string("error: ") + e.what()};
  }
}

}  // namespace slabcy
