#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <slabcy/run.hpp>

namespace {

void add_common(CLI::App* cmd, slabcy::RunConfig& config, std::string& format,
                std::string& grading) {
  cmd->add_option("input", config.input_path, "geometry input file")->required();
  cmd->add_option("-k,--order", config.order, "truncation order (degree bound)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));
  cmd->add_option("--grading", grading, "comma-separated positive weights, e.g. 1,3");
  cmd->add_option("--cache-dir", config.cache_dir_override, "cache directory override");
  cmd->add_flag_callback("--no-cache", [&config] { config.use_cache = false; },
                         "bypass the result cache");
}

bool parse_grading(const std::string& text, std::vector<std::int64_t>& out) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    try {
      out.push_back(std::stoll(piece));
    } catch (...) {
      return false;
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return !out.empty();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slab functions and open Gromov-Witten series for toric Calabi-Yau manifolds"};
  app.require_subcommand(1);

  slabcy::RunConfig config;
  std::string format = "text";
  std::string grading_text;
  std::string method = "both";
  int j = 0, i = 0;

  auto* info = app.add_subcommand("info", "fan data summary");
  add_common(info, config, format, grading_text);

  auto* g = app.add_subcommand("g", "hypergeometric series g_j");
  add_common(g, config, format, grading_text);
  g->add_option("-j,--j", j, "distinguished ray (1-based)")->required();

  auto* mm = app.add_subcommand("mirror-map", "mirror map q(qcheck) or its inverse");
  add_common(mm, config, format, grading_text);
  mm->add_flag("--inverse", config.inverse, "print qcheck(q) instead of q(qcheck)");

  auto* ogw = app.add_subcommand("ogw", "open Gromov-Witten generating series 1 + delta_i");
  add_common(ogw, config, format, grading_text);
  ogw->add_option("-i,--i", i, "basic disc class ray (1-based)")->required();

  auto* slab = app.add_subcommand("slab", "slab function f_j");
  add_common(slab, config, format, grading_text);
  slab->add_option("-j,--j", j, "distinguished ray (1-based)")->required();
  slab->add_option("--method", method, "gs | omt | both")
      ->check(CLI::IsMember({"gs", "omt", "both"}));

  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  add_common(verify, config, format, grading_text);

  CLI11_PARSE(app, argc, argv);

  config.subcommand = app.get_subcommands().front()->get_name();
  if (g->parsed() || slab->parsed()) config.j = j;
  if (ogw->parsed()) config.i = i;
  config.format =
      format == "machine" ? slabcy::OutputFormat::machine : slabcy::OutputFormat::text;
  if (method == "gs") config.method = slabcy::Method::gs;
  if (method == "omt") config.method = slabcy::Method::omt;
  if (!grading_text.empty()) {
    std::vector<std::int64_t> weights;
    if (!parse_grading(grading_text, weights)) {
      std::cerr << "error: bad --grading value '" << grading_text << "'\n";
      return 2;
    }
    config.grading_override = weights;
  }

  slabcy::RunResult result = slabcy::run(config);
  std::ostream& os = result.exit_code == 2 ? std::cerr : std::cout;
  os << result.output;
  if (!result.output.empty() && result.output.back() != '\n') os << "\n";
  return result.exit_code;
}
