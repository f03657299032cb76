#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slabcy {

enum class Method { gs, omt, both };
enum class OutputFormat { text, machine };

// One CLI invocation.  Ray indices j/i are 1-based, matching the rendered
// output and the usual mathematical numbering.
struct RunConfig {
  std::string subcommand;  // info | g | mirror-map | ogw | slab | verify
  std::string input_path;
  std::int64_t order = 4;
  std::optional<int> j;
  std::optional<int> i;
  Method method = Method::both;
  bool inverse = false;
  OutputFormat format = OutputFormat::text;
  std::optional<std::vector<std::int64_t>> grading_override;  // wins over the input file
  std::string cache_dir_override;                             // wins over SLABCY_CACHE
  bool use_cache = true;
};

struct RunResult {
  int exit_code = 0;  // 0 success, 1 verification failure, 2 input error
  std::string output;
};

// Executes one subcommand; never throws (input errors become exit code 2).
RunResult run(const RunConfig& config);

}  // namespace slabcy
