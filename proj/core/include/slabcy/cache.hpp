#pragma once

#include <optional>
#include <string>

namespace slabcy {

// Content-addressed result cache.  Keys mix the input file bytes, the
// truncation order, and the full subcommand parameter string; entries store
// the key alongside the payload so hash collisions degrade to misses.
// Writes are atomic (temp file + rename); the directory is safe to delete.
class ResultCache {
 public:
  // dir_override > SLABCY_CACHE env var > ".slabcy-cache" beside the input.
  static std::string resolve_dir(const std::string& input_path,
                                 const std::string& dir_override);

  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

  static std::string make_key(const std::string& input_bytes, std::int64_t order,
                              const std::string& command_line);

  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& payload) const;

  const std::string& dir() const { return dir_; }

 private:
  std::string dir_;
};

// FNV-1a 64-bit, hex-encoded; stable across platforms and runs.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace slabcy
