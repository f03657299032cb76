#include <slabcy/cache.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace slabcy {

namespace fs = std::filesystem;

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string ResultCache::resolve_dir(const std::string& input_path,
                                     const std::string& dir_override) {
  if (!dir_override.empty()) return dir_override;
  if (const char* env = std::getenv("SLABCY_CACHE"); env && *env) return env;
  fs::path p(input_path);
  return (p.parent_path() / ".slabcy-cache").string();
}

std::string ResultCache::make_key(const std::string& input_bytes, std::int64_t order,
                                  const std::string& command_line) {
  return "input:" + fnv1a_hex(input_bytes) + " order:" + std::to_string(order) +
         " cmd:" + command_line;
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
  fs::path file = fs::path(dir_) / (fnv1a_hex(key) + ".cache");
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::string stored_key;
  if (!std::getline(in, stored_key)) return std::nullopt;
  if (stored_key != key) return std::nullopt;  // collision: treat as a miss
  std::ostringstream payload;
  payload << in.rdbuf();
  return payload.str();
}

void ResultCache::store(const std::string& key, const std::string& payload) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;  // the cache is an optimization; never fail the run
  fs::path file = fs::path(dir_) / (fnv1a_hex(key) + ".cache");
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << key << "\n" << payload;
  }
  fs::rename(tmp, file, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace slabcy
