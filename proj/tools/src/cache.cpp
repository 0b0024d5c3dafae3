#include "wlcirc_cli/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wlcirc/errors.hpp"

namespace fs = std::filesystem;

namespace wlcirc::cli {

ReportCache::ReportCache(std::string dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) fs::create_directories(dir_);
}

std::string ReportCache::resolve_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("WLCIRC_CACHE")) return env;
  return ".wlcache";
}

std::optional<std::string> ReportCache::lookup(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(fs::path(dir_) / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ReportCache::store(const std::string& key, const std::string& bytes) const {
  if (!enabled()) return;
  static std::atomic<unsigned> counter{0};
  fs::path final_path = fs::path(dir_) / (key + ".json");
  std::ostringstream tmpname;
  tmpname << key << ".tmp." << ::getpid() << "." << counter++;
  fs::path tmp_path = fs::path(dir_) / tmpname.str();
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write to cache directory: " + dir_);
    out << bytes;
  }
  std::error_code ec;
  fs::rename(tmp_path, final_path, ec);  // atomic within one filesystem
  if (ec) fs::remove(tmp_path, ec);
}

std::pair<std::string, bool> ReportCache::get_or_compute(
    const std::string& key, const std::function<std::string()>& compute) const {
  if (auto hit = lookup(key)) return {*hit, true};
  std::string bytes = compute();
  store(key, bytes);
  return {bytes, false};
}

}  // namespace wlcirc::cli
