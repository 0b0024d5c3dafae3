#ifndef WLCIRC_CLI_CACHE_HPP
#define WLCIRC_CLI_CACHE_HPP

#include <functional>
#include <optional>
#include <string>

namespace wlcirc::cli {

/// Content-addressed report cache. Entries are immutable files named by the
/// request digest; population uses write-to-temp plus atomic rename so
/// concurrent writers are safe.
class ReportCache {
 public:
  /// Resolution order: explicit dir, then $WLCIRC_CACHE, then ".wlcache".
  /// An empty resolved path disables caching.
  explicit ReportCache(std::string dir);
  static std::string resolve_dir(const std::string& flag_value);

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& bytes) const;

  /// lookup-or-compute; returns the byte-exact report and whether it was a
  /// cache hit.
  std::pair<std::string, bool> get_or_compute(const std::string& key,
                                              const std::function<std::string()>& compute) const;

 private:
  std::string dir_;
};

}  // namespace wlcirc::cli

#endif
