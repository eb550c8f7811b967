#ifndef PLANAR_CACHE_HPP
#define PLANAR_CACHE_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "planar/geometry.hpp"

namespace planar {

struct KminRecord {
  int k = 0;
  std::uint64_t nodes = 0;     // provenance: search effort that proved k
  std::string version = "1";
};

/// Persistent map (s_x, s_y, restricted) -> minimal k. Records carry a
/// checksum; a corrupt line is treated as a miss and recomputed. When the
/// directory cannot be written the cache degrades to in-memory with a
/// one-time warning on stderr.
class KminCache {
 public:
  KminCache() = default;                      // in-memory only
  explicit KminCache(std::string directory);  // persistent

  std::optional<KminRecord> get(Rect rect, bool restricted);
  void put(Rect rect, bool restricted, const KminRecord& record);

  bool persistent() const { return persistent_; }
  const std::string& directory() const { return dir_; }

  /// Directory from PLANAR_BASES_CACHE_DIR, or empty if unset.
  static std::string env_directory();

 private:
  using Key = std::tuple<int, int, bool>;
  void load_locked();
  void store_locked();

  std::mutex mu_;
  std::map<Key, KminRecord> entries_;
  std::string dir_;
  bool persistent_ = false;
  bool loaded_ = false;
  bool warned_ = false;
};

}  // namespace planar

#endif  // PLANAR_CACHE_HPP
