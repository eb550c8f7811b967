#include "planar/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace planar {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string record_payload(int sx, int sy, bool restricted,
                           const KminRecord& r) {
  std::ostringstream os;
  os << sx << ',' << sy << ',' << (restricted ? 1 : 0) << ',' << r.k << ','
     << r.nodes << ',' << r.version;
  return os.str();
}

std::string checksum_of(int sx, int sy, bool restricted, const KminRecord& r) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(
                    fnv1a(record_payload(sx, sy, restricted, r))));
  return buf;
}

}  // namespace

KminCache::KminCache(std::string directory) : dir_(std::move(directory)) {
  persistent_ = !dir_.empty();
}

std::string KminCache::env_directory() {
  const char* env = std::getenv("PLANAR_BASES_CACHE_DIR");
  return env ? env : "";
}

std::optional<KminRecord> KminCache::get(Rect rect, bool restricted) {
  std::lock_guard<std::mutex> lock(mu_);
  if (persistent_ && !loaded_) load_locked();
  auto it = entries_.find({rect.sx, rect.sy, restricted});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void KminCache::put(Rect rect, bool restricted, const KminRecord& record) {
  std::lock_guard<std::mutex> lock(mu_);
  if (persistent_ && !loaded_) load_locked();
  entries_[{rect.sx, rect.sy, restricted}] = record;
  if (persistent_) store_locked();
}

void KminCache::load_locked() {
  loaded_ = true;
  std::ifstream in(std::filesystem::path(dir_) / "kmin.jsonl");
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      const int sx = j.at("sx").get<int>();
      const int sy = j.at("sy").get<int>();
      const bool restricted = j.at("restricted").get<bool>();
      KminRecord r;
      r.k = j.at("k").get<int>();
      r.nodes = j.at("nodes").get<std::uint64_t>();
      r.version = j.at("version").get<std::string>();
      if (j.at("checksum").get<std::string>() !=
          checksum_of(sx, sy, restricted, r)) {
        std::fprintf(stderr,
                     "warning: cache record for %dx%d failed its checksum; "
                     "ignoring it\n",
                     sx, sy);
        continue;
      }
      entries_[{sx, sy, restricted}] = r;
    } catch (const std::exception&) {
      std::fprintf(stderr, "warning: skipping malformed cache line\n");
    }
  }
}

void KminCache::store_locked() {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path path = fs::path(dir_) / "kmin.jsonl";
  const fs::path tmp = fs::path(dir_) / "kmin.jsonl.tmp";
  std::ofstream out(tmp, std::ios::trunc);
  if (!out) {
    if (!warned_) {
      std::fprintf(stderr,
                   "warning: cache directory '%s' is not writable; caching "
                   "in memory only\n",
                   dir_.c_str());
      warned_ = true;
    }
    persistent_ = false;
    return;
  }
  for (const auto& [key, r] : entries_) {
    const auto [sx, sy, restricted] = key;
    nlohmann::ordered_json j;
    j["sx"] = sx;
    j["sy"] = sy;
    j["restricted"] = restricted;
    j["k"] = r.k;
    j["nodes"] = r.nodes;
    j["version"] = r.version;
    j["checksum"] = checksum_of(sx, sy, restricted, r);
    out << j.dump() << '\n';
  }
  out.close();
  fs::rename(tmp, path, ec);
  if (ec && !warned_) {
    std::fprintf(stderr, "warning: could not update cache file in '%s'\n",
                 dir_.c_str());
    warned_ = true;
  }
}

}  // namespace planar
