#include <cstdlib>
#include <fstream>
#include <mutex>
#include <random>

#include "nchopf/error.hpp"
#include "nchopf/json_io.hpp"
#include "nchopf/sc_hopf.hpp"

namespace nchopf {

namespace fs = std::filesystem;

SupercharTableCache::SupercharTableCache(std::optional<fs::path> directory, int bound)
    : directory_(std::move(directory)), bound_(bound) {}

fs::path SupercharTableCache::default_directory() {
  if (const char* dir = std::getenv("NCHOPF_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "nchopf";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "nchopf";
  return fs::temp_directory_path() / "nchopf";
}

fs::path SupercharTableCache::file_for(int n, int q) const {
  const std::string name = "supertable-v" + std::to_string(kFormatVersion) + "-n" + std::to_string(n) + "-q" +
                           std::to_string(q) + ".json";
  return directory_ ? *directory_ / name : fs::path(name);
}

std::shared_ptr<const SupercharTable> SupercharTableCache::table(int n, int q) {
  const auto key = std::make_pair(n, q);
  {
    std::shared_lock lock(mutex_);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
  }
  auto computed = load_or_compute(n, q);
  std::unique_lock lock(mutex_);
  return tables_.emplace(key, std::move(computed)).first->second;
}

std::shared_ptr<const CycMatrix> SupercharTableCache::inverse(int n, int q) {
  const auto key = std::make_pair(n, q);
  {
    std::shared_lock lock(mutex_);
    auto it = inverses_.find(key);
    if (it != inverses_.end()) return it->second;
  }
  auto inv = std::make_shared<const CycMatrix>(invert_matrix(table(n, q)->values));
  std::unique_lock lock(mutex_);
  return inverses_.emplace(key, std::move(inv)).first->second;
}

std::shared_ptr<const SupercharTable> SupercharTableCache::load_or_compute(int n, int q) {
  if (n > bound_)
    throw BoundExceeded("table size n=" + std::to_string(n) + " exceeds the configured bound " + std::to_string(bound_));
  if (directory_) {
    const fs::path file = file_for(n, q);
    std::ifstream in(file);
    if (in) {
      try {
        auto t = std::make_shared<SupercharTable>(table_from_json(Json::parse(in)));
        if (t->n == n && t->q == q) return t;
      } catch (const std::exception&) {
        // Unreadable cache entries are recomputed and overwritten.
      }
    }
  }
  auto t = std::make_shared<SupercharTable>(compute_supercharacter_table(n, q, bound_));
  if (directory_) {
    std::error_code ec;
    fs::create_directories(*directory_, ec);
    if (!ec) {
      // Write to a unique temporary name, then rename, so readers never see a partial file.
      std::random_device rd;
      const fs::path tmp = file_for(n, q).string() + ".tmp" + std::to_string(rd());
      {
        std::ofstream out(tmp);
        out << to_json(*t).dump();
      }
      fs::rename(tmp, file_for(n, q), ec);
      if (ec) fs::remove(tmp, ec);
    }
  }
  return t;
}

}  // namespace nchopf
