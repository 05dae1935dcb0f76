#include "heckekron/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "heckekron/errors.hpp"
#include "heckekron/serialize.hpp"

namespace heckekron {

namespace fs = std::filesystem;

std::string CacheKey::filename() const {
  return "n" + std::to_string(n) + "-e" + std::to_string(e) + "-core" +
         std::to_string(core_index) + "-v" + std::to_string(format_version) + ".json";
}

int core_index_of(const BlockId& block) {
  if (block.e == 2) {
    if (auto k = block.core_index()) return *k;
    throw DomainError(block.core.str() + " is not a 2-core");
  }
  const auto blocks = block_members(block.n(), block.e);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].first == block) return static_cast<int>(i);
  throw DomainError("no block of " + std::to_string(block.n()) + " has core " + block.core.str());
}

BlockId block_from_index(int n, int e, int core_index) {
  if (n < 0) throw DomainError("n must be non-negative");
  if (e < 2) throw DomainError("quantum characteristic e must be at least 2");
  if (core_index < 0) throw DomainError("core index must be non-negative");
  if (e == 2) {
    const Partition core = staircase(core_index);
    if (core.size() > n || (n - core.size()) % 2 != 0)
      throw DomainError("no 2-block of " + std::to_string(n) + " has core rho(" +
                        std::to_string(core_index) + ")");
    return BlockId{2, core, (n - core.size()) / 2};
  }
  const auto blocks = block_members(n, e);
  if (core_index >= static_cast<int>(blocks.size()))
    throw DomainError(std::to_string(n) + " has only " + std::to_string(blocks.size()) +
                      " blocks at e=" + std::to_string(e));
  return blocks[core_index].first;
}

CacheKey cache_key(const BlockId& block) {
  return CacheKey{block.n(), block.e, core_index_of(block), kFormatVersion};
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("HECKEKRON_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "heckekron";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "heckekron";
  return fs::temp_directory_path() / "heckekron-cache";
}

MatrixCache::MatrixCache(fs::path dir, bool enabled, Warn warn)
    : dir_(std::move(dir)), enabled_(enabled), warn_(std::move(warn)) {}

GradedDecompMatrix MatrixCache::get_or_compute(const BlockId& block, const LltOptions& options) {
  if (!enabled_) return llt_matrix(block, options);
  const CacheKey key = cache_key(block);
  const fs::path path = path_for(key);
  if (std::ifstream in{path}) {
    try {
      GradedDecompMatrix m = matrix_from_json(Json::parse(in));
      if (m.block != block) throw InvariantViolation("entry holds a different block");
      return m;
    } catch (const std::exception& ex) {
      if (warn_) warn_("cache entry " + path.string() + " is unusable (" + ex.what() + "); recomputing");
    }
  }
  GradedDecompMatrix m = llt_matrix(block, options);
  store(key, m);
  return m;
}

void MatrixCache::store(const CacheKey& key, const GradedDecompMatrix& m) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path final_path = path_for(key);
  std::ostringstream tmp_name;
  tmp_name << final_path.filename().string() << ".tmp." << ::getpid() << "." << counter++;
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      if (warn_) warn_("cannot write cache entry in " + dir_.string());
      return;
    }
    out << to_json(m).dump() << '\n';
    if (!out) {
      out.close();
      fs::remove(tmp, ec);
      if (warn_) warn_("short write to " + tmp.string());
      return;
    }
  }
  fs::rename(tmp, final_path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    if (warn_) warn_("cannot publish cache entry " + final_path.string());
  }
}

}  // namespace heckekron
