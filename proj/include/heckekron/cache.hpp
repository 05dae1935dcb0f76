#pragma once

// On-disk store of decomposition matrices, one checksummed JSON file per
// block.

#include <filesystem>
#include <functional>
#include <string>

#include "heckekron/llt.hpp"
#include "heckekron/partitions.hpp"

namespace heckekron {

struct CacheKey {
  int n = 0;
  int e = 2;
  int core_index = 0;
  int format_version = 0;

  std::string filename() const;
  auto operator<=>(const CacheKey&) const = default;
};

/// For e = 2 the core index is K in rho(K); otherwise the position of the
/// block in block_members(n, e).
int core_index_of(const BlockId& block);
/// Inverse of core_index_of; throws DomainError if no such block exists.
BlockId block_from_index(int n, int e, int core_index);
CacheKey cache_key(const BlockId& block);

/// $HECKEKRON_CACHE, else $XDG_CACHE_HOME/heckekron, else ~/.cache/heckekron.
std::filesystem::path default_cache_dir();

class MatrixCache {
 public:
  using Warn = std::function<void(const std::string&)>;

  /// enabled = false makes every lookup a fresh computation.
  explicit MatrixCache(std::filesystem::path dir = default_cache_dir(), bool enabled = true,
                       Warn warn = {});

  const std::filesystem::path& dir() const { return dir_; }
  bool enabled() const { return enabled_; }

  /// Reads the entry if present and intact; otherwise computes, stores and
  /// returns. Corrupt entries are recomputed and overwritten with a warning.
  GradedDecompMatrix get_or_compute(const BlockId& block, const LltOptions& options = {});

  std::filesystem::path path_for(const CacheKey& key) const { return dir_ / key.filename(); }

 private:
  void store(const CacheKey& key, const GradedDecompMatrix& m) const;

  std::filesystem::path dir_;
  bool enabled_;
  Warn warn_;
};

}  // namespace heckekron
