#pragma once

// Ordinary characters of symmetric groups: Murnaghan-Nakayama values,
// Kronecker and Littlewood-Richardson coefficients.

#include <map>
#include <memory>
#include <vector>

#include "heckekron/bigint.hpp"
#include "heckekron/partitions.hpp"

namespace heckekron {

/// chi^lam at the class of the given cycle type, via Murnaghan-Nakayama
/// consuming the largest cycle first.
BigInt character_value(const Partition& lam, const Partition& cycle_type);

/// Centraliser order prod_i i^{m_i} m_i!.
BigInt centralizer_order(const Partition& cycle_type);
BigInt class_size(const Partition& cycle_type);
BigInt factorial(int n);

/// Hook length formula.
BigInt dimension(const Partition& lam);

/// The full character table of S_n (rows and columns indexed by
/// partitions_of(n)), built bottom-up from the tables of smaller groups.
class CharacterTable {
 public:
  static constexpr int kMaxN = 26;

  explicit CharacterTable(int n, int threads = 1);

  int n() const { return n_; }
  const std::vector<Partition>& labels() const { return labels_; }
  int index(const Partition& p) const;
  long long value(int lam, int cls) const { return top_[lam * labels_.size() + cls]; }
  const BigInt& class_size(int cls) const { return class_sizes_[cls]; }

  /// g(a,b,c) for labels given by index.
  BigInt kronecker(int a, int b, int c) const;

 private:
  int n_;
  std::vector<Partition> labels_;
  std::map<std::vector<int>, int> index_;
  std::vector<long long> top_;
  std::vector<BigInt> class_sizes_;
};

/// Shared, lazily built table; throws BudgetExceeded above kMaxN. threads
/// only matters for the call that builds it.
std::shared_ptr<const CharacterTable> character_table(int n, int threads = 1);

BigInt kronecker(const Partition& lam, const Partition& mu, const Partition& nu);

/// c^outer_{inner1,inner2}: LR skew tableaux of shape outer/inner1 and
/// content inner2. Zero when sizes do not add up.
BigInt lr_coefficient(const Partition& outer, const Partition& inner1,
                      const Partition& inner2);

struct SaxlBudget {
  int max_k = 6;
};

/// g(rho(k), rho(k), lam) for every lam of k(k+1)/2.
std::map<Partition, BigInt> saxl_brute(int k, const SaxlBudget& budget = {},
                                       int threads = 1);

}  // namespace heckekron
