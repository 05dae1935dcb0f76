#include "heckekron/characters.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "heckekron/errors.hpp"

namespace heckekron {

namespace {

struct HookMove {
  std::vector<int> beta;  // strictly decreasing
  int sign;
};

std::vector<int> to_beta(const std::vector<int>& parts, int len) {
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i)
    beta[i] = (i < static_cast<int>(parts.size()) ? parts[i] : 0) + len - 1 - i;
  return beta;
}

std::vector<int> from_beta(const std::vector<int>& beta) {
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int part = beta[i] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

// Every removal of an h-rim hook, as (resulting parts, (-1)^leg length).
std::vector<std::pair<std::vector<int>, int>> remove_hooks(const std::vector<int>& parts,
                                                           int h) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta = to_beta(parts, len);
  std::vector<std::pair<std::vector<int>, int>> out;
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - h;
    if (target < 0) continue;
    if (std::binary_search(beta.begin(), beta.end(), target, std::greater<>())) continue;
    int between = 0;
    for (int j = i + 1; j < len && beta[j] > target; ++j) ++between;
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    out.emplace_back(from_beta(moved), between % 2 ? -1 : 1);
  }
  return out;
}

}  // namespace

BigInt factorial(int n) {
  BigInt f = 1;
  for (int m = 2; m <= n; ++m) f *= m;
  return f;
}

BigInt centralizer_order(const Partition& cycle_type) {
  BigInt z = 1;
  const auto& parts = cycle_type.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int mult = static_cast<int>(j - i);
    for (int m = 0; m < mult; ++m) z *= parts[i];
    z *= factorial(mult);
    i = j;
  }
  return z;
}

BigInt class_size(const Partition& cycle_type) {
  return factorial(cycle_type.size()) / centralizer_order(cycle_type);
}

BigInt dimension(const Partition& lam) {
  BigInt hooks = 1;
  for (int r = 1; r <= lam.length(); ++r)
    for (int c = 1; c <= lam.row(r); ++c) hooks *= hook_length(lam, {r, c});
  return factorial(lam.size()) / hooks;
}

BigInt character_value(const Partition& lam, const Partition& cycle_type) {
  if (lam.size() != cycle_type.size())
    throw DomainError("character value needs partitions of equal size, got " +
                      lam.str() + " and " + cycle_type.str());
  const auto& cycles = cycle_type.parts();
  std::vector<std::map<std::vector<int>, BigInt>> memo(cycles.size() + 1);
  std::function<BigInt(const std::vector<int>&, std::size_t)> chi =
      [&](const std::vector<int>& parts, std::size_t depth) -> BigInt {
    if (depth == cycles.size()) return 1;
    auto it = memo[depth].find(parts);
    if (it != memo[depth].end()) return it->second;
    BigInt value = 0;
    for (const auto& [rest, sign] : remove_hooks(parts, cycles[depth]))
      value += sign * chi(rest, depth + 1);
    memo[depth].emplace(parts, value);
    return value;
  };
  return chi(lam.parts(), 0);
}

CharacterTable::CharacterTable(int n, int threads) : n_(n) {
  if (n < 0) throw DomainError("negative group order");
  if (n > kMaxN)
    throw BudgetExceeded("character table of S_" + std::to_string(n) +
                         " exceeds the budget (n <= " + std::to_string(kMaxN) + ")");
  // tables[m][lam * p(m) + alpha] for every m < n, built upwards.
  std::vector<std::vector<Partition>> labels(n + 1);
  std::vector<std::map<std::vector<int>, int>> index(n + 1);
  std::vector<std::vector<long long>> tables(n + 1);
  for (int m = 0; m <= n; ++m) {
    labels[m] = partitions_of(m);
    for (std::size_t i = 0; i < labels[m].size(); ++i) index[m].emplace(labels[m][i].parts(), i);
    const std::size_t p = labels[m].size();
    tables[m].assign(p * p, 0);
    if (m == 0) {
      tables[0][0] = 1;
      continue;
    }
    auto fill_column = [&](std::size_t a) {
      const auto& alpha = labels[m][a].parts();
      int h = alpha.front();
      std::vector<int> rest_alpha(alpha.begin() + 1, alpha.end());
      const int sub = m - h;
      const std::size_t ps = labels[sub].size();
      const int rest_idx = index[sub].at(rest_alpha);
      for (std::size_t l = 0; l < p; ++l) {
        __int128 value = 0;
        for (const auto& [rest, sign] : remove_hooks(labels[m][l].parts(), h))
          value += static_cast<__int128>(sign) *
                   tables[sub][index[sub].at(rest) * ps + rest_idx];
        if (value > INT64_MAX || value < INT64_MIN)
          throw BudgetExceeded("character value overflow");
        tables[m][l * p + a] = static_cast<long long>(value);
      }
    };
    int workers = (m == n) ? std::max(1, threads) : 1;
    if (workers == 1) {
      for (std::size_t a = 0; a < p; ++a) fill_column(a);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (std::size_t a; (a = next.fetch_add(1)) < p;) fill_column(a);
        });
      for (auto& th : pool) th.join();
    }
  }
  labels_ = std::move(labels[n]);
  index_ = std::move(index[n]);
  top_ = std::move(tables[n]);
  for (const auto& alpha : labels_) class_sizes_.push_back(heckekron::class_size(alpha));
}

int CharacterTable::index(const Partition& p) const {
  auto it = index_.find(p.parts());
  if (it == index_.end())
    throw DomainError(p.str() + " is not a partition of " + std::to_string(n_));
  return it->second;
}

BigInt CharacterTable::kronecker(int a, int b, int c) const {
  BigInt total = 0;
  for (std::size_t cls = 0; cls < labels_.size(); ++cls) {
    BigInt product = value(a, static_cast<int>(cls));
    if (product == 0) continue;
    product *= value(b, static_cast<int>(cls));
    product *= value(c, static_cast<int>(cls));
    total += product * class_sizes_[cls];
  }
  BigInt order = factorial(n_);
  if (total % order != 0 || total < 0)
    throw InvariantViolation("kronecker: inner product is not a non-negative integer");
  return total / order;
}

std::shared_ptr<const CharacterTable> character_table(int n, int threads) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharacterTable>> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = tables[n];
  if (!slot) slot = std::make_shared<CharacterTable>(n, threads);
  return slot;
}

BigInt kronecker(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.size() != mu.size() || mu.size() != nu.size())
    throw DomainError("Kronecker coefficient needs partitions of equal size");
  auto table = character_table(lam.size());
  return table->kronecker(table->index(lam), table->index(mu), table->index(nu));
}

BigInt lr_coefficient(const Partition& outer, const Partition& inner1,
                      const Partition& inner2) {
  if (outer.size() != inner1.size() + inner2.size()) return 0;
  for (int r = 1; r <= inner1.length(); ++r)
    if (inner1.row(r) > outer.row(r)) return 0;
  for (int r = 1; r <= inner2.length(); ++r)
    if (inner2.row(r) > outer.row(r)) return 0;

  // Cells of outer/inner1 in reading order: rows top to bottom, each row
  // right to left.
  std::vector<Node> cells;
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = outer.row(r); c > inner1.row(r); --c) cells.push_back({r, c});
  const int letters = inner2.length();
  std::vector<std::vector<int>> filling(outer.length() + 1,
                                        std::vector<int>(outer.row(1) + 2, 0));
  std::vector<int> used(letters + 1, 0);
  BigInt count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t j) {
    if (j == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[j];
    int hi = letters;
    if (c < outer.row(r)) hi = std::min(hi, filling[r][c + 1]);  // weak along rows
    int lo = 1;
    if (r > 1 && c > inner1.row(r - 1)) lo = filling[r - 1][c] + 1;  // strict in columns
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= inner2.row(v)) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word
      ++used[v];
      filling[r][c] = v;
      place(j + 1);
      filling[r][c] = 0;
      --used[v];
    }
  };
  place(0);
  return count;
}

std::map<Partition, BigInt> saxl_brute(int k, const SaxlBudget& budget, int threads) {
  if (k < 0) throw DomainError("staircase index must be non-negative");
  if (k > budget.max_k)
    throw BudgetExceeded("saxl-brute: k=" + std::to_string(k) +
                         " is beyond the brute-force budget (k <= " +
                         std::to_string(budget.max_k) + "); pass --allow-large to lift it");
  const int n = k * (k + 1) / 2;
  CharacterTable table(n, threads);
  const int rho = table.index(staircase(k));
  std::map<Partition, BigInt> out;
  for (std::size_t lam = 0; lam < table.labels().size(); ++lam)
    out.emplace(table.labels()[lam], table.kronecker(rho, rho, static_cast<int>(lam)));
  return out;
}

}  // namespace heckekron
