#include "heckekron/blocks.hpp"

#include <set>

#include "heckekron/errors.hpp"

namespace heckekron {

namespace {

int v2(int m) {
  int v = 0;
  for (; m % 2 == 0; m /= 2) ++v;
  return v;
}

void require_e2(const BlockId& block) {
  if (block.e != 2) throw DomainError("2-block combinatorics needs e = 2");
}

std::vector<int> binary_digits(int w) {
  std::vector<int> digits;
  for (int j = 0; (1 << j) <= w; ++j)
    if (w & (1 << j)) digits.push_back(j);
  return digits;  // ascending
}

}  // namespace

int defect(const BlockId& block) {
  require_e2(block);
  return 2 * block.weight - binary_digit_sum(block.weight);
}

int dimension_2adic(const Partition& lam) {
  int valuation = lam.size() - binary_digit_sum(lam.size());
  Partition conj = conjugate(lam);
  for (int r = 1; r <= lam.length(); ++r)
    for (int c = 1; c <= lam.row(r); ++c)
      valuation -= v2(lam.row(r) - c + conj.row(c) - r + 1);
  return valuation;
}

HeightProfile height(const Partition& lam) {
  HeightProfile profile;
  profile.lam = lam;
  profile.block_defect = defect(block_of(lam, 2));
  profile.dim2adic = dimension_2adic(lam);
  const int n = lam.size();
  profile.height = profile.dim2adic - (n - binary_digit_sum(n) - profile.block_defect);
  if (profile.height < 0)
    throw InvariantViolation("negative height for " + lam.str());
  return profile;
}

std::vector<Partition> enumerate_height0(const BlockId& block) {
  require_e2(block);
  std::set<Partition> level{block.core};
  for (int j : binary_digits(block.weight)) {
    std::set<Partition> next;
    for (const auto& p : level)
      for (auto& q : addable_rim_hooks(p, 1 << (j + 1))) next.insert(std::move(q));
    level = std::move(next);
  }
  return {level.rbegin(), level.rend()};
}

BigInt k0(const BlockId& block) {
  require_e2(block);
  BigInt product = 1;
  for (int j : binary_digits(block.weight)) product <<= (j + 1);
  return product;
}

}  // namespace heckekron
