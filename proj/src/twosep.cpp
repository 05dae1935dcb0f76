#include "heckekron/twosep.hpp"

#include <sstream>

#include "heckekron/characters.hpp"
#include "heckekron/errors.hpp"
#include "heckekron/tableaux.hpp"

namespace heckekron {

namespace {

Partition add_parts(const Partition& a, const Partition& b, int scale_b) {
  std::vector<int> parts(std::max(a.length(), b.length()));
  for (int i = 1; i <= static_cast<int>(parts.size()); ++i)
    parts[i - 1] = a.row(i) + scale_b * b.row(i);
  return Partition(std::move(parts));
}

}  // namespace

std::string TwoSeparated::str() const {
  std::ostringstream os;
  os << "tau[k=" << k << "; lam=" << lam << "; mu=" << mu << "] = " << whole;
  return os.str();
}

TwoSeparated build_two_separated(int k, const Partition& lam, const Partition& mu) {
  if (k < 0) throw DomainError("staircase index must be non-negative");
  if (lam.length() + mu.row(1) > k + 1)
    throw DomainError("not 2-separated: len(" + lam.str() + ") + " + "first part of " +
                      mu.str() + " exceeds " + std::to_string(k + 1));
  Partition bottom = conjugate(add_parts(staircase(k), conjugate(mu), 2));
  return {k, lam, mu, add_parts(bottom, lam, 2)};
}

std::optional<TwoSeparated> detect_two_separated(const Partition& p) {
  auto [core, weight] = e_core_and_weight(p, 2);
  const int k = *staircase_index(core);
  const Partition rho = staircase(k);
  const Partition pt = conjugate(p);
  // Rows above the glued-on mu agree with rho(k) + 2 lam; dually for columns.
  auto halves = [&](const Partition& q, int count) -> std::optional<Partition> {
    std::vector<int> parts;
    for (int i = 1; i <= count; ++i) {
      int diff = q.row(i) - rho.row(i);
      if (diff <= 0 || diff % 2) return std::nullopt;
      parts.push_back(diff / 2);
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
      if (parts[i] > parts[i - 1]) return std::nullopt;
    return Partition(std::move(parts));
  };
  for (int len = 0; len <= k + 1; ++len) {
    auto lam = halves(p, len);
    if (!lam) continue;
    for (int top = 0; len + top <= k + 1; ++top) {
      auto mut = halves(pt, top);
      if (!mut) continue;
      if (lam->size() + mut->size() != weight) continue;
      TwoSeparated ts = build_two_separated(k, *lam, conjugate(*mut));
      if (ts.whole == p) return ts;
    }
  }
  return std::nullopt;
}

std::map<Partition, LaurentPoly> theorem_a_row(const TwoSeparated& ts) {
  std::map<Partition, LaurentPoly> row;
  const Partition lam_t = conjugate(ts.lam);
  for (const auto& nu : partitions_of(ts.weight())) {
    BigInt c = lr_coefficient(conjugate(nu), lam_t, ts.mu);
    if (c == 0) continue;
    if (nu.length() > ts.k + 1)
      throw InvariantViolation("theorem_a_row: positive coefficient at invalid label " +
                               nu.str());
    row.emplace(build_two_separated(ts.k, nu, {}).whole,
                LaurentPoly::monomial(ts.mu.size(), c));
  }
  return row;
}

LaurentPoly skew_weightspace(const TwoSeparated& ts, const Partition& alpha) {
  if (alpha.size() != ts.weight())
    throw DomainError("weight " + alpha.str() + " has size " +
                      std::to_string(alpha.size()) + ", expected " +
                      std::to_string(ts.weight()));
  build_two_separated(ts.k, alpha, {});  // validates the label
  const Partition alpha_t = conjugate(alpha);
  BigInt count = count_sstd(std::vector<Partition>{conjugate(ts.lam), ts.mu},
                            alpha_t.parts());
  LaurentPoly dil = quantum_factorial(alpha_t.parts());
  return (dil * dil).shifted(ts.mu.size()) * LaurentPoly::monomial(0, count);
}

LaurentPoly graded_weightspace(const TwoSeparated& ts, const Partition& alpha) {
  const Partition rho = staircase(ts.k);
  return quantum_factorial(ladder_composition(rho, 2)) * skew_weightspace(ts, alpha);
}

std::vector<TwoSeparated> framed_staircases(int n) {
  std::vector<TwoSeparated> out;
  for (int k = 0; k * (k + 1) / 2 <= n; ++k) {
    int rest = n - k * (k + 1) / 2;
    if (rest % 2) continue;
    int w = rest / 2;
    for (int a = 0; a <= w; ++a) {
      int b = w - a;
      if ((a > 0) + (b > 0) > k + 1) continue;
      Partition lam = a ? Partition{a} : Partition{};
      Partition mu = b ? Partition(std::vector<int>(b, 1)) : Partition{};
      out.push_back(build_two_separated(k, lam, mu));
    }
  }
  return out;
}

FramedCounts count_framed_staircases(int n) {
  FramedCounts counts;
  for (const auto& ts : framed_staircases(n)) {
    ++counts.raw;
    // Conjugation swaps a and b.
    int a = ts.lam.size(), b = ts.mu.size();
    if (a > b) continue;
    ++counts.up_to_conjugation;
    if ((a > 0 && b > 0) || (a == 0 && b == 0)) ++counts.proper_up_to_conjugation;
  }
  return counts;
}

}  // namespace heckekron
