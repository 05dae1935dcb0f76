#pragma once

// 2-separated partitions: a staircase with a 2-dilated partition glued to the
// right and another glued below, and their semisimple Specht modules.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heckekron/partitions.hpp"
#include "heckekron/qpoly.hpp"

namespace heckekron {

struct TwoSeparated {
  int k = 0;
  Partition lam;    // doubled and glued to the right of rho(k)
  Partition mu;     // doubled and glued below rho(k)
  Partition whole;  // the assembled partition

  int weight() const { return lam.size() + mu.size(); }
  std::string str() const;
  bool operator==(const TwoSeparated&) const = default;
};

/// (rho(k) + 2 mu^T)^T + 2 lam. Requires len(lam) + mu_1 <= k + 1.
TwoSeparated build_two_separated(int k, const Partition& lam, const Partition& mu);

std::optional<TwoSeparated> detect_two_separated(const Partition& p);

/// Column label tau^nu_0 -> c(nu^T, lam^T, mu) t^{|mu|}, zero entries omitted.
std::map<Partition, LaurentPoly> theorem_a_row(const TwoSeparated& ts);

/// |SStd(lam^T disjoint-union mu, alpha^T)| * [[alpha^T]]!^2 * t^{|mu|}: the
/// part of the weight space of S(ts) at the ladder residue sequence of
/// tau^alpha_0 spanned by tableaux extending one fixed ladder tableau of
/// rho(k), with degrees taken in the whole diagram.
LaurentPoly skew_weightspace(const TwoSeparated& ts, const Partition& alpha);

/// The whole weight space: every standard tableau with that residue sequence
/// fills rho(k) first, in one of [Lad(rho(k))]! ways, so this is
/// [Lad(rho(k))]! * skew_weightspace(ts, alpha).
LaurentPoly graded_weightspace(const TwoSeparated& ts, const Partition& alpha);

/// Every tau^{(a)}_{(1^b)} of size n, a, b >= 0, ordered by k then a.
std::vector<TwoSeparated> framed_staircases(int n);

struct FramedCounts {
  std::size_t raw = 0;
  std::size_t up_to_conjugation = 0;
  /// Up to conjugation, counting only genuine frames (a, b >= 1) and the bare
  /// staircase (a = b = 0).
  std::size_t proper_up_to_conjugation = 0;
};

FramedCounts count_framed_staircases(int n);

}  // namespace heckekron
