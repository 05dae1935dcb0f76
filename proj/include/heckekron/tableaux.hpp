#pragma once

// Standard, coloured semistandard and semistandard tableaux together with
// their KLR degrees.

#include <functional>
#include <vector>

#include "heckekron/bigint.hpp"
#include "heckekron/partitions.hpp"
#include "heckekron/qpoly.hpp"

namespace heckekron {

using TableauRows = std::vector<std::vector<int>>;

struct StandardTableau {
  TableauRows rows;  // entries 1..n, rows and columns strictly increasing

  Partition shape() const;
  Node node_of(int entry) const;
  bool operator==(const StandardTableau&) const = default;
};

using ResidueSequence = std::vector<int>;

/// Calls visit once per standard tableau of the given shape.
void for_each_standard(const Partition& shape,
                       const std::function<void(const StandardTableau&)>& visit);
std::vector<StandardTableau> enumerate_standard(const Partition& shape);
BigInt count_standard(const Partition& shape);

int degree_std(const StandardTableau& t, int e);
ResidueSequence residue_sequence(const StandardTableau& t, int e);

/// Sum of t^deg over standard tableaux of the given shape whose residue
/// sequence is res. Memoised over subshapes, so it scales with the number of
/// shapes rather than the number of tableaux.
LaurentPoly filtered_standard_gf(const Partition& shape,
                                 const ResidueSequence& res, int e);

/// The same sum over standard skew tableaux of shape/inner, degrees taken in
/// the full diagram; res covers the skew entries only.
LaurentPoly filtered_skew_gf(const Partition& shape, const Partition& inner,
                             const ResidueSequence& res, int e);

struct ColouredTableau {
  int e = 2;
  Partition weight;  // the e-regular label mu
  TableauRows rows;  // ladder numbers

  Partition shape() const;
  bool operator==(const ColouredTableau&) const = default;
};

/// All of CStd(shape, weight). Throws DomainError if weight is e-singular.
std::vector<ColouredTableau> enumerate_cstd(const Partition& shape,
                                            const Partition& weight, int e);

/// Sum of t^deg(S) over CStd(shape, weight), by dynamic programming over
/// ladder steps without listing tableaux.
LaurentPoly cstd_character(const Partition& shape, const Partition& weight,
                           int e);

int degree_cstd(const ColouredTableau& s);

/// The standard tableaux whose ladder colouring is s.
std::vector<StandardTableau> orbit_of_cstd(const ColouredTableau& s);

struct LadderTableau {
  ColouredTableau tableau;
  ResidueSequence residues;
};

LadderTableau ladder_tableau(const Partition& mu, int e);

/// Semistandard tableaux of the disjoint union of the given diagrams with the
/// given weight.
BigInt count_sstd(const std::vector<Partition>& components,
                  const Composition& weight);
inline BigInt count_sstd(const Partition& shape, const Composition& weight) {
  return count_sstd(std::vector<Partition>{shape}, weight);
}

}  // namespace heckekron
