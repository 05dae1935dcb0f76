#pragma once

// Graded decomposition matrices of the Hecke algebra at a complex e-th root
// of unity, by induction along the dominance order on coloured tableau
// characters.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heckekron/partitions.hpp"
#include "heckekron/qpoly.hpp"

namespace heckekron {

struct GradedDecompMatrix {
  using Index = std::pair<int, int>;

  int n = 0;
  int e = 2;
  BlockId block;
  std::vector<Partition> rows;  // every partition of the block, descending lex
  std::vector<Partition> cols;  // the e-regular rows, same order
  std::map<Index, LaurentPoly> d;            // (row, col) -> d_{row,col}(t)
  std::map<Index, LaurentPoly> simple_dims;  // (col, row) -> Dim e(col)D(row)/[Lad(col)]!
  std::map<Index, LaurentPoly> cstd;         // (row, col) -> sum over CStd of t^deg

  int row_index(const Partition& p) const;  // -1 when absent
  int col_index(const Partition& p) const;
  LaurentPoly entry(const Partition& row, const Partition& col) const;
  LaurentPoly simple_dim(const Partition& col, const Partition& row) const;
  /// Nonzero entries of a row, keyed by column label.
  std::map<Partition, LaurentPoly> row_entries(const Partition& row) const;

  bool operator==(const GradedDecompMatrix&) const = default;
};

/// Partitions of n grouped by e-block, blocks ordered by core size.
std::vector<std::pair<BlockId, std::vector<Partition>>> block_members(int n, int e);
std::vector<Partition> block_partitions(const BlockId& block);

struct LltOptions {
  int threads = 1;  // workers for the coloured-tableau precomputation
};

GradedDecompMatrix llt_matrix(const BlockId& block, const LltOptions& options = {});

struct VerificationReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string message);
};

/// Per degree, d_{lambda,mu} never exceeds the number of coloured tableaux.
VerificationReport verify_cstd_bound(const GradedDecompMatrix& m);
/// d_{lambda,R(lambda)}(1) = 1 and d_{lambda,mu} = 0 for mu strictly below R(lambda).
VerificationReport verify_regularisation(const GradedDecompMatrix& m);
/// For e = 2: if lambda_r >= r then every constituent column has length >= r.
VerificationReport verify_row_length(const GradedDecompMatrix& m);
/// Unitriangularity, off-diagonal entries in t N0[t], bar-invariant simple dims.
VerificationReport verify_shape(const GradedDecompMatrix& m);
/// The product of the two output tables reproduces the coloured character table.
VerificationReport verify_reconstruction(const GradedDecompMatrix& m);

}  // namespace heckekron
