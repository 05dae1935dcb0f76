#include "doctest.h"
#include "heckekron/errors.hpp"
#include "heckekron/llt.hpp"
#include "heckekron/tableaux.hpp"

using namespace heckekron;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

const BlockId& principal6() {
  static const BlockId b = block_of(P({6}), 2);
  return b;
}

}  // namespace

TEST_CASE("blocks of 6 and 1") {
  const auto blocks = block_members(6, 2);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].first.core.size() == 0);
  CHECK(blocks[0].first.weight == 3);
  CHECK(blocks[0].second.size() == 10);
  CHECK(blocks[1].second == std::vector<Partition>{P({3, 2, 1})});
  CHECK(block_members(1, 2).size() == 1);
  CHECK(block_members(1, 3).size() == 1);
}

TEST_CASE("blocks of 36 at e = 2") {
  const auto blocks = block_members(36, 2);
  REQUIRE(blocks.size() == 5);
  const std::vector<int> cores = {0, 3, 4, 7, 8};
  const std::vector<int> weights = {18, 15, 13, 4, 0};
  for (int i = 0; i < 5; ++i) {
    CHECK(blocks[i].first.core == staircase(cores[i]));
    CHECK(blocks[i].first.weight == weights[i]);
  }
}

TEST_CASE("principal block of 6") {
  const auto m = llt_matrix(principal6());
  const std::vector<Partition> rows = {P({6}), P({5, 1}), P({4, 2}), P({4, 1, 1}),
                                       P({3, 3}), P({2, 2, 2}), P({3, 1, 1, 1}),
                                       P({2, 2, 1, 1}), P({2, 1, 1, 1, 1}),
                                       P({1, 1, 1, 1, 1, 1})};
  const std::vector<LaurentPoly> col6 = {1, tpow(1), 0, tpow(1), 0, 0, tpow(2), 0, tpow(2), tpow(3)};
  REQUIRE(m.rows.size() == 10);
  REQUIRE(m.cols.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(m.entry(rows[i], P({6})) == col6[i]);

  for (const auto& row : rows) {
    const LaurentPoly expected = row == P({6}) || row == P({4, 2}) ? LaurentPoly(1) : LaurentPoly();
    CHECK(m.simple_dim(P({6}), row) == expected);
  }
  CHECK(m.entry(P({4, 2}), P({4, 2})) == 1);
  CHECK(m.entry(P({3, 3}), P({4, 2})) == tpow(1));
}

TEST_CASE("a core is its own block") {
  for (int k = 0; k <= 5; ++k) {
    const auto m = llt_matrix(block_of(staircase(k), 2));
    REQUIRE(m.rows.size() == 1);
    CHECK(m.entry(staircase(k), staircase(k)) == 1);
  }
}

TEST_CASE("verification reports are clean for n <= 12") {
  for (int e = 2; e <= 3; ++e)
    for (int n = 1; n <= (e == 2 ? 12 : 10); ++n)
      for (const auto& [block, members] : block_members(n, e)) {
        const auto m = llt_matrix(block);
        for (const auto& report :
             {verify_cstd_bound(m), verify_regularisation(m), verify_shape(m),
              verify_reconstruction(m)}) {
          INFO(report.name, " n=", n, " e=", e);
          CHECK(report.failures.empty());
        }
        if (e == 2) CHECK(verify_row_length(m).failures.empty());
      }
}

// Each coloured tableau stands for [Lad(mu)]! standard tableaux with the
// ladder residue sequence, so the coloured character times that factor is a
// count of ordinary standard tableaux.
TEST_CASE("coloured characters agree with filtered standard tableaux") {
  for (int e = 2; e <= 3; ++e)
    for (int n = 1; n <= 9; ++n)
      for (const auto& [block, members] : block_members(n, e)) {
        const auto m = llt_matrix(block);
        for (const auto& mu : m.cols) {
          const auto lad = ladder_tableau(mu, e);
          const auto factor = quantum_factorial(ladder_composition(mu, e));
          for (const auto& lam : m.rows) {
            const int r = m.row_index(lam), c = m.col_index(mu);
            const auto it = m.cstd.find({r, c});
            const LaurentPoly cs = it == m.cstd.end() ? LaurentPoly() : it->second;
            CHECK(cs * factor == filtered_standard_gf(lam, lad.residues, e));
          }
        }
      }
}

TEST_CASE("entries are positive and unitriangular") {
  for (int n = 1; n <= 10; ++n)
    for (const auto& [block, members] : block_members(n, 2)) {
      const auto m = llt_matrix(block);
      for (const auto& [idx, f] : m.d) {
        CHECK(f.has_nonnegative_coefficients());
        if (m.rows[idx.first] == m.cols[idx.second])
          CHECK(f == 1);
        else if (!f.is_zero())
          CHECK(f.min_exponent() >= 1);
      }
    }
}

TEST_CASE("result does not depend on the thread count") {
  const BlockId b = block_of(P({8, 1, 1}), 2);
  CHECK(llt_matrix(b, LltOptions{1}) == llt_matrix(b, LltOptions{4}));
}
