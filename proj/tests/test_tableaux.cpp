#include <map>
#include <set>

#include "doctest.h"
#include "heckekron/errors.hpp"
#include "heckekron/tableaux.hpp"

using namespace heckekron;

namespace {

// Every filling of the diagram by the multiset of weight letters, tested for
// semistandardness directly.
BigInt brute_sstd(const Partition& shape, const Composition& weight) {
  std::vector<int> letters;
  for (std::size_t j = 0; j < weight.size(); ++j)
    letters.insert(letters.end(), weight[j], static_cast<int>(j) + 1);
  if (static_cast<int>(letters.size()) != shape.size()) return 0;
  BigInt count = 0;
  do {
    std::size_t pos = 0;
    TableauRows rows(shape.length());
    for (int r = 0; r < shape.length(); ++r)
      for (int c = 0; c < shape.row(r + 1); ++c) rows[r].push_back(letters[pos++]);
    bool ok = true;
    for (int r = 0; r < shape.length() && ok; ++r)
      for (int c = 0; c < shape.row(r + 1) && ok; ++c) {
        if (c > 0 && rows[r][c - 1] > rows[r][c]) ok = false;
        if (r > 0 && rows[r - 1][c] >= rows[r][c]) ok = false;
      }
    if (ok) ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return count;
}

LaurentPoly gf_of(const std::vector<ColouredTableau>& ts) {
  LaurentPoly f;
  for (const auto& s : ts) f += tpow(degree_cstd(s));
  return f;
}

}  // namespace

TEST_CASE("standard tableaux") {
  CHECK(enumerate_standard({2, 1}).size() == 2);
  CHECK(enumerate_standard({5}).size() == 1);
  CHECK(enumerate_standard({4, 1, 1}).size() == 10);
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) {
      auto all = enumerate_standard(p);
      CHECK(BigInt(all.size()) == count_standard(p));
      std::set<TableauRows> distinct;
      for (const auto& t : all) distinct.insert(t.rows);
      CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("residue sequences and standard degrees") {
  StandardTableau column{{{1}, {2}, {3}}};
  StandardTableau row{{{1, 2, 3}}};
  CHECK(residue_sequence(column, 2) == ResidueSequence{0, 1, 0});
  CHECK(residue_sequence(row, 2) == ResidueSequence{0, 1, 0});
  CHECK(degree_std(row, 2) == 0);
  CHECK(residue_sequence(StandardTableau{{{1, 2, 3, 4}}}, 7) ==
        ResidueSequence{0, 6, 5, 4});

  LaurentPoly gf;
  int matching = 0;
  for_each_standard({4, 1, 1}, [&](const StandardTableau& t) {
    if (residue_sequence(t, 2) == ResidueSequence{0, 1, 1, 0, 0, 1}) {
      ++matching;
      gf += tpow(degree_std(t, 2));
    }
  });
  CHECK(matching == 4);
  CHECK(ladder_tableau({4, 2}, 2).residues == ResidueSequence{0, 1, 1, 0, 0, 1});
  CHECK(gf == tpow(3) + tpow(1) * 2 + tpow(-1));
  CHECK(filtered_standard_gf({4, 1, 1}, {0, 1, 1, 0, 0, 1}, 2) == gf);

  for (int k = 1; k <= 5; ++k) {
    auto lad = ladder_tableau(staircase(k), 2);
    CHECK(degree_cstd(lad.tableau) == 0);
    LaurentPoly orbit_gf;
    for (const auto& t : orbit_of_cstd(lad.tableau)) orbit_gf += tpow(degree_std(t, 2));
    CHECK(orbit_gf == quantum_factorial(ladder_composition(staircase(k), 2)));
  }
}

TEST_CASE("coloured tableaux of the principal block of n=6") {
  CHECK(enumerate_cstd({4, 1, 1}, {4, 2}, 2).size() == 1);
  CHECK(enumerate_cstd({4, 1, 1}, {6}, 2).size() == 2);
  // The filling 234/567 is coloured semistandard, so this set is not empty.
  auto square = enumerate_cstd({3, 3}, {6}, 2);
  REQUIRE(square.size() == 1);
  CHECK(square[0].rows == TableauRows{{2, 3, 4}, {5, 6, 7}});
  CHECK(enumerate_cstd({3, 3}, {5, 1}, 2).empty());
  CHECK_THROWS_AS(enumerate_cstd({3, 3}, {2, 2, 1, 1}, 2), DomainError);

  auto unique = enumerate_cstd({4, 1, 1}, {4, 2}, 2);
  CHECK(degree_cstd(unique[0]) == 1);
  auto orbit = orbit_of_cstd(unique[0]);
  CHECK(orbit.size() == 4);
  for (const auto& t : orbit)
    CHECK(residue_sequence(t, 2) == ladder_tableau({4, 2}, 2).residues);

  for (const Partition mu : {Partition{6}, Partition{5, 1}, Partition{4, 2}}) {
    auto lad = ladder_tableau(mu, 2);
    auto self = enumerate_cstd(mu, mu, 2);
    REQUIRE(self.size() == 1);
    CHECK(self[0] == lad.tableau);
    CHECK(degree_cstd(self[0]) == 0);
  }
  CHECK(ladder_tableau({6}, 2).residues == ResidueSequence{0, 1, 0, 1, 0, 1});
  CHECK(gf_of(enumerate_cstd({4, 2}, {6}, 2)) == LaurentPoly(1));
}

TEST_CASE("coloured tableau orbits reproduce standard degrees") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& mu : partitions_of(n)) {
      if (!is_e_regular(mu, 2)) continue;
      auto lad = ladder_tableau(mu, 2);
      LaurentPoly fact = quantum_factorial(ladder_composition(mu, 2));
      BigInt orbit_size = fact.at_one();
      for (const auto& lam : partitions_of(n)) {
        auto tabs = enumerate_cstd(lam, mu, 2);
        CHECK(gf_of(tabs) == cstd_character(lam, mu, 2));
        for (const auto& s : tabs) {
          auto orbit = orbit_of_cstd(s);
          CHECK(BigInt(orbit.size()) == orbit_size);
          LaurentPoly orbit_gf;
          for (const auto& t : orbit) {
            CHECK(residue_sequence(t, 2) == lad.residues);
            orbit_gf += tpow(degree_std(t, 2));
          }
          CHECK(orbit_gf == fact.shifted(degree_cstd(s)));
        }
        if (block_of(lam, 2) != block_of(mu, 2)) CHECK(tabs.empty());
      }
    }
}

TEST_CASE("semistandard counts") {
  CHECK(count_sstd(Partition{1, 1, 1}, {1, 1, 1}) == 1);
  CHECK(count_sstd(Partition{2, 1}, {1, 1, 1}) == 2);
  CHECK(count_sstd(Partition{3}, {1, 1, 1}) == 1);
  CHECK(count_sstd(Partition{3}, {2, 2}) == 0);
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : partitions_of(n))
      for (const auto& w : partitions_of(n)) {
        CHECK(count_sstd(p, w.parts()) == brute_sstd(p, w.parts()));
        Composition shuffled = w.parts();
        std::reverse(shuffled.begin(), shuffled.end());
        shuffled.insert(shuffled.begin() + shuffled.size() / 2, 0);
        CHECK(count_sstd(p, shuffled) == brute_sstd(p, shuffled));
      }
  // A disjoint union counts fillings of both diagrams at once.
  CHECK(count_sstd(std::vector<Partition>{{1}, {1}}, {1, 1}) == 2);
  CHECK(count_sstd(std::vector<Partition>{{1, 1}, {1}}, {1, 1, 1}) == 3);
  CHECK(count_sstd(std::vector<Partition>{{2}, {}}, {1, 1}) == 1);
}
