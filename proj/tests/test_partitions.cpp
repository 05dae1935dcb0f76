#include <random>
#include <set>

#include "doctest.h"
#include "heckekron/errors.hpp"
#include "heckekron/partitions.hpp"

using namespace heckekron;

namespace {

std::set<Node> diagram(const Partition& p) {
  std::set<Node> out;
  for (int r = 1; r <= p.length(); ++r)
    for (int c = 1; c <= p.row(r); ++c) out.insert({r, c});
  return out;
}

// Skew q/p is a rim hook: contained, edge-connected, no 2x2 square.
bool is_rim_hook(const Partition& q, const Partition& p) {
  auto big = diagram(q), small = diagram(p);
  for (auto x : small)
    if (!big.count(x)) return false;
  std::set<Node> skew;
  for (auto x : big)
    if (!small.count(x)) skew.insert(x);
  if (skew.empty()) return false;
  for (auto x : skew)
    if (skew.count({x.row + 1, x.col}) && skew.count({x.row, x.col + 1}) &&
        skew.count({x.row + 1, x.col + 1}))
      return false;
  std::set<Node> seen{*skew.begin()};
  std::vector<Node> stack{*skew.begin()};
  while (!stack.empty()) {
    Node x = stack.back();
    stack.pop_back();
    for (Node y : {Node{x.row + 1, x.col}, Node{x.row - 1, x.col},
                   Node{x.row, x.col + 1}, Node{x.row, x.col - 1}})
      if (skew.count(y) && seen.insert(y).second) stack.push_back(y);
  }
  return seen.size() == skew.size();
}

// Lex-largest partition with the same number of nodes on every ladder.
Partition regularize_oracle(const Partition& p, int e) {
  for (const auto& q : partitions_of(p.size()))
    if (ladder_counts(q, e) == ladder_counts(p, e)) return q;
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("conjugate") {
  CHECK(conjugate({3, 1, 1}) == Partition{3, 1, 1});
  CHECK(conjugate({4, 2}) == Partition{2, 2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      std::set<Node> transposed;
      for (auto x : diagram(p)) transposed.insert({x.col, x.row});
      CHECK(diagram(conjugate(p)) == transposed);
    }
}

TEST_CASE("partition construction and parsing") {
  CHECK(Partition({3, 1, 0, 0}) == Partition{3, 1});
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK(parse_partition("[9,8,5,3,3,2,1,1,1,1,1]").size() == 35);
  CHECK(parse_partition(" [ 2 , 1 ] ") == Partition{2, 1});
  CHECK(parse_partition("[]").empty());
  CHECK_THROWS_AS(parse_partition("[2,x]"), DomainError);
  CHECK_THROWS_AS(parse_partition("2,1"), DomainError);
  CHECK_THROWS_AS(parse_partition("[1,2]"), DomainError);
  try {
    parse_partition("[3,abc]");
  } catch (const DomainError& err) {
    CHECK(std::string(err.what()).find("abc") != std::string::npos);
  }
  CHECK(Partition({4, 2}).str() == "[4,2]");
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_of(15).size() == 176);
  CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("dominance") {
  CHECK(dominates({6}, {5, 1}));
  CHECK_FALSE(dominates({3, 3}, {4, 1, 1}));
  CHECK_FALSE(dominates({4, 1, 1}, {3, 3}));
  CHECK_FALSE(comparable({3, 3}, {4, 1, 1}));
  CHECK(dominates({7}, {1, 1, 1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(dominates({2}, {1}), DomainError);
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions_of(n))
      for (const auto& q : partitions_of(n))
        CHECK(dominates(p, q) == dominates(conjugate(q), conjugate(p)));
}

TEST_CASE("ladders and residues") {
  auto a = ladder_and_residue({1, 1}, 2);
  CHECK(a.ladder == 2);
  CHECK(a.residue == 0);
  auto b = ladder_and_residue({2, 3}, 2);
  CHECK(b.ladder == 5);
  CHECK(b.residue == 1);
  auto c = ladder_and_residue({1, 1}, 3);
  CHECK(c.ladder == 3);
  CHECK(c.residue == 0);
  CHECK(ladder_composition({6}, 2) == Composition{0, 1, 1, 1, 1, 1, 1});
  CHECK(ladder_composition({5, 1}, 2) == Composition{0, 1, 2, 1, 1, 1});
  CHECK(ladder_composition({4, 2}, 2) == Composition{0, 1, 2, 2, 1});
  CHECK_THROWS_AS(ladder_composition({2, 2}, 2), DomainError);
}

TEST_CASE("rim hooks") {
  Partition big{9, 8, 5, 3, 3, 2, 1, 1, 1, 1, 1};
  CHECK(removable_rim_hooks(big, 2).size() == 4);
  for (int k = 0; k <= 6; ++k) CHECK(removable_rim_hooks(staircase(k), 2).empty());
  auto two = removable_rim_hooks({2}, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].result.empty());

  CHECK(addable_rim_hooks({}, 2) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(addable_rim_hooks({1}, 2) == std::vector<Partition>{{3}, {1, 1, 1}});

  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n))
      for (int h = 1; h <= 5; ++h) {
        std::vector<Partition> brute;
        for (const auto& q : partitions_of(n + h))
          if (is_rim_hook(q, p)) brute.push_back(q);
        CHECK(addable_rim_hooks(p, h) == brute);
        for (const auto& q : addable_rim_hooks(p, h)) {
          bool found = false;
          for (const auto& removal : removable_rim_hooks(q, h))
            found = found || removal.result == p;
          CHECK(found);
        }
        for (const auto& removal : removable_rim_hooks(p, h)) {
          CHECK(removal.result.size() == n - h);
          CHECK(is_rim_hook(p, removal.result));
          CHECK(hook_length(p, removal.node) == h);
        }
      }
}

TEST_CASE("cores and weights") {
  auto cw = e_core_and_weight({9, 8, 5, 3, 3, 2, 1, 1, 1, 1, 1}, 2);
  CHECK(cw.core == staircase(5));
  CHECK(cw.weight == 10);
  for (int k = 0; k <= 6; ++k) {
    auto s = e_core_and_weight(staircase(k), 2);
    CHECK(s.core == staircase(k));
    CHECK(s.weight == 0);
  }
  auto six = e_core_and_weight({6}, 2);
  CHECK(six.core.empty());
  CHECK(six.weight == 3);

  // Removing hooks in random order always lands on the same core.
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 20);
    auto all = partitions_of(n);
    Partition p = all[rng() % all.size()];
    int e = 2 + static_cast<int>(rng() % 3);
    Partition q = p;
    int removed = 0;
    while (true) {
      auto hooks = removable_rim_hooks(q, e);
      if (hooks.empty()) break;
      q = hooks[rng() % hooks.size()].result;
      ++removed;
    }
    auto expected = e_core_and_weight(p, e);
    CHECK(q == expected.core);
    CHECK(removed == expected.weight);
    if (e == 2) CHECK(staircase_index(q).has_value());
  }
}

TEST_CASE("regularisation") {
  CHECK(regularize({1, 1, 1}, 2) == Partition{3});
  CHECK(regularize({5, 1}, 2) == Partition{5, 1});
  CHECK(regularize({2, 2, 2}, 2) == Partition{4, 2});
  for (int e = 2; e <= 4; ++e)
    for (int n = 0; n <= 12; ++n)
      for (const auto& p : partitions_of(n)) {
        Partition r = regularize(p, e);
        CHECK(is_e_regular(r, e));
        CHECK(ladder_counts(r, e) == ladder_counts(p, e));
        CHECK(regularize(r, e) == r);
        CHECK(r == regularize_oracle(p, e));
        if (is_e_regular(p, e)) CHECK(r == p);
      }
}

TEST_CASE("e-regularity") {
  CHECK_FALSE(is_e_regular({2, 2}, 2));
  CHECK(is_e_regular({4, 2}, 2));
  CHECK_FALSE(is_e_regular({3, 3, 3}, 3));
  CHECK(is_e_regular({3, 3}, 3));
}

TEST_CASE("blocks") {
  for (int n = 0; n <= 14; ++n)
    for (const auto& p : partitions_of(n)) {
      BlockId b = block_of(p, 2);
      REQUIRE(b.core_index().has_value());
      int k = *b.core_index();
      CHECK(b.weight * 2 == n - k * (k + 1) / 2);
      CHECK(b.n() == n);
    }
  CHECK(binary_digit_sum(18) == 2);
  CHECK(binary_digit_sum(0) == 0);
}
