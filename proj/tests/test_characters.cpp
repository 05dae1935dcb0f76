#include <random>

#include "doctest.h"
#include "heckekron/characters.hpp"
#include "heckekron/errors.hpp"
#include "heckekron/tableaux.hpp"

using namespace heckekron;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

int fixed_points(const Partition& cycles) {
  int f = 0;
  for (int p : cycles.parts()) f += p == 1;
  return f;
}

// <Ind(chi^a x chi^b), chi^outer> summed over classes of the Young subgroup.
BigInt induction_product(const Partition& outer, const Partition& a, const Partition& b) {
  using boost::multiprecision::cpp_rational;
  cpp_rational total = 0;
  for (const auto& x : partitions_of(a.size()))
    for (const auto& y : partitions_of(b.size())) {
      const BigInt v = character_value(a, x) * character_value(b, y) *
                       character_value(outer, join(x, y));
      total += cpp_rational(v, centralizer_order(x) * centralizer_order(y));
    }
  REQUIRE(denominator(total) == 1);
  return numerator(total);
}

}  // namespace

TEST_CASE("trivial and sign characters") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& alpha : partitions_of(n)) {
      CHECK(character_value(P({n}), alpha) == 1);
      const int sign = (n - alpha.length()) % 2 ? -1 : 1;
      CHECK(character_value(conjugate(P({n})), alpha) == sign);
    }
}

TEST_CASE("the standard character is fixed points minus one") {
  CHECK(character_value(P({2, 1}), P({3})) == -1);
  for (int n = 2; n <= 9; ++n)
    for (const auto& alpha : partitions_of(n))
      CHECK(character_value(P({n - 1, 1}), alpha) == fixed_points(alpha) - 1);
}

TEST_CASE("column orthogonality for n <= 8") {
  using boost::multiprecision::cpp_rational;
  for (int n = 1; n <= 8; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& lam : parts)
      for (const auto& mu : parts) {
        cpp_rational s = 0;
        for (const auto& alpha : parts)
          s += cpp_rational(character_value(lam, alpha) * character_value(mu, alpha),
                            centralizer_order(alpha));
        CHECK(s == (lam == mu ? 1 : 0));
      }
  }
}

TEST_CASE("class sizes sum to n!") {
  for (int n = 1; n <= 10; ++n) {
    BigInt total = 0;
    for (const auto& alpha : partitions_of(n)) {
      total += class_size(alpha);
      CHECK(class_size(alpha) * centralizer_order(alpha) == factorial(n));
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("dimensions") {
  CHECK(dimension(P({5})) == 1);
  CHECK(dimension(P({2, 1})) == 2);
  CHECK(dimension(P({4, 1, 1})) == 10);
  for (int n = 1; n <= 10; ++n)
    for (const auto& lam : partitions_of(n)) {
      CHECK(dimension(lam) == count_standard(lam));
      CHECK(dimension(lam) == character_value(lam, Partition(std::vector<int>(n, 1))));
    }
}

TEST_CASE("kronecker coefficients") {
  CHECK(kronecker(staircase(2), staircase(2), P({2, 1})) == 1);
  CHECK(kronecker(staircase(4), staircase(4), staircase(4)) > 0);
  for (int n = 1; n <= 7; ++n)
    for (const auto& lam : partitions_of(n)) CHECK(kronecker(lam, lam, P({n})) == 1);
  CHECK_THROWS_AS(kronecker(P({2}), P({2}), P({3})), DomainError);
}

TEST_CASE("kronecker coefficients are symmetric") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto parts = partitions_of(n);
    auto pick = [&] { return parts[rng() % parts.size()]; };
    const auto a = pick(), b = pick(), c = pick();
    const BigInt g = kronecker(a, b, c);
    CHECK(g >= 0);
    CHECK(kronecker(b, a, c) == g);
    CHECK(kronecker(c, b, a) == g);
    CHECK(kronecker(a, c, b) == g);
  }
}

TEST_CASE("littlewood-richardson coefficients") {
  for (int m = 0; m <= 4; ++m)
    for (int l = 0; l <= 4; ++l)
      CHECK(lr_coefficient(conjugate(P({m + l})), conjugate(P({m})), conjugate(P({l}))) == 1);
  CHECK(lr_coefficient(P({3, 2, 1}), P({2, 1}), P({2, 1})) == 2);
  CHECK(lr_coefficient(P({3, 1}), P({3, 1}), P({})) == 1);
  CHECK(lr_coefficient(P({3, 1}), P({2}), P({1})) == 0);
}

TEST_CASE("littlewood-richardson coefficients match induced characters") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& outer : partitions_of(n))
      for (int a = 0; a <= n; ++a)
        for (const auto& x : partitions_of(a))
          for (const auto& y : partitions_of(n - a)) {
            const BigInt c = lr_coefficient(outer, x, y);
            CHECK(c == lr_coefficient(outer, y, x));
            CHECK(c == induction_product(outer, x, y));
          }
}

TEST_CASE("staircase squares by brute force") {
  const auto g2 = saxl_brute(2);
  CHECK(g2 == std::map<Partition, BigInt>{{P({3}), 1}, {P({2, 1}), 1}, {P({1, 1, 1}), 1}});
  const auto g4 = saxl_brute(4);
  CHECK(g4.size() == 42);
  for (const auto& [lam, g] : g4) CHECK(g > 0);
  for (int k = 3; k <= 5; ++k) {
    const int n = k * (k + 1) / 2;
    CHECK(saxl_brute(k).at(P({n - 1, 1})) == k - 1);
  }
  CHECK_THROWS_AS(saxl_brute(7), BudgetExceeded);
  CHECK_THROWS_AS(saxl_brute(7, SaxlBudget{7}), BudgetExceeded);
}

TEST_CASE("character tables above the size limit are refused") {
  CHECK_THROWS_AS(character_table(CharacterTable::kMaxN + 1), BudgetExceeded);
}
