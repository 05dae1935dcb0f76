#include "heckekron/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "heckekron/blocks.hpp"
#include "heckekron/characters.hpp"
#include "heckekron/errors.hpp"
#include "heckekron/qpoly.hpp"
#include "heckekron/tableaux.hpp"
#include "heckekron/twosep.hpp"

namespace heckekron {

AcceptanceContext::AcceptanceContext(int threads, MatrixProvider provider)
    : threads_(threads), provider_(std::move(provider)) {}

const GradedDecompMatrix& AcceptanceContext::matrix(const BlockId& block) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = matrices_[block];
  if (!slot)
    slot = std::make_unique<GradedDecompMatrix>(
        provider_ ? provider_(block) : llt_matrix(block, LltOptions{threads_}));
  return *slot;
}

namespace {

// Collects mismatches; "known" ones are values printed differently in the
// literature whose computed value is confirmed by an independent route.
struct Check {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> known;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
  void known_mismatch(const std::string& what) {
    ++checked;
    known.push_back(what);
  }
};

using Monomial = std::pair<int, int>;  // (coefficient, exponent); coefficient 0 is a blank cell

LaurentPoly mono(Monomial m) { return tpow(m.second) * LaurentPoly(m.first); }

const std::vector<Partition>& n6_rows() {
  static const std::vector<Partition> rows{{6},       {5, 1},       {4, 2},          {4, 1, 1},
                                           {3, 3},    {2, 2, 2},    {3, 1, 1, 1},    {2, 2, 1, 1},
                                           {2, 1, 1, 1, 1},         {1, 1, 1, 1, 1, 1}};
  return rows;
}

const std::vector<Partition>& n6_cols() {
  static const std::vector<Partition> cols{{6}, {5, 1}, {4, 2}};
  return cols;
}

BlockId n6_principal() { return BlockId{2, Partition{}, 3}; }

// ---------------------------------------------------------------------------

void a1(AcceptanceContext& ctx, Check& c) {
  const std::vector<std::vector<Monomial>> d = {
      {{1, 0}, {0, 0}, {0, 0}}, {{1, 1}, {1, 0}, {0, 0}}, {{0, 0}, {1, 1}, {1, 0}},
      {{1, 1}, {1, 2}, {1, 1}}, {{0, 0}, {0, 0}, {1, 1}}, {{0, 0}, {0, 0}, {1, 2}},
      {{1, 2}, {1, 1}, {1, 2}}, {{0, 0}, {1, 2}, {1, 3}}, {{1, 2}, {1, 3}, {0, 0}},
      {{1, 3}, {0, 0}, {0, 0}}};
  const auto& m = ctx.matrix(n6_principal());
  c.expect(m.rows.size() == 10 && m.cols == n6_cols(), "block shape");
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t j = 0; j < 3; ++j) {
      const auto got = m.entry(n6_rows()[r], n6_cols()[j]);
      c.expect(got == mono(d[r][j]), "d" + n6_rows()[r].str() + n6_cols()[j].str() + " = " +
                                         got.str());
    }
  // Simple weight-space dimensions, column label then simple label.
  const std::map<std::pair<int, int>, int> dims = {{{0, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 1}, {{2, 2}, 1}};
  for (int col = 0; col < 3; ++col)
    for (int row = 0; row < 3; ++row) {
      auto it = dims.find({col, row});
      const LaurentPoly want = it == dims.end() ? LaurentPoly() : LaurentPoly(it->second);
      const auto got = m.simple_dim(n6_cols()[col], n6_cols()[row]);
      c.expect(got == want, "simple dim " + n6_cols()[col].str() + n6_cols()[row].str() + " = " +
                                got.str());
    }
}

void a2(AcceptanceContext& ctx, Check& c) {
  const std::vector<std::vector<Monomial>> printed = {
      {{1, 0}, {0, 0}, {0, 0}}, {{1, 1}, {1, 0}, {0, 0}}, {{1, 0}, {1, 1}, {1, 0}},
      {{2, 1}, {1, 2}, {1, 1}}, {{0, 0}, {0, 0}, {1, 1}}, {{0, 0}, {0, 0}, {1, 2}},
      {{2, 2}, {1, 1}, {1, 2}}, {{1, 3}, {1, 2}, {1, 3}}, {{1, 2}, {1, 3}, {0, 0}},
      {{1, 3}, {0, 0}, {0, 0}}};
  // Two blanks in the printed table contradict the printed product of the
  // decomposition matrix with the simple dimensions, which gives t and t^2.
  const std::map<std::pair<Partition, Partition>, LaurentPoly> misprints = {
      {{Partition{3, 3}, Partition{6}}, tpow(1)}, {{Partition{2, 2, 2}, Partition{6}}, tpow(2)}};
  const auto& m = ctx.matrix(n6_principal());
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t j = 0; j < 3; ++j) {
      const Partition& lam = n6_rows()[r];
      const Partition& mu = n6_cols()[j];
      const LaurentPoly got = cstd_character(lam, mu, 2);
      const std::string cell = "CStd(" + lam.str() + "," + mu.str() + ")";
      // The DP and the listing agree on every cell, including the blanks.
      LaurentPoly listed;
      for (const auto& s : enumerate_cstd(lam, mu, 2)) listed += tpow(degree_cstd(s));
      c.expect(listed == got, cell + " listing " + listed.str() + " vs " + got.str());
      // The product d * D reproduces every cell.
      LaurentPoly product;
      for (std::size_t k = 0; k < 3; ++k)
        product += m.entry(lam, n6_cols()[k]) * m.simple_dim(mu, n6_cols()[k]);
      c.expect(product == got, cell + " product " + product.str() + " vs " + got.str());

      const LaurentPoly want = mono(printed[r][j]);
      if (got == want) {
        c.expect(true, cell);
      } else if (auto it = misprints.find({lam, mu}); it != misprints.end() && it->second == got) {
        c.known_mismatch(cell + " = " + got.str() + ", printed blank");
      } else {
        c.expect(false, cell + " = " + got.str() + ", printed " + want.str());
      }
    }
}

void a3(AcceptanceContext& ctx, Check& c) {
  std::size_t separated = 0;
  for (int n = 0; n <= 18; ++n)
    for (const auto& [block, members] : block_members(n, 2)) {
      std::vector<std::optional<TwoSeparated>> found;
      for (const auto& p : members) found.push_back(detect_two_separated(p));
      if (std::none_of(found.begin(), found.end(), [](const auto& f) { return f.has_value(); }))
        continue;
      const auto& m = ctx.matrix(block);
      for (const auto& ts : found) {
        if (!ts) continue;
        ++separated;
        c.expect(theorem_a_row(*ts) == m.row_entries(ts->whole), "row " + ts->str());
      }
    }
  c.notes.push_back(std::to_string(separated) + " 2-separated rows");
}

void a4(AcceptanceContext& ctx, Check& c) {
  for (auto [k, count] : {std::pair{4, 42}, std::pair{5, 176}}) {
    const auto g = saxl_brute(k, SaxlBudget{}, ctx.threads());
    c.expect(g.size() == static_cast<std::size_t>(count), "k=" + std::to_string(k) + " label count");
    for (const auto& [lam, value] : g)
      c.expect(value > 0, "g(rho,rho," + lam.str() + ") = " + value.str());
  }
}

void a5(AcceptanceContext& ctx, Check& c) {
  for (int k = 3; k <= 5; ++k) {
    const int n = k * (k + 1) / 2;
    auto table = character_table(n, ctx.threads());
    const int rho = table->index(staircase(k));
    const BigInt g = table->kronecker(rho, rho, table->index(Partition{n - 1, 1}));
    c.expect(g == k - 1, "k=" + std::to_string(k) + ": g = " + g.str());
  }
}

void a6(AcceptanceContext&, Check& c) {
  struct Totals {
    std::size_t enumerated = 0, direct = 0, odd = 0;
    BigInt k0_sum = 0;
    std::vector<std::size_t> per_block;
  };
  auto survey = [&](int n) {
    Totals t;
    for (const auto& [block, members] : block_members(n, 2)) {
      const auto labels = enumerate_height0(block);
      std::set<Partition> en(labels.begin(), labels.end());
      std::set<Partition> direct;
      for (const auto& p : members) {
        const HeightProfile h = height(p);
        if (h.height == 0) direct.insert(p);
        if (h.dim2adic == 0) ++t.odd;
      }
      c.expect(en == direct, "n=" + std::to_string(n) + " block " + block.core.str() +
                                 ": enumeration differs from the hook-valuation count");
      c.expect(BigInt(labels.size()) == k0(block),
               "n=" + std::to_string(n) + " block " + block.core.str() + ": k0 mismatch");
      t.enumerated += labels.size();
      t.direct += direct.size();
      t.k0_sum += k0(block);
      t.per_block.push_back(labels.size());
    }
    return t;
  };

  const Totals t36 = survey(36);
  c.expect(t36.enumerated == 1417, "n=36 total " + std::to_string(t36.enumerated));
  c.expect(t36.per_block == std::vector<std::size_t>{128, 1024, 256, 8, 1}, "n=36 per-block counts");
  c.expect(t36.odd == 128, "n=36 odd degree count " + std::to_string(t36.odd));

  const Totals t28 = survey(28);
  const bool consistent = t28.enumerated == t28.direct && BigInt(t28.enumerated) == t28.k0_sum;
  if (t28.enumerated == 672) {
    c.expect(true, "n=28 total");
  } else if (t28.enumerated == 673 && consistent) {
    c.known_mismatch("n=28 total 673, printed 672 (k0 product, enumeration and hook-valuation count agree)");
  } else {
    c.expect(false, "n=28 total " + std::to_string(t28.enumerated));
  }
}

void a7(AcceptanceContext& ctx, Check& c) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& [block, members] : block_members(n, 2)) {
      auto report = verify_regularisation(ctx.matrix(block));
      c.checked += report.checked;
      for (auto& f : report.failures) c.failures.push_back(f);
    }
}

void a8(AcceptanceContext&, Check& c) {
  const std::map<int, TableauRows> worked = {
      {2, {{2, 3, 4, 5, 6}, {3, 4, 5, 8}, {6, 7}, {7}}},
      {3, {{2, 3, 4, 5, 6, 7, 8}, {3, 4, 5, 6, 7, 10}, {4, 5, 6, 9}, {7, 8, 9}, {8}}},
      {4, {{2, 3, 4, 5, 6, 7, 8, 9, 10}, {3, 4, 5, 6, 7, 8, 9, 12}, {4, 5, 6, 7, 8, 11},
           {5, 6, 7, 10, 11}, {8, 9, 10}, {9}}}};
  for (int k = 2; k <= 4; ++k) {
    const auto f = exceptional_families(k);
    const std::string tag = "k=" + std::to_string(k) + ": ";
    c.expect(f.cstd_count == 2, tag + "|CStd(alpha,alpha^C)| = " + std::to_string(f.cstd_count));
    c.expect(2 * f.reg_degree == f.alpha_weight,
             tag + "regular degree " + std::to_string(f.reg_degree) + ", weight " +
                 std::to_string(f.alpha_weight));
    c.expect(f.hardtab_degree == 0, tag + "hardtab degree " + std::to_string(f.hardtab_degree));
    c.expect(hardtab_tableau(k).rows == worked.at(k), tag + "hardtab tableau differs from the worked example");
  }
  for (int k = 1; k <= 5; k += 2)
    c.expect(signature_and_conormal(alpha_family(k), 1, 2).triangle == beta_family(k),
             "alpha_" + std::to_string(k) + " with all addable 1-nodes");
  const auto s = signature_and_conormal(alpha_c_family(5), 1, 2);
  c.expect(s.reduced == "++", "reduced signature " + s.reduced);
  c.expect(s.conormal == std::vector<Node>{{5, 6}, {6, 1}}, "conormal nodes");
  c.expect(s.black_triangle == beta_c_family(5), "conormal closure " + s.black_triangle.str());
}

void a9(AcceptanceContext& ctx, Check& c) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& mu : partitions_of(n)) {
      if (!is_e_regular(mu, 2)) continue;
      const LaurentPoly lad = quantum_factorial(ladder_composition(mu, 2));
      const auto residues = ladder_tableau(mu, 2).residues;
      for (const auto& lam : partitions_of(n)) {
        const std::string tag = "(" + lam.str() + "," + mu.str() + ")";
        LaurentPoly colour_sum;
        LaurentPoly orbit_sum;
        for (const auto& s : enumerate_cstd(lam, mu, 2)) {
          const int deg = degree_cstd(s);
          colour_sum += tpow(deg);
          LaurentPoly orbit;
          for (const auto& t : orbit_of_cstd(s)) {
            c.expect(residue_sequence(t, 2) == residues, tag + " orbit residue sequence");
            orbit += tpow(degree_std(t, 2));
          }
          c.expect(orbit == tpow(deg) * lad, tag + " orbit of one coloured tableau");
          orbit_sum += orbit;
        }
        c.expect(colour_sum == cstd_character(lam, mu, 2), tag + " coloured character");
        c.expect(orbit_sum == filtered_standard_gf(lam, residues, 2), tag + " weight space");
      }
    }
    for (const auto& [block, members] : block_members(n, 2)) {
      auto report = verify_cstd_bound(ctx.matrix(block));
      c.checked += report.checked;
      for (auto& f : report.failures) c.failures.push_back(f);
    }
  }
}

void a10(AcceptanceContext&, Check& c) {
  std::size_t points = 0, printed_misses = 0;
  for (int n = 0; n <= 16; ++n)
    for (const auto& p : partitions_of(n)) {
      const auto ts = detect_two_separated(p);
      if (!ts) continue;
      const Partition rho = staircase(ts->k);
      for (const auto& alpha : partitions_of(ts->weight())) {
        if (alpha.length() > ts->k + 1) continue;
        const auto top = build_two_separated(ts->k, alpha, Partition{});
        const auto residues = ladder_tableau(top.whole, 2).residues;
        const std::string tag = ts->str() + " at " + alpha.str();

        const LaurentPoly whole = filtered_standard_gf(ts->whole, residues, 2);
        const LaurentPoly got = graded_weightspace(*ts, alpha);
        c.expect(got == whole, tag + ": " + got.str() + " vs " + whole.str());

        const ResidueSequence tail(residues.begin() + rho.size(), residues.end());
        const LaurentPoly skew = filtered_skew_gf(ts->whole, rho, tail, 2);
        const LaurentPoly formula = skew_weightspace(*ts, alpha);
        c.expect(formula == skew, tag + " beyond rho: " + formula.str() + " vs " + skew.str());

        // The expression as printed: 2-dilated factorials and no rho factor.
        const Partition alpha_t = conjugate(alpha);
        const LaurentPoly dil = dilated_quantum_factorial(alpha_t.parts());
        const LaurentPoly printed =
            (dil * dil).shifted(ts->mu.size()) *
            LaurentPoly::monomial(0, count_sstd({conjugate(ts->lam), ts->mu}, alpha_t.parts()));
        if (printed != whole) ++printed_misses;
        ++points;
      }
    }
  if (printed_misses > 0)
    c.known_mismatch("the printed expression (dilated factorials, no [Lad(rho(k))]! factor) differs "
                     "from the enumeration at " + std::to_string(printed_misses) + " of " +
                     std::to_string(points) + " points; with ordinary factorials and that factor "
                     "it matches at all of them");
}

Partition random_partition(std::mt19937_64& rng, int max_n) {
  const int n = std::uniform_int_distribution<int>(0, max_n)(rng);
  std::vector<int> parts;
  for (int left = n; left > 0;) {
    const int part = std::uniform_int_distribution<int>(1, left)(rng);
    parts.push_back(part);
    left -= part;
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

void a11(AcceptanceContext&, Check& c) {
  std::mt19937_64 rng(20261014);

  // Bar splitting of b + p, with b bar-invariant and p in t N0[t].
  for (int trial = 0; trial < 10000; ++trial) {
    LaurentPoly b, p;
    std::uniform_int_distribution<int> coeff(0, 9), width(0, 6), top(0, 8);
    for (int k = -width(rng); k <= 0; ++k) {
      const int v = coeff(rng);
      b += (k == 0 ? LaurentPoly(v) : (tpow(k) + tpow(-k)) * LaurentPoly(v));
    }
    for (int k = 1; k <= top(rng); ++k) p += tpow(k) * LaurentPoly(coeff(rng));
    const BarSplit s = bar_split(b + p);
    c.expect(s.bar_invariant == b && s.positive == p && s.bar_invariant + s.positive == b + p,
             "bar split of " + (b + p).str());
  }

  // Column orthogonality.
  for (int n = 0; n <= 8; ++n) {
    const auto labels = partitions_of(n);
    for (const auto& a : labels)
      for (const auto& b : labels) {
        BigInt sum = 0;
        for (const auto& lam : labels) sum += character_value(lam, a) * character_value(lam, b);
        c.expect(sum == (a == b ? centralizer_order(a) : BigInt(0)),
                 "orthogonality at " + a.str() + "," + b.str());
      }
  }

  // LR coefficients against restriction of characters to S_a x S_b.
  auto join = [](const Partition& x, const Partition& y) {
    std::vector<int> parts = x.parts();
    parts.insert(parts.end(), y.parts().begin(), y.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
  };
  for (int n = 0; n <= 8; ++n)
    for (const auto& outer : partitions_of(n))
      for (int a = 0; a <= n; ++a)
        for (const auto& x : partitions_of(a))
          for (const auto& y : partitions_of(n - a)) {
            BigInt num = 0;
            for (const auto& al : partitions_of(a))
              for (const auto& be : partitions_of(n - a))
                num += character_value(x, al) * character_value(y, be) *
                       character_value(outer, join(al, be)) * factorial(a) * factorial(n - a) /
                       (centralizer_order(al) * centralizer_order(be));
            const BigInt denom = factorial(a) * factorial(n - a);
            c.expect(num % denom == 0 && num / denom == lr_coefficient(outer, x, y),
                     "c^" + outer.str() + "_" + x.str() + "," + y.str());
          }

  // Cores do not depend on the order in which rim hooks are removed.
  for (int trial = 0; trial < 1000; ++trial) {
    const Partition p = random_partition(rng, 40);
    const int e = std::uniform_int_distribution<int>(2, 4)(rng);
    Partition q = p;
    int steps = 0;
    for (;;) {
      const auto hooks = removable_rim_hooks(q, e);
      if (hooks.empty()) break;
      q = hooks[std::uniform_int_distribution<std::size_t>(0, hooks.size() - 1)(rng)].result;
      ++steps;
    }
    const CoreWeight cw = e_core_and_weight(p, e);
    c.expect(q == cw.core && steps == cw.weight,
             "core of " + p.str() + " at e=" + std::to_string(e));
  }
}

void a12(AcceptanceContext&, Check& c) {
  const FramedCounts counts = count_framed_staircases(45);
  c.expect(counts.proper_up_to_conjugation == 35,
           "framed staircases up to conjugation: " + std::to_string(counts.proper_up_to_conjugation));
  c.notes.push_back(std::to_string(counts.raw) + " raw, " + std::to_string(counts.up_to_conjugation) +
                    " up to conjugation with degenerate frames");
  for (const auto& ts : framed_staircases(45)) {
    const int w = ts.weight();
    const auto top = build_two_separated(ts.k, w == 0 ? Partition{} : Partition{w}, Partition{});
    c.expect(carter_criterion(top.whole), top.str() + " fails Carter's criterion");
    const auto row = theorem_a_row(ts);
    auto it = row.find(top.whole);
    c.expect(it != row.end() && it->second.at_one() >= 1,
             ts.str() + " has no entry in column " + top.whole.str());
  }
}

struct Entry {
  const char* title;
  void (*run)(AcceptanceContext&, Check&);
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> r = {
      {"A1", {"n=6 principal block decomposition matrix", a1}},
      {"A2", {"n=6 coloured tableau character table", a2}},
      {"A3", {"2-separated rows against the LLT matrix, n <= 18", a3}},
      {"A4", {"Saxl square positivity by brute force, k = 4, 5", a4}},
      {"A5", {"g(rho,rho,(n-1,1)) = k-1, k = 3, 4, 5", a5}},
      {"A6", {"height zero counts at n = 28, 36", a6}},
      {"A7", {"regularisation column, n <= 12", a7}},
      {"A8", {"exceptional families alpha_k, beta_k", a8}},
      {"A9", {"weight space double count and degree bound, n <= 10", a9}},
      {"A10", {"2-separated weight spaces, n <= 16", a10}},
      {"A11", {"property suites", a11}},
      {"A12", {"framed staircases of 45", a12}},
  };
  return r;
}

}  // namespace

std::vector<std::string> acceptance_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 12; ++i) ids.push_back("A" + std::to_string(i));
  return ids;
}

CriterionResult run_criterion(const std::string& id, AcceptanceContext& ctx) {
  auto it = registry().find(id);
  if (it == registry().end()) throw DomainError("unknown acceptance criterion '" + id + "'");
  CriterionResult result;
  result.id = id;
  result.title = it->second.title;
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second.run(ctx, check);
  } catch (const std::exception& ex) {
    check.failures.push_back(std::string("exception: ") + ex.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = check.failures.empty() && check.known.empty();
  result.known_discrepancy = check.failures.empty() && !check.known.empty();

  std::ostringstream detail;
  detail << check.checked << " checks";
  for (const auto& n : check.notes) detail << "; " << n;
  if (!check.failures.empty()) {
    detail << "; " << check.failures.size() << " failed: " << check.failures.front();
    if (check.failures.size() > 1) detail << " (+" << check.failures.size() - 1 << " more)";
  }
  for (const auto& k : check.known) detail << "; known discrepancy: " << k;
  result.detail = detail.str();
  return result;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << r.id << (r.passed ? " PASS " : " FAIL ") << r.title << " [" << r.detail << "] ("
      << static_cast<long long>(r.seconds * 1000) << " ms)";
  return out.str();
}

bool acceptable(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const auto& r) { return r.passed || r.known_discrepancy; });
}

}  // namespace heckekron
