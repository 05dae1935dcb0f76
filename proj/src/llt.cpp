#include "heckekron/llt.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "heckekron/errors.hpp"
#include "heckekron/tableaux.hpp"

namespace heckekron {

namespace {

LaurentPoly lookup(const std::map<GradedDecompMatrix::Index, LaurentPoly>& table,
                   int a, int b) {
  auto it = table.find({a, b});
  return it == table.end() ? LaurentPoly() : it->second;
}

}  // namespace

int GradedDecompMatrix::row_index(const Partition& p) const {
  // rows are sorted descending
  auto it = std::lower_bound(rows.begin(), rows.end(), p,
                             [](const Partition& a, const Partition& b) { return a > b; });
  return it != rows.end() && *it == p ? static_cast<int>(it - rows.begin()) : -1;
}

int GradedDecompMatrix::col_index(const Partition& p) const {
  auto it = std::lower_bound(cols.begin(), cols.end(), p,
                             [](const Partition& a, const Partition& b) { return a > b; });
  return it != cols.end() && *it == p ? static_cast<int>(it - cols.begin()) : -1;
}

LaurentPoly GradedDecompMatrix::entry(const Partition& row, const Partition& col) const {
  int r = row_index(row), c = col_index(col);
  if (r < 0 || c < 0) return {};
  return lookup(d, r, c);
}

LaurentPoly GradedDecompMatrix::simple_dim(const Partition& col,
                                           const Partition& row) const {
  int r = row_index(row), c = col_index(col);
  if (r < 0 || c < 0) return {};
  return lookup(simple_dims, c, r);
}

std::map<Partition, LaurentPoly> GradedDecompMatrix::row_entries(
    const Partition& row) const {
  std::map<Partition, LaurentPoly> out;
  int r = row_index(row);
  if (r < 0) return out;
  for (auto it = d.lower_bound({r, 0}); it != d.end() && it->first.first == r; ++it)
    out.emplace(cols[it->first.second], it->second);
  return out;
}

std::vector<std::pair<BlockId, std::vector<Partition>>> block_members(int n, int e) {
  std::map<BlockId, std::vector<Partition>> groups;
  for (const auto& p : partitions_of(n)) groups[block_of(p, e)].push_back(p);
  std::vector<std::pair<BlockId, std::vector<Partition>>> out(groups.begin(),
                                                               groups.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.core.size() < b.first.core.size();
  });
  return out;
}

std::vector<Partition> block_partitions(const BlockId& block) {
  std::vector<Partition> out;
  for (const auto& p : partitions_of(block.n()))
    if (block_of(p, block.e) == block) out.push_back(p);
  return out;
}

GradedDecompMatrix llt_matrix(const BlockId& block, const LltOptions& options) {
  if (block.e < 2) throw DomainError("quantum characteristic e must be at least 2");
  if (e_core_and_weight(block.core, block.e).weight != 0)
    throw DomainError("block core " + block.core.str() + " is not an e-core");
  GradedDecompMatrix m;
  m.n = block.n();
  m.e = block.e;
  m.block = block;
  m.rows = block_partitions(block);
  for (const auto& p : m.rows)
    if (is_e_regular(p, block.e)) m.cols.push_back(p);

  // Coloured characters for every pair with the row lex-below the column;
  // dominance implies lex order, so other pairs are never needed.
  std::vector<GradedDecompMatrix::Index> pairs;
  std::vector<int> col_row(m.cols.size());
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    col_row[c] = m.row_index(m.cols[c]);
    for (std::size_t r = col_row[c]; r < m.rows.size(); ++r)
      pairs.emplace_back(static_cast<int>(r), static_cast<int>(c));
  }
  std::vector<LaurentPoly> chars(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < pairs.size();)
      chars[j] = cstd_character(m.rows[pairs[j].first], m.cols[pairs[j].second], m.e);
  };
  int threads = std::max(1, options.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (std::size_t j = 0; j < pairs.size(); ++j)
    if (!chars[j].is_zero()) m.cstd.emplace(pairs[j], std::move(chars[j]));

  // Column mu needs d_{lambda,nu} for nu strictly below mu, so columns run
  // from the least dominant upwards; within a column rows run downwards so
  // that the simple dimensions at every nu above lambda are already known.
  for (int c = static_cast<int>(m.cols.size()) - 1; c >= 0; --c) {
    const Partition& mu = m.cols[c];
    const int top = col_row[c];
    if (lookup(m.cstd, top, c) != LaurentPoly(1))
      throw InvariantViolation("llt: the ladder tableau of " + mu.str() +
                               " does not have degree zero");
    m.d.emplace(GradedDecompMatrix::Index{top, c}, 1);
    m.simple_dims.emplace(GradedDecompMatrix::Index{c, top}, 1);
    std::vector<int> support;  // rows nu != mu with nonzero simple dims
    for (int r = top + 1; r < static_cast<int>(m.rows.size()); ++r) {
      const Partition& lam = m.rows[r];
      LaurentPoly residual = lookup(m.cstd, r, c);
      if (!dominates(mu, lam)) {
        if (!residual.is_zero())
          throw InvariantViolation("llt: coloured tableaux for non-dominated pair " +
                                   lam.str() + ", " + mu.str());
        continue;
      }
      for (int nu_row : support) {
        const Partition& nu = m.rows[nu_row];
        if (!dominates(nu, lam)) continue;
        LaurentPoly dn = lookup(m.d, r, m.col_index(nu));
        if (!dn.is_zero()) residual -= lookup(m.simple_dims, c, nu_row) * dn;
      }
      BarSplit split = bar_split(residual);
      if (!split.bar_invariant.is_zero()) {
        if (!is_e_regular(lam, m.e))
          throw InvariantViolation("llt: singular row " + lam.str() +
                                   " acquired a simple dimension in column " + mu.str());
        m.simple_dims.emplace(GradedDecompMatrix::Index{c, r}, split.bar_invariant);
        support.push_back(r);
      }
      if (!split.positive.is_zero())
        m.d.emplace(GradedDecompMatrix::Index{r, c}, split.positive);
    }
  }
  return m;
}

void VerificationReport::fail(std::string message) {
  failures.push_back(std::move(message));
}

VerificationReport verify_cstd_bound(const GradedDecompMatrix& m) {
  VerificationReport report{"cstd-bound", 0, {}};
  for (const auto& [idx, dpoly] : m.d) {
    ++report.checked;
    LaurentPoly bound = lookup(m.cstd, idx.first, idx.second);
    for (const auto& [k, coeff] : dpoly.terms())
      if (coeff > bound.coefficient(k))
        report.fail("d" + m.rows[idx.first].str() + m.cols[idx.second].str() +
                    " exceeds the coloured tableau count at degree " +
                    std::to_string(k));
    if (dpoly.at_one() > bound.at_one())
      report.fail("d" + m.rows[idx.first].str() + m.cols[idx.second].str() +
                  "(1) exceeds |CStd|");
  }
  return report;
}

VerificationReport verify_regularisation(const GradedDecompMatrix& m) {
  VerificationReport report{"regularisation", 0, {}};
  for (int r = 0; r < static_cast<int>(m.rows.size()); ++r) {
    ++report.checked;
    const Partition& lam = m.rows[r];
    Partition reg = regularize(lam, m.e);
    int c = m.col_index(reg);
    if (c < 0) {
      report.fail("regularisation of " + lam.str() + " left the block");
      continue;
    }
    if (lookup(m.d, r, c).at_one() != 1)
      report.fail("d" + lam.str() + reg.str() + "(1) != 1");
    for (int other = 0; other < static_cast<int>(m.cols.size()); ++other) {
      const Partition& mu = m.cols[other];
      if (mu != reg && dominates(reg, mu) && !lookup(m.d, r, other).is_zero())
        report.fail("d" + lam.str() + mu.str() + " nonzero below the regularisation");
    }
  }
  return report;
}

VerificationReport verify_row_length(const GradedDecompMatrix& m) {
  VerificationReport report{"row-length", 0, {}};
  if (m.e != 2) return report;
  for (const auto& [idx, dpoly] : m.d) {
    ++report.checked;
    const Partition& lam = m.rows[idx.first];
    int durfee = 0;
    while (lam.row(durfee + 1) >= durfee + 1) ++durfee;
    if (m.cols[idx.second].length() < durfee)
      report.fail(lam.str() + " has constituent " + m.cols[idx.second].str() +
                  " with fewer than " + std::to_string(durfee) + " parts");
  }
  return report;
}

VerificationReport verify_shape(const GradedDecompMatrix& m) {
  VerificationReport report{"shape", 0, {}};
  for (const auto& [idx, dpoly] : m.d) {
    ++report.checked;
    const Partition& lam = m.rows[idx.first];
    const Partition& mu = m.cols[idx.second];
    if (lam == mu) {
      if (dpoly != LaurentPoly(1)) report.fail("diagonal entry at " + mu.str() + " != 1");
      continue;
    }
    if (!dominates(mu, lam))
      report.fail("entry " + lam.str() + mu.str() + " breaks unitriangularity");
    if (!dpoly.has_nonnegative_coefficients() || dpoly.min_exponent() < 1)
      report.fail("entry " + lam.str() + mu.str() + " not in t N0[t]");
  }
  for (std::size_t c = 0; c < m.cols.size(); ++c)
    if (lookup(m.d, m.row_index(m.cols[c]), static_cast<int>(c)) != LaurentPoly(1))
      report.fail("missing diagonal entry at " + m.cols[c].str());
  for (const auto& [idx, poly] : m.simple_dims) {
    ++report.checked;
    if (!poly.is_bar_invariant() || !poly.has_nonnegative_coefficients())
      report.fail("simple dimension " + m.cols[idx.first].str() + "," +
                  m.rows[idx.second].str() + " is not bar-invariant and positive");
  }
  return report;
}

VerificationReport verify_reconstruction(const GradedDecompMatrix& m) {
  VerificationReport report{"reconstruction", 0, {}};
  std::map<GradedDecompMatrix::Index, LaurentPoly> product;
  for (const auto& [dn, dpoly] : m.d) {
    int nu_row = m.row_index(m.cols[dn.second]);
    for (std::size_t c = 0; c < m.cols.size(); ++c) {
      LaurentPoly s = lookup(m.simple_dims, static_cast<int>(c), nu_row);
      if (!s.is_zero()) product[{dn.first, static_cast<int>(c)}] += dpoly * s;
    }
  }
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    int top = m.row_index(m.cols[c]);
    for (int r = top; r < static_cast<int>(m.rows.size()); ++r) {
      ++report.checked;
      if (lookup(product, r, static_cast<int>(c)) != lookup(m.cstd, r, static_cast<int>(c)))
        report.fail("product mismatch at " + m.rows[r].str() + "," + m.cols[c].str());
    }
  }
  return report;
}

}  // namespace heckekron
