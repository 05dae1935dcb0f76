#include "heckekron/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "heckekron/errors.hpp"

namespace heckekron {

namespace {

using Rows = std::vector<int>;  // row lengths, trailing zeros allowed

int row_len(const Rows& s, int r) {
  return r >= 1 && r <= static_cast<int>(s.size()) ? s[r - 1] : 0;
}

int node_residue(int r, int c, int e) { return (r + c * (e - 1)) % e; }

// Addable minus removable i-nodes of s lying in rows strictly above row a.
int signed_count_above(const Rows& addable_shape, const Rows& removable_shape,
                       int a, int i, int e) {
  int count = 0;
  for (int r = 1; r < a; ++r) {
    int len = row_len(addable_shape, r);
    if ((r == 1 || row_len(addable_shape, r - 1) > len) &&
        node_residue(r, len + 1, e) == i)
      ++count;
    len = row_len(removable_shape, r);
    if (len > 0 && len > row_len(removable_shape, r + 1) &&
        node_residue(r, len, e) == i)
      --count;
  }
  return count;
}

Partition shape_of(const TableauRows& rows) {
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

void check_e(int e) {
  if (e < 2) throw DomainError("quantum characteristic e must be at least 2");
}

}  // namespace

Partition StandardTableau::shape() const { return shape_of(rows); }

Node StandardTableau::node_of(int entry) const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] == entry)
        return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
  throw DomainError("entry not present in tableau");
}

Partition ColouredTableau::shape() const { return shape_of(rows); }

void for_each_standard(
    const Partition& shape,
    const std::function<void(const StandardTableau&)>& visit) {
  const int n = shape.size();
  StandardTableau t;
  t.rows.resize(shape.length());
  std::function<void(int)> place = [&](int k) {
    if (k > n) {
      visit(t);
      return;
    }
    for (int r = 1; r <= shape.length(); ++r) {
      int len = static_cast<int>(t.rows[r - 1].size());
      if (len >= shape.row(r)) continue;
      if (r > 1 && static_cast<int>(t.rows[r - 2].size()) <= len) continue;
      t.rows[r - 1].push_back(k);
      place(k + 1);
      t.rows[r - 1].pop_back();
    }
  };
  place(1);
}

std::vector<StandardTableau> enumerate_standard(const Partition& shape) {
  std::vector<StandardTableau> out;
  for_each_standard(shape, [&](const StandardTableau& t) { out.push_back(t); });
  return out;
}

BigInt count_standard(const Partition& shape) {
  BigInt numerator = 1;
  for (int m = 2; m <= shape.size(); ++m) numerator *= m;
  BigInt hooks = 1;
  for (int r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape.row(r); ++c) hooks *= hook_length(shape, {r, c});
  return numerator / hooks;
}

int degree_std(const StandardTableau& t, int e) {
  check_e(e);
  const Partition shape = t.shape();
  std::vector<Node> where(shape.size() + 1);
  for (int r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape.row(r); ++c) where.at(t.rows[r - 1][c - 1]) = {r, c};
  Rows current(shape.length(), 0);
  int degree = 0;
  for (int k = 1; k <= shape.size(); ++k) {
    Node x = where[k];
    ++current[x.row - 1];
    degree += signed_count_above(current, current, x.row,
                                 node_residue(x.row, x.col, e), e);
  }
  return degree;
}

ResidueSequence residue_sequence(const StandardTableau& t, int e) {
  check_e(e);
  const int n = t.shape().size();
  ResidueSequence res(n);
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c)
      res.at(t.rows[r][c] - 1) =
          node_residue(static_cast<int>(r) + 1, static_cast<int>(c) + 1, e);
  return res;
}

LaurentPoly filtered_standard_gf(const Partition& shape,
                                 const ResidueSequence& res, int e) {
  return filtered_skew_gf(shape, Partition{}, res, e);
}

LaurentPoly filtered_skew_gf(const Partition& shape, const Partition& inner,
                             const ResidueSequence& res, int e) {
  check_e(e);
  if (static_cast<int>(res.size()) + inner.size() != shape.size())
    throw DomainError("residue sequence length differs from the skew shape size");
  for (int r = 1; r <= inner.length(); ++r)
    if (inner.row(r) > shape.row(r))
      throw DomainError(inner.str() + " does not fit inside " + shape.str());
  std::map<Rows, LaurentPoly> memo;
  std::function<LaurentPoly(Rows&, std::size_t)> complete = [&](Rows& s,
                                                                std::size_t k) -> LaurentPoly {
    if (k == res.size()) return 1;
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    LaurentPoly total;
    for (int r = 1; r <= shape.length(); ++r) {
      int len = s[r - 1];
      if (len >= shape.row(r) || (r > 1 && s[r - 2] <= len)) continue;
      if (node_residue(r, len + 1, e) != res[k]) continue;
      ++s[r - 1];
      int d = signed_count_above(s, s, r, res[k], e);
      LaurentPoly rest = complete(s, k + 1);
      --s[r - 1];
      total += rest.shifted(d);
    }
    memo.emplace(s, total);
    return total;
  };
  Rows s(shape.length(), 0);
  for (int r = 1; r <= inner.length(); ++r) s[r - 1] = inner.row(r);
  return complete(s, 0);
}

namespace {

struct StepCandidates {
  std::vector<int> addable_rows;  // residue-i addable nodes, by row
  std::vector<bool> inside;       // whether each lies inside the target shape
  std::vector<int> removable_rows;
};

StepCandidates candidates(const Rows& s, const Partition& target, int i,
                          int e) {
  StepCandidates out;
  const int len = static_cast<int>(s.size());
  for (int r = 1; r <= len + 1; ++r) {
    int c = row_len(s, r);
    if ((r == 1 || row_len(s, r - 1) > c) && node_residue(r, c + 1, e) == i) {
      out.addable_rows.push_back(r);
      out.inside.push_back(target.row(r) > c);
    }
    if (c > 0 && c > row_len(s, r + 1) && node_residue(r, c, e) == i)
      out.removable_rows.push_back(r);
  }
  return out;
}

// Visits each size-`count` subset of the inside addable nodes along with the
// degree it contributes.
void for_each_choice(const StepCandidates& cand, int count,
                     const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> inside_idx;
  for (std::size_t j = 0; j < cand.inside.size(); ++j)
    if (cand.inside[j]) inside_idx.push_back(static_cast<int>(j));
  if (static_cast<int>(inside_idx.size()) < count) return;
  std::vector<int> chosen;
  std::function<void(std::size_t)> pick = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == count) {
      std::vector<bool> taken(cand.addable_rows.size(), false);
      for (int j : chosen) taken[j] = true;
      int degree = 0;
      std::vector<int> rows;
      for (int j : chosen) {
        int a = cand.addable_rows[j];
        rows.push_back(a);
        for (std::size_t q = 0; q < cand.addable_rows.size(); ++q)
          if (!taken[q] && cand.addable_rows[q] < a) ++degree;
        for (int r : cand.removable_rows)
          if (r < a) --degree;
      }
      visit(rows, degree);
      return;
    }
    std::size_t need = count - chosen.size();
    for (std::size_t p = from; p + need <= inside_idx.size(); ++p) {
      chosen.push_back(inside_idx[p]);
      pick(p + 1);
      chosen.pop_back();
    }
  };
  pick(0);
}

bool same_residue_content(const Partition& a, const Partition& b, int e) {
  if (a.size() != b.size()) return false;
  auto content = [e](const Partition& p) {
    std::vector<int> counts(e, 0);
    for (int r = 1; r <= p.length(); ++r)
      for (int c = 1; c <= p.row(r); ++c) ++counts[node_residue(r, c, e)];
    return counts;
  };
  return content(a) == content(b);
}

}  // namespace

std::vector<ColouredTableau> enumerate_cstd(const Partition& shape,
                                            const Partition& weight, int e) {
  check_e(e);
  const Composition lad = ladder_composition(weight, e);
  std::vector<ColouredTableau> out;
  if (!same_residue_content(shape, weight, e)) return out;
  ColouredTableau current{e, weight, {}};
  current.rows.resize(shape.length());
  Rows s(shape.length(), 0);
  std::function<void(int)> step = [&](int ladder) {
    if (ladder > static_cast<int>(lad.size())) {
      out.push_back(current);
      return;
    }
    int count = lad[ladder - 1];
    if (count == 0) {
      step(ladder + 1);
      return;
    }
    StepCandidates cand = candidates(s, shape, ladder % e, e);
    for_each_choice(cand, count, [&](const std::vector<int>& rows, int) {
      for (int r : rows) {
        ++s[r - 1];
        current.rows[r - 1].push_back(ladder);
      }
      step(ladder + 1);
      for (int r : rows) {
        --s[r - 1];
        current.rows[r - 1].pop_back();
      }
    });
  };
  step(1);
  return out;
}

LaurentPoly cstd_character(const Partition& shape, const Partition& weight,
                           int e) {
  check_e(e);
  const Composition lad = ladder_composition(weight, e);
  if (!same_residue_content(shape, weight, e)) return {};
  std::map<Rows, LaurentPoly> layer;
  layer.emplace(Rows(shape.length(), 0), LaurentPoly(1));
  for (int ladder = 1; ladder <= static_cast<int>(lad.size()); ++ladder) {
    int count = lad[ladder - 1];
    if (count == 0) continue;
    std::map<Rows, LaurentPoly> next;
    for (const auto& [s, gf] : layer) {
      StepCandidates cand = candidates(s, shape, ladder % e, e);
      for_each_choice(cand, count, [&](const std::vector<int>& rows, int degree) {
        Rows grown = s;
        for (int r : rows) ++grown[r - 1];
        next[grown] += gf.shifted(degree);
      });
    }
    layer = std::move(next);
    if (layer.empty()) return {};
  }
  Rows full = shape.parts();
  auto it = layer.find(full);
  if (layer.size() != 1 || it == layer.end())
    throw InvariantViolation("cstd_character: ladder steps did not fill shape");
  return it->second;
}

int degree_cstd(const ColouredTableau& s) {
  const int e = s.e;
  const Partition shape = s.shape();
  auto cut = [&](int ladder, bool inclusive) {
    Rows out(shape.length(), 0);
    for (int r = 1; r <= shape.length(); ++r)
      for (int entry : s.rows[r - 1])
        if (entry < ladder || (inclusive && entry == ladder)) ++out[r - 1];
    return out;
  };
  std::map<int, std::pair<Rows, Rows>> cuts;
  int degree = 0;
  for (int r = 1; r <= shape.length(); ++r) {
    for (int c = 1; c <= shape.row(r); ++c) {
      int ladder = s.rows[r - 1][c - 1];
      int i = node_residue(r, c, e);
      if (ladder % e != i)
        throw DomainError("coloured tableau entry has the wrong residue");
      auto it = cuts.find(ladder);
      if (it == cuts.end())
        it = cuts.emplace(ladder, std::make_pair(cut(ladder, true),
                                                 cut(ladder, false)))
                 .first;
      degree += signed_count_above(it->second.first, it->second.second, r, i, e);
    }
  }
  return degree;
}

std::vector<StandardTableau> orbit_of_cstd(const ColouredTableau& s) {
  std::map<int, std::vector<Node>> groups;
  for (std::size_t r = 0; r < s.rows.size(); ++r)
    for (std::size_t c = 0; c < s.rows[r].size(); ++c)
      groups[s.rows[r][c]].push_back(
          {static_cast<int>(r) + 1, static_cast<int>(c) + 1});
  std::vector<std::vector<Node>> ordered;
  for (auto& [ladder, nodes] : groups) ordered.push_back(nodes);

  std::vector<StandardTableau> out;
  StandardTableau t;
  t.rows.resize(s.rows.size());
  for (std::size_t r = 0; r < s.rows.size(); ++r) t.rows[r].assign(s.rows[r].size(), 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t g, int next) {
    if (g == ordered.size()) {
      out.push_back(t);
      return;
    }
    std::vector<Node> nodes = ordered[g];
    std::sort(nodes.begin(), nodes.end());
    do {
      int k = next;
      for (Node x : nodes) t.rows[x.row - 1][x.col - 1] = k++;
      fill(g + 1, k);
    } while (std::next_permutation(nodes.begin(), nodes.end()));
  };
  fill(0, 1);
  return out;
}

LadderTableau ladder_tableau(const Partition& mu, int e) {
  const Composition lad = ladder_composition(mu, e);
  LadderTableau out;
  out.tableau.e = e;
  out.tableau.weight = mu;
  out.tableau.rows.resize(mu.length());
  for (int r = 1; r <= mu.length(); ++r)
    for (int c = 1; c <= mu.row(r); ++c)
      out.tableau.rows[r - 1].push_back(ladder_and_residue({r, c}, e).ladder);
  for (int ladder = 1; ladder <= static_cast<int>(lad.size()); ++ladder)
    out.residues.insert(out.residues.end(), lad[ladder - 1], ladder % e);
  return out;
}

BigInt count_sstd(const std::vector<Partition>& components,
                  const Composition& weight) {
  int cells = 0;
  for (const auto& p : components) cells += p.size();
  int total = 0;
  for (int w : weight) {
    if (w < 0) throw DomainError("weights must be non-negative");
    total += w;
  }
  if (cells != total) return 0;

  using State = std::vector<Rows>;
  std::vector<std::map<State, BigInt>> memo(weight.size());

  // Every way of adding a horizontal strip with `size` cells spread over the
  // components' rows.
  auto strips = [&](const State& from, int size) {
    std::vector<State> out;
    State current = from;
    std::function<void(std::size_t, int, int)> extend = [&](std::size_t comp,
                                                             int row, int left) {
      if (comp == components.size()) {
        if (left == 0) out.push_back(current);
        return;
      }
      const Partition& target = components[comp];
      if (row > target.length()) {
        extend(comp + 1, 1, left);
        return;
      }
      int old = from[comp][row - 1];
      int cap = target.row(row);
      if (row > 1) cap = std::min(cap, from[comp][row - 2]);
      for (int add = 0; old + add <= cap && add <= left; ++add) {
        current[comp][row - 1] = old + add;
        extend(comp, row + 1, left - add);
      }
      current[comp][row - 1] = old;
    };
    extend(0, 1, size);
    return out;
  };

  std::function<BigInt(const State&, std::size_t)> count =
      [&](const State& state, std::size_t letter) -> BigInt {
    if (letter == weight.size()) return 1;
    auto it = memo[letter].find(state);
    if (it != memo[letter].end()) return it->second;
    BigInt result = 0;
    for (const State& next : strips(state, weight[letter]))
      result += count(next, letter + 1);
    memo[letter].emplace(state, result);
    return result;
  };

  State start;
  for (const auto& p : components) start.emplace_back(p.length(), 0);
  return count(start, 0);
}

}  // namespace heckekron
