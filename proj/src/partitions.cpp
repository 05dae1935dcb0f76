#include "heckekron/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "heckekron/errors.hpp"

namespace heckekron {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.str();
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw DomainError("malformed partition literal '" + std::string(text) +
                      "': expected [a,b,...]");
  s = trim(s.substr(1, s.size() - 2));
  std::vector<int> parts;
  if (!s.empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = s.find(',', start);
      std::string_view token =
          trim(s.substr(start, comma == std::string_view::npos
                                   ? std::string_view::npos
                                   : comma - start));
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() ||
          ptr != token.data() + token.size() || value <= 0)
        throw DomainError("malformed partition literal '" +
                          std::string(text) + "': bad part '" +
                          std::string(token) + "'");
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw DomainError("malformed partition literal '" + std::string(text) +
                      "': parts must be weakly decreasing");
  return Partition(std::move(parts));
}

Partition staircase(int k) {
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> parts(p.empty() ? 0 : p.row(1), 0);
  for (int r : p.parts())
    for (int c = 0; c < r; ++c) ++parts[c];
  return Partition(std::move(parts));
}

bool dominates(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw DomainError("dominance compares partitions of equal size, got " +
                      p.str() + " and " + q.str());
  int sp = 0, sq = 0;
  int len = std::max(p.length(), q.length());
  for (int i = 1; i <= len; ++i) {
    sp += p.row(i);
    sq += q.row(i);
    if (sp < sq) return false;
  }
  return true;
}

bool comparable(const Partition& p, const Partition& q) {
  return dominates(p, q) || dominates(q, p);
}

LadderResidue ladder_and_residue(Node node, int e) {
  if (e < 2) throw DomainError("quantum characteristic e must be at least 2");
  int ladder = node.row + node.col * (e - 1);
  return {ladder, ladder % e};
}

int hook_length(const Partition& p, Node node) {
  Partition conj = conjugate(p);
  return p.row(node.row) - node.col + conj.row(node.col) - node.row + 1;
}

std::vector<Node> addable_nodes(const Partition& p) {
  std::vector<Node> out;
  for (int r = 1; r <= p.length() + 1; ++r)
    if (r == 1 || p.row(r - 1) > p.row(r)) out.push_back({r, p.row(r) + 1});
  return out;
}

std::vector<Node> removable_nodes(const Partition& p) {
  std::vector<Node> out;
  for (int r = 1; r <= p.length(); ++r)
    if (p.row(r) > p.row(r + 1)) out.push_back({r, p.row(r)});
  return out;
}

Partition add_node(const Partition& p, Node node) {
  std::vector<int> parts = p.parts();
  if (node.row == p.length() + 1)
    parts.push_back(1);
  else
    parts.at(node.row - 1) += 1;
  if (parts[node.row - 1] != node.col)
    throw DomainError("node is not addable");
  return Partition(std::move(parts));
}

std::vector<RimHookRemoval> removable_rim_hooks(const Partition& p, int h) {
  std::vector<RimHookRemoval> out;
  if (h < 1) throw DomainError("rim hook size must be positive");
  Partition conj = conjugate(p);
  for (int r = 1; r <= p.length(); ++r) {
    for (int c = 1; c <= p.row(r); ++c) {
      int arm = p.row(r) - c;
      int leg = conj.row(c) - r;
      if (arm + leg + 1 != h) continue;
      std::vector<int> parts = p.parts();
      for (int i = r; i < r + leg; ++i) parts[i - 1] = p.row(i + 1) - 1;
      parts[r + leg - 1] = c - 1;
      out.push_back({{r, c}, Partition(std::move(parts))});
    }
  }
  return out;
}

namespace {

std::vector<int> beta_set(const Partition& p, int len) {
  std::vector<int> beta;
  for (int i = 1; i <= len; ++i) beta.push_back(p.row(i) + len - i);
  return beta;  // strictly decreasing
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 1; i <= len; ++i) parts.push_back(beta[i - 1] - (len - i));
  return Partition(std::move(parts));
}

}  // namespace

std::vector<Partition> addable_rim_hooks(const Partition& p, int h) {
  if (h < 1) throw DomainError("rim hook size must be positive");
  int len = p.length() + h;
  std::vector<int> beta = beta_set(p, len);
  std::set<int> occupied(beta.begin(), beta.end());
  std::vector<Partition> out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (occupied.count(beta[i] + h)) continue;
    std::vector<int> moved = beta;
    moved[i] += h;
    out.push_back(from_beta(std::move(moved)));
  }
  std::sort(out.rbegin(), out.rend());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CoreWeight e_core_and_weight(const Partition& p, int e) {
  if (e < 2) throw DomainError("quantum characteristic e must be at least 2");
  // Abacus: slide beads up each runner. Removal-order independence is a
  // property test against removable_rim_hooks.
  int len = p.length();
  std::vector<int> beta = beta_set(p, len);
  std::vector<std::vector<int>> runners(e);
  for (int b : beta) runners[b % e].push_back(b);
  int weight = 0;
  std::vector<int> core_beta;
  for (int i = 0; i < e; ++i) {
    auto& runner = runners[i];
    std::sort(runner.begin(), runner.end());
    for (std::size_t j = 0; j < runner.size(); ++j) {
      int target = i + static_cast<int>(j) * e;
      weight += (runner[j] - target) / e;
      core_beta.push_back(target);
    }
  }
  return {from_beta(std::move(core_beta)), weight};
}

bool is_e_regular(const Partition& p, int e) {
  if (e < 2) throw DomainError("quantum characteristic e must be at least 2");
  for (int i = 1; i + e - 1 <= p.length(); ++i)
    if (p.row(i) == p.row(i + e - 1)) return false;
  return true;
}

Composition ladder_counts(const Partition& p, int e) {
  Composition counts;
  for (int r = 1; r <= p.length(); ++r) {
    for (int c = 1; c <= p.row(r); ++c) {
      int ladder = ladder_and_residue({r, c}, e).ladder;
      if (static_cast<int>(counts.size()) < ladder) counts.resize(ladder, 0);
      ++counts[ladder - 1];
    }
  }
  return counts;
}

Partition regularize(const Partition& p, int e) {
  Composition counts = ladder_counts(p, e);
  std::map<int, int> row_lengths;
  for (int ladder = 1; ladder <= static_cast<int>(counts.size()); ++ladder) {
    int need = counts[ladder - 1];
    // Positions on a ladder, top to bottom: r = ladder - c(e-1), c decreasing.
    for (int c = (ladder - 1) / (e - 1); c >= 1 && need > 0; --c) {
      int r = ladder - c * (e - 1);
      if (r < 1) continue;
      row_lengths[r] = std::max(row_lengths[r], c);
      --need;
    }
    if (need > 0) throw InvariantViolation("ladder overflow in regularize");
  }
  std::vector<int> parts;
  for (auto [r, len] : row_lengths) {
    if (r != static_cast<int>(parts.size()) + 1)
      throw InvariantViolation("regularize produced a gap");
    parts.push_back(len);
  }
  Partition result(std::move(parts));
  if (result.size() != p.size() || ladder_counts(result, e) != counts)
    throw InvariantViolation("regularize did not refill ladders exactly");
  return result;
}

Composition ladder_composition(const Partition& p, int e) {
  if (!is_e_regular(p, e))
    throw DomainError("ladder composition needs an e-regular partition, got " +
                      p.str());
  Composition counts = ladder_counts(p, e);
  if (counts.empty()) counts.push_back(0);
  return counts;
}

std::optional<int> staircase_index(const Partition& p) {
  int k = p.length();
  for (int i = 1; i <= k; ++i)
    if (p.row(i) != k + 1 - i) return std::nullopt;
  return k;
}

BlockId block_of(const Partition& p, int e) {
  auto [core, weight] = e_core_and_weight(p, e);
  return {e, core, weight};
}

int binary_digit_sum(long long n) {
  int s = 0;
  for (; n > 0; n >>= 1) s += static_cast<int>(n & 1);
  return s;
}

}  // namespace heckekron
