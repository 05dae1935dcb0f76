#pragma once

/**
 * @file partitions.hpp
 * @brief Partitions, Young diagrams and their e-combinatorics: conjugation,
 * dominance, rim hooks, cores, ladders, residues and regularisation.
 */

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace heckekron {

/// Finite sequence of non-negative integers. Used for tableau weights and
/// ladder compositions; entry i-1 belongs to label i.
using Composition = std::vector<int>;

/// A node (r,c) of a Young diagram, both coordinates 1-based.
struct Node {
  int row = 1;
  int col = 1;

  auto operator<=>(const Node&) const = default;
};

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// Part in 1-based row r; zero past the last row.
  int row(int r) const {
    return r >= 1 && r <= length() ? parts_[r - 1] : 0;
  }
  bool contains(Node x) const {
    return x.row >= 1 && x.col >= 1 && x.col <= row(x.row);
  }

  std::string str() const;

  // Lexicographic on parts; descending lex order refines dominance.
  auto operator<=>(const Partition& other) const {
    return parts_ <=> other.parts_;
  }
  bool operator==(const Partition& other) const {
    return parts_ == other.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Parses "[a,b,c]" (whitespace tolerated, "[]" is empty). Throws DomainError
/// naming the offending token.
Partition parse_partition(std::string_view text);

/// rho(k) = (k, k-1, ..., 1).
Partition staircase(int k);

/// All partitions of n, most dominant first (descending lexicographic).
std::vector<Partition> partitions_of(int n);

Partition conjugate(const Partition& p);

/// Prefix-sum dominance p ⊵ q. Throws DomainError if sizes differ.
bool dominates(const Partition& p, const Partition& q);

/// p ⊵ q or q ⊵ p.
bool comparable(const Partition& p, const Partition& q);

struct LadderResidue {
  int ladder;
  int residue;
};

/// Ladder number r + c(e-1) and residue (ladder mod e).
LadderResidue ladder_and_residue(Node node, int e);

inline int residue(Node node, int e) {
  return ladder_and_residue(node, e).residue;
}

int hook_length(const Partition& p, Node node);

std::vector<Node> addable_nodes(const Partition& p);
std::vector<Node> removable_nodes(const Partition& p);
Partition add_node(const Partition& p, Node node);

struct RimHookRemoval {
  Node node;  // the node (r,c) whose rim hook h(r,c) is removed
  Partition result;
};

std::vector<RimHookRemoval> removable_rim_hooks(const Partition& p, int h);

/// Every q with q \ p a rim hook of size h, found by bead moves on beta
/// numbers. Descending lexicographic order, no duplicates.
std::vector<Partition> addable_rim_hooks(const Partition& p, int h);

struct CoreWeight {
  Partition core;
  int weight;
};

CoreWeight e_core_and_weight(const Partition& p, int e);

bool is_e_regular(const Partition& p, int e);

/// Slides every node as high along its ladder as possible.
Partition regularize(const Partition& p, int e);

/// Entry i-1 counts nodes of p on ladder i. Throws DomainError if p is
/// e-singular.
Composition ladder_composition(const Partition& p, int e);

/// Per-ladder node counts without the regularity requirement.
Composition ladder_counts(const Partition& p, int e);

/// If p = rho(k) for some k, returns k.
std::optional<int> staircase_index(const Partition& p);

/// A combinatorial e-block: partitions of |core| + e*weight with e-core core.
struct BlockId {
  int e = 2;
  Partition core;
  int weight = 0;

  int n() const { return core.size() + e * weight; }

  /// For e = 2 the core is rho(k); returns k.
  std::optional<int> core_index() const { return staircase_index(core); }

  auto operator<=>(const BlockId&) const = default;
};

BlockId block_of(const Partition& p, int e);

/// Number of ones in the binary expansion of n.
int binary_digit_sum(long long n);

}  // namespace heckekron
