#include "heckekron/saxl.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "heckekron/blocks.hpp"
#include "heckekron/characters.hpp"
#include "heckekron/errors.hpp"

namespace heckekron {

namespace {

// Least L >= 0 with m < 2^L.
int ell2(int m) {
  int L = 0;
  while ((1LL << L) <= m) ++L;
  return L;
}

int mod_floor(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

bool carter_condition(const Partition& lam) {
  for (int i = 1; i <= lam.length(); ++i) {
    const int modulus = 1 << ell2(lam.row(i + 1) - lam.row(i + 2));
    if (mod_floor(lam.row(i) - lam.row(i + 1) + 1, modulus) != 0) return false;
  }
  return true;
}

bool carter_criterion(const Partition& lam) {
  return carter_condition(lam) || carter_condition(conjugate(lam)) ||
         lam == Partition{2, 2};
}

std::vector<CarterSaxlPair> carter_saxl_pairs(const Partition& alpha,
                                              const GradedDecompMatrix& matrix) {
  if (matrix.e != 2) throw DomainError("Carter-Saxl pairs live in the e = 2 matrix");
  if (matrix.row_index(alpha) < 0)
    throw DomainError(alpha.str() + " is not in the block of the given matrix");
  std::vector<CarterSaxlPair> pairs;
  for (const auto& [beta, entry] : matrix.row_entries(alpha)) {
    if (!carter_criterion(beta)) continue;
    const BigInt m = entry.at_one();
    if (m > 0) pairs.push_back({beta, static_cast<int>(m)});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.beta > b.beta; });
  return pairs;
}

std::vector<CarterSaxlPair> carter_saxl_pairs(const Partition& alpha) {
  return carter_saxl_pairs(alpha, llt_matrix(block_of(alpha, 2)));
}

std::string kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Dominance: return "Dominance";
    case CertificateKind::Height0: return "Height0";
    case CertificateKind::CarterSaxl: return "CarterSaxl";
    case CertificateKind::BruteForce: return "BruteForce";
    case CertificateKind::Skipped: return "Skipped";
  }
  return "Skipped";
}

namespace {

template <class F>
void parallel_for(std::size_t count, int threads, F&& body) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        for (std::size_t i; (i = next++) < count;) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::map<Partition, SaxlCertificate> certify(int k, const CertifyOptions& options) {
  if (k < 1) throw DomainError("staircase index must be positive");
  const int n = k * (k + 1) / 2;
  const Partition rho = staircase(k);
  const std::vector<Partition> labels = partitions_of(n);
  std::vector<SaxlCertificate> certs(labels.size());

  std::set<BlockId> needed;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    SaxlCertificate& c = certs[i];
    c.lam = labels[i];
    if (comparable(c.lam, rho)) {
      c.kind = CertificateKind::Dominance;
      c.theorem = "iken";
      c.bound = 1;
    } else if (height(c.lam).height == 0) {
      c.kind = CertificateKind::Height0;
      c.theorem = "height0";
      c.bound = 1;
    } else if (n <= options.llt_max_n) {
      needed.insert(block_of(c.lam, 2));
    }
  }

  // Matrices first, so the per-label work below only reads shared data.
  std::map<BlockId, GradedDecompMatrix> matrices;
  for (const BlockId& block : needed)
    matrices.emplace(block, options.matrices
                                ? options.matrices(block)
                                : llt_matrix(block, LltOptions{options.threads}));

  parallel_for(labels.size(), options.threads, [&](std::size_t i) {
    SaxlCertificate& c = certs[i];
    if (c.certified()) return;
    auto it = matrices.find(block_of(c.lam, 2));
    if (it == matrices.end()) return;
    const auto pairs = carter_saxl_pairs(c.lam, it->second);
    if (pairs.empty()) return;
    auto best = std::max_element(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
      return a.multiplicity < b.multiplicity;
    });
    c.kind = CertificateKind::CarterSaxl;
    c.theorem = "ineedalabel";
    c.beta = best->beta;
    c.multiplicity = best->multiplicity;
    c.bound = best->multiplicity;
  });

  const bool any_left = std::any_of(certs.begin(), certs.end(),
                                    [](const auto& c) { return !c.certified(); });
  const bool brute = any_left && n <= options.brute_max_n && n <= CharacterTable::kMaxN;
  const bool check = n <= options.cross_check_max_n && n <= CharacterTable::kMaxN;
  if (brute || check) {
    auto table = character_table(n, options.threads);
    const int r = table->index(rho);
    parallel_for(labels.size(), options.threads, [&](std::size_t i) {
      SaxlCertificate& c = certs[i];
      if (c.certified() && !check) return;
      const BigInt g = table->kronecker(r, r, table->index(c.lam));
      c.g = g;
      if (!c.certified()) {
        if (g <= 0) return;  // a counterexample would stay uncertified
        c.kind = CertificateKind::BruteForce;
        c.theorem = "brute";
        c.bound = g;
      } else if (g < c.bound) {
        throw InvariantViolation("certificate for " + c.lam.str() + " claims g >= " +
                                 c.bound.str() + " but g = " + g.str());
      }
    });
  }

  std::map<Partition, SaxlCertificate> out;
  for (auto& c : certs) out.emplace(c.lam, std::move(c));
  return out;
}

std::vector<App1Instance> app1_instances(int k) {
  if (k < 1) throw DomainError("staircase index must be positive");
  const int w = k * (k + 1) / 2;
  const Partition rho = staircase(k);
  std::vector<App1Instance> out;
  for (int a = 0; a <= w; ++a)
    for (const Partition& lam : partitions_of(a))
      for (const Partition& mu : partitions_of(w - a)) {
        BigInt c = lr_coefficient(rho, lam, conjugate(mu));
        if (c > 0) out.push_back({build_two_separated(2 * w - 1, lam, mu), c});
      }
  return out;
}

SignatureResult signature_and_conormal(const Partition& lam, int i, int e) {
  if (e < 2) throw DomainError("signatures need e >= 2");
  struct Mark {
    char sign;
    Node node;
  };
  std::vector<Mark> marks;
  SignatureResult result;
  std::vector<int> triangle = lam.parts();
  triangle.push_back(0);
  for (int r = 1; r <= lam.length() + 1; ++r) {
    const Node add{r, lam.row(r) + 1};
    if (r == 1 || lam.row(r - 1) > lam.row(r)) {
      if (residue(add, e) == mod_floor(i, e)) {
        marks.push_back({'+', add});
        ++triangle[r - 1];
      }
    }
    if (lam.row(r) > lam.row(r + 1)) {
      const Node rem{r, lam.row(r)};
      if (residue(rem, e) == mod_floor(i, e)) marks.push_back({'-', rem});
    }
  }
  result.triangle = Partition(triangle);

  std::vector<Mark> stack;
  for (const Mark& m : marks) {
    if (m.sign == '-' && !stack.empty() && stack.back().sign == '+')
      stack.pop_back();
    else
      stack.push_back(m);
  }
  Partition black = lam;
  for (const Mark& m : stack) {
    result.reduced.push_back(m.sign);
    if (m.sign == '+') result.conormal.push_back(m.node);
  }
  // Bottom first so each added node stays addable.
  for (auto it = result.conormal.rbegin(); it != result.conormal.rend(); ++it)
    black = add_node(black, *it);
  result.black_triangle = black;
  return result;
}

Partition alpha_family(int k) {
  if (k < 1) throw DomainError("family index must be positive");
  std::vector<int> parts(k, k + 2);
  parts.push_back(k);
  parts.push_back(k);
  return Partition(parts);
}

Partition alpha_c_family(int k) {
  if (k < 1) throw DomainError("family index must be positive");
  std::vector<int> parts;
  for (int j = 0; j < k; ++j) parts.push_back(2 * k + 3 - 2 * j);
  return Partition(parts);
}

Partition beta_family(int k) {
  if (k < 1 || k % 2 == 0) throw DomainError("beta family needs odd k");
  std::vector<int> parts{k + 3};
  for (int j = 1; j < k; ++j) parts.push_back(k + 2);
  parts.push_back(k);
  parts.push_back(k);
  parts.push_back(1);
  return Partition(parts);
}

Partition beta_c_family(int k) {
  std::vector<int> parts = alpha_c_family(k).parts();
  if (k % 2 == 0) throw DomainError("beta family needs odd k");
  parts.back() = 6;
  parts.push_back(1);
  return Partition(parts);
}

ColouredTableau hardtab_tableau(int k) {
  constexpr int e = 2;
  const Partition weight = alpha_c_family(k);
  const Partition shape = regularize(alpha_family(k), e);
  const Composition lad = ladder_composition(weight, e);
  ColouredTableau s;
  s.e = e;
  s.weight = weight;
  Partition current;
  for (int ell = 1; ell <= static_cast<int>(lad.size()); ++ell) {
    const int count = lad[ell - 1];
    if (count == 0) continue;
    std::vector<Node> free;  // top to bottom
    for (Node x : addable_nodes(current))
      if (shape.contains(x) && ladder_and_residue(x, e).residue == ell % e) free.push_back(x);
    std::sort(free.begin(), free.end());

    int low = 0;  // how many go to the least dominant positions
    if (ell == k + 4)
      low = 1;
    else if (ell > k + 4 && ell <= 2 * k + 2)
      low = 2;
    else if (ell >= 2 * k + 3 && static_cast<int>(free.size()) != count)
      throw InvariantViolation("hardtab: ladder " + std::to_string(ell) + " is not forced");
    if (static_cast<int>(free.size()) < count)
      throw InvariantViolation("hardtab: ladder " + std::to_string(ell) + " has too few positions");

    std::vector<Node> chosen(free.begin(), free.begin() + (count - low));
    chosen.insert(chosen.end(), free.end() - low, free.end());
    for (Node x : chosen) {
      if (static_cast<int>(s.rows.size()) < x.row) s.rows.resize(x.row);
      s.rows[x.row - 1].push_back(ell);
    }
    std::sort(chosen.begin(), chosen.end());
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) current = add_node(current, *it);
  }
  if (current != shape) throw InvariantViolation("hardtab: construction does not fill the shape");
  return s;
}

ExceptionalFamily exceptional_families(int k) {
  constexpr int e = 2;
  ExceptionalFamily f;
  f.k = k;
  f.alpha = alpha_family(k);
  f.alpha_c = alpha_c_family(k);
  f.alpha_r = regularize(f.alpha, e);
  if (k % 2 == 1) {
    f.beta = beta_family(k);
    f.beta_c = beta_c_family(k);
  }
  f.alpha_weight = e_core_and_weight(f.alpha, e).weight;
  f.cstd_count = static_cast<int>(enumerate_cstd(f.alpha, f.alpha_c, e).size());
  const auto reg = enumerate_cstd(f.alpha, f.alpha_r, e);
  if (reg.size() != 1)
    throw InvariantViolation("CStd(alpha, alpha^R) has " + std::to_string(reg.size()) +
                             " elements");
  f.reg_degree = degree_cstd(reg.front());
  f.hardtab_degree = degree_cstd(hardtab_tableau(k));
  return f;
}

}  // namespace heckekron
