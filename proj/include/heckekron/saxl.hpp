#pragma once

// Positivity certificates for the tensor square of the staircase character,
// and the combinatorics of the exceptional families alpha_k and beta_k.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heckekron/bigint.hpp"
#include "heckekron/llt.hpp"
#include "heckekron/partitions.hpp"
#include "heckekron/tableaux.hpp"
#include "heckekron/twosep.hpp"

namespace heckekron {

/// Simplicity of the characteristic 2 Specht module: the part-difference
/// congruences for lam or its conjugate, or lam = (2,2).
bool carter_criterion(const Partition& lam);

/// The congruences for lam itself, without the conjugate or (2,2) cases.
bool carter_condition(const Partition& lam);

struct CarterSaxlPair {
  Partition beta;
  int multiplicity = 0;  // d_{alpha,beta}(1) over C, a lower bound in characteristic 2

  bool operator==(const CarterSaxlPair&) const = default;
};

/// Columns beta of the e = 2 matrix satisfying Carter's criterion with
/// d_{alpha,beta}(1) > 0, most dominant first.
std::vector<CarterSaxlPair> carter_saxl_pairs(const Partition& alpha,
                                              const GradedDecompMatrix& matrix);
std::vector<CarterSaxlPair> carter_saxl_pairs(const Partition& alpha);

enum class CertificateKind { Dominance, Height0, CarterSaxl, BruteForce, Skipped };

std::string kind_name(CertificateKind kind);

struct SaxlCertificate {
  Partition lam;
  CertificateKind kind = CertificateKind::Skipped;
  BigInt bound = 0;               // proven lower bound on g(rho, rho, lam)
  std::optional<Partition> beta;  // CarterSaxl only
  int multiplicity = 0;           // CarterSaxl only
  std::optional<BigInt> g;        // exact value when brute force was run
  std::string theorem;            // "iken", "height0", "ineedalabel", "brute" or ""

  bool certified() const { return kind != CertificateKind::Skipped; }
};

using MatrixProvider = std::function<GradedDecompMatrix(const BlockId&)>;

struct CertifyOptions {
  int threads = 1;
  int llt_max_n = 21;           // Carter-Saxl pairs are searched up to here
  int brute_max_n = 26;         // fallback character tables up to here
  int cross_check_max_n = 21;   // every bound is compared with g below this
  MatrixProvider matrices;      // defaults to llt_matrix
};

/// The cheapest certificate for every lam of k(k+1)/2, tried in the order
/// dominance, height zero, Carter-Saxl pair, brute force. Throws
/// InvariantViolation if a cross-check contradicts a bound.
std::map<Partition, SaxlCertificate> certify(int k, const CertifyOptions& options = {});

struct App1Instance {
  TwoSeparated partition;  // tau^lam_mu on the core rho(2w - 1)
  BigInt bound;            // c(rho(k), lam, mu^T)
};

/// Pairs (lam, mu) with c(rho(k), lam, mu^T) > 0, giving
/// g(rho(2w), rho(2w), tau^lam_mu) >= that coefficient for w = k(k+1)/2.
std::vector<App1Instance> app1_instances(int k);

struct SignatureResult {
  std::string reduced;         // the i-signature after cancelling "+-" pairs
  std::vector<Node> conormal;  // the addable nodes behind the surviving '+'
  Partition triangle;          // all addable i-nodes added
  Partition black_triangle;    // all conormal i-nodes added
};

/// Addable (+) and removable (-) i-nodes read from the top row down.
SignatureResult signature_and_conormal(const Partition& lam, int i, int e);

Partition alpha_family(int k);    // ((k+2)^k, k^2)
Partition alpha_c_family(int k);  // (2k+3, 2k+1, ..., 5)
Partition beta_family(int k);     // (k+3, (k+2)^{k-1}, k^2, 1), k odd
Partition beta_c_family(int k);   // (2k+3, ..., 7, 6, 1), k odd

/// The degree-zero tableau of shape regularize(alpha_k) and weight alpha_k^C:
/// ladders 2..k+3 go as high as possible, ladder k+4 puts one node as low as
/// possible, ladders k+5..2k+2 put two nodes as low as possible, and the last
/// two ladders are forced.
ColouredTableau hardtab_tableau(int k);

struct ExceptionalFamily {
  int k = 0;
  Partition alpha;
  Partition alpha_c;
  Partition alpha_r;
  std::optional<Partition> beta;
  std::optional<Partition> beta_c;
  int cstd_count = 0;       // |CStd(alpha, alpha^C)|
  int reg_degree = 0;       // degree of the unique element of CStd(alpha, alpha^R)
  int hardtab_degree = 0;
  int alpha_weight = 0;     // 2-weight of alpha
};

ExceptionalFamily exceptional_families(int k);

}  // namespace heckekron
