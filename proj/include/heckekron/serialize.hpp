#pragma once

// JSON and CSV documents for matrices, polynomials and certificates. Keys are
// sorted and polynomials rendered canonically, so equal values give equal
// bytes.

#include <string>
#include <map>

#include <json.hpp>

#include "heckekron/llt.hpp"
#include "heckekron/partitions.hpp"
#include "heckekron/qpoly.hpp"
#include "heckekron/saxl.hpp"

namespace heckekron {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"exponent": coefficient}; coefficients beyond 64 bits become strings.
Json to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const Json& j);

Json to_json(const BigInt& x);

/// The matrix document, with a "checksum" over everything else.
Json to_json(const GradedDecompMatrix& m);
/// Throws InvariantViolation when the checksum does not match.
GradedDecompMatrix matrix_from_json(const Json& j);

/// Header row of column labels, one line per row label, entries rendered as
/// polynomials ("0" where the entry vanishes).
std::string matrix_to_csv(const GradedDecompMatrix& m);

Json to_json(const SaxlCertificate& c);
Json to_json(const std::map<Partition, SaxlCertificate>& certs);

/// Hex FNV-1a of the compact dump of j without its "checksum" member.
std::string checksum(const Json& j);

}  // namespace heckekron
