#include "heckekron/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>

#include "heckekron/errors.hpp"

namespace heckekron {

namespace {

std::string index_key(const GradedDecompMatrix::Index& ix) {
  return std::to_string(ix.first) + "," + std::to_string(ix.second);
}

GradedDecompMatrix::Index parse_index_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw DomainError("bad matrix index key '" + key + "'");
  return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_number_unsigned()) return BigInt(j.get<unsigned long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw DomainError("expected an integer, got " + j.dump());
}

Json poly_map_to_json(const std::map<GradedDecompMatrix::Index, LaurentPoly>& entries) {
  Json out = Json::object();
  for (const auto& [ix, f] : entries) out[index_key(ix)] = to_json(f);
  return out;
}

std::map<GradedDecompMatrix::Index, LaurentPoly> poly_map_from_json(const Json& j) {
  std::map<GradedDecompMatrix::Index, LaurentPoly> out;
  for (const auto& [key, value] : j.items()) out.emplace(parse_index_key(key), poly_from_json(value));
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("a partition must be a JSON array, got " + j.dump());
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Json to_json(const LaurentPoly& f) {
  Json out = Json::object();
  for (const auto& [exp, coeff] : f.terms()) out[std::to_string(exp)] = to_json(coeff);
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("a polynomial must be a JSON object, got " + j.dump());
  LaurentPoly f;
  for (const auto& [exp, coeff] : j.items()) f.add_term(std::stoi(exp), bigint_from_json(coeff));
  return f;
}

std::string checksum(const Json& j) {
  Json copy = j;
  if (copy.is_object()) copy.erase("checksum");
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : copy.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const GradedDecompMatrix& m) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["n"] = m.n;
  j["e"] = m.e;
  j["core"] = to_json(m.block.core);
  j["weight"] = m.block.weight;
  j["rows"] = Json::array();
  for (const auto& p : m.rows) j["rows"].push_back(to_json(p));
  j["cols"] = Json::array();
  for (const auto& p : m.cols) j["cols"].push_back(to_json(p));
  j["d"] = poly_map_to_json(m.d);
  j["simple_dims"] = poly_map_to_json(m.simple_dims);
  j["cstd"] = poly_map_to_json(m.cstd);
  j["checksum"] = checksum(j);
  return j;
}

GradedDecompMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("checksum"))
    throw InvariantViolation("matrix document has no checksum");
  if (j.at("checksum").get<std::string>() != checksum(j))
    throw InvariantViolation("matrix document checksum mismatch");
  GradedDecompMatrix m;
  m.n = j.at("n").get<int>();
  m.e = j.at("e").get<int>();
  m.block = BlockId{m.e, partition_from_json(j.at("core")), j.at("weight").get<int>()};
  for (const auto& p : j.at("rows")) m.rows.push_back(partition_from_json(p));
  for (const auto& p : j.at("cols")) m.cols.push_back(partition_from_json(p));
  m.d = poly_map_from_json(j.at("d"));
  m.simple_dims = poly_map_from_json(j.at("simple_dims"));
  m.cstd = poly_map_from_json(j.at("cstd"));
  return m;
}

std::string matrix_to_csv(const GradedDecompMatrix& m) {
  std::ostringstream out;
  out << "lambda";
  for (const auto& c : m.cols) out << ',' << csv_field(c.str());
  out << '\n';
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    out << csv_field(m.rows[r].str());
    for (std::size_t c = 0; c < m.cols.size(); ++c) {
      auto it = m.d.find({static_cast<int>(r), static_cast<int>(c)});
      out << ',' << csv_field(it == m.d.end() ? "0" : it->second.str());
    }
    out << '\n';
  }
  return out.str();
}

Json to_json(const SaxlCertificate& c) {
  Json j;
  j["lambda"] = to_json(c.lam);
  j["kind"] = kind_name(c.kind);
  j["bound"] = to_json(c.bound);
  j["theorem"] = c.theorem;
  if (c.beta) {
    j["beta"] = to_json(*c.beta);
    j["multiplicity"] = c.multiplicity;
    j["note"] = "lower bound for characteristic 2";
  }
  if (c.g) j["g"] = to_json(*c.g);
  return j;
}

Json to_json(const std::map<Partition, SaxlCertificate>& certs) {
  Json out = Json::array();
  // Most dominant first, like every other listing.
  for (auto it = certs.rbegin(); it != certs.rend(); ++it) out.push_back(to_json(it->second));
  return out;
}

}  // namespace heckekron
