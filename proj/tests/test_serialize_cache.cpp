#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "heckekron/cache.hpp"
#include "heckekron/errors.hpp"
#include "heckekron/serialize.hpp"

using namespace heckekron;
namespace fs = std::filesystem;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("heckekron-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("partitions and polynomials round trip") {
  CHECK(to_json(P({3, 1})).dump() == "[3,1]");
  CHECK(partition_from_json(to_json(P({4, 4, 2}))) == P({4, 4, 2}));
  CHECK(partition_from_json(Json::array()) == P({}));
  LaurentPoly f = tpow(-2) + 3 * tpow(1);
  f.add_term(7, BigInt("123456789012345678901234567890"));
  CHECK(poly_from_json(to_json(f)) == f);
  CHECK(poly_from_json(to_json(LaurentPoly())) == LaurentPoly());
  CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), DomainError);
}

TEST_CASE("matrices round trip") {
  for (int n = 0; n <= 9; ++n)
    for (const auto& [block, members] : block_members(n, 2)) {
      const auto m = llt_matrix(block);
      const Json j = to_json(m);
      CHECK(j["format_version"] == kFormatVersion);
      CHECK(matrix_from_json(j) == m);
      CHECK(matrix_from_json(Json::parse(j.dump())) == m);
    }
  const auto m = llt_matrix(block_of(P({4, 1}), 3));
  CHECK(matrix_from_json(to_json(m)) == m);
}

TEST_CASE("tampered documents are rejected") {
  Json j = to_json(llt_matrix(block_of(P({6}), 2)));
  j["d"]["1,0"] = Json{{"2", 1}};
  CHECK_THROWS_AS(matrix_from_json(j), InvariantViolation);
}

TEST_CASE("csv") {
  const auto csv = matrix_to_csv(llt_matrix(block_of(P({6}), 2)));
  CHECK(csv.rfind("lambda,[6],\"[5,1]\",\"[4,2]\"\n[6],1,0,0\n\"[5,1]\",t,1,0\n", 0) == 0);
  CHECK(csv.find("\"[1,1,1,1,1,1]\",t^3,0,0\n") != std::string::npos);
}

TEST_CASE("certificates") {
  SaxlCertificate c;
  c.lam = P({3, 1, 1});
  c.kind = CertificateKind::CarterSaxl;
  c.bound = 1;
  c.beta = P({5});
  c.multiplicity = 1;
  c.theorem = "ineedalabel";
  const Json j = to_json(c);
  CHECK(j["kind"] == "CarterSaxl");
  CHECK(j["beta"] == Json::parse("[5]"));
  CHECK(j["note"] == "lower bound for characteristic 2");
  CHECK_FALSE(j.contains("g"));
}

TEST_CASE("cache keys") {
  CHECK(cache_key(block_of(P({6}), 2)).filename() == "n6-e2-core0-v" + std::to_string(kFormatVersion) + ".json");
  CHECK(core_index_of(block_of(P({3, 2, 1}), 2)) == 3);
  CHECK(block_from_index(6, 2, 3) == block_of(P({3, 2, 1}), 2));
  CHECK_THROWS_AS(block_from_index(6, 2, 2), DomainError);
  for (int e = 2; e <= 4; ++e)
    for (const auto& [block, members] : block_members(9, e))
      CHECK(block_from_index(9, e, core_index_of(block)) == block);
}

TEST_CASE("cold and warm lookups agree") {
  TempDir dir;
  std::vector<std::string> warnings;
  MatrixCache cache(dir.path, true, [&](const std::string& w) { warnings.push_back(w); });
  const BlockId b = block_of(P({7, 1}), 2);
  const auto cold = cache.get_or_compute(b);
  const fs::path file = cache.path_for(cache_key(b));
  REQUIRE(fs::exists(file));
  const std::string bytes = slurp(file);
  const auto warm = cache.get_or_compute(b);
  CHECK(warm == cold);
  CHECK(to_json(warm).dump() == to_json(cold).dump());
  CHECK(slurp(file) == bytes);
  CHECK(warnings.empty());
  for (const auto& entry : fs::directory_iterator(dir.path))
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
}

TEST_CASE("corrupt entries are recomputed") {
  TempDir dir;
  std::vector<std::string> warnings;
  MatrixCache cache(dir.path, true, [&](const std::string& w) { warnings.push_back(w); });
  const BlockId b = block_of(P({6}), 2);
  const auto fresh = cache.get_or_compute(b);
  const fs::path file = cache.path_for(cache_key(b));

  Json j = Json::parse(slurp(file));
  j["d"]["1,0"] = Json{{"5", 1}};
  std::ofstream(file) << j.dump();
  CHECK(cache.get_or_compute(b) == fresh);
  CHECK(warnings.size() == 1);
  CHECK(matrix_from_json(Json::parse(slurp(file))) == fresh);

  std::ofstream(file) << "{ not json";
  CHECK(cache.get_or_compute(b) == fresh);
  CHECK(warnings.size() == 2);
}

TEST_CASE("old versions are ignored") {
  TempDir dir;
  std::vector<std::string> warnings;
  MatrixCache cache(dir.path, true, [&](const std::string& w) { warnings.push_back(w); });
  const BlockId b = block_of(P({6}), 2);
  CacheKey old = cache_key(b);
  old.format_version = kFormatVersion - 1;
  fs::create_directories(dir.path);
  std::ofstream(cache.path_for(old)) << "garbage";
  CHECK(cache.get_or_compute(b) == llt_matrix(b));
  CHECK(warnings.empty());
  CHECK(slurp(cache.path_for(old)) == "garbage");
}

TEST_CASE("a disabled cache writes nothing") {
  TempDir dir;
  MatrixCache cache(dir.path, false);
  const BlockId b = block_of(P({6}), 2);
  CHECK(cache.get_or_compute(b) == llt_matrix(b));
  CHECK_FALSE(fs::exists(dir.path));
}
