#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "trussalg/io.hpp"

using namespace trussalg;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("trussalg_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("truss tables round trip through JSON") {
  const FiniteTruss T = addition_truss(FiniteAbelianGroup({2, 2}));
  const json j = truss_to_json(T);
  const TrussInput back = read_truss_json(j);
  REQUIRE(std::holds_alternative<FiniteTruss>(back));
  const FiniteTruss& U = std::get<FiniteTruss>(back);
  CHECK(U.table() == T.table());
  CHECK(U.group() == T.group());
  CHECK(U.name() == T.name());
}

TEST_CASE("integer truss parameters parse and are constraint checked") {
  const TrussInput in = read_truss_json(json{{"a", 2}, {"b", 3}, {"c", 3}});
  REQUIRE(std::holds_alternative<ZTrussParams>(in));
  CHECK(std::get<ZTrussParams>(in).b == 3);
  CHECK_THROWS_AS(read_truss_json(json{{"a", 1}, {"b", 2}, {"c", 0}}), StructuralError);
  CHECK_THROWS_AS(read_truss_json(json{{"foo", 1}}), StructuralError);
}

TEST_CASE("invalid tables are rejected at load time") {
  const json bad{{"group", {2}}, {"mult", {1, 1, 1, 0}}};  // non-associative
  CHECK_THROWS_AS(read_truss_json(bad), StructuralError);
}

TEST_CASE("map files parse both forms") {
  const MapInput t = read_map_json(json{{"table", {0, 1, 2, 3}}});
  CHECK(std::get<FnTable>(t) == FnTable{0, 1, 2, 3});
  const MapInput z = read_map_json(json{{"p", 2}, {"q", 3}});
  CHECK(std::get<AffineIntMap>(z) == AffineIntMap{2, 3});
  CHECK_THROWS_AS(read_map_json(json{{"q", 3}}), StructuralError);
}

TEST_CASE("cochain files validate against their truss") {
  const FiniteTruss T = addition_truss(FiniteAbelianGroup({3}));
  const Cochain f = read_cochain_json(T, json{{"arity", 1}, {"table", {0, 1, 2}}});
  CHECK(f.arity == 1);
  CHECK_THROWS_AS(read_cochain_json(T, json{{"arity", 1}, {"table", {0, 0, 1}}}),
                  StructuralError);
}

TEST_CASE("missing and malformed files fail loudly") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/x.json"), StructuralError);
  TempDir tmp;
  const auto p = tmp.path / "broken.json";
  std::ofstream(p) << "{ not json";
  CHECK_THROWS_AS(load_json_file(p.string()), StructuralError);
}

TEST_CASE("emitted example bundle is readable and valid") {
  TempDir tmp;
  const auto files = emit_examples(tmp.path.string());
  CHECK(files.size() >= 20);
  for (const std::string& name : files) {
    const json j = load_json_file((tmp.path / name).string());
    if (j.contains("mult") || j.contains("a")) CHECK_NOTHROW(read_truss_json(j));
    else CHECK_NOTHROW(read_map_json(j));
  }
  // the bundle contains every standard product on the four small groups
  for (const char* needed : {"z2_leftproj.json", "z3_leftproj.json", "z4_addition.json",
                             "z2z2_addition.json", "ztruss_1_0_0.json", "map_2m_plus_3.json"})
    CHECK(std::count(files.begin(), files.end(), std::string(needed)) == 1);
}

TEST_CASE("report serialization uses stable keys") {
  CohomologyReport r;
  r.degree = 1;
  r.basepoint = 0;
  r.cocycle_count = 4;
  r.coboundary_count = 2;
  r.class_count = 2;
  const json j = to_json(r);
  CHECK(j.dump() == j.dump());  // canonical dump is deterministic
  CHECK(j["class_count"] == 2);
}
