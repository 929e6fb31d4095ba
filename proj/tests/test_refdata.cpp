#include "nilorb/refdata.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace nilorb;

namespace {

const RefData& ref() {
  static const RefData r = RefData::load(NILORB_TEST_REFDATA);
  return r;
}

} // namespace

TEST_CASE("counts") {
  const std::vector<std::pair<const char*, std::size_t>> n = {{"G2", 4}, {"F4", 15}, {"E6", 20}, {"E7", 44}, {"E8", 69}};
  for (const auto& [t, c] : n) CHECK(ref().orbits(TypeRank::parse(t)).size() == c);
  CHECK(ref().exceptions().size() == 6);
  CHECK_THROWS_AS(ref().orbits(TypeRank::parse("A2")), RefDataError);
}

TEST_CASE("lookup") {
  const OrbitRecord& f4a3 = ref().lookup(TypeRank::parse("F4"), WeightedDynkinDiagram({0, 2, 0, 0}));
  CHECK(f4a3.label == "F4(a3)");
  CHECK(f4a3.ce_weights == std::vector<int>(6, 2));
  const OrbitRecord& e8a7 = ref().lookup(TypeRank::parse("E8"), WeightedDynkinDiagram({0, 0, 0, 0, 2, 0, 0, 0}));
  CHECK(e8a7.label == "E8(a7)");
  CHECK(e8a7.dim_ce == 10);
  CHECK(e8a7.ce_weights == std::vector<int>(10, 2));
  CHECK_THROWS_AS(ref().lookup(TypeRank::parse("G2"), WeightedDynkinDiagram({1, 1})), RefDataError);

  const OrbitRecord& a3a2 = ref().lookup(TypeRank::parse("E7"), WeightedDynkinDiagram({0, 0, 0, 1, 0, 1, 0}));
  CHECK(a3a2.label == "A3+A2");
  CHECK(a3a2.ce_weights == std::vector<int>{0, 2});
}

TEST_CASE("labels and aliases") {
  const TypeRank e8 = TypeRank::parse("E8");
  const OrbitRecord* a = ref().find_label(e8, "(A3+2A1)''");
  REQUIRE(a != nullptr);
  CHECK(a->label == "A3+2A1");
  CHECK(ref().find_label(e8, "nonsense") == nullptr);

  // both G2 conventions are stored; the primary label wins
  const TypeRank g2 = TypeRank::parse("G2");
  CHECK(ref().find_label(g2, "A1")->diagram.labels == std::vector<int>{0, 1});
  CHECK(ref().find_label(g2, "~A1")->diagram.labels == std::vector<int>{1, 0});
  CHECK(ref().lookup(g2, WeightedDynkinDiagram({1, 0})).aliases == std::vector<std::string>{"A1"});
}

TEST_CASE("internal consistency") {
  std::size_t rigid = 0;
  for (const TypeRank& t : RefData::types()) {
    for (const OrbitRecord& r : ref().orbits(t)) {
      CHECK(r.strongly_reachable == (r.reachable && r.rigid));
      CHECK(static_cast<int>(r.ce_weights.size()) == r.dim_ce);
      rigid += r.rigid ? 1 : 0;
    }
  }
  CHECK(rigid == 3 + 7 + 17 + 5 + 2);
  const ExceptionRecord& f4 = ref().exceptions().back();
  CHECK(f4.label == "C3(a1)");
  CHECK(f4.sheet_rank == 1);
  CHECK(f4.dim_ce == 3);
}

TEST_CASE("environment override and errors") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "nilorb_refdata_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CHECK_THROWS_AS(RefData::load(dir), RefDataError);

  for (const auto& entry : std::filesystem::directory_iterator(NILORB_TEST_REFDATA)) {
    std::filesystem::copy_file(entry.path(), dir / entry.path().filename());
  }
  CHECK_NOTHROW(RefData::load(dir));
  {
    std::ofstream broken(dir / "exceptions.json");
    broken << "{\"exceptions\": [";
  }
  CHECK_THROWS_AS(RefData::load(dir), RefDataError);

  setenv("NILORB_REFDATA", dir.c_str(), 1);
  CHECK(default_refdata_dir() == dir);
  unsetenv("NILORB_REFDATA");
  CHECK(default_refdata_dir() != dir);
  std::filesystem::remove_all(dir);
}
