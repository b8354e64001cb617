#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qsc/fixtures.hpp"

using namespace qsc;
namespace fs = std::filesystem;

TEST_CASE("catalog") {
  auto names = fixture_names();
  for (const char* n : {"eps32-Y11", "eps32-Yt41", "eps31-Y31", "eps21-KR2", "eps21-KR3", "eps21-success", "eps21-fail",
                        "eps001-fund1", "eps001-fund2", "eps001-KR-Y-s1", "eps001-KR-Y-s4", "eps001-KR-Yt-s1",
                        "eps001-KR-Yt-s3"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK_THROWS_AS(fixture("no-such-fixture"), std::out_of_range);
}

TEST_CASE("selected fixtures") {
  Fixture f = fixture("eps001-fund1");
  CHECK(f.expected.size() == 3);
  CHECK(f.shape == Shape{2, 1});

  f = fixture("eps21-fail");
  CHECK(f.status == FMStatus::Failed);
  REQUIRE(f.failed_at.has_value());
  CHECK(f.direction == 1);
  REQUIRE(f.missing.has_value());

  f = fixture("eps31-Y31");
  CHECK(f.expected.size() == 8);
  CHECK(f.expected.contains(parse_monomial(f.shape, "Yt[3,-q^0]^-1 Yt[3,-q^2]^-1 Yt[3,-q^4]^-1")));
  CHECK(f.edges.size() == 8);

  f = fixture("eps001-KR-Yt-s2");
  CHECK(f.expected.size() == 4);
  CHECK(f.expected.contains(parse_monomial(f.shape, "Y[2,-q^2]^-1")));
}

TEST_CASE("transcribed data is self-consistent") {
  for (const auto& n : fixture_names()) {
    INFO(n);
    auto problems = check_fixture_data(fixture(n));
    CHECK(problems.empty());
    for (const auto& p : problems) MESSAGE(p);
  }
}

TEST_CASE("loader reports monomials that disagree with their A^-1 factors") {
  fs::path dir = fs::temp_directory_path() / "qsc-fixture-test";
  fs::create_directories(dir);
  fs::path p = dir / "bad.json";
  std::ofstream(p) << R"({"name":"bad","M":2,"N":1,"hw":"Y[1,q^0]",
    "terms":[{"m":"Y[1,q^0]","ainv":[]},{"m":"Y[1,q^2]^-1 Y[2,q^1]","ainv":[[1,"q^3"]]}],
    "edges":[{"from":"Y[1,q^0]","i":1,"a":"q^3","to":"Y[1,q^2]^-1 Y[2,q^1]"}]})";
  Fixture f = load_fixture_file(p.string());
  CHECK(f.problems.size() == 1);
  auto problems = check_fixture_data(f);
  CHECK(problems.size() >= 2);  // the term mismatch and the bad edge label
  CHECK_FALSE(verify_fixture(f).ok);
  fs::remove_all(dir);
}

TEST_CASE("fixture directory can be overridden") {
  fs::path dir = fs::temp_directory_path() / "qsc-fixture-env";
  fs::create_directories(dir);
  std::ofstream(dir / "only.json") << R"({"name":"only","M":2,"N":1,"hw":"D","terms":[{"m":"D","mult":1}]})";
  setenv("QSC_FIXTURES", dir.c_str(), 1);
  CHECK(fixture_names() == std::vector<std::string>{"only"});
  CHECK(verify_fixture(fixture("only")).ok);
  unsetenv("QSC_FIXTURES");
  fs::remove_all(dir);
}

TEST_CASE("highest l-weights of fundamental representations") {
  Shape s32{3, 2};
  CHECK(fund_lweight_of_column(s32, 1, Spec::q(0)) == Y(s32, 1, Spec::neg_q(-1)));
  CHECK(fund_lweight_of_column(s32, 3, Spec::q(0)) == Y(s32, 3, Spec::neg_q(-1)));
  CHECK(fund_lweight_of_column(s32, 2, Spec::q(0)) == Y(s32, 2, Spec::q(-1)));
  CHECK(fund_lweight_dual(s32, 1, Spec::q(0)) == Yt(s32, 4, Spec::neg_q(-2)));
  CHECK(fund_lweight_dual(s32, 2, Spec::q(0)) == Yt(s32, 3, Spec::q(-2)));
  CHECK_THROWS_AS(fund_lweight_of_column(s32, 4, Spec::q(0)), std::out_of_range);
  CHECK_THROWS_AS(fund_lweight_dual(s32, 3, Spec::q(0)), std::out_of_range);
}

TEST_CASE("engine agrees with every fixture") {
  for (const auto& n : fixture_names()) {
    FixtureReport rep = verify_fixture(fixture(n));
    INFO(n);
    for (const auto& m : rep.messages) MESSAGE(m);
    CHECK(rep.ok);
  }
}
