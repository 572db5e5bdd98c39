#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "elastica/io.hpp"
#include "elastica/verify.hpp"
#include "support.hpp"

using namespace elastica;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("elastica_io_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("curve CSV round trip is exact") {
  TempDir tmp;
  const PlanarCurve c = fixtures::catenary_curve(0.0, 2.0, 2001);
  const std::string path = tmp.file("cat.csv");
  write_curve_csv(path, c);

  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "s,x,z,theta,kappa");

  const RawCurveSamples raw = read_curve_csv(path);
  const PlanarCurve back = validate_curve(raw);
  REQUIRE(back.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(back.s()[i] == c.s()[i]);
    CHECK(back.x()[i] == c.x()[i]);
    CHECK(back.z()[i] == c.z()[i]);
    CHECK(back.theta()[i] == c.theta()[i]);
    CHECK(back.kappa()[i] == c.kappa()[i]);
  }
}

TEST_CASE("graph CSV round trip is exact") {
  TempDir tmp;
  const GraphCurve g = fixtures::make_graph([](double x) { return std::cosh(x); },
                                            [](double x) { return std::sinh(x); }, -1.0, 1.0, 201);
  const std::string path = tmp.file("g.csv");
  write_graph_csv(path, g);
  const GraphCurve back = read_graph_csv(path);
  REQUIRE(back.size() == g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(back.x[i] == g.x[i]);
    CHECK(back.f[i] == g.f[i]);
    CHECK(back.fp[i] == g.fp[i]);
  }
}

TEST_CASE("CSV errors") {
  TempDir tmp;
  CHECK_THROWS_AS(read_curve_csv(tmp.file("missing.csv")), Error);

  const std::string bad = tmp.file("bad.csv");
  {
    std::ofstream out(bad);
    out << "s,x,z,theta,kappa\n1,2,3\n";
  }
  CHECK_THROWS_AS(read_curve_csv(bad), Error);

  const std::string badnum = tmp.file("badnum.csv");
  {
    std::ofstream out(badnum);
    out << "s,x,z,theta,kappa\n0,0,1,zero,0\n";
  }
  CHECK_THROWS_AS(read_curve_csv(badnum), Error);
}

TEST_CASE("family parameter records round trip") {
  const FamilyParams cases[] = {
      ElasticParams{0.5, -0.25, 1.75},
      WillmoreParams{3, 2.0, 0.5, -0.125},
      SingularParams{1.0, 0.0},
      StationaryParams{1.0, -2.0, 0.375},
  };
  for (const auto& p : cases) {
    const json j = params_to_json(p);
    const FamilyParams back = params_from_json(j);
    CHECK(params_to_json(back) == j);
  }
  const json singular = params_to_json(SingularParams{1.0, 0.0});
  CHECK(singular["family"] == "singular");
  CHECK(singular["alpha"] == 1.0);

  CHECK_THROWS_AS(params_from_json(json{{"family", "unknown"}}), Error);
}

TEST_CASE("density records round trip") {
  const LagrangianKind kinds[] = {
      PowerLagrangian{0.5, 0.0, 0.0},
      ExpLagrangian{0.5},
      LogLagrangian{-0.25, 1.0},
  };
  for (const auto& k : kinds) {
    const json j = kind_to_json(k);
    CHECK(kind_to_json(kind_from_json(j)) == j);
  }
}

TEST_CASE("verification report is deterministic") {
  VerifyConfig cfg;
  cfg.seed = 7;
  cfg.cases = 3;
  const VerifyReport a = verify_relations(cfg);
  const VerifyReport b = verify_relations(cfg);
  CHECK(a.doc.dump() == b.doc.dump());
  CHECK(a.all_pass);

  cfg.seed = 8;
  const VerifyReport c = verify_relations(cfg);
  CHECK(a.doc.dump() != c.doc.dump());
}

TEST_CASE("svg output is a polyline") {
  TempDir tmp;
  const std::string path = tmp.file("curve.svg");
  write_curve_svg(path, fixtures::catenary_curve(0.0, 2.0, 2001));
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.rfind("<svg", 0) == 0);
  CHECK(text.find("<polyline") != std::string::npos);
}
