#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hsk/random.hpp"
#include "hsk/serialize.hpp"

using namespace hsk;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("field json roundtrips preserve coefficients bitwise") {
  Rng rng(501);
  SUBCASE("each rank through the rank-erased view") {
    const FieldVariant fields[] = {
        FieldVariant(rng.scalar_field(3)),
        FieldVariant(rng.vector_field(3)),
        FieldVariant(rng.tensor2_field(3)),
    };
    for (const FieldVariant& f : fields) {
      const FieldVariant back = field_from_json(to_json(f));
      CHECK(rank(back) == rank(f));
      CHECK(to_json(back) == to_json(f));
    }
  }
  SUBCASE("hyperstress fields pack back to the same values") {
    const HyperstressField h = rng.hyperstress_field(2);
    const HyperstressField back = hyperstress_field_from_json(to_json(h));
    CHECK(back.terms().size() == h.terms().size());
    Rng probe(503);
    for (int c = 0; c < 10; ++c) {
      const Vec3d x = probe.vec3();
      CHECK((back(x) - h(x)).max_abs() == 0.0);
    }
  }
}

TEST_CASE("field json validation") {
  SUBCASE("rank out of range") {
    CHECK_THROWS_AS(field_from_json(json{{"rank", 4}, {"terms", json::array()}}),
                    std::runtime_error);
  }
  SUBCASE("coefficient length must match the rank") {
    const json bad{{"rank", 1}, {"terms", {{{"exp", {0, 0, 0}}, {"coef", {1.0, 2.0}}}}}};
    CHECK_THROWS_AS(field_from_json(bad), std::runtime_error);
  }
  SUBCASE("rank-3 coefficients violating the pair symmetry are rejected as hyperstress") {
    std::vector<double> coef(27, 0.0);
    coef[1] = 1.0;  // H_112 without H_121
    const json bad{{"rank", 3}, {"terms", {{{"exp", {0, 0, 0}}, {"coef", coef}}}}};
    CHECK_NOTHROW(field_from_json(bad));  // fine as a general rank-3 field
    CHECK_THROWS_WITH_AS(hyperstress_field_from_json(bad), doctest::Contains("symmetry"),
                         std::runtime_error);
  }
  SUBCASE("wrong-rank requests are reported") {
    const json scalar{{"rank", 0}, {"terms", {{{"exp", {0, 0, 0}}, {"coef", {2.0}}}}}};
    CHECK_THROWS_AS(vector_field_from_json(scalar), std::runtime_error);
    CHECK_THROWS_AS(tensor2_field_from_json(scalar), std::runtime_error);
  }
}

TEST_CASE("part files") {
  SUBCASE("shipped part files match the canned library") {
    const std::filesystem::path dir = std::filesystem::path(HSK_DATA_DIR) / "parts";
    for (const std::string& name : canned_part_names()) {
      const PolyhedralPart from_file = load_part(dir / (name + ".json"));
      const PolyhedralPart canned = *make_canned_part(name);
      CHECK(from_file.id() == name);
      CHECK(from_file.faces().size() == canned.faces().size());
      CHECK(from_file.edges().size() == canned.edges().size());
      CHECK(from_file.volume() == doctest::Approx(canned.volume()).epsilon(1e-15));
    }
  }
  SUBCASE("parse errors carry file, line and column") {
    const auto path = write_temp("hsk_broken.json", "{\n  \"vertices\": [[0,0,0],\n  !\n}\n");
    CHECK_THROWS_WITH_AS(load_part(path), doctest::Contains(":3:"), std::runtime_error);
  }
  SUBCASE("geometric validation runs on load") {
    const auto path = write_temp("hsk_open.json", R"({
      "vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1]],
      "faces": [[0,2,1],[0,1,3]]
    })");
    CHECK_THROWS_WITH_AS(load_part(path), doctest::Contains("non-manifold"), std::runtime_error);
  }
  SUBCASE("spec roundtrip") {
    PartSpec s;
    s.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    s.faces = {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
    const PartSpec back = part_spec_from_json(to_json(s));
    CHECK(back.vertices.size() == 4);
    CHECK(back.faces == s.faces);
    CHECK_NOTHROW(build_part(back, "tet"));
  }
}

TEST_CASE("balance report serialization") {
  BalanceReport r;
  r.part_id = "cube";
  r.seed = 42;
  r.internal_power = 1.5;
  r.external_power = 1.25;
  r.bulk_term = 0.25;
  r.pvp_residual = 3e-14;
  r.bulk_residual_max = 0.5;
  r.global_force_residual = Vec3d(0.1, 0.2, 0.3);
  r.face_contributions = {{1.0, 0.25}};
  r.edge_contributions = {0.5, -0.5};
  r.tol = 1e-10;
  r.pass = true;

  const json j = to_json(r);
  CHECK(j.at("part") == "cube");
  CHECK(j.at("seed") == 42);
  CHECK(j.at("pvp_residual") == 3e-14);
  CHECK(j.at("face_contributions").size() == 1);
  CHECK(j.at("edge_contributions").size() == 2);
  CHECK(j.at("global_force_residual")[2] == 0.3);

  const std::string header = balance_csv_header();
  const std::string row = balance_csv_row(r);
  CHECK(std::count(header.begin(), header.end(), ',') ==
        std::count(row.begin(), row.end(), ','));
  CHECK(row.rfind("cube,42,", 0) == 0);
}

TEST_CASE("traction and edge-force samples") {
  Rng rng(523);
  const Vec3d n = rng.unit_vec3();
  const TractionSample ts{rng.vec3(), n, rng.vec3(), rng.vec3()};
  const json jt = to_json(ts);
  CHECK(jt.at("n").size() == 3);
  CHECK(jt.at("traction")[0] == ts.traction[0]);
  CHECK(jt.at("hypertraction")[2] == ts.hypertraction[2]);

  const EdgeForceSample es{rng.vec3(), rng.edge_frame(), rng.vec3()};
  const json je = to_json(es);
  CHECK(je.at("frame").at("n_prime").size() == 3);
  CHECK(je.at("frame").at("segment").size() == 2);
  CHECK(je.at("force")[1] == es.force[1]);
}

TEST_CASE("double formatting is stable and lossless") {
  Rng rng(521);
  for (int c = 0; c < 200; ++c) {
    const double v = rng.uniform(-1e3, 1e3);
    const std::string s = format_double(v);
    CHECK(s == format_double(v));
    CHECK(std::stod(s) == v);
  }
}
