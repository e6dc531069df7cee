#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unitube/json_io.hpp"

using namespace unitube;

namespace {

Site parse_site(const std::string& text) { return site_from_json(parse_json(text)); }

}  // namespace

TEST_CASE("site descriptors round trip") {
  std::vector<Site> sites = {Site::loop_cyclic(3),    Site::loop_int(),
                             Site::loop_int_pairs(),  Site::linear_int(),
                             Site::linear_int_pairs(), Site::linear_finite(5)};
  for (const Site& s : sites) CHECK(site_from_json(site_to_json(s)) == s);

  CHECK(parse_site("{\"kind\":\"loop\",\"base\":\"cyclic\",\"rank\":4}") ==
        Site::loop_cyclic(4));
  CHECK(parse_site("{\"kind\":\"loop\",\"base\":\"int\"}") == Site::loop_int());
  CHECK(parse_site("{\"kind\":\"linear\",\"base\":\"integers\"}") == Site::linear_int());
  CHECK(parse_site("{\"kind\":\"linear\",\"base\":\"finite\",\"size\":5}") ==
        Site::linear_finite(5));
  CHECK(parse_site("{\"kind\":\"loop\",\"base\":\"pairs\"}") == Site::loop_int_pairs());

  CHECK_THROWS_AS(parse_site("{\"kind\":\"loop\"}"), Error);
  CHECK_THROWS_AS(parse_site("{\"kind\":\"ring\",\"base\":\"cyclic\",\"rank\":2}"), Error);
  CHECK_THROWS_AS(parse_site("{\"kind\":\"loop\",\"base\":\"cyclic\"}"), Error);
  CHECK_THROWS_AS(parse_site("{\"kind\":\"loop\",\"base\":\"cyclic\",\"rank\":0}"), Error);
  CHECK_THROWS_AS(parse_site("{\"kind\":\"linear\",\"base\":\"cyclic\",\"rank\":2}"), Error);
  CHECK_THROWS_AS(parse_json("{not json"), Error);

  try {
    parse_json("{oops");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadInput);
  }
}

TEST_CASE("vertices and points") {
  Site zz = Site::loop_int_pairs();
  Vertex v{3, -2};
  CHECK(vertex_to_json(zz, v) == json::array({3, -2}));
  CHECK(vertex_from_json(zz, vertex_to_json(zz, v)) == v);

  Site t3 = Site::loop_cyclic(3);
  CHECK(vertex_to_json(t3, {2, 0}) == json(2));
  CHECK(vertex_from_json(t3, json(2)) == Vertex{2, 0});
  CHECK_THROWS_AS(vertex_from_json(t3, json(3)), Error);
  CHECK_THROWS_AS(vertex_from_json(t3, json("x")), Error);
  CHECK_THROWS_AS(vertex_from_json(zz, json(1)), Error);

  CoverPoint p{2, {1, 0}};
  CHECK(point_from_json(t3, point_to_json(t3, p)) == p);
  CHECK_THROWS_AS(point_from_json(Site::linear_int(), parse_json("{\"deck\":1,\"v\":0}")),
                  Error);
}

TEST_CASE("objects parse from label and cover forms") {
  Site t3 = Site::loop_cyclic(3);
  IntervalObject x = IntervalObject::make(t3, {1, 0}, {0, 0}, 2);
  json j = object_to_json(x);
  CHECK(j["socle"] == 1);
  CHECK(j["top"] == 0);
  CHECK(j["winding"] == 2);
  CHECK(j["label"] == "M(1,0;2)");
  CHECK(object_from_json(t3, j) == x);

  IntervalObject same = object_from_json(
      t3, parse_json("{\"a\":{\"deck\":0,\"v\":1},\"b\":{\"deck\":3,\"v\":0}}"));
  CHECK(same == x);

  CHECK_THROWS_AS(object_from_json(t3, parse_json("{\"socle\":1}")), Error);
  CHECK_THROWS_AS(object_from_json(t3, parse_json("{\"socle\":1,\"top\":9,\"winding\":0}")),
                  Error);
  CHECK_THROWS_AS(object_from_json(t3, parse_json("[1,2]")), Error);

  std::mt19937_64 rng(109);
  for (const Site& s : {Site::loop_int(), Site::loop_int_pairs(), Site::linear_finite(8)}) {
    auto pick = [&](long long lo, long long hi) {
      return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    for (int i = 0; i < 150; ++i) {
      Vertex socle, top;
      if (s.base() == BaseOrder::int_pairs_lex) {
        socle = {pick(-5, 5), pick(-5, 5)};
        top = {pick(-5, 5), pick(-5, 5)};
      } else if (s.base() == BaseOrder::finite) {
        long long u = pick(1, 8), w = pick(1, 8);
        socle = {std::min(u, w), 0};
        top = {std::max(u, w), 0};
      } else {
        socle = {pick(-20, 20), 0};
        top = {pick(-20, 20), 0};
      }
      IntervalObject o = IntervalObject::make(s, socle, top, s.is_loop() ? pick(0, 3) : 0);
      CHECK(object_from_json(s, object_to_json(o)) == o);
    }
  }
}

TEST_CASE("hom, ar, chain and witness reports") {
  Site t2 = Site::loop_cyclic(2);
  IntervalObject m = IntervalObject::make(t2, {0, 0}, {0, 0}, 1);
  IntervalObject q = IntervalObject::make(t2, {1, 0}, {0, 0}, 0);

  json h = hom_to_json(hom_space(m, q));
  CHECK(h["dim"] == 1);
  CHECK(h["basis"].size() == 1);

  json a = ar_to_json(ar_sequence(q));
  CHECK(a["start"]["label"] == "M(0,1;0)");
  CHECK(a["middle"].size() == 2);
  CHECK(a["end"]["label"] == "M(1,0;0)");

  json c = chain_to_json(subobject_chain(m, 16));
  CHECK(c["complete"] == true);
  CHECK(c["count_with_zero"] == 4);
  CHECK(c["subs"].size() == 3);

  json w = witness_to_json(path_within_two(
      IntervalObject::make(t2, {0, 0}, {0, 0}, 0), IntervalObject::make(t2, {1, 0}, {1, 0}, 0)));
  CHECK(w.contains("shape"));
  CHECK(w.contains("forward"));

  json self = witness_to_json(path_within_two(m, m));
  CHECK(self["shape"] == "identity");
}

TEST_CASE("perpendicular reports") {
  PerpPresentation pp = PerpPresentation::make(Site::loop_int(), {{0, 0}, {5, 0}});
  json j = perp_to_json(pp);
  CHECK(j["ambient"]["kind"] == "loop");
  CHECK(j["inner"]["base"] == "cyclic");
  CHECK(j["inner"]["rank"] == 2);
  CHECK(j["keep"] == json::array({0, 5}));
  CHECK(j["simples"].size() == 2);
  CHECK(j["simples"][0]["label"] == "M(0,4;0)");

  PerpPresentation pl = PerpPresentation::make(Site::linear_int(), {{1, 0}, {2, 0}, {3, 0}});
  json jl = perp_to_json(pl);
  CHECK(jl["inner"]["size"] == 2);
  CHECK(jl["simples"].size() == 2);
}
