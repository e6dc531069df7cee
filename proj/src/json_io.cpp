#include "unitube/json_io.hpp"

namespace unitube {

namespace {

std::string base_name(BaseOrder b) {
  switch (b) {
    case BaseOrder::cyclic:
      return "cyclic";
    case BaseOrder::integers:
      return "int";
    case BaseOrder::int_pairs_lex:
      return "int_pairs_lex";
    case BaseOrder::finite:
      return "finite";
  }
  return "?";
}

long long get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(ErrorKind::BadInput, std::string("expected integer field \"") + key + "\"");
  return j[key].get<long long>();
}

long long get_int_or(const json& j, const char* key, long long fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer())
    fail(ErrorKind::BadInput, std::string("expected integer field \"") + key + "\"");
  return j[key].get<long long>();
}

const json& get_field(const json& j, const char* key) {
  if (!j.contains(key))
    fail(ErrorKind::BadInput, std::string("missing field \"") + key + "\"");
  return j[key];
}

}  // namespace

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::BadInput, "malformed JSON");
  return j;
}

json site_to_json(const Site& s) {
  json j;
  j["kind"] = s.is_loop() ? "loop" : "linear";
  j["base"] = base_name(s.base());
  if (s.base() == BaseOrder::cyclic) j["rank"] = s.rank();
  if (s.base() == BaseOrder::finite) j["size"] = s.size();
  return j;
}

Site site_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::BadInput, "site must be a JSON object");
  std::string kind = j.value("kind", "");
  std::string base = j.value("base", "");

  SiteKind k;
  if (kind == "loop")
    k = SiteKind::loop;
  else if (kind == "linear")
    k = SiteKind::linear;
  else
    fail(ErrorKind::BadInput, "site kind must be \"loop\" or \"linear\"");

  if (base == "cyclic") return Site::make(k, BaseOrder::cyclic, get_int(j, "rank"));
  if (base == "int" || base == "integers") return Site::make(k, BaseOrder::integers, 0);
  if (base == "int_pairs_lex" || base == "pairs")
    return Site::make(k, BaseOrder::int_pairs_lex, 0);
  if (base == "finite") return Site::make(k, BaseOrder::finite, get_int(j, "size"));
  fail(ErrorKind::BadInput, "unknown base order \"" + base + "\"");
}

json vertex_to_json(const Site& s, const Vertex& v) {
  if (s.base() == BaseOrder::int_pairs_lex) return json::array({v.x, v.y});
  return json(v.x);
}

Vertex vertex_from_json(const Site& s, const json& j) {
  Vertex v;
  if (s.base() == BaseOrder::int_pairs_lex) {
    if (!(j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
          j[1].is_number_integer()))
      fail(ErrorKind::BadInput, "vertex must be a pair [x, y] on this site");
    v = Vertex{j[0].get<long long>(), j[1].get<long long>()};
  } else {
    if (!j.is_number_integer()) fail(ErrorKind::BadInput, "vertex must be an integer");
    v = Vertex{j.get<long long>(), 0};
  }
  s.require_vertex(v);
  return v;
}

json point_to_json(const Site& s, const CoverPoint& p) {
  json j;
  j["deck"] = p.deck;
  j["v"] = vertex_to_json(s, p.v);
  return j;
}

CoverPoint point_from_json(const Site& s, const json& j) {
  if (!j.is_object() || !j.contains("v"))
    fail(ErrorKind::BadInput, "cover point must be {\"deck\":d,\"v\":v}");
  CoverPoint p{get_int_or(j, "deck", 0), vertex_from_json(s, j["v"])};
  s.require_point(p);
  return p;
}

json object_to_json(const IntervalObject& x) {
  json j;
  j["socle"] = vertex_to_json(x.site(), x.socle());
  j["top"] = vertex_to_json(x.site(), x.top());
  j["winding"] = x.winding();
  j["label"] = x.label();
  return j;
}

IntervalObject object_from_json(const Site& s, const json& j) {
  if (!j.is_object()) fail(ErrorKind::BadInput, "object must be a JSON object");
  if (j.contains("socle")) {
    Vertex socle = vertex_from_json(s, j["socle"]);
    Vertex top = vertex_from_json(s, get_field(j, "top"));
    long long winding = get_int_or(j, "winding", 0);
    return IntervalObject::make(s, socle, top, winding);
  }
  if (j.contains("a") && j.contains("b"))
    return IntervalObject::from_cover(s, point_from_json(s, j["a"]),
                                      point_from_json(s, j["b"]));
  fail(ErrorKind::BadInput, "object needs socle/top/winding or a/b cover points");
}

json hom_to_json(const HomSpace& h) {
  json j;
  j["dim"] = h.dim();
  j["basis"] = h.basis();
  return j;
}

json ar_to_json(const ArData& d) {
  json j;
  j["start"] = object_to_json(d.start);
  j["middle"] = json::array();
  for (const IntervalObject& m : d.middle) j["middle"].push_back(object_to_json(m));
  j["end"] = object_to_json(d.end);
  return j;
}

json chain_to_json(const SubobjectChain& c) {
  json j;
  j["complete"] = c.complete;
  j["count_with_zero"] = c.count_with_zero();
  j["subs"] = json::array();
  for (const IntervalObject& s : c.subs) j["subs"].push_back(object_to_json(s));
  return j;
}

json witness_to_json(const PathWitness& w) {
  json j;
  switch (w.shape) {
    case PathWitness::Shape::identity:
      j["shape"] = "identity";
      break;
    case PathWitness::Shape::direct:
      j["shape"] = "direct";
      break;
    case PathWitness::Shape::via:
      j["shape"] = "via";
      break;
    case PathWitness::Shape::meet:
      j["shape"] = "meet";
      break;
  }
  j["forward"] = w.forward;
  if (w.middle) j["middle"] = object_to_json(*w.middle);
  return j;
}

json perp_to_json(const PerpPresentation& pp) {
  json j;
  j["ambient"] = site_to_json(pp.ambient());
  j["inner"] = site_to_json(pp.inner());
  j["keep"] = json::array();
  for (const Vertex& v : pp.keep()) j["keep"].push_back(vertex_to_json(pp.ambient(), v));
  j["simples"] = json::array();
  for (std::size_t i = 0; i < pp.rank(); ++i) {
    bool exists = pp.ambient().is_loop() || pp.ambient().base() == BaseOrder::finite
                      ? true
                      : i + 1 < pp.rank();
    if (exists) j["simples"].push_back(object_to_json(pp.inner_simple_ambient(i)));
  }
  return j;
}

}  // namespace unitube
