#include "unitube/site.hpp"

namespace unitube {

Site Site::loop_cyclic(long long rank) {
  if (rank < 1) fail(ErrorKind::BadInput, "cyclic base needs rank >= 1");
  return Site(SiteKind::loop, BaseOrder::cyclic, rank);
}

Site Site::loop_int() { return Site(SiteKind::loop, BaseOrder::integers, 0); }
Site Site::loop_int_pairs() { return Site(SiteKind::loop, BaseOrder::int_pairs_lex, 0); }
Site Site::linear_int() { return Site(SiteKind::linear, BaseOrder::integers, 0); }
Site Site::linear_int_pairs() { return Site(SiteKind::linear, BaseOrder::int_pairs_lex, 0); }

Site Site::linear_finite(long long size) {
  if (size < 0) fail(ErrorKind::BadInput, "finite base needs size >= 0");
  return Site(SiteKind::linear, BaseOrder::finite, size);
}

Site Site::make(SiteKind kind, BaseOrder base, long long param) {
  switch (base) {
    case BaseOrder::cyclic:
      if (kind != SiteKind::loop)
        fail(ErrorKind::BadInput, "cyclic base requires a loop site");
      return loop_cyclic(param);
    case BaseOrder::finite:
      if (kind != SiteKind::linear)
        fail(ErrorKind::BadInput, "finite base requires a linear site");
      return linear_finite(param);
    case BaseOrder::integers:
      return kind == SiteKind::loop ? loop_int() : linear_int();
    case BaseOrder::int_pairs_lex:
      return kind == SiteKind::loop ? loop_int_pairs() : linear_int_pairs();
  }
  fail(ErrorKind::BadInput, "unknown base order");
}

long long Site::rank() const {
  if (base_ != BaseOrder::cyclic) fail(ErrorKind::BadInput, "rank() on non-cyclic base");
  return param_;
}

long long Site::size() const {
  if (base_ != BaseOrder::finite) fail(ErrorKind::BadInput, "size() on non-finite base");
  return param_;
}

bool Site::vertex_valid(const Vertex& v) const {
  switch (base_) {
    case BaseOrder::cyclic: return v.y == 0 && v.x >= 0 && v.x < param_;
    case BaseOrder::integers: return v.y == 0;
    case BaseOrder::int_pairs_lex: return true;
    case BaseOrder::finite: return v.y == 0 && v.x >= 1 && v.x <= param_;
  }
  return false;
}

void Site::require_vertex(const Vertex& v) const {
  if (!vertex_valid(v))
    fail(ErrorKind::OutOfRange, "vertex " + vertex_str(v) + " not in " + describe());
}

int Site::cmp_vertex(const Vertex& a, const Vertex& b) const {
  if (base_ == BaseOrder::int_pairs_lex) {
    if (a.x != b.x) return a.x < b.x ? -1 : 1;
    if (a.y != b.y) return a.y < b.y ? -1 : 1;
    return 0;
  }
  if (a.x != b.x) return a.x < b.x ? -1 : 1;
  return 0;
}

std::optional<Vertex> Site::vertex_succ(const Vertex& v) const {
  require_vertex(v);
  switch (base_) {
    case BaseOrder::cyclic: return Vertex{(v.x + 1) % param_, 0};
    case BaseOrder::integers: return Vertex{v.x + 1, 0};
    case BaseOrder::int_pairs_lex: return Vertex{v.x, v.y + 1};
    case BaseOrder::finite:
      if (v.x == param_) return std::nullopt;
      return Vertex{v.x + 1, 0};
  }
  return std::nullopt;
}

std::optional<Vertex> Site::vertex_pred(const Vertex& v) const {
  require_vertex(v);
  switch (base_) {
    case BaseOrder::cyclic: return Vertex{(v.x - 1 + param_) % param_, 0};
    case BaseOrder::integers: return Vertex{v.x - 1, 0};
    case BaseOrder::int_pairs_lex: return Vertex{v.x, v.y - 1};
    case BaseOrder::finite:
      if (v.x == 1) return std::nullopt;
      return Vertex{v.x - 1, 0};
  }
  return std::nullopt;
}

bool Site::point_valid(const CoverPoint& p) const {
  if (!vertex_valid(p.v)) return false;
  if (kind_ == SiteKind::linear && p.deck != 0) return false;
  return true;
}

void Site::require_point(const CoverPoint& p) const {
  if (!point_valid(p))
    fail(ErrorKind::OutOfRange, "point " + point_str(p) + " not in cover of " + describe());
}

int Site::cmp(const CoverPoint& a, const CoverPoint& b) const {
  if (a.deck != b.deck) return a.deck < b.deck ? -1 : 1;
  return cmp_vertex(a.v, b.v);
}

CoverPoint Site::succ(const CoverPoint& p) const {
  require_point(p);
  if (base_ == BaseOrder::cyclic) {
    if (p.v.x + 1 == param_) return CoverPoint{p.deck + 1, Vertex{0, 0}};
    return CoverPoint{p.deck, Vertex{p.v.x + 1, 0}};
  }
  auto n = vertex_succ(p.v);
  if (!n) fail(ErrorKind::OutOfRange, "succ past maximum of " + describe());
  return CoverPoint{p.deck, *n};
}

CoverPoint Site::pred(const CoverPoint& p) const {
  require_point(p);
  if (base_ == BaseOrder::cyclic) {
    if (p.v.x == 0) return CoverPoint{p.deck - 1, Vertex{param_ - 1, 0}};
    return CoverPoint{p.deck, Vertex{p.v.x - 1, 0}};
  }
  auto n = vertex_pred(p.v);
  if (!n) fail(ErrorKind::OutOfRange, "pred past minimum of " + describe());
  return CoverPoint{p.deck, *n};
}

CoverPoint Site::shift(const CoverPoint& p, long long k) const {
  require_point(p);
  if (kind_ != SiteKind::loop)
    fail(ErrorKind::NotALoop, "deck shift undefined on " + describe());
  return CoverPoint{p.deck + k, p.v};
}

long long Site::min_shift_geq(const CoverPoint& p, const CoverPoint& q) const {
  // (p.deck + k, p.v) >= (q.deck, q.v) lexicographically
  return q.deck - p.deck + (cmp_vertex(p.v, q.v) >= 0 ? 0 : 1);
}

long long Site::max_shift_leq(const CoverPoint& p, const CoverPoint& q) const {
  return q.deck - p.deck - (cmp_vertex(p.v, q.v) <= 0 ? 0 : 1);
}

std::optional<long long> Site::steps_between(const CoverPoint& a, const CoverPoint& b) const {
  require_point(a);
  require_point(b);
  long long steps = 0;
  switch (base_) {
    case BaseOrder::cyclic:
      steps = (b.deck - a.deck) * param_ + (b.v.x - a.v.x);
      break;
    case BaseOrder::integers:
    case BaseOrder::finite:
      if (a.deck != b.deck) return std::nullopt;
      steps = b.v.x - a.v.x;
      break;
    case BaseOrder::int_pairs_lex:
      if (a.deck != b.deck || a.v.x != b.v.x) return std::nullopt;
      steps = b.v.y - a.v.y;
      break;
  }
  if (steps < 0) return std::nullopt;
  return steps;
}

long long Site::flatten(const CoverPoint& p) const {
  if (base_ != BaseOrder::cyclic) fail(ErrorKind::BadInput, "flatten() on non-cyclic base");
  return p.deck * param_ + p.v.x;
}

CoverPoint Site::from_flat(long long z) const {
  if (base_ != BaseOrder::cyclic) fail(ErrorKind::BadInput, "from_flat() on non-cyclic base");
  long long v = z % param_;
  if (v < 0) v += param_;
  return CoverPoint{(z - v) / param_, Vertex{v, 0}};
}

std::optional<Vertex> Site::min_vertex() const {
  if (base_ == BaseOrder::finite && param_ >= 1) return Vertex{1, 0};
  return std::nullopt;
}

std::optional<Vertex> Site::max_vertex() const {
  if (base_ == BaseOrder::finite && param_ >= 1) return Vertex{param_, 0};
  return std::nullopt;
}

std::string Site::describe() const {
  std::string k = kind_ == SiteKind::loop ? "loop/" : "linear/";
  switch (base_) {
    case BaseOrder::cyclic: return k + "cyclic(" + std::to_string(param_) + ")";
    case BaseOrder::integers: return k + "int";
    case BaseOrder::int_pairs_lex: return k + "int_pairs_lex";
    case BaseOrder::finite: return k + "finite(" + std::to_string(param_) + ")";
  }
  return k + "?";
}

std::string Site::vertex_str(const Vertex& v) const {
  if (base_ == BaseOrder::int_pairs_lex)
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
  return std::to_string(v.x);
}

std::string Site::point_str(const CoverPoint& p) const {
  return "(" + std::to_string(p.deck) + ";" + vertex_str(p.v) + ")";
}

}  // namespace unitube
