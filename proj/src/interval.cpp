#include "unitube/interval.hpp"

namespace unitube {

IntervalObject IntervalObject::make(const Site& site, const Vertex& socle, const Vertex& top,
                                    long long winding) {
  site.require_vertex(socle);
  site.require_vertex(top);
  if (site.is_loop()) {
    if (winding < 0) fail(ErrorKind::InvalidLabel, "winding must be >= 0");
    long long delta = site.cmp_vertex(socle, top) > 0 ? 1 : 0;
    return IntervalObject(site, CoverPoint{0, socle}, CoverPoint{winding + delta, top});
  }
  if (winding != 0)
    fail(ErrorKind::InvalidLabel, "nonzero winding on linear site " + site.describe());
  if (site.cmp_vertex(socle, top) > 0)
    fail(ErrorKind::InvalidLabel, "socle above top on linear site");
  return IntervalObject(site, CoverPoint{0, socle}, CoverPoint{0, top});
}

IntervalObject IntervalObject::from_cover(const Site& site, CoverPoint a, CoverPoint b) {
  site.require_point(a);
  site.require_point(b);
  if (site.cmp(a, b) > 0) fail(ErrorKind::InvalidLabel, "empty interval: a > b");
  if (site.is_loop() && a.deck != 0) {
    long long d = a.deck;
    a.deck = 0;
    b.deck -= d;
  }
  return IntervalObject(site, a, b);
}

long long IntervalObject::winding() const {
  if (!site_.is_loop()) return 0;
  // a sits on deck 0, so this is max{k : sigma^k(a) <= b}
  return site_.max_shift_leq(a_, b_);
}

std::optional<long long> IntervalObject::length() const {
  auto steps = site_.steps_between(a_, b_);
  if (!steps) return std::nullopt;
  return *steps + 1;
}

bool IntervalObject::is_projective() const {
  return site_.kind() == SiteKind::linear && !site_.vertex_pred(a_.v).has_value();
}

bool IntervalObject::is_injective() const {
  return site_.kind() == SiteKind::linear && !site_.vertex_succ(b_.v).has_value();
}

std::string IntervalObject::label() const {
  return "M(" + site_.vertex_str(socle()) + "," + site_.vertex_str(top()) + ";" +
         std::to_string(winding()) + ")";
}

bool operator<(const IntervalObject& x, const IntervalObject& y) {
  const Site& s = x.site_;
  if (int c = s.cmp(x.a_, y.a_)) return c < 0;
  return s.cmp(x.b_, y.b_) < 0;
}

}  // namespace unitube
