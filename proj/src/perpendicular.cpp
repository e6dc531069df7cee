#include "unitube/perpendicular.hpp"

#include <algorithm>

namespace unitube {

namespace {

bool base_has_max(const Site& s) { return s.base() == BaseOrder::finite; }

}  // namespace

PerpPresentation PerpPresentation::make(const Site& ambient, std::vector<Vertex> keep) {
  for (const Vertex& v : keep) ambient.require_vertex(v);
  std::sort(keep.begin(), keep.end(), [&](const Vertex& a, const Vertex& b) {
    return ambient.cmp_vertex(a, b) < 0;
  });
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) fail(ErrorKind::EmptyKeepSet, "on " + ambient.describe());

  long long m = static_cast<long long>(keep.size());
  Site inner = ambient.is_loop() ? Site::loop_cyclic(m)
               : base_has_max(ambient) ? Site::linear_finite(m)
                                       : Site::linear_finite(m - 1);
  return PerpPresentation(ambient, inner, std::move(keep));
}

const Vertex& PerpPresentation::vertex_at(std::size_t pos) const {
  if (pos >= keep_.size()) fail(ErrorKind::OutOfRange, "no kept vertex at that position");
  return keep_[pos];
}

std::optional<std::size_t> PerpPresentation::position_of(const Vertex& v) const {
  auto it = std::lower_bound(keep_.begin(), keep_.end(), v,
                             [&](const Vertex& a, const Vertex& b) {
                               return ambient_.cmp_vertex(a, b) < 0;
                             });
  if (it == keep_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - keep_.begin());
}

bool PerpPresentation::contains(const IntervalObject& x) const {
  if (x.site() != ambient_) fail(ErrorKind::SiteMismatch, x.site().describe());
  if (!position_of(x.socle())) return false;
  std::optional<Vertex> above = ambient_.vertex_succ(x.top());
  return !above || position_of(*above).has_value();
}

IntervalObject PerpPresentation::include(const IntervalObject& x_inner) const {
  if (x_inner.site() != inner_)
    fail(ErrorKind::SiteMismatch,
         x_inner.site().describe() + " is not the inner site " + inner_.describe());
  long long m = static_cast<long long>(keep_.size());
  if (ambient_.is_loop()) {
    long long i = x_inner.socle().x;
    long long j = x_inner.top().x;
    Vertex socle = keep_[static_cast<std::size_t>(i)];
    Vertex top = *ambient_.vertex_pred(keep_[static_cast<std::size_t>((j + 1) % m)]);
    return IntervalObject::make(ambient_, socle, top, x_inner.winding());
  }
  long long i = x_inner.socle().x - 1;  // finite-site vertices are 1-based
  long long j = x_inner.top().x - 1;
  Vertex socle = keep_[static_cast<std::size_t>(i)];
  Vertex top;
  if (j + 1 == m) {
    top = *ambient_.max_vertex();
  } else {
    top = *ambient_.vertex_pred(keep_[static_cast<std::size_t>(j + 1)]);
  }
  return IntervalObject::make(ambient_, socle, top, 0);
}

std::optional<IntervalObject> PerpPresentation::reflect(const IntervalObject& x) const {
  if (x.site() != ambient_) fail(ErrorKind::SiteMismatch, x.site().describe());
  long long m = static_cast<long long>(keep_.size());

  auto count_geq = [&](const Vertex& v) {  // kept vertices >= v, they sit at the tail
    long long c = 0;
    for (const Vertex& w : keep_)
      if (ambient_.cmp_vertex(w, v) >= 0) ++c;
    return c;
  };
  auto count_leq = [&](const Vertex& v) {
    long long c = 0;
    for (const Vertex& w : keep_)
      if (ambient_.cmp_vertex(w, v) <= 0) ++c;
    return c;
  };

  if (ambient_.is_loop()) {
    long long deck_span = x.b().deck;  // canonical form puts a on deck 0
    long long first_pos, hits;
    if (deck_span == 0) {
      long long lo = m - count_geq(x.socle());
      long long hi = count_leq(x.top()) - 1;
      hits = hi - lo + 1;
      first_pos = lo;
    } else {
      long long c0 = count_geq(x.socle());
      long long cd = count_leq(x.top());
      hits = c0 + (deck_span - 1) * m + cd;
      first_pos = c0 > 0 ? m - c0 : 0;
    }
    if (hits <= 0) return std::nullopt;
    CoverPoint a_in{0, {first_pos, 0}};
    CoverPoint b_in = inner_.from_flat(first_pos + hits - 1);
    return IntervalObject::from_cover(inner_, a_in, b_in);
  }

  long long lo = m - count_geq(x.socle());
  long long hi = count_leq(x.top()) - 1;
  if (hi < lo) return std::nullopt;
  if (!base_has_max(ambient_) && hi == m - 1) return std::nullopt;
  CoverPoint a_in{0, {lo + 1, 0}};
  CoverPoint b_in{0, {hi + 1, 0}};
  return IntervalObject::from_cover(inner_, a_in, b_in);
}

IntervalObject PerpPresentation::inner_of(const IntervalObject& x) const {
  if (!contains(x)) fail(ErrorKind::NotInSubcategory, x.label() + " on " + ambient_.describe());
  std::optional<IntervalObject> r = reflect(x);
  if (!r) fail(ErrorKind::NotInSubcategory, x.label() + " reflects to zero");
  return *r;
}

IntervalObject PerpPresentation::inner_simple_ambient(std::size_t pos) const {
  if (pos >= keep_.size()) fail(ErrorKind::OutOfRange, "no kept vertex at that position");
  long long p = static_cast<long long>(pos);
  Vertex v = ambient_.is_loop() ? Vertex{p, 0} : Vertex{p + 1, 0};
  return include(IntervalObject::make(inner_, v, v, 0));
}

long long PerpPresentation::hom_via_window(const IntervalObject& x,
                                           const IntervalObject& y) const {
  return hom_dim(inner_of(x), inner_of(y));
}

}  // namespace unitube
