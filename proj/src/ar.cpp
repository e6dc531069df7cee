#include "unitube/ar.hpp"

#include <algorithm>

namespace unitube {

IntervalObject tau(const IntervalObject& x) {
  const Site& s = x.site();
  if (x.is_projective())
    fail(ErrorKind::ProjectiveObject, x.label() + " on " + s.describe());
  return IntervalObject::from_cover(s, s.pred(x.a()), s.pred(x.b()));
}

IntervalObject tau_inv(const IntervalObject& x) {
  const Site& s = x.site();
  if (x.is_injective())
    fail(ErrorKind::InjectiveObject, x.label() + " on " + s.describe());
  return IntervalObject::from_cover(s, s.succ(x.a()), s.succ(x.b()));
}

long long ext_dim(const IntervalObject& x, const IntervalObject& y) {
  if (x.site() != y.site())
    fail(ErrorKind::SiteMismatch, x.site().describe() + " vs " + y.site().describe());
  if (x.is_projective()) return 0;
  return hom_dim(y, tau(x));
}

ArData ar_sequence(const IntervalObject& x) {
  const Site& s = x.site();
  IntervalObject start = tau(x);  // rejects projectives
  std::vector<IntervalObject> middle;
  middle.push_back(IntervalObject::from_cover(s, s.pred(x.a()), x.b()));
  CoverPoint pb = s.pred(x.b());
  if (s.cmp(pb, x.a()) >= 0)
    middle.push_back(IntervalObject::from_cover(s, x.a(), pb));
  return ArData{start, middle, x};
}

std::vector<IntervalObject> irreducibles_out(const IntervalObject& x) {
  const Site& s = x.site();
  std::vector<IntervalObject> out;
  CoverPoint sa = {0, {0, 0}};
  bool have_sa = true;
  try {
    sa = s.succ(x.a());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OutOfRange) throw;
    have_sa = false;
  }
  if (have_sa && s.cmp(sa, x.b()) <= 0)
    out.push_back(IntervalObject::from_cover(s, sa, x.b()));
  try {
    out.push_back(IntervalObject::from_cover(s, x.a(), s.succ(x.b())));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OutOfRange) throw;  // b maximal: no extension upward
  }
  return out;
}

std::vector<IntervalObject> irreducibles_in(const IntervalObject& x) {
  const Site& s = x.site();
  std::vector<IntervalObject> in;
  try {
    in.push_back(IntervalObject::from_cover(s, s.pred(x.a()), x.b()));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OutOfRange) throw;  // a minimal: nothing maps onto X
  }
  try {
    CoverPoint pb = s.pred(x.b());
    if (s.cmp(pb, x.a()) >= 0)
      in.push_back(IntervalObject::from_cover(s, x.a(), pb));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OutOfRange) throw;
  }
  return in;
}

SubobjectChain subobject_chain(const IntervalObject& x, long long limit) {
  if (limit < 0) fail(ErrorKind::BadInput, "negative limit");
  const Site& s = x.site();
  SubobjectChain chain;
  CoverPoint d = x.a();
  while (static_cast<long long>(chain.subs.size()) < limit) {
    chain.subs.push_back(IntervalObject::from_cover(s, x.a(), d));
    if (d == x.b()) {
      chain.complete = true;
      break;
    }
    d = s.succ(d);
  }
  return chain;
}

static PathWitness direct_witness(bool forward) {
  return PathWitness{PathWitness::Shape::direct, forward, std::nullopt};
}

static PathWitness via_witness(bool forward, IntervalObject z) {
  return PathWitness{PathWitness::Shape::via, forward, std::move(z)};
}

PathWitness path_within_two(const IntervalObject& x, const IntervalObject& y) {
  if (x.site() != y.site())
    fail(ErrorKind::SiteMismatch, x.site().describe() + " vs " + y.site().describe());
  const Site& s = x.site();
  if (x == y) return PathWitness{PathWitness::Shape::identity, true, std::nullopt};
  if (hom_dim(x, y) > 0) return direct_witness(true);

  if (s.is_loop()) {
    // hop through the object with socle top(X) and top socle(Y)
    long long l = s.min_shift_geq(y.a(), x.b());
    IntervalObject z = IntervalObject::from_cover(s, x.b(), s.shift(y.a(), l));
    return via_witness(true, z);
  }

  bool fwd = s.cmp(x.a(), y.a()) <= 0 && s.cmp(x.b(), y.b()) <= 0;
  bool bwd = s.cmp(y.a(), x.a()) <= 0 && s.cmp(y.b(), x.b()) <= 0;
  if (fwd) {
    // hom vanished, so the intervals are disjoint with X below Y
    IntervalObject z = IntervalObject::from_cover(s, x.b(), y.a());
    return via_witness(true, z);
  }
  if (hom_dim(y, x) > 0) return direct_witness(false);
  if (bwd) {
    IntervalObject z = IntervalObject::from_cover(s, y.b(), x.a());
    return via_witness(false, z);
  }
  // nested intervals: both map into the span of the upper ends
  CoverPoint lo = s.cmp(x.a(), y.a()) >= 0 ? x.a() : y.a();
  CoverPoint hi = s.cmp(x.b(), y.b()) >= 0 ? x.b() : y.b();
  IntervalObject z = IntervalObject::from_cover(s, lo, hi);
  return PathWitness{PathWitness::Shape::meet, true, z};
}

IntervalObject endo_simple_between(const Site& site, const Vertex& socle, const Vertex& top) {
  if (!site.is_loop() && site.cmp_vertex(socle, top) > 0)
    fail(ErrorKind::NoPath,
         "no object from " + site.vertex_str(socle) + " to " + site.vertex_str(top) +
             " on " + site.describe());
  return IntervalObject::make(site, socle, top, 0);
}

bool anchored_leq(const Site& site, const Vertex& anchor, const Vertex& t1, const Vertex& t2) {
  IntervalObject x1 = endo_simple_between(site, anchor, t1);
  IntervalObject x2 = endo_simple_between(site, anchor, t2);
  return site.cmp(x1.b(), x2.b()) <= 0;
}

}  // namespace unitube
