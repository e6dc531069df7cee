#include "unitube/hom.hpp"

namespace unitube {

static void require_same_site(const IntervalObject& x, const IntervalObject& y) {
  if (x.site() != y.site())
    fail(ErrorKind::SiteMismatch,
         x.site().describe() + " vs " + y.site().describe());
}

HomSpace hom_space(const IntervalObject& x, const IntervalObject& y) {
  require_same_site(x, y);
  const Site& s = x.site();
  HomSpace h{x, y, 0, -1};
  if (s.is_loop()) {
    long long lo = std::max(s.min_shift_geq(y.a(), x.a()), s.min_shift_geq(y.b(), x.b()));
    long long hi = s.max_shift_leq(y.a(), x.b());
    h.k_min = lo;
    h.k_max = hi;
    if (h.k_max < h.k_min) { h.k_min = 0; h.k_max = -1; }
    return h;
  }
  bool nonzero = s.cmp(x.a(), y.a()) <= 0 && s.cmp(y.a(), x.b()) <= 0 &&
                 s.cmp(x.b(), y.b()) <= 0;
  if (nonzero) { h.k_min = 0; h.k_max = 0; }
  return h;
}

long long hom_dim(const IntervalObject& x, const IntervalObject& y) {
  return hom_space(x, y).dim();
}

bool basis_is_mono(const HomSpace& h, long long k) {
  if (!h.contains(k)) return false;
  const Site& s = h.src.site();
  CoverPoint ay = s.is_loop() ? s.shift(h.dst.a(), k) : h.dst.a();
  return ay == h.src.a();
}

bool basis_is_epi(const HomSpace& h, long long k) {
  if (!h.contains(k)) return false;
  const Site& s = h.src.site();
  CoverPoint by = s.is_loop() ? s.shift(h.dst.b(), k) : h.dst.b();
  return by == h.src.b();
}

bool has_mono(const IntervalObject& x, const IntervalObject& y) {
  HomSpace h = hom_space(x, y);
  for (long long k = h.k_min; k <= h.k_max; ++k)
    if (basis_is_mono(h, k)) return true;
  return false;
}

bool has_epi(const IntervalObject& x, const IntervalObject& y) {
  HomSpace h = hom_space(x, y);
  for (long long k = h.k_min; k <= h.k_max; ++k)
    if (basis_is_epi(h, k)) return true;
  return false;
}

bool is_isomorphic(const IntervalObject& x, const IntervalObject& y) {
  return x == y;  // canonical forms
}

Morphism Morphism::zero(const IntervalObject& x, const IntervalObject& y) {
  require_same_site(x, y);
  return Morphism{x, y, {}};
}

Morphism Morphism::identity(const IntervalObject& x) {
  return Morphism{x, x, {{0, Rat(1)}}};
}

Morphism Morphism::basis(const IntervalObject& x, const IntervalObject& y, long long k) {
  HomSpace h = hom_space(x, y);
  if (!h.contains(k))
    fail(ErrorKind::OutOfRange, "f_" + std::to_string(k) + " outside hom window");
  return Morphism{x, y, {{k, Rat(1)}}};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.dst != g.src)
    fail(ErrorKind::CompositionMismatch,
         "middle objects differ: " + f.dst.label() + " vs " + g.src.label());
  const Site& s = f.src.site();
  Morphism r = Morphism::zero(f.src, g.dst);
  for (const auto& [k, ck] : f.coeff)
    for (const auto& [l, cl] : g.coeff) {
      bool survives;
      if (s.is_loop()) {
        survives = s.cmp(s.shift(g.dst.a(), k + l), f.src.b()) <= 0;
      } else {
        survives = s.cmp(g.dst.a(), f.src.b()) <= 0;
      }
      if (!survives) continue;
      Rat c = ck * cl;
      auto it = r.coeff.find(k + l);
      if (it == r.coeff.end()) {
        if (!rat_is_zero(c)) r.coeff.emplace(k + l, c);
      } else {
        it->second += c;
        if (rat_is_zero(it->second)) r.coeff.erase(it);
      }
    }
  return r;
}

bool is_mono(const Morphism& f) {
  if (f.coeff.empty()) return false;
  HomSpace h = hom_space(f.src, f.dst);
  return basis_is_mono(h, f.coeff.begin()->first);
}

bool is_epi(const Morphism& f) {
  if (f.coeff.empty()) return false;
  HomSpace h = hom_space(f.src, f.dst);
  return basis_is_epi(h, f.coeff.begin()->first);
}

}  // namespace unitube
