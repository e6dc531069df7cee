#ifndef UNITUBE_HOM_HPP
#define UNITUBE_HOM_HPP

#include <map>
#include <vector>

#include "unitube/field.hpp"
#include "unitube/interval.hpp"

namespace unitube {

// Hom(X, Y) has the basis maps f_k indexed by the deck shifts k with
//
//   a_X <= sigma^k(a_Y) <= b_X <= sigma^k(b_Y).
//
// The indices form a contiguous window [k_min, k_max]; on linear sites only
// k = 0 can occur.  f_k kills the part of X below sigma^k(a_Y) and drops the
// rest onto Y, so its image is [sigma^k(a_Y), b_X].
struct HomSpace {
  IntervalObject src, dst;
  long long k_min = 0, k_max = -1;

  long long dim() const { return k_max < k_min ? 0 : k_max - k_min + 1; }
  std::vector<long long> basis() const {
    std::vector<long long> ks;
    for (long long k = k_min; k <= k_max; ++k) ks.push_back(k);
    return ks;
  }
  bool contains(long long k) const { return k >= k_min && k <= k_max; }
};

HomSpace hom_space(const IntervalObject& x, const IntervalObject& y);
long long hom_dim(const IntervalObject& x, const IntervalObject& y);

// f_k is injective iff sigma^k(a_Y) = a_X and surjective iff sigma^k(b_Y) = b_X.
bool basis_is_mono(const HomSpace& h, long long k);
bool basis_is_epi(const HomSpace& h, long long k);

bool has_mono(const IntervalObject& x, const IntervalObject& y);
bool has_epi(const IntervalObject& x, const IntervalObject& y);
inline bool is_subobject(const IntervalObject& x, const IntervalObject& y) {
  return has_mono(x, y);
}
inline bool is_quotient(const IntervalObject& x, const IntervalObject& y) {
  return has_epi(x, y);
}

bool is_isomorphic(const IntervalObject& x, const IntervalObject& y);

// Linear combination of basis maps.
struct Morphism {
  IntervalObject src, dst;
  std::map<long long, Rat> coeff;  // k -> coefficient of f_k, no zero entries

  static Morphism zero(const IntervalObject& x, const IntervalObject& y);
  static Morphism identity(const IntervalObject& x);
  static Morphism basis(const IntervalObject& x, const IntervalObject& y, long long k);

  bool is_zero() const { return coeff.empty(); }
};

// g after f.  On basis maps: g_l o f_k = f_{k+l} when sigma^{k+l}(a_Z) <= b_X
// (the image survives the second kill), otherwise zero.
Morphism compose(const Morphism& g, const Morphism& f);

// A nonzero morphism is injective/surjective exactly when its lowest-index
// basis term is.
bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);

}  // namespace unitube

#endif
