#ifndef UNITUBE_PROALGEBRA_HPP
#define UNITUBE_PROALGEBRA_HPP

#include <string>
#include <utility>
#include <vector>

#include "unitube/ar.hpp"
#include "unitube/series.hpp"

namespace unitube {

// ---------------------------------------------------------------------------
// Injective rays
// ---------------------------------------------------------------------------

// Injective envelope of the simple at `socle` on a loop site, modeled as the
// half-infinite interval [a, oo) with the socle lift normalized to deck 0.
struct InjectiveRay {
  static InjectiveRay make(const Site& site, const Vertex& socle);

  Site site;
  CoverPoint a;

  Vertex socle() const { return a.v; }
  std::string label() const;
};

// Hom(src, dst) between rays has basis f_k for k >= k0, where
// k0 = min{k : sigma^k(a_dst) >= a_src}; f_k is identified with x^k, so the
// space reads as k[[x]] (k0 = 0) or xk[[x]] (k0 = 1).
struct RayHom {
  InjectiveRay src, dst;
  long long k0 = 0;
  long long precision = 0;

  int min_order() const { return static_cast<int>(k0); }
  std::string space_str() const { return k0 == 0 ? "k[[x]]" : "xk[[x]]"; }
  TruncatedSeries basis_series(long long k) const;
};

RayHom ray_hom(const InjectiveRay& src, const InjectiveRay& dst, long long precision);

// Composition of ray homs under the x^k identification: f_k o f_l = f_{k+l}
// with no vanishing, i.e. plain series multiplication.
TruncatedSeries ray_compose(const TruncatedSeries& g, const TruncatedSeries& f);

// ---------------------------------------------------------------------------
// Completed matrix algebra End(I_0 + ... + I_{m-1})
// ---------------------------------------------------------------------------

// m x m matrices with slot (i, j) = Hom(I_j, I_i), a series in k[[x]] on and
// below the diagonal and in xk[[x]] above it (indices in the anchored order).
// This is the truncation of the completed path algebra of the cyclic quiver
// on m vertices: x^p in slot (i, j) is the path j -> i of length p*m + (i-j).
class SeriesMatrixAlgebra {
 public:
  struct Element {
    long long m = 0;
    std::vector<TruncatedSeries> slots;  // row-major

    const TruncatedSeries& at(long long i, long long j) const;
    TruncatedSeries& at(long long i, long long j);
  };

  static SeriesMatrixAlgebra make(long long size, long long precision);

  long long size() const { return m_; }
  long long precision() const { return n_; }

  int slot_min_order(long long i, long long j) const { return j > i ? 1 : 0; }
  long long path_length(long long i, long long j, long long power) const {
    return power * m_ + (i - j);
  }

  Element zero() const;
  Element unit() const;
  Element basis(long long i, long long j, long long power) const;

  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  bool eq(const Element& a, const Element& b) const;
  bool is_zero(const Element& a) const;

  // x-adic/radical filtration: the degree-d ideal consists of the elements
  // whose (i, j) slot is divisible by x^{filtration_min_power(d, i, j)}
  // (equivalently: supported on paths of length >= d).
  long long filtration_min_power(long long d, long long i, long long j) const;
  bool in_filtration(const Element& e, long long d) const;

 private:
  SeriesMatrixAlgebra(long long m, long long n) : m_(m), n_(n) {}
  void require_slot(long long i, long long j) const;

  long long m_, n_;
};

// The endomorphism algebra of the injectives of the kept simples on a loop
// site, rows/columns in the anchored order (ascending from the anchor).
SeriesMatrixAlgebra inj_matrix_algebra(const Site& site, std::vector<Vertex> keep,
                                       long long precision);

// ---------------------------------------------------------------------------
// Path coalgebra of the cyclic quiver
// ---------------------------------------------------------------------------

// Path of the cyclic quiver with arrows v -> v+1 (mod rank): starts at
// `source`, traverses `len` arrows.
struct QuiverPath {
  long long source = 0;
  long long len = 0;

  friend bool operator==(const QuiverPath& p, const QuiverPath& q) {
    return p.source == q.source && p.len == q.len;
  }
  friend bool operator!=(const QuiverPath& p, const QuiverPath& q) { return !(p == q); }
  friend bool operator<(const QuiverPath& p, const QuiverPath& q) {
    return p.source != q.source ? p.source < q.source : p.len < q.len;
  }
};

class PathCoalgebra {
 public:
  static PathCoalgebra make(long long rank, long long max_len);

  long long rank() const { return r_; }
  long long max_len() const { return n_; }

  bool valid(const QuiverPath& p) const;
  long long target(const QuiverPath& p) const;
  std::vector<QuiverPath> basis() const;

  // Delta(a) = sum over factorizations a = p.q (q traversed first) of p (x) q.
  std::vector<std::pair<QuiverPath, QuiverPath>> comultiply(const QuiverPath& a) const;
  int counit(const QuiverPath& p) const { return p.len == 0 ? 1 : 0; }

  std::string path_str(const QuiverPath& p) const;

 private:
  PathCoalgebra(long long r, long long n) : r_(r), n_(n) {}
  long long r_, n_;
};

// Coassociativity and counit laws on every basis path.
bool coalgebra_axioms_ok(const PathCoalgebra& c, std::string* why = nullptr);

// The dual algebra of the coalgebra (convolution on dual basis paths) has
// the structure constants of the completed matrix algebra: checked pairwise
// for all paths with combined length <= max_len against size-r truncation
// at max_len + 1.
bool coalgebra_dual_check(const PathCoalgebra& c, std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Comodule structure of finite-length tube objects
// ---------------------------------------------------------------------------

struct CoactionTerm {
  long long point = 0;  // flattened basis point of the object
  QuiverPath path;
};

struct CoactionTable {
  IntervalObject object;
  PathCoalgebra coalgebra;
  std::vector<std::vector<CoactionTerm>> rows;  // per basis point, socle upward

  long long basis_flat(std::size_t idx) const;
};

CoactionTable comodule_coaction(const IntervalObject& x);
bool comodule_axioms_ok(const CoactionTable& t, std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Transport along base bijections
// ---------------------------------------------------------------------------

// Closed list of vertex bijections; everything except int_negate preserves
// succ/pred and the anchored order, and int_negate is rejected.
struct VertexBijection {
  enum class Kind { identity, int_shift, cyclic_rotate, pair_shift, int_negate };

  Kind kind = Kind::identity;
  long long amount = 0;

  static VertexBijection identity() { return {Kind::identity, 0}; }
  static VertexBijection int_shift(long long k) { return {Kind::int_shift, k}; }
  static VertexBijection cyclic_rotate(long long k) { return {Kind::cyclic_rotate, k}; }
  static VertexBijection pair_shift(long long k) { return {Kind::pair_shift, k}; }
  static VertexBijection int_negate() { return {Kind::int_negate, 0}; }

  std::string describe() const;
};

// Object-level functor induced by a vertex bijection: socle and top map
// through the bijection, the winding is kept.  Hom/Ext dimensions, tau and
// AR data are invariant (asserted by tests, not assumed).
class Transport {
 public:
  static Transport make(const Site& from, const Site& to, const VertexBijection& bij);

  const Site& from() const { return from_; }
  const Site& to() const { return to_; }
  const VertexBijection& bijection() const { return bij_; }

  Vertex apply_vertex(const Vertex& v) const;
  IntervalObject apply(const IntervalObject& x) const;

 private:
  Transport(Site f, Site t, VertexBijection b) : from_(f), to_(t), bij_(b) {}

  Site from_, to_;
  VertexBijection bij_;
};

}  // namespace unitube

#endif
