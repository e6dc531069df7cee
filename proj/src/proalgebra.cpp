#include "unitube/proalgebra.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace unitube {

// ---------------------------------------------------------------------------
// Injective rays
// ---------------------------------------------------------------------------

InjectiveRay InjectiveRay::make(const Site& site, const Vertex& socle) {
  if (!site.is_loop()) fail(ErrorKind::NotALoop, "injective rays live on loop sites");
  site.require_vertex(socle);
  return InjectiveRay{site, CoverPoint{0, socle}};
}

std::string InjectiveRay::label() const { return "I(" + site.vertex_str(a.v) + ")"; }

TruncatedSeries RayHom::basis_series(long long k) const {
  if (k < k0) fail(ErrorKind::OutOfRange, "basis index below k0");
  return TruncatedSeries::monomial(precision, k);
}

RayHom ray_hom(const InjectiveRay& src, const InjectiveRay& dst, long long precision) {
  if (src.site != dst.site)
    fail(ErrorKind::SiteMismatch, src.site.describe() + " vs " + dst.site.describe());
  if (precision < 1) fail(ErrorKind::BadInput, "precision must be at least 1");
  long long k0 = src.site.min_shift_geq(dst.a, src.a);
  return RayHom{src, dst, k0, precision};
}

TruncatedSeries ray_compose(const TruncatedSeries& g, const TruncatedSeries& f) {
  return g.mul(f);
}

// ---------------------------------------------------------------------------
// Completed matrix algebra
// ---------------------------------------------------------------------------

const TruncatedSeries& SeriesMatrixAlgebra::Element::at(long long i, long long j) const {
  if (i < 0 || i >= m || j < 0 || j >= m) fail(ErrorKind::OutOfRange, "matrix slot");
  return slots[static_cast<std::size_t>(i * m + j)];
}

TruncatedSeries& SeriesMatrixAlgebra::Element::at(long long i, long long j) {
  if (i < 0 || i >= m || j < 0 || j >= m) fail(ErrorKind::OutOfRange, "matrix slot");
  return slots[static_cast<std::size_t>(i * m + j)];
}

SeriesMatrixAlgebra SeriesMatrixAlgebra::make(long long size, long long precision) {
  if (size < 1) fail(ErrorKind::BadInput, "matrix size must be at least 1");
  if (precision < 1) fail(ErrorKind::BadInput, "precision must be at least 1");
  return SeriesMatrixAlgebra(size, precision);
}

void SeriesMatrixAlgebra::require_slot(long long i, long long j) const {
  if (i < 0 || i >= m_ || j < 0 || j >= m_) fail(ErrorKind::OutOfRange, "matrix slot");
}

SeriesMatrixAlgebra::Element SeriesMatrixAlgebra::zero() const {
  Element e;
  e.m = m_;
  for (long long i = 0; i < m_; ++i)
    for (long long j = 0; j < m_; ++j)
      e.slots.push_back(TruncatedSeries::zero(n_, slot_min_order(i, j)));
  return e;
}

SeriesMatrixAlgebra::Element SeriesMatrixAlgebra::unit() const {
  Element e = zero();
  for (long long i = 0; i < m_; ++i) e.at(i, i) = TruncatedSeries::one(n_);
  return e;
}

SeriesMatrixAlgebra::Element SeriesMatrixAlgebra::basis(long long i, long long j,
                                                        long long power) const {
  require_slot(i, j);
  if (power < slot_min_order(i, j))
    fail(ErrorKind::BadInput, "power below the minimum order of the slot");
  Element e = zero();
  e.at(i, j) = TruncatedSeries::monomial(n_, power);
  return e;
}

SeriesMatrixAlgebra::Element SeriesMatrixAlgebra::add(const Element& a, const Element& b) const {
  if (a.m != m_ || b.m != m_) fail(ErrorKind::RankMismatch, "element size");
  Element out = a;
  for (std::size_t s = 0; s < out.slots.size(); ++s) out.slots[s] = out.slots[s].add(b.slots[s]);
  return out;
}

SeriesMatrixAlgebra::Element SeriesMatrixAlgebra::mul(const Element& a, const Element& b) const {
  if (a.m != m_ || b.m != m_) fail(ErrorKind::RankMismatch, "element size");
  Element out = zero();
  for (long long i = 0; i < m_; ++i)
    for (long long j = 0; j < m_; ++j) {
      TruncatedSeries acc = out.at(i, j);
      for (long long t = 0; t < m_; ++t) acc = acc.add(a.at(i, t).mul(b.at(t, j)));
      out.at(i, j) = acc;
    }
  return out;
}

bool SeriesMatrixAlgebra::eq(const Element& a, const Element& b) const {
  if (a.m != m_ || b.m != m_) fail(ErrorKind::RankMismatch, "element size");
  for (std::size_t s = 0; s < a.slots.size(); ++s)
    if (!a.slots[s].eq(b.slots[s])) return false;
  return true;
}

bool SeriesMatrixAlgebra::is_zero(const Element& a) const {
  if (a.m != m_) fail(ErrorKind::RankMismatch, "element size");
  for (const TruncatedSeries& s : a.slots)
    if (!s.is_zero()) return false;
  return true;
}

long long SeriesMatrixAlgebra::filtration_min_power(long long d, long long i, long long j) const {
  require_slot(i, j);
  long long num = d - (i - j);
  long long k = num <= 0 ? 0 : (num + m_ - 1) / m_;
  return std::max<long long>(k, slot_min_order(i, j));
}

bool SeriesMatrixAlgebra::in_filtration(const Element& e, long long d) const {
  if (e.m != m_) fail(ErrorKind::RankMismatch, "element size");
  for (long long i = 0; i < m_; ++i)
    for (long long j = 0; j < m_; ++j) {
      long long need = std::min(filtration_min_power(d, i, j), n_);
      if (e.at(i, j).order() < need) return false;
    }
  return true;
}

SeriesMatrixAlgebra inj_matrix_algebra(const Site& site, std::vector<Vertex> keep,
                                       long long precision) {
  if (!site.is_loop()) fail(ErrorKind::NotALoop, "injective rays live on loop sites");
  for (const Vertex& v : keep) site.require_vertex(v);
  std::sort(keep.begin(), keep.end(),
            [&](const Vertex& a, const Vertex& b) { return site.cmp_vertex(a, b) < 0; });
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) fail(ErrorKind::EmptyKeepSet, "on " + site.describe());
  return SeriesMatrixAlgebra::make(static_cast<long long>(keep.size()), precision);
}

// ---------------------------------------------------------------------------
// Path coalgebra
// ---------------------------------------------------------------------------

PathCoalgebra PathCoalgebra::make(long long rank, long long max_len) {
  if (rank < 1) fail(ErrorKind::BadInput, "rank must be at least 1");
  if (max_len < 1) fail(ErrorKind::BadInput, "max path length must be at least 1");
  return PathCoalgebra(rank, max_len);
}

bool PathCoalgebra::valid(const QuiverPath& p) const {
  return p.source >= 0 && p.source < r_ && p.len >= 0 && p.len <= n_;
}

long long PathCoalgebra::target(const QuiverPath& p) const {
  return (p.source + p.len) % r_;
}

std::vector<QuiverPath> PathCoalgebra::basis() const {
  std::vector<QuiverPath> ps;
  for (long long s = 0; s < r_; ++s)
    for (long long l = 0; l <= n_; ++l) ps.push_back({s, l});
  return ps;
}

std::vector<std::pair<QuiverPath, QuiverPath>> PathCoalgebra::comultiply(
    const QuiverPath& a) const {
  if (!valid(a)) fail(ErrorKind::OutOfRange, "path outside the basis");
  std::vector<std::pair<QuiverPath, QuiverPath>> terms;
  for (long long lq = 0; lq <= a.len; ++lq) {
    QuiverPath q{a.source, lq};
    QuiverPath p{(a.source + lq) % r_, a.len - lq};
    terms.emplace_back(p, q);
  }
  return terms;
}

std::string PathCoalgebra::path_str(const QuiverPath& p) const {
  std::ostringstream os;
  if (p.len == 0)
    os << "e_" << p.source;
  else
    os << "p(" << p.source << ";" << p.len << ")";
  return os.str();
}

bool coalgebra_axioms_ok(const PathCoalgebra& c, std::string* why) {
  using Triple = std::tuple<long long, long long, long long, long long, long long, long long>;
  for (const QuiverPath& a : c.basis()) {
    auto delta = c.comultiply(a);

    QuiverPath left_unit{-1, -1}, right_unit{-1, -1};
    int left_hits = 0, right_hits = 0;
    for (const auto& [p, q] : delta) {
      if (c.counit(p) == 1) {
        ++left_hits;
        left_unit = q;
      }
      if (c.counit(q) == 1) {
        ++right_hits;
        right_unit = p;
      }
    }
    if (left_hits != 1 || right_hits != 1 || left_unit != a || right_unit != a) {
      if (why) *why = "counit law fails on " + c.path_str(a);
      return false;
    }

    std::vector<Triple> lhs, rhs;
    for (const auto& [p, q] : delta)
      for (const auto& [p1, p2] : c.comultiply(p))
        lhs.emplace_back(p1.source, p1.len, p2.source, p2.len, q.source, q.len);
    for (const auto& [p, q] : delta)
      for (const auto& [q1, q2] : c.comultiply(q))
        rhs.emplace_back(p.source, p.len, q1.source, q1.len, q2.source, q2.len);
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) {
      if (why) *why = "coassociativity fails on " + c.path_str(a);
      return false;
    }
  }
  return true;
}

bool coalgebra_dual_check(const PathCoalgebra& c, std::string* why) {
  long long r = c.rank();
  long long n = c.max_len();
  SeriesMatrixAlgebra alg = SeriesMatrixAlgebra::make(r, n + 1);

  auto to_slot = [&](const QuiverPath& p, long long& i, long long& j, long long& k) {
    i = c.target(p);
    j = p.source;
    k = (p.len - i + j) / r;
  };

  for (const QuiverPath& a : c.basis())
    for (const QuiverPath& b : c.basis()) {
      if (a.len + b.len > n) continue;
      long long ia, ja, ka, ib, jb, kb;
      to_slot(a, ia, ja, ka);
      to_slot(b, ib, jb, kb);
      SeriesMatrixAlgebra::Element prod =
          alg.mul(alg.basis(ia, ja, ka), alg.basis(ib, jb, kb));
      SeriesMatrixAlgebra::Element expect = alg.zero();
      if (c.target(b) == a.source) {
        QuiverPath ab{b.source, a.len + b.len};
        long long i, j, k;
        to_slot(ab, i, j, k);
        expect = alg.basis(i, j, k);
      }
      if (!alg.eq(prod, expect)) {
        if (why)
          *why = "structure constants differ on " + c.path_str(a) + " * " + c.path_str(b);
        return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Comodules
// ---------------------------------------------------------------------------

long long CoactionTable::basis_flat(std::size_t idx) const {
  return object.site().flatten(object.a()) + static_cast<long long>(idx);
}

CoactionTable comodule_coaction(const IntervalObject& x) {
  const Site& s = x.site();
  if (!s.is_loop() || s.base() != BaseOrder::cyclic)
    fail(ErrorKind::BadInput, "coaction is defined over finite tubes");
  std::optional<long long> len = x.length();
  if (!len) fail(ErrorKind::InfiniteLength, x.label());
  long long ell = *len;
  long long r = s.rank();

  PathCoalgebra c = PathCoalgebra::make(r, std::max<long long>(1, ell - 1));
  std::vector<std::vector<CoactionTerm>> rows;
  long long za = s.flatten(x.a());
  for (long long t = 0; t < ell; ++t) {
    std::vector<CoactionTerm> row;
    long long source = s.from_flat(za + t).v.x;
    for (long long j = 0; j + t < ell; ++j)
      row.push_back(CoactionTerm{za + t + j, QuiverPath{source, j}});
    rows.push_back(std::move(row));
  }
  return CoactionTable{x, c, std::move(rows)};
}

bool comodule_axioms_ok(const CoactionTable& t, std::string* why) {
  const Site& s = t.object.site();
  long long za = s.flatten(t.object.a());
  long long ell = static_cast<long long>(t.rows.size());
  auto row_of = [&](long long point) -> const std::vector<CoactionTerm>& {
    long long idx = point - za;
    if (idx < 0 || idx >= ell) fail(ErrorKind::OutOfRange, "coaction point outside the object");
    return t.rows[static_cast<std::size_t>(idx)];
  };

  using Triple = std::tuple<long long, long long, long long, long long, long long>;
  for (long long i = 0; i < ell; ++i) {
    long long z = za + i;
    const auto& row = t.rows[static_cast<std::size_t>(i)];

    int unit_hits = 0;
    for (const CoactionTerm& term : row)
      if (t.coalgebra.counit(term.path) == 1) {
        ++unit_hits;
        if (term.point != z) {
          if (why) *why = "counit law fails at point " + std::to_string(z);
          return false;
        }
      }
    if (unit_hits != 1) {
      if (why) *why = "counit law fails at point " + std::to_string(z);
      return false;
    }

    std::vector<Triple> lhs, rhs;
    for (const CoactionTerm& outer : row)
      for (const CoactionTerm& inner : row_of(outer.point))
        lhs.emplace_back(inner.point, inner.path.source, inner.path.len, outer.path.source,
                         outer.path.len);
    for (const CoactionTerm& term : row)
      for (const auto& [p, q] : t.coalgebra.comultiply(term.path))
        rhs.emplace_back(term.point, p.source, p.len, q.source, q.len);
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) {
      if (why) *why = "coassociativity fails at point " + std::to_string(z);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Transport
// ---------------------------------------------------------------------------

std::string VertexBijection::describe() const {
  switch (kind) {
    case Kind::identity:
      return "identity";
    case Kind::int_shift:
      return "shift by " + std::to_string(amount);
    case Kind::cyclic_rotate:
      return "rotate by " + std::to_string(amount);
    case Kind::pair_shift:
      return "pair shift by " + std::to_string(amount);
    case Kind::int_negate:
      return "negate";
  }
  return "?";
}

Transport Transport::make(const Site& from, const Site& to, const VertexBijection& bij) {
  if (from != to)
    fail(ErrorKind::SiteMismatch, from.describe() + " vs " + to.describe());
  switch (bij.kind) {
    case VertexBijection::Kind::identity:
      break;
    case VertexBijection::Kind::int_shift:
      if (from.base() != BaseOrder::integers)
        fail(ErrorKind::NotOrderPreserving, bij.describe() + " on " + from.describe());
      break;
    case VertexBijection::Kind::cyclic_rotate:
      if (from.base() != BaseOrder::cyclic)
        fail(ErrorKind::NotOrderPreserving, bij.describe() + " on " + from.describe());
      break;
    case VertexBijection::Kind::pair_shift:
      if (from.base() != BaseOrder::int_pairs_lex)
        fail(ErrorKind::NotOrderPreserving, bij.describe() + " on " + from.describe());
      break;
    case VertexBijection::Kind::int_negate:
      fail(ErrorKind::NotOrderPreserving, "negation reverses succ and pred");
  }
  return Transport(from, to, bij);
}

Vertex Transport::apply_vertex(const Vertex& v) const {
  switch (bij_.kind) {
    case VertexBijection::Kind::identity:
      return v;
    case VertexBijection::Kind::int_shift:
      return Vertex{v.x + bij_.amount, 0};
    case VertexBijection::Kind::cyclic_rotate: {
      long long r = from_.rank();
      long long x = (v.x + bij_.amount) % r;
      if (x < 0) x += r;
      return Vertex{x, 0};
    }
    case VertexBijection::Kind::pair_shift:
      return Vertex{v.x + bij_.amount, v.y};
    case VertexBijection::Kind::int_negate:
      break;
  }
  fail(ErrorKind::NotOrderPreserving, bij_.describe());
}

IntervalObject Transport::apply(const IntervalObject& x) const {
  if (x.site() != from_) fail(ErrorKind::SiteMismatch, x.site().describe());
  return IntervalObject::make(to_, apply_vertex(x.socle()), apply_vertex(x.top()),
                              x.winding());
}

}  // namespace unitube
