#ifndef UNITUBE_SITE_HPP
#define UNITUBE_SITE_HPP

#include <optional>
#include <string>

#include "unitube/errors.hpp"

namespace unitube {

// A Site fixes a base order from a closed list together with a flavor:
//
//   loop   + cyclic(r)       finite tube of rank r
//   loop   + int             big tube over Z
//   loop   + int_pairs_lex   big tube over Z x Z (lexicographic)
//   linear + int             interval representations of Z
//   linear + int_pairs_lex   interval representations of Z x Z (lex)
//   linear + finite(n)       interval representations of {1, ..., n}
//
// Points of the cover are (deck, vertex) pairs compared lexicographically.
// Loop sites carry the deck shift sigma (shift below); linear sites keep
// deck 0 everywhere and refuse sigma.

enum class SiteKind { loop, linear };
enum class BaseOrder { cyclic, integers, int_pairs_lex, finite };

// Vertex of the base order.  y is meaningful only on int_pairs_lex bases
// and stays 0 elsewhere, so raw equality is safe.
struct Vertex {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
};

struct CoverPoint {
  long long deck = 0;
  Vertex v;

  friend bool operator==(const CoverPoint& a, const CoverPoint& b) {
    return a.deck == b.deck && a.v == b.v;
  }
  friend bool operator!=(const CoverPoint& a, const CoverPoint& b) { return !(a == b); }
};

class Site {
 public:
  static Site loop_cyclic(long long rank);
  static Site loop_int();
  static Site loop_int_pairs();
  static Site linear_int();
  static Site linear_int_pairs();
  static Site linear_finite(long long size);
  static Site make(SiteKind kind, BaseOrder base, long long param);

  SiteKind kind() const { return kind_; }
  BaseOrder base() const { return base_; }
  bool is_loop() const { return kind_ == SiteKind::loop; }
  long long rank() const;  // cyclic only
  long long size() const;  // finite only

  bool vertex_valid(const Vertex& v) const;
  void require_vertex(const Vertex& v) const;
  int cmp_vertex(const Vertex& a, const Vertex& b) const;  // base order, -1/0/1

  // One step in the base order.  On cyclic bases this wraps around the
  // cycle; on finite bases the ends have no neighbor.
  std::optional<Vertex> vertex_succ(const Vertex& v) const;
  std::optional<Vertex> vertex_pred(const Vertex& v) const;

  bool point_valid(const CoverPoint& p) const;
  void require_point(const CoverPoint& p) const;
  int cmp(const CoverPoint& a, const CoverPoint& b) const;

  CoverPoint succ(const CoverPoint& p) const;  // OutOfRange at finite ends
  CoverPoint pred(const CoverPoint& p) const;
  CoverPoint shift(const CoverPoint& p, long long k) const;  // NotALoop on linear sites

  // Least k with sigma^k(p) >= q, and greatest k with sigma^k(p) <= q.
  long long min_shift_geq(const CoverPoint& p, const CoverPoint& q) const;
  long long max_shift_leq(const CoverPoint& p, const CoverPoint& q) const;

  // Number of succ steps from a to b; nullopt when b is not finitely many
  // steps above a.
  std::optional<long long> steps_between(const CoverPoint& a, const CoverPoint& b) const;

  // cyclic bases flatten to Z via z = deck * rank + vertex
  long long flatten(const CoverPoint& p) const;
  CoverPoint from_flat(long long z) const;

  std::optional<Vertex> min_vertex() const;  // finite bases only
  std::optional<Vertex> max_vertex() const;

  std::string describe() const;
  std::string vertex_str(const Vertex& v) const;
  std::string point_str(const CoverPoint& p) const;

  friend bool operator==(const Site& a, const Site& b) {
    return a.kind_ == b.kind_ && a.base_ == b.base_ && a.param_ == b.param_;
  }
  friend bool operator!=(const Site& a, const Site& b) { return !(a == b); }

 private:
  Site(SiteKind k, BaseOrder b, long long param) : kind_(k), base_(b), param_(param) {}

  SiteKind kind_;
  BaseOrder base_;
  long long param_;  // rank of cyclic, size of finite, 0 otherwise
};

}  // namespace unitube

#endif
