#ifndef UNITUBE_INTERVAL_HPP
#define UNITUBE_INTERVAL_HPP

#include <optional>
#include <string>

#include "unitube/site.hpp"

namespace unitube {

// Indecomposable object presented as a cover interval [a, b].
//
// Canonical form: on loop sites the socle lift a sits on deck 0 (the object
// is the sigma-orbit of the interval); on linear sites both ends sit on
// deck 0.  The label M(socle, top; winding) is recovered from the ends:
// socle = vertex(a), top = vertex(b), winding = max{k >= 0 : sigma^k(a) <= b}.
class IntervalObject {
 public:
  // Label constructor.  b lifts to deck winding + delta where delta is 1
  // exactly when socle > top in the base order; this makes the winding of
  // the resulting interval equal to the requested one.
  static IntervalObject make(const Site& site, const Vertex& socle, const Vertex& top,
                             long long winding);
  static IntervalObject from_cover(const Site& site, CoverPoint a, CoverPoint b);

  const Site& site() const { return site_; }
  const CoverPoint& a() const { return a_; }
  const CoverPoint& b() const { return b_; }

  Vertex socle() const { return a_.v; }
  Vertex top() const { return b_.v; }
  long long winding() const;

  // nullopt when the interval is not a finite succ-walk (infinite length)
  std::optional<long long> length() const;

  bool is_simple() const { return a_ == b_; }

  // Projectives and injectives exist only on linear sites with a boundary.
  bool is_projective() const;
  bool is_injective() const;

  std::string label() const;  // "M(socle,top;winding)"

  friend bool operator==(const IntervalObject& x, const IntervalObject& y) {
    return x.site_ == y.site_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const IntervalObject& x, const IntervalObject& y) { return !(x == y); }

  // total order for deterministic listings
  friend bool operator<(const IntervalObject& x, const IntervalObject& y);

 private:
  IntervalObject(const Site& s, CoverPoint a, CoverPoint b) : site_(s), a_(a), b_(b) {}

  Site site_;
  CoverPoint a_, b_;
};

}  // namespace unitube

#endif
