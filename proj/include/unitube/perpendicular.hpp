#ifndef UNITUBE_PERPENDICULAR_HPP
#define UNITUBE_PERPENDICULAR_HPP

#include <optional>
#include <vector>

#include "unitube/hom.hpp"

namespace unitube {

// Right-perpendicular subcategory of an ambient site determined by the set
// of surviving simples `keep`.  Objects X with socle(X) in keep and with
// succ(top(X)) either undefined or again in keep form a full subcategory
// equivalent to a smaller site of the same kind:
//
//   loop ambient            -> loop/cyclic(m)
//   linear/finite ambient   -> linear/finite(m)
//   linear without maximum  -> linear/finite(m - 1)
//
// where m = |keep|.  `include` realizes an inner object as an ambient one,
// `reflect` is the exact left adjoint (kept composition factors, in order).
class PerpPresentation {
 public:
  static PerpPresentation make(const Site& ambient, std::vector<Vertex> keep);

  const Site& ambient() const { return ambient_; }
  const Site& inner() const { return inner_; }
  const std::vector<Vertex>& keep() const { return keep_; }
  std::size_t rank() const { return keep_.size(); }
  const Vertex& vertex_at(std::size_t pos) const;

  bool contains(const IntervalObject& x) const;

  IntervalObject include(const IntervalObject& x_inner) const;
  // Zero (nullopt) when no composition factor of x survives.
  std::optional<IntervalObject> reflect(const IntervalObject& x) const;
  // reflect restricted to members, where it is inverse to include.
  IntervalObject inner_of(const IntervalObject& x) const;

  IntervalObject inner_simple_ambient(std::size_t pos) const;

  long long hom_via_window(const IntervalObject& x, const IntervalObject& y) const;

 private:
  PerpPresentation(Site ambient, Site inner, std::vector<Vertex> keep)
      : ambient_(ambient), inner_(inner), keep_(std::move(keep)) {}

  std::optional<std::size_t> position_of(const Vertex& v) const;

  Site ambient_;
  Site inner_;
  std::vector<Vertex> keep_;
};

}  // namespace unitube

#endif
