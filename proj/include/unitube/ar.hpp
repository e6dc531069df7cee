#ifndef UNITUBE_AR_HPP
#define UNITUBE_AR_HPP

#include <optional>
#include <vector>

#include "unitube/hom.hpp"

namespace unitube {

// Translate both interval ends one step down/up.  tau is total on loop
// sites; on linear sites projectives have no tau and injectives no tau^{-1}.
IntervalObject tau(const IntervalObject& x);
IntervalObject tau_inv(const IntervalObject& x);

// dim Ext^1(X, Y): zero for projective X, otherwise dim Hom(Y, tau X).
long long ext_dim(const IntervalObject& x, const IntervalObject& y);

struct ArData {
  IntervalObject start;                 // tau X
  std::vector<IntervalObject> middle;   // one or two summands
  IntervalObject end;                   // X
};

// Almost split sequence ending at X: start = [pred a, pred b], middle is
// [pred a, b] plus [a, pred b] when the latter is a nonempty interval.
// The middle is indecomposable exactly when X is simple.
ArData ar_sequence(const IntervalObject& x);

// Targets/sources of the irreducible maps out of/into X.
std::vector<IntervalObject> irreducibles_out(const IntervalObject& x);
std::vector<IntervalObject> irreducibles_in(const IntervalObject& x);

// Ascending chain of subobjects [a, a], [a, succ a], ...; the zero
// subobject is implicit and counted by count_with_zero().
struct SubobjectChain {
  bool complete = false;
  std::vector<IntervalObject> subs;
  std::size_t count_with_zero() const { return subs.size() + 1; }
};
SubobjectChain subobject_chain(const IntervalObject& x, long long limit);

// Witness for a path of length <= 2 between indecomposables:
//   identity   X = Y
//   direct     one nonzero map (X -> Y when forward, else Y -> X)
//   via        X -> middle -> Y when forward, else Y -> middle -> X
//   meet       X -> middle <- Y (unoriented only)
struct PathWitness {
  enum class Shape { identity, direct, via, meet };
  Shape shape = Shape::identity;
  bool forward = true;
  std::optional<IntervalObject> middle;
};
PathWitness path_within_two(const IntervalObject& x, const IntervalObject& y);

// The unique winding-0 object with the given socle and top; its endomorphism
// ring is trivial.  NoPath on linear sites when top < socle.
IntervalObject endo_simple_between(const Site& site, const Vertex& socle, const Vertex& top);

// Order on simples anchored at `anchor`: T1 <= T2 iff the endo-simple object
// from anchor to T1 embeds into the one from anchor to T2.  The anchor is
// minimal; on loop sites its tau-translate is maximal.
bool anchored_leq(const Site& site, const Vertex& anchor, const Vertex& t1, const Vertex& t2);

}  // namespace unitube

#endif
