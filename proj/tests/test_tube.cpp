#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "unitube/ar.hpp"

using namespace unitube;

namespace {

IntervalObject random_object(const Site& s, std::mt19937_64& rng, long long max_winding = 3) {
  auto pick = [&](long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  };
  Vertex socle, top;
  switch (s.base()) {
    case BaseOrder::cyclic:
      socle = {pick(0, s.rank() - 1), 0};
      top = {pick(0, s.rank() - 1), 0};
      break;
    case BaseOrder::integers:
      socle = {pick(-12, 12), 0};
      top = {pick(-12, 12), 0};
      break;
    case BaseOrder::int_pairs_lex:
      socle = {pick(-4, 4), pick(-4, 4)};
      top = {pick(-4, 4), pick(-4, 4)};
      break;
    case BaseOrder::finite: {
      long long u = pick(1, s.size()), w = pick(1, s.size());
      socle = {std::min(u, w), 0};
      top = {std::max(u, w), 0};
      break;
    }
  }
  long long winding = s.is_loop() ? pick(0, max_winding) : 0;
  if (!s.is_loop() && s.cmp_vertex(top, socle) < 0) std::swap(socle, top);
  return IntervalObject::make(s, socle, top, winding);
}

// The window formula, re-derived one k at a time.
long long brute_hom_dim(const IntervalObject& x, const IntervalObject& y) {
  const Site& s = x.site();
  if (!s.is_loop()) {
    return (s.cmp(x.a(), y.a()) <= 0 && s.cmp(y.a(), x.b()) <= 0 &&
            s.cmp(x.b(), y.b()) <= 0)
               ? 1
               : 0;
  }
  long long dim = 0;
  for (long long k = -40; k <= 40; ++k) {
    CoverPoint ak = s.shift(y.a(), k), bk = s.shift(y.b(), k);
    if (s.cmp(x.a(), ak) <= 0 && s.cmp(ak, x.b()) <= 0 && s.cmp(x.b(), bk) <= 0) ++dim;
  }
  return dim;
}

std::vector<Site> loop_sites() {
  return {Site::loop_cyclic(1), Site::loop_cyclic(2), Site::loop_cyclic(3),
          Site::loop_int(), Site::loop_int_pairs()};
}

std::vector<Site> every_site() {
  auto v = loop_sites();
  v.push_back(Site::linear_int());
  v.push_back(Site::linear_int_pairs());
  v.push_back(Site::linear_finite(6));
  return v;
}

}  // namespace

TEST_CASE("labels and intervals translate both ways") {
  Site t3 = Site::loop_cyclic(3);
  IntervalObject x = IntervalObject::make(t3, {1, 0}, {0, 0}, 1);
  CHECK(x.a() == CoverPoint{0, {1, 0}});
  CHECK(x.b() == CoverPoint{2, {0, 0}});
  CHECK(x.socle() == Vertex{1, 0});
  CHECK(x.top() == Vertex{0, 0});
  CHECK(x.winding() == 1);
  CHECK(x.label() == "M(1,0;1)");
  CHECK(x.length() == 6);

  IntervalObject y = IntervalObject::make(t3, {0, 0}, {2, 0}, 0);
  CHECK(y.b() == CoverPoint{0, {2, 0}});
  CHECK(y.length() == 3);

  IntervalObject z = IntervalObject::from_cover(t3, {5, {1, 0}}, {6, {0, 0}});
  CHECK(z.a().deck == 0);
  CHECK(z == IntervalObject::make(t3, {1, 0}, {0, 0}, 0));

  CHECK_THROWS_AS(IntervalObject::from_cover(t3, {1, {0, 0}}, {0, {0, 0}}), Error);
  CHECK_THROWS_AS(IntervalObject::make(t3, {0, 0}, {0, 0}, -1), Error);
  CHECK_THROWS_AS(IntervalObject::make(t3, {4, 0}, {0, 0}, 0), Error);
}

TEST_CASE("label round trips on every site") {
  for (const Site& s : every_site()) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
      IntervalObject x = random_object(s, rng);
      IntervalObject back = IntervalObject::make(s, x.socle(), x.top(), x.winding());
      CHECK(back == x);
      if (s.is_loop()) {
        IntervalObject moved = IntervalObject::from_cover(s, s.shift(x.a(), 3), s.shift(x.b(), 3));
        CHECK(moved == x);
      }
    }
  }
}

TEST_CASE("simples and linear boundary objects") {
  Site t2 = Site::loop_cyclic(2);
  CHECK(IntervalObject::make(t2, {0, 0}, {0, 0}, 0).is_simple());
  CHECK(!IntervalObject::make(t2, {0, 0}, {0, 0}, 1).is_simple());
  CHECK(!IntervalObject::make(t2, {0, 0}, {0, 0}, 0).is_projective());
  CHECK(!IntervalObject::make(t2, {0, 0}, {0, 0}, 0).is_injective());

  Site f4 = Site::linear_finite(4);
  CHECK(IntervalObject::make(f4, {1, 0}, {3, 0}, 0).is_projective());
  CHECK(!IntervalObject::make(f4, {2, 0}, {3, 0}, 0).is_projective());
  CHECK(IntervalObject::make(f4, {2, 0}, {4, 0}, 0).is_injective());
  CHECK(!IntervalObject::make(f4, {2, 0}, {3, 0}, 0).is_injective());

  Site z = Site::linear_int();
  CHECK(!IntervalObject::make(z, {0, 0}, {5, 0}, 0).is_projective());
  CHECK(!IntervalObject::make(z, {0, 0}, {5, 0}, 0).is_injective());
}

TEST_CASE("hom window against the pointwise scan") {
  for (const Site& s : every_site()) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 400; ++i) {
      IntervalObject x = random_object(s, rng), y = random_object(s, rng);
      HomSpace h = hom_space(x, y);
      CHECK(h.dim() == brute_hom_dim(x, y));
      if (s.is_loop()) {
        for (long long k = h.k_min - 2; k <= h.k_max + 2; ++k) {
          CoverPoint ak = s.shift(y.a(), k), bk = s.shift(y.b(), k);
          bool in = s.cmp(x.a(), ak) <= 0 && s.cmp(ak, x.b()) <= 0 && s.cmp(x.b(), bk) <= 0;
          CHECK(in == h.contains(k));
        }
      }
    }
  }
}

TEST_CASE("hom frozen values") {
  Site t2 = Site::loop_cyclic(2);
  CHECK(hom_dim(IntervalObject::make(t2, {0, 0}, {0, 0}, 1),
                IntervalObject::make(t2, {1, 0}, {0, 0}, 0)) == 1);

  Site z = Site::loop_int();
  HomSpace h = hom_space(IntervalObject::make(z, {2, 0}, {9, 0}, 1),
                         IntervalObject::make(z, {4, 0}, {6, 0}, 2));
  CHECK(h.dim() == 2);
  CHECK(h.k_min == 0);
  CHECK(h.k_max == 1);

  Site lin = Site::linear_int();
  CHECK(hom_dim(IntervalObject::make(lin, {0, 0}, {4, 0}, 0),
                IntervalObject::make(lin, {2, 0}, {6, 0}, 0)) == 1);
  CHECK(hom_dim(IntervalObject::make(lin, {2, 0}, {6, 0}, 0),
                IntervalObject::make(lin, {0, 0}, {4, 0}, 0)) == 0);
}

TEST_CASE("winding law: dim End is winding plus one") {
  for (const Site& s : loop_sites()) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
      IntervalObject x = random_object(s, rng);
      CHECK(hom_dim(x, x) == x.winding() + 1);
    }
  }
  for (const Site& s : {Site::linear_int(), Site::linear_finite(6)}) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
      IntervalObject x = random_object(s, rng);
      CHECK(hom_dim(x, x) == 1);
    }
  }
}

TEST_CASE("mono and epi recognition") {
  Site t3 = Site::loop_cyclic(3);
  IntervalObject x = IntervalObject::make(t3, {2, 0}, {0, 0}, 0);
  IntervalObject big = IntervalObject::make(t3, {2, 0}, {1, 0}, 0);
  HomSpace in = hom_space(x, big);
  REQUIRE(in.dim() == 1);
  CHECK(basis_is_mono(in, in.k_min));
  CHECK(!basis_is_epi(in, in.k_min));
  CHECK(is_subobject(x, big));
  CHECK(!is_quotient(x, big));

  IntervalObject quot = IntervalObject::make(t3, {1, 0}, {1, 0}, 0);
  HomSpace out = hom_space(big, quot);
  REQUIRE(out.dim() == 1);
  CHECK(basis_is_epi(out, out.k_min));
  CHECK(!basis_is_mono(out, out.k_min));

  std::mt19937_64 rng(19);
  for (const Site& s : every_site()) {
    for (int i = 0; i < 200; ++i) {
      IntervalObject a = random_object(s, rng), b = random_object(s, rng);
      HomSpace h = hom_space(a, b);
      for (long long k : h.basis()) {
        if (s.is_loop()) {
          CHECK(basis_is_mono(h, k) == (s.shift(b.a(), k) == a.a()));
          CHECK(basis_is_epi(h, k) == (s.shift(b.b(), k) == a.b()));
        } else {
          CHECK(basis_is_mono(h, k) == (b.a() == a.a()));
          CHECK(basis_is_epi(h, k) == (b.b() == a.b()));
        }
      }
    }
  }
}

TEST_CASE("mono plus epi forces isomorphism") {
  for (const Site& s : every_site()) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 400; ++i) {
      IntervalObject x = random_object(s, rng), y = random_object(s, rng);
      if (has_mono(x, y) && has_epi(x, y)) CHECK(is_isomorphic(x, y));
      CHECK(is_isomorphic(x, y) == (x == y));
    }
  }
}

TEST_CASE("objects sharing a top lift compare as quotients, dually for socles") {
  for (const Site& s : every_site()) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 400; ++i) {
      IntervalObject x = random_object(s, rng), y = random_object(s, rng);
      bool tops_align = s.is_loop() ? x.b().v == y.b().v : x.b() == y.b();
      if (tops_align) CHECK((has_epi(x, y) || has_epi(y, x)));
      bool socles_align = s.is_loop() ? x.a().v == y.a().v : x.a() == y.a();
      if (socles_align) CHECK((has_mono(x, y) || has_mono(y, x)));
    }
  }
}

TEST_CASE("composition in the rank-1 tube of length three") {
  Site t1 = Site::loop_cyclic(1);
  IntervalObject m3 = IntervalObject::make(t1, {0, 0}, {0, 0}, 2);
  HomSpace endo = hom_space(m3, m3);
  CHECK(endo.dim() == 3);
  CHECK(endo.k_min == 0);
  CHECK(endo.k_max == 2);

  Morphism f0 = Morphism::basis(m3, m3, 0);
  Morphism f1 = Morphism::basis(m3, m3, 1);
  Morphism f2 = Morphism::basis(m3, m3, 2);
  CHECK(compose(f1, f1).coeff == f2.coeff);
  CHECK(compose(f1, f2).is_zero());
  CHECK(compose(f2, f1).is_zero());
  CHECK(compose(f2, f2).is_zero());
  CHECK(compose(f0, f1).coeff == f1.coeff);
  CHECK(is_mono(f0));
  CHECK(is_epi(f0));
  CHECK(!is_mono(f1));
  CHECK(!is_epi(f1));
}

TEST_CASE("composition is associative and respects identities") {
  for (const Site& s : every_site()) {
    std::mt19937_64 rng(37);
    int done = 0;
    while (done < 120) {
      IntervalObject x = random_object(s, rng), y = random_object(s, rng),
                     z = random_object(s, rng), w = random_object(s, rng);
      HomSpace hf = hom_space(x, y), hg = hom_space(y, z), hh = hom_space(z, w);
      if (hf.dim() == 0 || hg.dim() == 0 || hh.dim() == 0) continue;
      ++done;
      auto pick = [&](const HomSpace& h) {
        return h.k_min + std::uniform_int_distribution<long long>(0, h.dim() - 1)(rng);
      };
      Morphism f = Morphism::basis(x, y, pick(hf));
      Morphism g = Morphism::basis(y, z, pick(hg));
      Morphism h = Morphism::basis(z, w, pick(hh));
      CHECK(compose(compose(h, g), f).coeff == compose(h, compose(g, f)).coeff);
      CHECK(compose(f, Morphism::identity(x)).coeff == f.coeff);
      CHECK(compose(Morphism::identity(y), f).coeff == f.coeff);
      CHECK(compose(g, Morphism::zero(x, y)).is_zero());
    }
  }
  Site t2 = Site::loop_cyclic(2);
  IntervalObject a = IntervalObject::make(t2, {0, 0}, {0, 0}, 0);
  IntervalObject b = IntervalObject::make(t2, {1, 0}, {1, 0}, 0);
  CHECK_THROWS_AS(compose(Morphism::identity(a), Morphism::identity(b)), Error);
}

TEST_CASE("tau shifts both ends down") {
  Site t2 = Site::loop_cyclic(2);
  IntervalObject s0 = IntervalObject::make(t2, {0, 0}, {0, 0}, 0);
  CHECK(tau(s0) == IntervalObject::make(t2, {1, 0}, {1, 0}, 0));
  CHECK(tau_inv(tau(s0)) == s0);

  for (const Site& s : loop_sites()) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
      IntervalObject x = random_object(s, rng);
      CHECK(tau_inv(tau(x)) == x);
      CHECK(tau(x).winding() == x.winding());
      IntervalObject y = random_object(s, rng);
      CHECK(hom_dim(x, y) == hom_dim(tau(x), tau(y)));
    }
  }

  Site f4 = Site::linear_finite(4);
  CHECK_THROWS_AS(tau(IntervalObject::make(f4, {1, 0}, {2, 0}, 0)), Error);
  CHECK_THROWS_AS(tau_inv(IntervalObject::make(f4, {2, 0}, {4, 0}, 0)), Error);
  CHECK(tau(IntervalObject::make(f4, {2, 0}, {4, 0}, 0)) ==
        IntervalObject::make(f4, {1, 0}, {3, 0}, 0));
}

TEST_CASE("ext via the translate") {
  Site t2 = Site::loop_cyclic(2);
  IntervalObject s0 = IntervalObject::make(t2, {0, 0}, {0, 0}, 0);
  IntervalObject s1 = IntervalObject::make(t2, {1, 0}, {1, 0}, 0);
  CHECK(ext_dim(s0, s1) == 1);
  CHECK(ext_dim(s0, s0) == 0);
  CHECK(ext_dim(s1, s0) == 1);

  Site f4 = Site::linear_finite(4);
  CHECK(ext_dim(IntervalObject::make(f4, {1, 0}, {2, 0}, 0),
                IntervalObject::make(f4, {3, 0}, {4, 0}, 0)) == 0);
  CHECK(ext_dim(IntervalObject::make(f4, {2, 0}, {2, 0}, 0),
                IntervalObject::make(f4, {3, 0}, {4, 0}, 0)) == 0);
  CHECK(ext_dim(IntervalObject::make(f4, {3, 0}, {4, 0}, 0),
                IntervalObject::make(f4, {2, 0}, {2, 0}, 0)) == 1);

  CHECK_THROWS_AS(ext_dim(s0, IntervalObject::make(f4, {1, 0}, {1, 0}, 0)), Error);
}

TEST_CASE("almost split sequences in the rank-2 tube") {
  Site t2 = Site::loop_cyclic(2);
  IntervalObject s0 = IntervalObject::make(t2, {0, 0}, {0, 0}, 0);
  ArData seq = ar_sequence(s0);
  CHECK(seq.start == IntervalObject::make(t2, {1, 0}, {1, 0}, 0));
  REQUIRE(seq.middle.size() == 1);
  CHECK(seq.middle[0] == IntervalObject::make(t2, {1, 0}, {0, 0}, 0));

  IntervalObject m10 = IntervalObject::make(t2, {1, 0}, {0, 0}, 0);
  ArData seq2 = ar_sequence(m10);
  CHECK(seq2.start == IntervalObject::make(t2, {0, 0}, {1, 0}, 0));
  REQUIRE(seq2.middle.size() == 2);
  std::vector<IntervalObject> expect = {IntervalObject::make(t2, {0, 0}, {0, 0}, 1),
                                        IntervalObject::make(t2, {1, 0}, {1, 0}, 0)};
  CHECK((seq2.middle == expect ||
         (seq2.middle[0] == expect[1] && seq2.middle[1] == expect[0])));
}

TEST_CASE("middle size matches simplicity; middles carry one epi and one mono") {
  for (const Site& s : loop_sites()) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 300; ++i) {
      IntervalObject x = random_object(s, rng);
      ArData seq = ar_sequence(x);
      CHECK(seq.end == x);
      CHECK(seq.start == tau(x));
      CHECK(seq.middle.size() <= 2);
      CHECK((seq.middle.size() == 1) == x.is_simple());
      if (x.length()) {
        long long len_mid = 0;
        for (const IntervalObject& m : seq.middle) {
          REQUIRE(m.length());
          len_mid += *m.length();
        }
        REQUIRE(tau(x).length());
        CHECK(len_mid == *x.length() + *tau(x).length());
      }
      if (seq.middle.size() == 2) {
        int epis = 0, monos = 0;
        for (const IntervalObject& m : seq.middle) {
          if (has_epi(m, x)) ++epis;
          if (has_mono(tau(x), m)) ++monos;
        }
        CHECK(epis >= 1);
        CHECK(monos >= 1);
      }
    }
  }
}

TEST_CASE("irreducible maps around an object") {
  Site z = Site::loop_int();
  IntervalObject x = IntervalObject::make(z, {0, 0}, {0, 0}, 1);
  std::vector<IntervalObject> out = irreducibles_out(x);
  REQUIRE(out.size() == 2);
  CHECK(std::count(out.begin(), out.end(), IntervalObject::make(z, {1, 0}, {0, 0}, 0)) == 1);
  CHECK(std::count(out.begin(), out.end(), IntervalObject::make(z, {0, 0}, {1, 0}, 1)) == 1);

  for (const Site& s : loop_sites()) {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 200; ++i) {
      IntervalObject y = random_object(s, rng);
      ArData seq = ar_sequence(y);
      std::vector<IntervalObject> in = irreducibles_in(y);
      CHECK(in == seq.middle);
      for (const IntervalObject& m : irreducibles_out(y)) {
        std::vector<IntervalObject> back = irreducibles_in(m);
        CHECK(std::count(back.begin(), back.end(), y) == 1);
      }
    }
  }

  Site f3 = Site::linear_finite(3);
  std::vector<IntervalObject> corner = irreducibles_out(IntervalObject::make(f3, {1, 0}, {3, 0}, 0));
  CHECK(corner.size() == 1);
  CHECK(corner[0] == IntervalObject::make(f3, {2, 0}, {3, 0}, 0));
}

TEST_CASE("subobject chains are complete, nested and unique") {
  Site t2 = Site::loop_cyclic(2);
  IntervalObject m = IntervalObject::make(t2, {0, 0}, {0, 0}, 1);
  SubobjectChain chain = subobject_chain(m, 32);
  CHECK(chain.complete);
  CHECK(chain.count_with_zero() == 4);
  REQUIRE(chain.subs.size() == 3);
  CHECK(chain.subs[0] == IntervalObject::make(t2, {0, 0}, {0, 0}, 0));
  CHECK(chain.subs[1] == IntervalObject::make(t2, {0, 0}, {1, 0}, 0));
  CHECK(chain.subs[2] == m);
  for (std::size_t i = 0; i < chain.subs.size(); ++i)
    for (std::size_t j = i; j < chain.subs.size(); ++j)
      CHECK(is_subobject(chain.subs[i], chain.subs[j]));

  SubobjectChain cut = subobject_chain(m, 2);
  CHECK(!cut.complete);
  CHECK(cut.subs.size() == 2);
  CHECK_THROWS_AS(subobject_chain(m, -1), Error);

  Site z = Site::loop_int();
  for (int len = 1; len <= 9; ++len) {
    IntervalObject x =
        IntervalObject::from_cover(z, {0, {0, 0}}, {0, {len - 1, 0}});
    SubobjectChain c = subobject_chain(x, 64);
    CHECK(c.complete);
    CHECK((long long)c.subs.size() == len);
  }
}

TEST_CASE("paths of length two always exist inside a tube") {
  Site t3 = Site::loop_cyclic(3);
  IntervalObject s0 = IntervalObject::make(t3, {0, 0}, {0, 0}, 0);
  IntervalObject s2 = IntervalObject::make(t3, {2, 0}, {2, 0}, 0);
  PathWitness w = path_within_two(s0, s2);
  CHECK(w.shape == PathWitness::Shape::via);
  CHECK(w.forward);
  REQUIRE(w.middle.has_value());
  CHECK(*w.middle == IntervalObject::make(t3, {0, 0}, {2, 0}, 0));
  CHECK(hom_dim(s0, *w.middle) > 0);
  CHECK(hom_dim(*w.middle, s2) > 0);

  for (const Site& s : loop_sites()) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 250; ++i) {
      IntervalObject x = random_object(s, rng), y = random_object(s, rng);
      PathWitness pw = path_within_two(x, y);
      switch (pw.shape) {
        case PathWitness::Shape::identity: CHECK(x == y); break;
        case PathWitness::Shape::direct:
          CHECK(hom_dim(pw.forward ? x : y, pw.forward ? y : x) > 0);
          break;
        case PathWitness::Shape::via:
          REQUIRE(pw.middle.has_value());
          CHECK(hom_dim(pw.forward ? x : y, *pw.middle) > 0);
          CHECK(hom_dim(*pw.middle, pw.forward ? y : x) > 0);
          break;
        case PathWitness::Shape::meet: CHECK(false); break;
      }
    }
  }
}

TEST_CASE("paths on linear sites may need an unoriented meet") {
  Site lin = Site::linear_int();
  IntervalObject left = IntervalObject::make(lin, {0, 0}, {1, 0}, 0);
  IntervalObject right = IntervalObject::make(lin, {5, 0}, {6, 0}, 0);
  PathWitness w = path_within_two(left, right);
  CHECK(w.shape == PathWitness::Shape::via);
  CHECK(w.forward);
  CHECK(*w.middle == IntervalObject::make(lin, {1, 0}, {5, 0}, 0));

  IntervalObject inner = IntervalObject::make(lin, {2, 0}, {3, 0}, 0);
  IntervalObject outer = IntervalObject::make(lin, {1, 0}, {5, 0}, 0);
  CHECK(hom_dim(inner, outer) == 0);
  CHECK(hom_dim(outer, inner) == 0);
  PathWitness nested = path_within_two(inner, outer);
  CHECK(nested.shape == PathWitness::Shape::meet);
  REQUIRE(nested.middle.has_value());
  CHECK(hom_dim(inner, *nested.middle) > 0);
  CHECK(hom_dim(outer, *nested.middle) > 0);

  std::mt19937_64 rng(59);
  for (const Site& s : {Site::linear_int(), Site::linear_finite(6)}) {
    for (int i = 0; i < 250; ++i) {
      IntervalObject x = random_object(s, rng), y = random_object(s, rng);
      PathWitness pw = path_within_two(x, y);
      if (pw.shape == PathWitness::Shape::meet) {
        REQUIRE(pw.middle.has_value());
        CHECK(hom_dim(x, *pw.middle) > 0);
        CHECK(hom_dim(y, *pw.middle) > 0);
      }
    }
  }
}

TEST_CASE("anchored order on simples") {
  Site z = Site::loop_int();
  Vertex anchor{0, 0};
  std::vector<Vertex> ascending = {{0, 0}, {1, 0}, {2, 0}, {5, 0}, {-2, 0}, {-1, 0}};
  for (std::size_t i = 0; i < ascending.size(); ++i)
    for (std::size_t j = i; j < ascending.size(); ++j)
      CHECK(anchored_leq(z, anchor, ascending[i], ascending[j]));
  CHECK(!anchored_leq(z, anchor, {-1, 0}, {3, 0}));
  for (const Vertex& t : ascending) {
    CHECK(anchored_leq(z, anchor, anchor, t));
    CHECK(anchored_leq(z, anchor, t, {-1, 0}));
  }

  CHECK(endo_simple_between(z, {0, 0}, {0, 0}) ==
        IntervalObject::make(z, {0, 0}, {0, 0}, 0));
  IntervalObject m31 = endo_simple_between(z, {3, 0}, {1, 0});
  CHECK(m31 == IntervalObject::make(z, {3, 0}, {1, 0}, 0));
  CHECK(hom_dim(m31, m31) == 1);
  CHECK_THROWS_AS(endo_simple_between(Site::linear_int(), {3, 0}, {1, 0}), Error);
}
