#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plic/projective.hpp"

using namespace plic;

TEST_CASE("rational parsing and printing") {
  CHECK(rational_str(parse_rational("2/4")) == "1/2");
  CHECK(rational_str(parse_rational("-6/4")) == "-3/2");
  CHECK(rational_str(parse_rational("5")) == "5");
  CHECK(rational_str(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("a/b"), Error);
}

TEST_CASE("canonical form clears denominators and fixes sign") {
  ProjPoint p(Rat(2, 3), Rat(1), Rat(0));
  CHECK(p.coords()[0] == 2);
  CHECK(p.coords()[1] == 3);
  CHECK(p.coords()[2] == 0);
  ProjPoint q(Rat(-4), Rat(-6), Rat(0));
  CHECK(q.coords()[0] == 2);
  CHECK(q.coords()[1] == 3);
  ProjPoint r(Rat(0), Rat(-5), Rat(10));
  CHECK(r.coords()[1] == 1);
  CHECK(r.coords()[2] == -2);
  CHECK_THROWS_AS(ProjPoint(Rat(0), Rat(0), Rat(0)), Error);
}

TEST_CASE("canonicalization is idempotent and equality is bitwise") {
  ProjPoint a(Rat(1, 2), Rat(-3, 4), Rat(5));
  ProjPoint b(Rat(-2), Rat(3), Rat(-20));
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  ProjPoint c(Rat(a.coords()[0]), Rat(a.coords()[1]), Rat(a.coords()[2]));
  CHECK(c == a);
}

TEST_CASE("incidence spec values") {
  CHECK(incident(ProjPoint::of(0, 0, 1), ProjLine::of(1, 0, 0)));
  CHECK_FALSE(incident(ProjPoint::of(1, 1, 1), ProjLine::of(1, 1, 1)));
  // grid point (-1,1) on the join of (1,-1,1) and (-1,1,1)
  CHECK(incident(ProjPoint::of(-1, 1, 1), ProjLine::of(1, 1, 0)));
}

TEST_CASE("join spec values") {
  CHECK(join(ProjPoint::of(1, 0, 0), ProjPoint::of(0, 1, 0)) == ProjLine::of(0, 0, 1));
  CHECK(join(ProjPoint::of(0, 0, 1), ProjPoint::of(1, 0, 1)) == ProjLine::of(0, 1, 0));
  CHECK(join(ProjPoint::of(1, 1, 1), ProjPoint::of(-1, -1, 1)) == ProjLine::of(1, -1, 0));
  CHECK_THROWS_AS(join(ProjPoint::of(2, 2, 2), ProjPoint::of(1, 1, 1)), Error);
}

TEST_CASE("meet spec values") {
  CHECK(meet(ProjLine::of(1, 0, 0), ProjLine::of(0, 1, 0)) == ProjPoint::of(0, 0, 1));
  CHECK(meet(ProjLine::of(0, 0, 1), ProjLine::of(1, 0, 0)) == ProjPoint::of(0, 1, 0));
  CHECK(meet(ProjLine::of(1, 1, 0), ProjLine::of(1, -1, 0)) == ProjPoint::of(0, 0, 1));
  CHECK_THROWS_AS(meet(ProjLine::of(1, 0, 0), ProjLine::of(-2, 0, 0)), Error);
}

TEST_CASE("polar duality") {
  CHECK(polar_dual(ProjPoint::of(1, 0, 0)) == ProjLine::of(1, 0, 0));
  CHECK(polar_dual(ProjPoint::of(1, 2, 3)) == ProjLine::of(1, 2, 3));
  ProjPoint p(Rat(2, 3), Rat(1), Rat(0));
  CHECK(polar_dual(p) == ProjLine::of(2, 3, 0));
  CHECK(polar_dual(polar_dual(p)) == p);
}

TEST_CASE("map_from_frame on the standard frame") {
  ProjPoint e1 = ProjPoint::of(1, 0, 0), e2 = ProjPoint::of(0, 1, 0),
            e3 = ProjPoint::of(0, 0, 1), e4 = ProjPoint::of(1, 1, 1);
  CHECK(ProjMap::from_frame(e1, e2, e3, e4) == ProjMap::identity());
  // swapping the first two frame points swaps the first two coordinates
  ProjMap swap_xy = ProjMap::from_frame(e2, e1, e3, e4);
  CHECK(swap_xy(ProjPoint::of(5, 7, 1)) == ProjPoint::of(7, 5, 1));
  // degenerate frame: three collinear points
  CHECK_THROWS_AS(
      ProjMap::from_frame(e1, e2, ProjPoint::of(1, 1, 0), e4), Error);
}

TEST_CASE("map_from_frame hits all four targets") {
  ProjPoint a = ProjPoint::of(1, 0, 1), b = ProjPoint::of(0, 1, 1),
            c = ProjPoint::of(0, 0, 1), d = ProjPoint::of(1, 1, 3);
  ProjMap m = ProjMap::from_frame(a, b, c, d);
  CHECK(m(ProjPoint::of(1, 0, 0)) == a);
  CHECK(m(ProjPoint::of(0, 1, 0)) == b);
  CHECK(m(ProjPoint::of(0, 0, 1)) == c);
  CHECK(m(ProjPoint::of(1, 1, 1)) == d);
}

TEST_CASE("projective scaling is the identity") {
  ProjMap twice = ProjMap::from_rows({{{Rat(2), Rat(0), Rat(0)},
                                       {Rat(0), Rat(2), Rat(0)},
                                       {Rat(0), Rat(0), Rat(2)}}});
  CHECK(twice == ProjMap::identity());
  CHECK(twice(ProjPoint::of(3, -1, 4)) == ProjPoint::of(3, -1, 4));
}

namespace {

std::mt19937 rng(20240517);

Rat random_rat() {
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 6);
  return Rat(num(rng), den(rng));
}

ProjPoint random_point() {
  for (;;) {
    Rat x = random_rat(), y = random_rat(), z = random_rat();
    if (x == 0 && y == 0 && z == 0) continue;
    return ProjPoint(x, y, z);
  }
}

ProjMap random_map() {
  for (;;) {
    std::array<std::array<Rat, 3>, 3> rows;
    for (auto& row : rows)
      for (auto& v : row) v = random_rat();
    try {
      return ProjMap::from_rows(rows);
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("randomized kernel identities") {
  for (int it = 0; it < 2000; ++it) {
    ProjPoint p = random_point(), q = random_point();
    if (p == q) continue;
    ProjLine l = join(p, q);
    CHECK(incident(p, l));
    CHECK(incident(q, l));
    // join/meet duality
    ProjLine m = polar_dual(random_point());
    if (l == m) continue;
    CHECK(polar_dual(meet(l, m)) == join(polar_dual(l), polar_dual(m)));
  }
}

TEST_CASE("randomized transformation equivariance") {
  for (int it = 0; it < 1000; ++it) {
    ProjMap mm = random_map();
    ProjPoint p = random_point(), q = random_point();
    if (p == q) continue;
    ProjLine l = join(p, q);
    CHECK(incident(mm(p), mm(l)));
    CHECK(mm(l) == join(mm(p), mm(q)));
    ProjPoint r = random_point();
    CHECK(incident(r, l) == incident(mm(r), mm(l)));
    CHECK(mm.inverse()(mm(r)) == r);
  }
}

TEST_CASE("four to four round trip") {
  std::array<ProjPoint, 4> frame{ProjPoint::of(1, 0, 0), ProjPoint::of(0, 1, 0),
                                 ProjPoint::of(0, 0, 1), ProjPoint::of(1, 1, 1)};
  int done = 0;
  while (done < 50) {
    std::array<ProjPoint, 4> src{random_point(), random_point(), random_point(),
                                 random_point()};
    std::array<ProjPoint, 4> dst{random_point(), random_point(), random_point(),
                                 random_point()};
    try {
      ProjMap fwd = ProjMap::four_to_four(src, dst);
      ProjMap back = ProjMap::four_to_four(dst, src);
      CHECK(back * fwd == ProjMap::identity());
      for (int i = 0; i < 4; ++i) CHECK(fwd(src[i]) == dst[i]);
      ++done;
    } catch (const Error&) {
      // degenerate random quadruple, try again
    }
  }
  CHECK(ProjMap::four_to_four(frame, frame) == ProjMap::identity());
}

TEST_CASE("translations fix the line at infinity") {
  ProjMap t = translation(Rat(3), Rat(-2));
  CHECK(t(ProjPoint::of(0, 0, 1)) == ProjPoint::of(3, -2, 1));
  CHECK(t(ProjPoint::of(5, 1, 0)) == ProjPoint::of(5, 1, 0));
  CHECK(t(ProjLine::of(0, 0, 1)) == ProjLine::of(0, 0, 1));
}
