#include <doctest.h>

#include "boroczky/errors.hpp"
#include "boroczky/field.hpp"
#include "boroczky/projective.hpp"

using namespace boroczky;

namespace {

Field Q = FieldSpec::rationals();

ProjPoint pt(long a, long b, long c) {
  return ProjPoint::from({Q->element(a), Q->element(b), Q->element(c)});
}
ProjLine ln(long a, long b, long c) {
  return ProjLine::from({Q->element(a), Q->element(b), Q->element(c)});
}

}  // namespace

TEST_SUITE("projective") {
  TEST_CASE("line through standard points") {
    CHECK(line_through(pt(1, 0, 0), pt(0, 1, 0)) == ln(0, 0, 1));
    CHECK(line_through(pt(1, 0, 1), pt(0, 1, 1)) == ln(1, 1, -1));
    CHECK_THROWS_AS(line_through(pt(1, 2, 3), pt(2, 4, 6)), InvalidInput);
  }

  TEST_CASE("meets") {
    CHECK(meet(ln(1, 0, 0), ln(0, 1, 0)) == pt(0, 0, 1));
    CHECK(meet(ln(1, 0, -1), ln(0, 1, -1)) == pt(1, 1, 1));
    // parallel affine lines meet at infinity
    CHECK(meet(ln(0, 1, -1), ln(0, 1, -2)) == pt(1, 0, 0));
    CHECK_THROWS_AS(meet(ln(1, 1, 1), ln(2, 2, 2)), InvalidInput);
  }

  TEST_CASE("concurrency") {
    CHECK(concurrent(ln(1, 0, 0), ln(0, 1, 0), ln(1, 1, 0)));
    CHECK_FALSE(concurrent(ln(1, 0, 0), ln(0, 1, 0), ln(0, 0, 1)));
    CHECK_THROWS_AS(concurrent(ln(1, 0, 0), ln(2, 0, 0), ln(0, 1, 0)), InvalidInput);

    // pencil through [1:2:1]: any a*x + b*y + c*z with a + 2b + c = 0
    ProjLine l1 = ln(2, -1, 0), l2 = ln(1, 0, -1), l3 = ln(0, 1, -2);
    ProjPoint p = pt(1, 2, 1);
    CHECK(incident(p, l1));
    CHECK(incident(p, l2));
    CHECK(incident(p, l3));
    CHECK(concurrent(l1, l2, l3));
  }

  TEST_CASE("incidence closure and duality round trip") {
    ProjPoint p = pt(1, 2, 3), q = pt(-1, 0, 2), r = pt(4, 1, 1);
    ProjLine pq = line_through(p, q);
    ProjLine pr = line_through(p, r);
    CHECK(incident(p, pq));
    CHECK(incident(q, pq));
    CHECK(meet(pq, pr) == p);
  }

  TEST_CASE("canonicalization is idempotent and scaling invariant") {
    Field f = FieldSpec::cyclotomic(12);
    Triple raw{f->zero(), f->zeta(5) * Rat(3, 7), f->one()};
    Triple canon = canonicalize(raw);
    CHECK(canonicalize(canon) == canon);
    for (long k = 1; k < 12; ++k) {
      Rat scale(k, 5);
      scale.canonicalize();
      FieldElement lambda = f->zeta(k) * scale;
      Triple scaled{raw[0] * lambda, raw[1] * lambda, raw[2] * lambda};
      CHECK(canonicalize(scaled) == canon);
    }
    CHECK_THROWS_AS(canonicalize(Triple{f->zero(), f->zero(), f->zero()}), InvalidInput);
  }

  TEST_CASE("dedupe keeps first occurrences") {
    std::vector<ProjPoint> pts{pt(1, 2, 3), pt(2, 4, 6), pt(0, 1, 1)};
    auto out = dedupe_projective(pts);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == pt(1, 2, 3));
    CHECK(out[1] == pt(0, 1, 1));
    CHECK(dedupe_projective(std::vector<ProjPoint>{}).empty());
  }
}
