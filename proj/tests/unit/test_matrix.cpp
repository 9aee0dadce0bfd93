#include <doctest.h>

#include "boroczky/errors.hpp"
#include "boroczky/field.hpp"
#include "boroczky/matrix.hpp"

using namespace boroczky;

namespace {

struct Lcg {
  unsigned long state;
  unsigned long next() { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; }
  long small() { return static_cast<long>(next() % 11) - 5; }
};

ExactMatrix random_matrix(const Field& f, std::size_t r, std::size_t c, Lcg& rng) {
  ExactMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      std::vector<Rat> coords(f->dimension(), Rat(0));
      coords[rng.next() % f->dimension()] = Rat(rng.small());
      m.at(i, j) = f->make(std::move(coords));
    }
  return m;
}

bool all_zero(const std::vector<FieldElement>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("identity has empty nullspace") {
    Field f = FieldSpec::rationals();
    auto basis = nullspace(ExactMatrix::identity(f, 3));
    CHECK(basis.empty());
    CHECK(rank(ExactMatrix::identity(f, 3)) == 3);
  }

  TEST_CASE("1x2 matrix [1 1] has nullspace (1, -1) up to normalization") {
    Field f = FieldSpec::rationals();
    ExactMatrix m(f, 1, 2);
    m.at(0, 0) = f->one();
    m.at(0, 1) = f->one();
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    // pivot-normalized: free column entry is 1
    CHECK(basis[0][1] == f->one());
    CHECK(basis[0][0] == f->element(-1));
  }

  TEST_CASE("nullspace multiply-back over Q(zeta_12), rank-nullity") {
    Field f = FieldSpec::cyclotomic(12);
    Lcg rng{2024};
    for (int trial = 0; trial < 10; ++trial) {
      ExactMatrix m = random_matrix(f, 5, 8, rng);
      std::size_t rk = rank(m);
      auto basis = nullspace(m);
      CHECK(rk + basis.size() == 8);
      for (const auto& v : basis) CHECK(all_zero(matvec(m, v)));
    }
  }

  TEST_CASE("engineered rank-5 5x8 matrix has 3 null vectors") {
    Field f = FieldSpec::cyclotomic(12);
    Lcg rng{7};
    ExactMatrix m(f, 5, 8);
    // start from an identity block to pin the rank at 5
    for (std::size_t i = 0; i < 5; ++i) m.at(i, i) = f->one();
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 5; j < 8; ++j) m.at(i, j) = f->zeta(static_cast<long>(rng.next() % 12)) * Rat(rng.small());
    CHECK(rank(m) == 5);
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 3);
    for (const auto& v : basis) CHECK(all_zero(matvec(m, v)));
  }

  TEST_CASE("nullspace is deterministic") {
    Field f = FieldSpec::cyclotomic(12);
    Lcg rng{11};
    ExactMatrix m = random_matrix(f, 6, 9, rng);
    auto b1 = nullspace(m);
    auto b2 = nullspace(m);
    REQUIRE(b1.size() == b2.size());
    for (std::size_t i = 0; i < b1.size(); ++i)
      for (std::size_t j = 0; j < b1[i].size(); ++j) CHECK(b1[i][j] == b2[i][j]);
  }

  TEST_CASE("span echelon membership") {
    Field f = FieldSpec::rationals();
    SpanEchelon span(f, 3);
    CHECK(span.add({f->element(1), f->element(2), f->element(3)}));
    CHECK(span.add({f->element(0), f->element(1), f->element(1)}));
    CHECK_FALSE(span.add({f->element(1), f->element(3), f->element(4)}));  // sum of the two
    CHECK(span.rank() == 2);
    CHECK(span.contains({f->element(2), f->element(5), f->element(7)}));
    CHECK_FALSE(span.contains({f->element(0), f->element(0), f->element(1)}));
  }
}
