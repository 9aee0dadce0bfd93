#include <doctest.h>

#include "boroczky/field.hpp"
#include "boroczky/polynomial.hpp"
#include "boroczky/projective.hpp"

using namespace boroczky;

namespace {
Field Q = FieldSpec::rationals();
}

TEST_SUITE("polynomial") {
  TEST_CASE("monomial index round trip") {
    for (int d = 0; d <= 8; ++d) {
      std::size_t n = Form::basis_size(d);
      for (std::size_t i = 0; i < n; ++i) {
        auto [a, b, c] = Form::mono_exponents(d, i);
        CHECK(a + b + c == d);
        CHECK(Form::mono_index(d, a, b) == i);
      }
    }
    // order within degree 2: x^2, xy, xz, y^2, yz, z^2
    CHECK(Form::mono_index(2, 2, 0) == 0);
    CHECK(Form::mono_index(2, 1, 1) == 1);
    CHECK(Form::mono_index(2, 1, 0) == 2);
    CHECK(Form::mono_index(2, 0, 2) == 3);
    CHECK(Form::mono_index(2, 0, 1) == 4);
    CHECK(Form::mono_index(2, 0, 0) == 5);
  }

  TEST_CASE("products and evaluation") {
    // (x + y) * (x - y) = x^2 - y^2
    ProjLine l1 = ProjLine::from({Q->element(1), Q->element(1), Q->element(0)});
    ProjLine l2 = ProjLine::from({Q->element(1), Q->element(-1), Q->element(0)});
    Form f = Form::linear(Q, l1) * Form::linear(Q, l2);
    Form expect = Form::monomial(Q, 2, 0, 0, Q->one()) + Form::monomial(Q, 0, 2, 0, Q->element(-1));
    CHECK(f == expect);

    Triple p{Q->element(3), Q->element(2), Q->one()};
    CHECK(f.eval(p) == Q->element(5));
  }

  TEST_CASE("product of lines vanishes exactly on the lines") {
    std::vector<ProjLine> lines{ProjLine::from({Q->element(1), Q->element(0), Q->element(-1)}),
                                ProjLine::from({Q->element(0), Q->element(1), Q->element(-2)}),
                                ProjLine::from({Q->element(1), Q->element(1), Q->element(1)})};
    Form f = product_of_lines(Q, lines);
    CHECK(f.degree() == 3);
    CHECK(f.eval({Q->element(1), Q->element(5), Q->one()}).is_zero());   // on line 0
    CHECK(f.eval({Q->element(7), Q->element(2), Q->one()}).is_zero());   // on line 1
    CHECK_FALSE(f.eval({Q->element(2), Q->element(1), Q->one()}).is_zero());
  }

  TEST_CASE("Euler identity x f_x + y f_y + z f_z = d f") {
    Field f12 = FieldSpec::cyclotomic(12);
    // pseudo-random degree-4 form
    Form f(f12, 4);
    for (std::size_t i = 0; i < f.size(); ++i)
      f.coefficient(i) = f12->zeta(static_cast<long>(3 * i % 12)) * Rat(static_cast<long>(i % 5) - 2);
    Form lhs = Form::monomial(f12, 1, 0, 0, f12->one()) * f.partial(0) +
               Form::monomial(f12, 0, 1, 0, f12->one()) * f.partial(1) +
               Form::monomial(f12, 0, 0, 1, f12->one()) * f.partial(2);
    CHECK(lhs == f.scaled(f12->element(4)));
  }

  TEST_CASE("substitution by the identity and by a product") {
    Field f12 = FieldSpec::cyclotomic(12);
    Form f(f12, 3);
    for (std::size_t i = 0; i < f.size(); ++i)
      f.coefficient(i) = f12->element(static_cast<long>(i % 7) - 3);

    std::array<std::array<FieldElement, 3>, 3> id;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) id[i][j] = i == j ? f12->one() : f12->zero();
    CHECK(f.substitute(id) == f);

    // f((AB)x) = (f(A x'))(x' = B x)
    std::array<std::array<FieldElement, 3>, 3> a, b, ab;
    long av[3][3] = {{1, 2, 0}, {0, 1, 0}, {1, 0, 1}};
    long bv[3][3] = {{1, 0, 1}, {2, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a[i][j] = f12->element(av[i][j]);
        b[i][j] = f12->element(bv[i][j]);
        ab[i][j] = f12->zero();
      }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) ab[i][j] += a[i][k] * b[k][j];
    CHECK(f.substitute(ab) == f.substitute(a).substitute(b));
  }

  TEST_CASE("proportionality") {
    Form f = Form::monomial(Q, 1, 1, 0, Q->element(2)) + Form::monomial(Q, 0, 0, 2, Q->element(4));
    Form g = f.scaled(Q->element(Rat(-3, 2)));
    CHECK(f.proportional_to(g));
    Form h = f + Form::monomial(Q, 2, 0, 0, Q->one());
    CHECK_FALSE(f.proportional_to(h));
  }
}
