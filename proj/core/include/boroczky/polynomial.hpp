#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "boroczky/field.hpp"
#include "boroczky/projective.hpp"

namespace boroczky {

/// Dense homogeneous form of fixed degree in x, y, z over one field.
/// Monomial order: x-exponent descending, then y-exponent descending
/// (index 0 is x^d, last index is z^d).
class Form {
 public:
  Form(Field field, int degree);

  static std::size_t basis_size(int degree);  // C(degree+2, 2)
  static std::size_t mono_index(int degree, int a, int b);
  /// Inverse of mono_index: exponents (a, b, c) with a+b+c = degree.
  static std::array<int, 3> mono_exponents(int degree, std::size_t index);

  static Form monomial(const Field& field, int a, int b, int c, FieldElement coeff);
  /// The degree-1 form a*x + b*y + c*z from a line's dual coordinates.
  static Form linear(const Field& field, const ProjLine& line);
  static Form from_coefficients(Field field, int degree, std::vector<FieldElement> coeffs);

  int degree() const { return degree_; }
  const Field& field() const { return field_; }
  std::size_t size() const { return c_.size(); }
  const FieldElement& coefficient(std::size_t index) const { return c_[index]; }
  FieldElement& coefficient(std::size_t index) { return c_[index]; }
  const std::vector<FieldElement>& coefficients() const { return c_; }

  bool is_zero() const;
  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator-() const;
  Form operator*(const Form& o) const;
  Form scaled(const FieldElement& s) const;
  bool operator==(const Form& o) const;

  FieldElement eval(const Triple& p) const;
  /// Homogeneous partial derivative; var 0/1/2 = x/y/z. Degree drops by one.
  Form partial(int var) const;
  /// f(M * (x,y,z)^T): substitutes each variable by the matching row form.
  Form substitute(const std::array<std::array<FieldElement, 3>, 3>& m) const;

  /// True when this form is a nonzero scalar multiple of other.
  bool proportional_to(const Form& other) const;

  std::string to_string() const;

 private:
  Field field_;
  int degree_;
  std::vector<FieldElement> c_;
};

Form product_of_lines(const Field& field, const std::vector<ProjLine>& lines);

}  // namespace boroczky
