#include "boroczky/polynomial.hpp"

#include <utility>

#include "boroczky/errors.hpp"

namespace boroczky {

Form::Form(Field field, int degree) : field_(std::move(field)), degree_(degree) {
  if (degree < 0) throw InvalidInput("form degree must be >= 0");
  c_.assign(basis_size(degree), field_->zero());
}

std::size_t Form::basis_size(int degree) {
  return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
}

std::size_t Form::mono_index(int d, int a, int b) {
  const int k = d - a;  // 0 .. d
  return static_cast<std::size_t>(k * (k + 1) / 2 + (k - b));
}

std::array<int, 3> Form::mono_exponents(int d, std::size_t index) {
  // invert the triangular layout
  int k = 0;
  while (static_cast<std::size_t>((k + 1) * (k + 2) / 2) <= index) ++k;
  const int off = static_cast<int>(index) - k * (k + 1) / 2;
  const int a = d - k;
  const int b = k - off;
  return {a, b, d - a - b};
}

Form Form::monomial(const Field& field, int a, int b, int c, FieldElement coeff) {
  if (a < 0 || b < 0 || c < 0) throw InvalidInput("negative exponent");
  Form f(field, a + b + c);
  f.c_[mono_index(f.degree_, a, b)] = std::move(coeff);
  return f;
}

Form Form::linear(const Field& field, const ProjLine& line) {
  Form f(field, 1);
  f.c_[0] = line.coeffs[0];
  f.c_[1] = line.coeffs[1];
  f.c_[2] = line.coeffs[2];
  return f;
}

Form Form::from_coefficients(Field field, int degree, std::vector<FieldElement> coeffs) {
  Form f(std::move(field), degree);
  if (coeffs.size() != f.c_.size()) throw InvalidInput("coefficient vector has wrong length");
  f.c_ = std::move(coeffs);
  return f;
}

bool Form::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Form Form::operator+(const Form& o) const {
  if (degree_ != o.degree_) throw InvalidInput("degree mismatch");
  Form out(field_, degree_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
  return out;
}

Form Form::operator-(const Form& o) const {
  if (degree_ != o.degree_) throw InvalidInput("degree mismatch");
  Form out(field_, degree_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
  return out;
}

Form Form::operator-() const {
  Form out(field_, degree_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

Form Form::operator*(const Form& o) const {
  Form out(field_, degree_ + o.degree_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    auto [a1, b1, c1] = mono_exponents(degree_, i);
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      auto [a2, b2, c2] = mono_exponents(o.degree_, j);
      std::size_t idx = mono_index(out.degree_, a1 + a2, b1 + b2);
      out.c_[idx] += c_[i] * o.c_[j];
    }
  }
  return out;
}

Form Form::scaled(const FieldElement& s) const {
  Form out(field_, degree_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) out.c_[i] = c_[i] * s;
  return out;
}

bool Form::operator==(const Form& o) const {
  if (degree_ != o.degree_) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

FieldElement Form::eval(const Triple& p) const {
  // power tables per coordinate
  std::array<std::vector<FieldElement>, 3> pow;
  for (int v = 0; v < 3; ++v) {
    pow[v].reserve(degree_ + 1);
    pow[v].push_back(field_->one());
    for (int e = 1; e <= degree_; ++e) pow[v].push_back(pow[v].back() * p[v]);
  }
  FieldElement acc = field_->zero();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    auto [a, b, c] = mono_exponents(degree_, i);
    acc += c_[i] * pow[0][a] * pow[1][b] * pow[2][c];
  }
  return acc;
}

Form Form::partial(int var) const {
  if (degree_ == 0) return Form(field_, 0);
  Form out(field_, degree_ - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    auto e = mono_exponents(degree_, i);
    if (e[var] == 0) continue;
    auto ne = e;
    ne[var] -= 1;
    std::size_t idx = mono_index(degree_ - 1, ne[0], ne[1]);
    out.c_[idx] += c_[i] * Rat(e[var]);
  }
  return out;
}

Form Form::substitute(const std::array<std::array<FieldElement, 3>, 3>& m) const {
  // images of the variables as degree-1 forms
  std::array<Form, 3> lin = {Form(field_, 1), Form(field_, 1), Form(field_, 1)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) lin[i].c_[j] = m[i][j];

  // power tables of the images
  std::array<std::vector<Form>, 3> pow;
  for (int v = 0; v < 3; ++v) {
    pow[v].push_back(Form::monomial(field_, 0, 0, 0, field_->one()));
    for (int e = 1; e <= degree_; ++e) pow[v].push_back(pow[v].back() * lin[v]);
  }

  Form out(field_, degree_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    auto [a, b, c] = mono_exponents(degree_, i);
    Form term = pow[0][a] * pow[1][b] * pow[2][c];
    out = out + term.scaled(c_[i]);
  }
  return out;
}

bool Form::proportional_to(const Form& other) const {
  if (degree_ != other.degree_) return false;
  if (is_zero() || other.is_zero()) return false;
  std::size_t i = 0;
  while (i < c_.size() && c_[i].is_zero() && other.c_[i].is_zero()) ++i;
  if (i == c_.size()) return false;
  if (c_[i].is_zero() || other.c_[i].is_zero()) return false;
  FieldElement ratio = c_[i] / other.c_[i];
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != other.c_[j] * ratio) return false;
  return true;
}

std::string Form::to_string() const {
  static const char* names[3] = {"x", "y", "z"};
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string mono;
    auto e = mono_exponents(degree_, i);
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[v];
      if (e[v] >= 2) mono += '^' + std::to_string(e[v]);
    }
    if (!out.empty()) out += " + ";
    std::string coeff = c_[i].to_string();
    if (mono.empty()) {
      out += "(" + coeff + ")";
    } else if (c_[i].is_one()) {
      out += mono;
    } else {
      out += "(" + coeff + ")*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

Form product_of_lines(const Field& field, const std::vector<ProjLine>& lines) {
  Form acc = Form::monomial(field, 0, 0, 0, field->one());
  for (const ProjLine& l : lines) acc = acc * Form::linear(field, l);
  return acc;
}

}  // namespace boroczky
