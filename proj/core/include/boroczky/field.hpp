#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace boroczky {

using Int = mpz_class;
using Rat = mpq_class;

/// "3", "-1/2". mpq_class values are always stored canonicalized
/// (coprime, positive denominator), so this rendering is unique.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(std::string_view s);

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// Element of a presented number field, stored as the fully reduced rational
/// coefficient vector on the monomial basis of the quotient. Immutable value
/// semantics; equality is coefficient-vector equality.
class FieldElement {
 public:
  FieldElement() = default;

  const Field& owner() const { return owner_; }
  bool is_zero() const;
  bool is_one() const;
  /// True when every non-constant basis coordinate vanishes.
  bool is_rational() const;
  Rat rational_value() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);
  bool operator==(const FieldElement& b) const;
  bool operator!=(const FieldElement& b) const { return !(*this == b); }

  FieldElement operator*(const Rat& q) const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;

  /// Canonical serialization: polynomial in the generators, reduced rational
  /// coefficients, terms in descending total degree then descending exponent
  /// tuple. Example: "(-1/2)*s^2 + 3".
  std::string to_string() const;

  /// Numeric image under the field's fixed complex embedding. Render-path
  /// only; exact code never consults it.
  std::complex<double> embed() const;

  const std::vector<Rat>& coords() const { return c_; }

 private:
  friend class FieldSpec;
  FieldElement(Field owner, std::vector<Rat> coords)
      : owner_(std::move(owner)), c_(std::move(coords)) {}

  Field owner_;
  std::vector<Rat> c_;
};

enum class FieldOp { add, sub, mul, div };
FieldElement element_arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op);

/// A presented field: Q with a list of generators, each defined by a monic
/// univariate relation with rational coefficients. The basis of the quotient
/// is the set of product monomials with per-generator exponent below the
/// relation degree; the total dimension is the product of those degrees.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  struct Generator {
    std::string name;
    std::vector<Rat> relation;  // relation[k] = coefficient of g^k; monic, degree >= 1
    std::complex<double> embedding{0.0, 0.0};
  };

  /// Q itself (dimension 1, no generators).
  static Field rationals();
  /// Q(zeta_m) presented by the m-th cyclotomic polynomial; dimension phi(m).
  /// Embedding: zeta_m -> exp(2*pi*i/m). Instances are cached per m.
  static Field cyclotomic(unsigned long m);
  /// General tower with independent univariate relations per generator.
  static Field tower(std::vector<Generator> gens);

  std::size_t dimension() const { return dim_; }
  const std::vector<Generator>& generators() const { return gens_; }
  /// m for fields built by cyclotomic(), 0 otherwise.
  unsigned long cyclotomic_order() const { return cyc_m_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(const Rat& q) const;
  FieldElement element(long n) const;
  FieldElement generator(std::size_t index) const;
  /// zeta^k for cyclotomic fields; k may be negative (taken mod m).
  FieldElement zeta(long power) const;

  /// Parses the grammar emitted by FieldElement::to_string, plus binary
  /// minus between terms.
  FieldElement parse(std::string_view text) const;

  /// Same presentation: equal generator names and relations.
  static bool compatible(const Field& a, const Field& b);

  FieldElement make(std::vector<Rat> coords) const;

  /// Product of two reduced coordinate vectors, reduced again. Building block
  /// for FieldElement::operator*; public so matrix code can fuse operations.
  std::vector<Rat> mul_coords(const std::vector<Rat>& a, const std::vector<Rat>& b) const;

 private:
  FieldSpec() = default;
  void finish_setup();  // strides, exponent tables, power rows
  std::vector<Rat> reduce_extended(std::vector<Rat> ext) const;
  friend class FieldElement;

  std::vector<Generator> gens_;
  std::vector<std::size_t> radix_;    // relation degree per generator
  std::vector<std::size_t> stride_;   // mixed-radix strides, generator 0 fastest
  std::vector<std::size_t> estride_;  // strides of the extended (pre-reduction) grid
  std::size_t dim_ = 1;
  std::size_t edim_ = 1;
  std::vector<std::vector<unsigned>> expo_;  // basis index -> exponent tuple
  std::vector<std::size_t> eidx_;            // basis index -> extended-grid index
  // powrows_[g][k] = coefficients of g^(radix_g + k) on powers 0..radix_g-1
  std::vector<std::vector<std::vector<Rat>>> powrows_;
  std::vector<std::vector<Rat>> zeta_table_;  // cyclotomic only
  unsigned long cyc_m_ = 0;
};

/// Euler totient; exposed for tests and degree checks.
unsigned long euler_phi(unsigned long m);

/// Coefficients of the m-th cyclotomic polynomial, index = power.
/// Computed by exact recursive division of x^m - 1, no lookup tables.
std::vector<Rat> cyclotomic_polynomial(unsigned long m);

}  // namespace boroczky
