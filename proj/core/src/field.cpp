#include "boroczky/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "boroczky/errors.hpp"

namespace boroczky {

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(std::string_view s) {
  Rat q;
  if (q.set_str(std::string(s), 10) != 0)
    throw InvalidInput("bad rational literal: " + std::string(s));
  q.canonicalize();
  return q;
}

namespace {

// ---- univariate polynomials over Q, coefficient index = power ----

using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// a = q*b + r with deg r < deg b; b must be nonzero and trimmed
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) {
    q.clear();
    r = std::move(a);
    poly_trim(r);
    return;
  }
  q.assign(a.size() - db, Rat(0));
  for (std::size_t shift = a.size() - db; shift-- > 0;) {
    if (sgn(a[shift + db]) == 0) continue;
    Rat c = a[shift + db] / b[db];
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
  }
  a.resize(db);
  r = std::move(a);
  poly_trim(r);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub_scaled(const Poly& a, const Poly& q, const Poly& b) {
  // a - q*b
  Poly p = poly_mul(q, b);
  Poly out = a;
  if (out.size() < p.size()) out.resize(p.size(), Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i] -= p[i];
  poly_trim(out);
  return out;
}

std::mutex g_field_cache_mutex;

}  // namespace

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Rat> cyclotomic_polynomial(unsigned long m) {
  static std::map<unsigned long, Poly> cache;
  static std::mutex mutex;
  std::scoped_lock lock(mutex);

  auto compute = [](auto&& self, unsigned long k) -> const Poly& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    Poly num(k + 1, Rat(0));  // x^k - 1
    num[0] = -1;
    num[k] = 1;
    for (unsigned long d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      Poly q, r;
      poly_divmod(num, self(self, d), q, r);
      if (!r.empty()) throw InvariantViolation("cyclotomic division left a remainder");
      num = std::move(q);
    }
    return cache.emplace(k, std::move(num)).first->second;
  };
  if (m == 0) throw InvalidInput("cyclotomic order must be positive");
  return compute(compute, m);
}

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

void FieldSpec::finish_setup() {
  const std::size_t n = gens_.size();
  radix_.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    const auto& rel = gens_[g].relation;
    if (rel.size() < 2) throw InvalidInput("relation must have degree >= 1");
    if (rel.back() != 1) throw InvalidInput("relation must be monic");
    radix_[g] = rel.size() - 1;
  }
  stride_.resize(n);
  estride_.resize(n);
  dim_ = 1;
  edim_ = 1;
  for (std::size_t g = 0; g < n; ++g) {
    stride_[g] = dim_;
    dim_ *= radix_[g];
    estride_[g] = edim_;
    edim_ *= 2 * radix_[g] - 1;
  }

  expo_.assign(dim_, std::vector<unsigned>(n, 0));
  eidx_.assign(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::size_t rest = i;
    for (std::size_t g = 0; g < n; ++g) {
      expo_[i][g] = static_cast<unsigned>(rest % radix_[g]);
      rest /= radix_[g];
      eidx_[i] += expo_[i][g] * estride_[g];
    }
  }

  powrows_.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t d = radix_[g];
    if (d == 1) continue;
    // g^d = -(rel[0] + rel[1] g + ... + rel[d-1] g^{d-1})
    std::vector<Rat> row(d);
    for (std::size_t t = 0; t < d; ++t) row[t] = -gens_[g].relation[t];
    powrows_[g].push_back(row);
    for (std::size_t k = d + 1; k <= 2 * d - 2; ++k) {
      std::vector<Rat> next(d, Rat(0));
      const auto& prev = powrows_[g].back();
      for (std::size_t t = 0; t + 1 < d; ++t) next[t + 1] = prev[t];
      if (sgn(prev[d - 1]) != 0) {
        const auto& top = powrows_[g][0];
        for (std::size_t t = 0; t < d; ++t) next[t] += prev[d - 1] * top[t];
      }
      powrows_[g].push_back(std::move(next));
    }
  }
}

Field FieldSpec::rationals() {
  static Field instance = [] {
    auto f = std::shared_ptr<FieldSpec>(new FieldSpec);
    f->finish_setup();
    return Field(f);
  }();
  return instance;
}

Field FieldSpec::cyclotomic(unsigned long m) {
  if (m < 1) throw InvalidInput("cyclotomic order must be >= 1");
  static std::map<unsigned long, Field> cache;
  std::scoped_lock lock(g_field_cache_mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  auto f = std::shared_ptr<FieldSpec>(new FieldSpec);
  Generator gen;
  gen.name = "zeta";
  gen.relation = cyclotomic_polynomial(m);
  const double angle = 2.0 * std::numbers::pi / static_cast<double>(m);
  gen.embedding = {std::cos(angle), std::sin(angle)};
  f->gens_.push_back(std::move(gen));
  f->cyc_m_ = m;
  f->finish_setup();

  // power table zeta^0 .. zeta^{m-1}
  Field field(f);
  FieldElement z = field->generator(0);
  FieldElement acc = field->one();
  f->zeta_table_.reserve(m);
  for (unsigned long k = 0; k < m; ++k) {
    f->zeta_table_.push_back(acc.coords());
    acc = acc * z;
  }
  if (!acc.is_one()) throw InvariantViolation("zeta^m != 1");
  cache.emplace(m, field);
  return field;
}

Field FieldSpec::tower(std::vector<Generator> gens) {
  auto f = std::shared_ptr<FieldSpec>(new FieldSpec);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].name.empty()) throw InvalidInput("generator needs a name");
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i].name == gens[j].name) throw InvalidInput("duplicate generator name");
  }
  f->gens_ = std::move(gens);
  f->finish_setup();
  return Field(f);
}

bool FieldSpec::compatible(const Field& a, const Field& b) {
  if (!a || !b) return false;
  if (a.get() == b.get()) return true;
  if (a->gens_.size() != b->gens_.size()) return false;
  for (std::size_t g = 0; g < a->gens_.size(); ++g) {
    if (a->gens_[g].name != b->gens_[g].name) return false;
    if (a->gens_[g].relation != b->gens_[g].relation) return false;
  }
  return true;
}

FieldElement FieldSpec::make(std::vector<Rat> coords) const {
  if (coords.size() != dim_) throw InvalidInput("coordinate vector has wrong length");
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement FieldSpec::zero() const { return make(std::vector<Rat>(dim_, Rat(0))); }

FieldElement FieldSpec::one() const {
  std::vector<Rat> c(dim_, Rat(0));
  c[0] = 1;
  return make(std::move(c));
}

FieldElement FieldSpec::element(const Rat& q) const {
  std::vector<Rat> c(dim_, Rat(0));
  c[0] = q;
  return make(std::move(c));
}

FieldElement FieldSpec::element(long n) const { return element(Rat(n)); }

FieldElement FieldSpec::generator(std::size_t index) const {
  if (index >= gens_.size()) throw InvalidInput("generator index out of range");
  if (radix_[index] == 1) return element(-gens_[index].relation[0]);
  std::vector<Rat> c(dim_, Rat(0));
  c[stride_[index]] = 1;
  return make(std::move(c));
}

FieldElement FieldSpec::zeta(long power) const {
  if (cyc_m_ == 0) throw InvalidInput("zeta() requires a cyclotomic field");
  long m = static_cast<long>(cyc_m_);
  long k = ((power % m) + m) % m;
  return make(zeta_table_[static_cast<std::size_t>(k)]);
}

std::vector<Rat> FieldSpec::mul_coords(const std::vector<Rat>& a,
                                       const std::vector<Rat>& b) const {
  if (dim_ == 1) {
    std::vector<Rat> c(1);
    c[0] = a[0] * b[0];
    return c;
  }
  std::vector<Rat> ext(edim_, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    const std::size_t ei = eidx_[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      ext[ei + eidx_[j]] += a[i] * b[j];
    }
  }
  return reduce_extended(std::move(ext));
}

std::vector<Rat> FieldSpec::reduce_extended(std::vector<Rat> ext) const {
  const std::size_t n = gens_.size();
  for (std::size_t gi = n; gi-- > 0;) {
    const std::size_t d = radix_[gi];
    if (d == 1) continue;
    const std::size_t es = estride_[gi];
    for (std::size_t idx = edim_; idx-- > 0;) {
      const unsigned e = static_cast<unsigned>((idx / es) % (2 * d - 1));
      if (e < d || sgn(ext[idx]) == 0) continue;
      Rat c = std::move(ext[idx]);
      ext[idx] = 0;
      const auto& row = powrows_[gi][e - d];
      const std::size_t base = idx - static_cast<std::size_t>(e) * es;
      for (std::size_t t = 0; t < d; ++t) {
        if (sgn(row[t]) == 0) continue;
        ext[base + t * es] += c * row[t];
      }
    }
  }
  std::vector<Rat> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::size_t e = 0;
    for (std::size_t g = 0; g < n; ++g) e += expo_[i][g] * estride_[g];
    out[i] = std::move(ext[e]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

namespace {

const FieldSpec& common_owner(const FieldElement& a, const FieldElement& b) {
  if (!a.owner() || !b.owner()) throw InvalidInput("uninitialized field element");
  if (!FieldSpec::compatible(a.owner(), b.owner()))
    throw InvalidInput("field elements have different owner fields");
  return *a.owner();
}

}  // namespace

bool FieldElement::is_zero() const {
  for (const Rat& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rat FieldElement::rational_value() const {
  if (!is_rational()) throw InvalidInput("element is not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

FieldElement FieldElement::operator-() const {
  std::vector<Rat> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return FieldElement(owner_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  common_owner(a, b);
  std::vector<Rat> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  return FieldElement(a.owner_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  common_owner(a, b);
  std::vector<Rat> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
  return FieldElement(a.owner_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const FieldSpec& f = common_owner(a, b);
  return FieldElement(a.owner_, f.mul_coords(a.c_, b.c_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement& FieldElement::operator+=(const FieldElement& b) { return *this = *this + b; }
FieldElement& FieldElement::operator-=(const FieldElement& b) { return *this = *this - b; }
FieldElement& FieldElement::operator*=(const FieldElement& b) { return *this = *this * b; }
FieldElement& FieldElement::operator/=(const FieldElement& b) { return *this = *this / b; }

bool FieldElement::operator==(const FieldElement& b) const {
  common_owner(*this, b);
  return c_ == b.c_;
}

FieldElement FieldElement::operator*(const Rat& q) const {
  Rat scale = q;
  scale.canonicalize();
  std::vector<Rat> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * scale;
  return FieldElement(owner_, std::move(c));
}

FieldElement FieldElement::inverse() const {
  if (!owner_) throw InvalidInput("uninitialized field element");
  if (is_zero()) throw InvalidInput("division by zero");
  if (is_one()) return *this;
  const FieldSpec& f = *owner_;

  if (f.dimension() == 1) return f.element(Rat(1) / c_[0]);

  if (f.generators().size() == 1) {
    // extended Euclid against the (irreducible) relation; remainders kept
    // monic to control coefficient growth
    Poly r0 = f.generators()[0].relation;
    Poly r1(c_.begin(), c_.end());
    poly_trim(r1);
    Poly s0;           // cofactor of *this for r0
    Poly s1 = {Rat(1)};
    while (r1.size() > 1) {
      Poly q, rem;
      poly_divmod(r0, r1, q, rem);
      Poly s2 = poly_sub_scaled(s0, q, s1);
      if (!rem.empty() && rem.back() != 1) {
        Rat lead = rem.back();
        for (Rat& x : rem) x /= lead;
        for (Rat& x : s2) x /= lead;
      }
      r0 = std::move(r1);
      s0 = std::move(s1);
      r1 = std::move(rem);
      s1 = std::move(s2);
    }
    if (r1.empty())
      throw InvariantViolation("non-invertible element: relation is not irreducible");
    if (s1.size() > f.dimension())
      throw InvariantViolation("inverse cofactor exceeds basis degree");
    std::vector<Rat> out(f.dimension(), Rat(0));
    for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] / r1[0];
    return FieldElement(owner_, std::move(out));
  }

  // tower case: solve (multiplication-by-this) * x = 1 over Q
  const std::size_t d = f.dimension();
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d + 1, Rat(0)));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rat> basis(d, Rat(0));
    basis[j] = 1;
    FieldElement col = *this * FieldElement(owner_, std::move(basis));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
  }
  m[0][d] = 1;  // rhs = 1

  // rational Gaussian elimination, first nonzero pivot per column
  std::size_t row = 0;
  std::vector<std::size_t> pivot_rows;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t pr = row;
    while (pr < d && sgn(m[pr][col]) == 0) ++pr;
    if (pr == d) continue;
    std::swap(m[pr], m[row]);
    for (std::size_t i = row + 1; i < d; ++i) {
      if (sgn(m[i][col]) == 0) continue;
      Rat factor = m[i][col] / m[row][col];
      for (std::size_t jj = col; jj <= d; ++jj) m[i][jj] -= factor * m[row][jj];
    }
    pivot_rows.push_back(col);
    ++row;
  }
  if (row < d) throw InvariantViolation("multiplication matrix is singular");
  std::vector<Rat> x(d, Rat(0));
  for (std::size_t r = d; r-- > 0;) {
    std::size_t col = pivot_rows[r];
    Rat acc = m[r][d];
    for (std::size_t jj = col + 1; jj < d; ++jj) acc -= m[r][jj] * x[jj];
    x[col] = acc / m[r][col];
  }
  return FieldElement(owner_, std::move(x));
}

FieldElement FieldElement::pow(long e) const {
  if (!owner_) throw InvalidInput("uninitialized field element");
  if (e < 0) return inverse().pow(-e);
  FieldElement base = *this;
  FieldElement acc = owner_->one();
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

FieldElement element_arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  throw InvalidInput("unknown field operation");
}

std::string FieldElement::to_string() const {
  if (!owner_) return "<null>";
  const FieldSpec& f = *owner_;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) idx.push_back(i);
  if (idx.empty()) return "0";

  auto total_deg = [&](std::size_t i) {
    unsigned s = 0;
    for (unsigned e : f.expo_[i]) s += e;
    return s;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    unsigned da = total_deg(a), db = total_deg(b);
    if (da != db) return da > db;
    return f.expo_[a] > f.expo_[b];  // lexicographic, generator 0 most significant
  });

  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const std::size_t i = idx[k];
    std::string mono;
    for (std::size_t g = 0; g < f.gens_.size(); ++g) {
      unsigned e = f.expo_[i][g];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += f.gens_[g].name;
      if (e >= 2) mono += '^' + std::to_string(e);
    }
    const Rat& q = c_[i];
    std::string coeff = rat_to_string(q);
    const bool wrap = sgn(q) < 0 || q.get_den() != 1;
    if (k > 0) out += " + ";
    if (mono.empty()) {
      out += wrap ? "(" + coeff + ")" : coeff;
    } else if (q == 1) {
      out += mono;
    } else {
      out += (wrap ? "(" + coeff + ")" : coeff) + "*" + mono;
    }
  }
  return out;
}

namespace {

struct ElementParser {
  const FieldSpec& field;
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Rat parse_rational() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    if (pos == start) throw InvalidInput("expected a rational in field element");
    return rat_from_string(s.substr(start, pos - start));
  }

  // factor := "(" rational ")" | rational | name ["^" int]
  FieldElement parse_factor() {
    skip_ws();
    if (peek() == '(') {
      ++pos;
      Rat q = parse_rational();
      skip_ws();
      if (peek() != ')') throw InvalidInput("missing ')' in field element");
      ++pos;
      return field.element(q);
    }
    char c = peek();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
      return field.element(parse_rational());
    // generator name: longest match
    std::size_t best = 0, gi = 0;
    for (std::size_t g = 0; g < field.generators().size(); ++g) {
      const std::string& name = field.generators()[g].name;
      if (s.substr(pos, name.size()) == name && name.size() > best) {
        best = name.size();
        gi = g;
      }
    }
    if (best == 0) throw InvalidInput("unknown symbol in field element: " + std::string(s.substr(pos)));
    pos += best;
    long e = 1;
    if (peek() == '^') {
      ++pos;
      skip_ws();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw InvalidInput("missing exponent in field element");
      e = std::stol(std::string(s.substr(start, pos - start)));
    }
    return field.generator(gi).pow(e);
  }

  FieldElement parse_term() {
    FieldElement acc = parse_factor();
    while (peek() == '*') {
      ++pos;
      acc = acc * parse_factor();
    }
    return acc;
  }

  FieldElement parse_sum() {
    int sign = 1;
    if (peek() == '+') ++pos;
    else if (peek() == '-') { sign = -1; ++pos; }
    FieldElement acc = parse_term();
    if (sign < 0) acc = -acc;
    while (!eof()) {
      char c = peek();
      if (c == '+') { ++pos; acc = acc + parse_term(); }
      else if (c == '-') { ++pos; acc = acc - parse_term(); }
      else throw InvalidInput("unexpected character in field element: " + std::string(1, c));
    }
    return acc;
  }
};

}  // namespace

FieldElement FieldSpec::parse(std::string_view text) const {
  ElementParser p{*this, text};
  if (p.eof()) throw InvalidInput("empty field element");
  return p.parse_sum();
}

std::complex<double> FieldElement::embed() const {
  if (!owner_) throw InvalidInput("uninitialized field element");
  const FieldSpec& f = *owner_;
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    std::complex<double> term{c_[i].get_d(), 0.0};
    for (std::size_t g = 0; g < f.gens_.size(); ++g)
      for (unsigned e = 0; e < f.expo_[i][g]; ++e) term *= f.gens_[g].embedding;
    acc += term;
  }
  return acc;
}

}  // namespace boroczky
