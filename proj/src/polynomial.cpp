#include "gaql/polynomial.hpp"

#include <algorithm>
#include <string>

#include "gaql/error.hpp"

namespace gaql {

namespace {

bool term_before(const Term& a, const Term& b) {
  return grevlex_compare(a.monomial, b.monomial) == std::strong_ordering::greater;
}

// Merges a and sign*b; both sorted descending.
std::vector<Term> merge_terms(const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = grevlex_compare(a[i].monomial, b[j].monomial);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({b[j].monomial, subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff)
                            : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back({b[j].monomial, subtract ? Rational(-b[j].coeff) : b[j].coeff});
  return out;
}

void check_index(const Polynomial& p, std::size_t index, const char* where) {
  if (index >= p.arity())
    throw Error(ErrorCode::IndexOutOfRange,
                std::string(where) + ": variable index " + std::to_string(index) +
                    " out of range for arity " + std::to_string(p.arity()));
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  std::size_t n = ring->arity();
  if (c == 0) return Polynomial(std::move(ring));
  Term t{Monomial(n), c};
  t.coeff.canonicalize();
  return Polynomial(std::move(ring), {std::move(t)});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  std::size_t n = ring->arity();
  if (index >= n)
    throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  return Polynomial(std::move(ring), {Term{Monomial::variable(n, index), 1}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
  if (m.size() != ring->arity())
    throw Error(ErrorCode::LengthMismatch, "monomial length differs from ring arity");
  if (c == 0) return Polynomial(std::move(ring));
  Term t{std::move(m), c};
  t.coeff.canonicalize();
  return Polynomial(std::move(ring), {std::move(t)});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.monomial.size() != ring->arity())
      throw Error(ErrorCode::LengthMismatch,
                  "exponent vector length differs from ring arity");
    t.coeff.canonicalize();
  }
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  return Polynomial(std::move(ring), std::move(merged));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool Polynomial::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff == 1;
}

std::int64_t Polynomial::total_degree() const noexcept {
  // Descending grevlex starts with a term of maximal total degree.
  if (terms_.empty()) return -1;
  return static_cast<std::int64_t>(terms_.front().monomial.degree());
}

std::int64_t Polynomial::degree_in(std::size_t var) const {
  check_index(*this, var, "degree_in");
  if (terms_.empty()) return -1;
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max<std::int64_t>(d, t.monomial[var]);
  return d;
}

bool Polynomial::uses_variable(std::size_t var) const {
  check_index(*this, var, "uses_variable");
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.monomial[var] != 0; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Polynomial(ring_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_, "add");
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_, "sub");
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_, "mul");
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      prod.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  *this = from_terms(ring_, std::move(prod));
  return *this;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c == 0) return Polynomial(p.ring_);
  Rational k = c;
  k.canonicalize();
  std::vector<Term> out = p.terms_;
  for (auto& t : out) t.coeff *= k;
  return Polynomial(p.ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Rational k = c;
  k.canonicalize();
  // Multiplying every term by the same monomial preserves the order.
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, t.coeff * k});
  return Polynomial(ring_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return p + q;
    case ArithOp::Sub: return p - q;
    case ArithOp::Mul: return p * q;
  }
  return p;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t index) {
  check_index(p, index, "partial_derivative");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Exponent e = t.monomial[index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m[index] = e - 1;
    out.push_back({std::move(m), t.coeff * e});
  }
  // Lowering one exponent can reorder terms under grevlex.
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial compose(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.arity())
    throw Error(ErrorCode::LengthMismatch,
                "compose: expected " + std::to_string(p.arity()) +
                    " images, got " + std::to_string(images.size()));
  const RingPtr& target = images.front().ring();
  for (const auto& img : images) require_same_ring(target, img.ring(), "compose");

  // powers[i][k] = images[i]^k, filled on demand.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, Exponent k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] != 0) term *= power(i, t.monomial[i]);
    result += term;
  }
  return result;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.arity())
    throw Error(ErrorCode::LengthMismatch,
                "evaluate: point has " + std::to_string(point.size()) +
                    " coordinates, ring has " + std::to_string(p.arity()));
  std::vector<Rational> at(point.begin(), point.end());
  for (auto& a : at) a.canonicalize();
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < at.size(); ++i) {
      Exponent e = t.monomial[i];
      if (e == 0) continue;
      Rational pw;
      mpz_pow_ui(mpq_numref(pw.get_mpq_t()), at[i].get_num_mpz_t(), e);
      mpz_pow_ui(mpq_denref(pw.get_mpq_t()), at[i].get_den_mpz_t(), e);
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

Polynomial embed(const Polynomial& p, const RingPtr& target,
                 std::span<const std::size_t> mapping) {
  if (mapping.size() != p.arity())
    throw Error(ErrorCode::LengthMismatch, "embed: mapping length differs from arity");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->arity());
    for (std::size_t i = 0; i < mapping.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (mapping[i] >= target->arity())
        throw Error(ErrorCode::IndexOutOfRange, "embed: target index out of range");
      m[mapping[i]] += t.monomial[i];
    }
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  require_same_ring(p.ring(), d.ring(), "exact_divide");
  if (d.is_zero()) throw Error(ErrorCode::NotExactDivision, "division by zero");
  const Term& lead = d.terms().front();
  Polynomial rest = p;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& top = rest.terms().front();
    if (!lead.monomial.divides(top.monomial))
      throw Error(ErrorCode::NotExactDivision, "divisor does not divide dividend");
    Monomial m = lead.monomial.cofactor_in(top.monomial);
    Rational c = top.coeff / lead.coeff;
    rest -= d.times_monomial(m, c);
    quotient.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(p.ring(), std::move(quotient));
}

Polynomial determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::LengthMismatch, "determinant of empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::LengthMismatch, "matrix is not square");
  const RingPtr ring = m[0][0].ring();

  bool negate = false;
  Polynomial previous = Polynomial::constant(ring, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(ring);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = previous.is_one() ? std::move(num) : exact_divide(num, previous);
      }
    }
    previous = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

PolyMatrix jacobian_matrix(std::span<const Polynomial> fs) {
  PolyMatrix jac;
  jac.reserve(fs.size());
  for (const auto& f : fs) {
    std::vector<Polynomial> row;
    row.reserve(f.arity());
    for (std::size_t j = 0; j < f.arity(); ++j) row.push_back(partial_derivative(f, j));
    jac.push_back(std::move(row));
  }
  return jac;
}

Polynomial jacobian_det(std::span<const Polynomial> fs) {
  if (fs.empty()) throw Error(ErrorCode::LengthMismatch, "jacobian_det: no polynomials");
  const RingPtr& ring = fs.front().ring();
  for (const auto& f : fs) require_same_ring(ring, f.ring(), "jacobian_det");
  if (fs.size() != ring->arity())
    throw Error(ErrorCode::LengthMismatch,
                "jacobian_det: need " + std::to_string(ring->arity()) +
                    " polynomials, got " + std::to_string(fs.size()));
  return determinant(jacobian_matrix(fs));
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) return a.arity() < b.arity();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto cmp = grevlex_compare(ta[i].monomial, tb[i].monomial);
    if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::less;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

}  // namespace gaql
