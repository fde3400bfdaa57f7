#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gaql/monomial.hpp"
#include "gaql/rational.hpp"
#include "gaql/ring.hpp"

namespace gaql {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q in the variables of a Ring.
///
/// Terms are kept sorted by descending grevlex with no zero coefficients, so
/// two equal polynomials always have identical term vectors. Values are
/// immutable once built; every operation returns a new polynomial.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t arity() const noexcept { return ring_->arity(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  /// -1 for the zero polynomial.
  std::int64_t total_degree() const noexcept;
  /// -1 for the zero polynomial.
  std::int64_t degree_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const;
  Rational coefficient(const Monomial& m) const;
  /// Value of the constant term.
  Rational constant_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) {
    return a *= b;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Rational& c) {
    return c * p;
  }

  Polynomial pow(unsigned k) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;

  /// Equal rings and equal term lists.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

/// Binary arithmetic; throws Error(RingMismatch) on differing rings.
Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op);

/// Formal partial derivative in variable `index`.
Polynomial partial_derivative(const Polynomial& p, std::size_t index);

/// Substitutes images[i] for the i-th variable of p's ring. All images must
/// share one ring, which becomes the ring of the result.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> images);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Re-expresses p in `target`, sending variable i of p's ring to variable
/// `mapping[i]` of `target`.
Polynomial embed(const Polynomial& p, const RingPtr& target,
                 std::span<const std::size_t> mapping);

/// Exact quotient p / d. Throws Error(NotExactDivision) if d does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination.
Polynomial determinant(PolyMatrix m);

/// Rows: the given polynomials; columns: ring variables in order.
PolyMatrix jacobian_matrix(std::span<const Polynomial> fs);

/// det of the n x n Jacobian matrix of n polynomials in n variables.
Polynomial jacobian_det(std::span<const Polynomial> fs);

/// Total order on polynomials used for deterministic tie-breaking: ring
/// size, then term count, then term lists under grevlex and coefficients.
bool canonical_less(const Polynomial& a, const Polynomial& b);

}  // namespace gaql
