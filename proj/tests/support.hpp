#pragma once

// Shared helpers for the test suites: parsing shorthand, seeded random
// polynomials and a cofactor-expansion determinant used as an oracle.

#include <random>
#include <string>
#include <vector>

#include "gaql/format.hpp"
#include "gaql/polynomial.hpp"

namespace gaql::test {

inline Polynomial P(const RingPtr& ring, const std::string& src) {
  return parse_polynomial(src, ring);
}

inline std::vector<Polynomial> Ps(const RingPtr& ring, const std::vector<std::string>& srcs) {
  std::vector<Polynomial> out;
  for (const auto& s : srcs) out.push_back(P(ring, s));
  return out;
}

struct RandomPolys {
  explicit RandomPolys(unsigned seed) : rng(seed) {}

  Rational coefficient(int span = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 3);
    int n = 0;
    while (n == 0) n = num(rng);
    Rational q(n, den(rng));
    q.canonicalize();
    return q;
  }

  /// Up to `max_terms` terms with each exponent <= max_exp and total degree
  /// <= max_degree. May return zero only if allow_zero.
  Polynomial poly(const RingPtr& ring, int max_terms = 4, int max_exp = 2,
                  int max_degree = 4, bool allow_zero = false) {
    std::uniform_int_distribution<int> count(allow_zero ? 0 : 1, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    for (;;) {
      std::vector<Term> terms;
      int k = count(rng);
      for (int t = 0; t < k; ++t) {
        Monomial m(ring->arity());
        int left = max_degree;
        for (std::size_t i = 0; i < ring->arity(); ++i) {
          int e = std::min(exp(rng), left);
          m[i] = static_cast<Exponent>(e);
          left -= e;
        }
        terms.push_back({m, coefficient()});
      }
      Polynomial p = Polynomial::from_terms(ring, std::move(terms));
      if (allow_zero || !p.is_zero()) return p;
    }
  }

  std::mt19937 rng;
};

/// Laplace expansion along the first row. Exponential, fine for n <= 5.
inline Polynomial cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial sum(m[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * cofactor_det(minor);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

/// Jacobian determinant via the oracle path: derivatives then cofactors.
inline Polynomial cofactor_jacobian(const std::vector<Polynomial>& fs) {
  PolyMatrix m;
  for (const auto& f : fs) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < f.arity(); ++j) row.push_back(partial_derivative(f, j));
    m.push_back(std::move(row));
  }
  return cofactor_det(m);
}

}  // namespace gaql::test
