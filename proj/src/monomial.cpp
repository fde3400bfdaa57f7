#include "gaql/monomial.hpp"

#include <algorithm>
#include <limits>

#include "gaql/error.hpp"

namespace gaql {

Monomial Monomial::variable(std::size_t arity, std::size_t index,
                            Exponent power) {
  Monomial m(arity);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    l.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return l;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t e = std::uint64_t{a[i]} + b[i];
    if (e > std::numeric_limits<Exponent>::max())
      throw Error(ErrorCode::ExponentOverflow, "exponent overflow in product");
    r[i] = static_cast<Exponent>(e);
  }
  return r;
}

std::strong_ordering grevlex_compare_range(const Monomial& a,
                                           const Monomial& b,
                                           std::size_t begin, std::size_t end) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  // Equal degree: the monomial with the smaller exponent in the last
  // differing variable is larger.
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  return grevlex_compare_range(a, b, 0, a.size());
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

}  // namespace gaql
