#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "gaql/monomial.hpp"
#include "gaql/polynomial.hpp"

namespace gaql {

/// Term order used by Gröbner computations.
///
/// `block(k)` compares the first k variables by grevlex and breaks ties with
/// grevlex on the remaining ones, so any monomial involving the front block
/// beats every monomial free of it. That is the elimination property.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder block(std::size_t front_size) {
    return MonomialOrder(Kind::Block, front_size);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t front_size() const noexcept { return front_size_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t front) : kind_(kind), front_size_(front) {}

  Kind kind_;
  std::size_t front_size_;
};

/// Leading term of a nonzero polynomial under `order`.
const Term& leading_term(const Polynomial& p, const MonomialOrder& order);

}  // namespace gaql
