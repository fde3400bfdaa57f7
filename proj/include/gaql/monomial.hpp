#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gaql {

using Exponent = std::uint32_t;

/// Dense exponent vector. Products are overflow-checked.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t arity, std::size_t index,
                           Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept;
  /// other / *this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  // Plain lexicographic comparison of the exponent vectors; only for use as a
  // container key. Monomial orders live in monomial_order.hpp.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Graded reverse lexicographic order with x_1 > x_2 > ... > x_n.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

/// Pure lexicographic order with x_1 > x_2 > ... > x_n.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// grevlex restricted to the coordinate range [begin, end).
std::strong_ordering grevlex_compare_range(const Monomial& a,
                                           const Monomial& b,
                                           std::size_t begin, std::size_t end);

}  // namespace gaql
