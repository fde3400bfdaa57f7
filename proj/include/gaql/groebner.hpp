#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gaql/monomial_order.hpp"
#include "gaql/polynomial.hpp"

namespace gaql {

/// Reduced Gröbner basis of the ideal spanned by `generators`.
///
/// Basis elements are monic under `order` and sorted by increasing leading
/// monomial, so equal inputs give identical bases.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order,
                std::vector<Polynomial> generators,
                std::vector<Polynomial> basis);

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }

  bool is_unit() const noexcept;
  bool is_zero_ideal() const noexcept { return basis_.empty(); }
  std::vector<Monomial> leading_monomials() const;

  /// Normal form of p modulo the ideal.
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> basis_;
};

/// Full multivariate division remainder: no term of the result is divisible
/// by a leading monomial of `basis`.
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis,
                  const MonomialOrder& order);

/// Buchberger's algorithm with normal selection, the coprime criterion and
/// the chain criterion, followed by interreduction.
///
/// `ring` is only consulted when `gens` is empty.
GroebnerBasis groebner_basis(std::span<const Polynomial> gens,
                             const MonomialOrder& order, const RingPtr& ring);
GroebnerBasis groebner_basis(std::span<const Polynomial> gens,
                             const MonomialOrder& order = MonomialOrder::grevlex());

/// When enabled, every groebner_basis call re-checks the Buchberger
/// criterion on its output and throws std::logic_error on failure.
void set_groebner_self_check(bool enabled);
bool groebner_self_check();
/// Number of bases verified by the self check since process start.
std::size_t groebner_self_check_count();

/// All S-polynomials of basis pairs reduce to zero.
bool buchberger_criterion_holds(const GroebnerBasis& gb);
/// Monic, and no basis leading monomial divides a term of another element.
bool is_reduced(const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& p, std::span<const Polynomial> gens);
bool is_unit_ideal(std::span<const Polynomial> gens);

/// Generators (in the original ring) of the ideal intersected with the
/// subring of variables not in `drop`.
std::vector<Polynomial> eliminate(std::span<const Polynomial> gens,
                                  const std::set<std::size_t>& drop);

/// Krull dimension of Q[x]/I; -1 for the unit ideal.
int dimension(const GroebnerBasis& gb);
int dimension(std::span<const Polynomial> gens, const RingPtr& ring);

/// Does some power of p lie in the ideal?
bool radical_membership(const Polynomial& p, std::span<const Polynomial> gens);

/// If g lies in Q[f_1..f_m], returns S with S(f_1..f_m) = g as a polynomial
/// over a ring named by `tag_names` (default y1..ym).
std::optional<Polynomial> subalgebra_membership(
    const Polynomial& g, std::span<const Polynomial> fs,
    std::vector<std::string> tag_names = {});

}  // namespace gaql
