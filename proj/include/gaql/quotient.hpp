#pragma once

#include <optional>
#include <vector>

#include "gaql/action.hpp"
#include "gaql/derivation.hpp"
#include "gaql/poly_map.hpp"

namespace gaql {

inline constexpr unsigned kDefaultSliceDegreeBound = 3;
inline constexpr unsigned kDefaultPowerBound = 8;

/// f with D(f) = c != 0 and D(c) = 0. `coefficient_in_map`, once filled,
/// is P over F's target ring with P(F) = c.
struct LocalSlice {
  Polynomial f;
  Polynomial c;
  std::optional<Polynomial> coefficient_in_map;
};

/// D(R) = J(R, f_1, .., f_{n-1}): images[i] = jacobian_det(x_i, f_1, ..).
/// Throws Error(ArityMismatch) unless F has n - 1 components.
Derivation jacobian_derivation(const PolyMap& F);

/// Every component of F is invariant under `a`.
bool check_map_invariant(const GaAction& a, const PolyMap& F);

/// Solves D^2(f) = 0 over polynomials of total degree <= degree_bound and
/// returns the first kernel basis vector with D(f) != 0. Monomials are
/// scanned by increasing degree, then in variable order.
std::optional<LocalSlice> find_local_slice(const Derivation& d,
                                           unsigned degree_bound = kDefaultSliceDegreeBound);

/// Expresses the slice coefficient c as P(F) and stores it in the slice.
/// Throws Error(InvalidArgument) if D(c) != 0 or F is not D-invariant.
std::optional<Polynomial> slice_coefficient_as_P(const Derivation& d, LocalSlice& slice,
                                                 const PolyMap& F);

/// c^k R = T(f, f_1, .., f_m), with T over the ring (s, F targets) where the
/// first variable (named "t0" unless that clashes) stands for f.
struct LocalizationWitness {
  unsigned exponent = 0;
  Polynomial expression;
};

/// Smallest k <= power_bound with c^k R in Q[f, f_1, .., f_m].
/// Throws Error(InvalidArgument) if the slice has no coefficient_in_map.
std::optional<LocalizationWitness> verify_localization_identity(
    const Derivation& d, const LocalSlice& slice, const PolyMap& F, const Polynomial& r,
    unsigned power_bound = kDefaultPowerBound);

struct GeneratorCheck {
  Polynomial candidate;
  bool invariant = false;
  /// S over F's target ring with S(F) = candidate, when one exists.
  std::optional<Polynomial> expression;

  bool in_subalgebra() const noexcept { return expression.has_value(); }
};

/// Per-candidate invariance and membership in Q[F]. Says nothing about
/// whether F generates all invariants.
std::vector<GeneratorCheck> verify_invariant_generators(
    const GaAction& a, const PolyMap& F, const std::vector<Polynomial>& candidates);

}  // namespace gaql
