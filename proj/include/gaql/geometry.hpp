#pragma once

#include <span>
#include <vector>

#include "gaql/groebner.hpp"
#include "gaql/poly_map.hpp"

namespace gaql {

enum class FiberStatus { Empty, Nonempty };

/// Result of testing whether F^{-1}(point) has a complex solution.
struct FiberReport {
  std::vector<Rational> point;
  FiberStatus status = FiberStatus::Nonempty;
  int dimension = -1;  // -1 when empty
  GroebnerBasis witness;

  bool empty() const noexcept { return status == FiberStatus::Empty; }
};

/// Gröbner basis of (f_1 - y_1, .., f_m - y_m); the fiber is empty over C
/// exactly when that basis is {1}.
FiberReport fiber_probe(const PolyMap& F, std::span<const Rational> point,
                        const MonomialOrder& order = MonomialOrder::grevlex());

struct SingularityReport {
  std::vector<Polynomial> minors;  // maximal minors of the Jacobian matrix
  GroebnerBasis basis;
  int dimension = -1;
  /// n - dimension; n + 1 when the locus is empty.
  int codimension = 0;
  bool nonsingular_in_codim_1 = false;
};

/// Rank-drop locus of the Jacobian matrix of F (requires n - 1 components).
SingularityReport singular_locus(const PolyMap& F,
                                 const MonomialOrder& order = MonomialOrder::grevlex());

/// Box of rational points: `steps[i]` equally spaced values from lower[i] to
/// upper[i] inclusive (a single step requires lower[i] == upper[i]).
struct Grid {
  std::vector<Rational> lower;
  std::vector<Rational> upper;
  std::vector<unsigned> steps;
};

/// Points of the grid, last coordinate varying fastest. Throws
/// Error(MalformedGrid).
std::vector<std::vector<Rational>> grid_points(const Grid& grid);

/// Probes every point; returns the empty fibers in input order.
std::vector<FiberReport> complement_scan(const PolyMap& F,
                                         std::span<const std::vector<Rational>> points);
std::vector<FiberReport> complement_scan(const PolyMap& F, const Grid& grid);

}  // namespace gaql
