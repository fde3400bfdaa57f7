#pragma once

#include <string>
#include <vector>

#include "gaql/polynomial.hpp"

namespace gaql {

/// Polynomial map F = (f_1, .., f_m) from the source ring's affine space.
/// Each component carries a target coordinate name (default t1..tm), used
/// when expressing things as polynomials in F.
class PolyMap {
 public:
  PolyMap(RingPtr source, std::vector<Polynomial> components,
          std::vector<std::string> target_names = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& components() const noexcept {
    return components_;
  }
  const std::vector<std::string>& target_names() const noexcept {
    return target_names_;
  }
  std::size_t size() const noexcept { return components_.size(); }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }

  /// Ring on the target coordinates.
  RingPtr target_ring() const;

  /// Throws Error(ArityMismatch) unless m = n - 1.
  void require_quotient_shape(const char* where) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> components_;
  std::vector<std::string> target_names_;
};

}  // namespace gaql
