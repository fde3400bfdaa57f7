#pragma once

#include <cstdint>
#include <vector>

#include "gaql/polynomial.hpp"

namespace gaql {

inline constexpr unsigned kDefaultNilpotencyBound = 64;
inline constexpr std::int64_t kDefaultDegreeCap = 512;

/// Q-derivation of Q[x_1..x_n], determined by the images of the variables:
/// D(p) = sum_i D(x_i) * dp/dx_i.
class Derivation {
 public:
  Derivation(RingPtr ring, std::vector<Polynomial> images);

  /// d/dx_index.
  static Derivation partial(RingPtr ring, std::size_t index);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }
  std::size_t arity() const noexcept { return images_.size(); }
  bool is_zero() const noexcept;

  Polynomial operator()(const Polynomial& p) const;

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  RingPtr ring_;
  std::vector<Polynomial> images_;
};

/// D^k(p). Throws Error(DegreeExplosion) if an iterate exceeds `degree_cap`.
Polynomial apply(const Derivation& d, const Polynomial& p, unsigned k = 1,
                 std::int64_t degree_cap = kDefaultDegreeCap);

struct NilpotencyCertificate {
  enum class Status { Certified, Inconclusive };

  Status status = Status::Inconclusive;
  unsigned bound = 0;
  /// orders[i] is the least k with D^k(x_i) = 0 (only when certified).
  std::vector<unsigned> orders;
  /// chains[i] = x_i, D(x_i), ..., the nonzero iterates computed.
  std::vector<std::vector<Polynomial>> chains;

  bool certified() const noexcept { return status == Status::Certified; }

  /// Iteration count after which D^k(R) = 0 for any R of total degree
  /// `degree`: (sum_i (orders[i] - 1)) * degree + 1.
  std::uint64_t iteration_bound(std::int64_t degree) const;
};

/// Iterates D on each variable up to `bound` times. Certified when every
/// chain reaches zero; never claims D is not locally nilpotent.
NilpotencyCertificate certify_locally_nilpotent(
    const Derivation& d, unsigned bound = kDefaultNilpotencyBound,
    std::int64_t degree_cap = kDefaultDegreeCap);

/// Re-derives every chain link of a certified certificate from `d`.
bool certificate_matches(const Derivation& d, const NilpotencyCertificate& cert);

/// D(p) = 0.
bool kernel_check(const Derivation& d, const Polynomial& p);

struct FixedLocus {
  std::vector<Polynomial> ideal;  // D(x_1), .., D(x_n)
  int dimension = 0;              // -1 when the ideal is the unit ideal
  bool fixed_point_free = false;
};

FixedLocus fixed_locus(const Derivation& d);

}  // namespace gaql
