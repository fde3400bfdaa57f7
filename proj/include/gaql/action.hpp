#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gaql/derivation.hpp"
#include "gaql/polynomial.hpp"

namespace gaql {

/// deg_function value of the zero polynomial.
inline constexpr std::int64_t kMinusInfinity = std::numeric_limits<std::int64_t>::min();

/// Algebraic action of the additive group on affine n-space, t -> phi(t; x).
///
/// Components live in the action ring (t, x_1..x_n). Instances only come out
/// of exponentiate(), which checks phi(0; x) = x and the group law before
/// returning.
class GaAction {
 public:
  const RingPtr& ring() const noexcept { return ring_; }
  const RingPtr& action_ring() const noexcept { return action_ring_; }
  const std::string& parameter() const noexcept { return action_ring_->name(0); }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  const Derivation& generator() const noexcept { return generator_; }
  const NilpotencyCertificate& certificate() const noexcept { return certificate_; }

  /// p viewed as a polynomial in the action ring.
  Polynomial lift(const Polynomial& p) const;

 private:
  friend GaAction exponentiate(const Derivation&, const NilpotencyCertificate&,
                               const std::string&);
  GaAction(RingPtr ring, RingPtr action_ring, std::vector<Polynomial> components,
           Derivation generator, NilpotencyCertificate certificate);

  RingPtr ring_;
  RingPtr action_ring_;
  std::vector<Polynomial> components_;
  Derivation generator_;
  NilpotencyCertificate certificate_;
};

/// phi_i = sum_k t^k D^k(x_i) / k!. Throws Error(Uncertified) unless `cert`
/// is a certified certificate for `d`, and Error(ActionLawViolated) if the
/// result fails either action axiom. `parameter` is renamed if it collides
/// with a ring variable.
GaAction exponentiate(const Derivation& d, const NilpotencyCertificate& cert,
                      const std::string& parameter = "t");

/// phi(0; x) = x.
bool identity_at_zero(const GaAction& a);
/// phi(u; phi(v; x)) = phi(u + v; x) as a polynomial identity in (u, v, x).
bool group_law_holds(const GaAction& a);

/// p o phi, in the action ring.
Polynomial act(const GaAction& a, const Polynomial& p);

bool is_invariant(const GaAction& a, const Polynomial& p);

/// t-degree of p o phi; kMinusInfinity for p = 0.
std::int64_t deg_function(const GaAction& a, const Polynomial& p);

}  // namespace gaql
