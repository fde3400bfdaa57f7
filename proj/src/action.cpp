#include "gaql/action.hpp"

#include "gaql/error.hpp"

namespace gaql {

namespace {

std::vector<std::size_t> shifted_indices(std::size_t n, std::size_t offset) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i + offset;
  return idx;
}

}  // namespace

GaAction::GaAction(RingPtr ring, RingPtr action_ring, std::vector<Polynomial> components,
                   Derivation generator, NilpotencyCertificate certificate)
    : ring_(std::move(ring)),
      action_ring_(std::move(action_ring)),
      components_(std::move(components)),
      generator_(std::move(generator)),
      certificate_(std::move(certificate)) {}

Polynomial GaAction::lift(const Polynomial& p) const {
  require_same_ring(ring_, p.ring(), "GaAction::lift");
  return embed(p, action_ring_, shifted_indices(ring_->arity(), 1));
}

GaAction exponentiate(const Derivation& d, const NilpotencyCertificate& cert,
                      const std::string& parameter) {
  if (!cert.certified())
    throw Error(ErrorCode::Uncertified,
                "exponentiate: local nilpotency not certified within bound " +
                    std::to_string(cert.bound));
  if (!certificate_matches(d, cert))
    throw Error(ErrorCode::Uncertified, "exponentiate: certificate does not match derivation");

  const RingPtr& ring = d.ring();
  const std::size_t n = ring->arity();
  std::vector<std::string> names{fresh_name(ring->variables(), parameter)};
  names.insert(names.end(), ring->variables().begin(), ring->variables().end());
  RingPtr action_ring = make_ring(names);
  const auto lift = shifted_indices(n, 1);
  const Polynomial t = Polynomial::variable(action_ring, 0);

  std::vector<Polynomial> components;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial phi(action_ring);
    const auto& chain = cert.chains[i];
    for (unsigned k = 0; k < chain.size(); ++k)
      phi += (Rational(1) / factorial(k)) * (t.pow(k) * embed(chain[k], action_ring, lift));
    components.push_back(std::move(phi));
  }
  GaAction action(ring, action_ring, std::move(components), d, cert);
  if (!identity_at_zero(action))
    throw Error(ErrorCode::ActionLawViolated, "exponentiate: phi(0; x) != x");
  if (!group_law_holds(action))
    throw Error(ErrorCode::ActionLawViolated, "exponentiate: group law fails");
  return action;
}

bool identity_at_zero(const GaAction& a) {
  const RingPtr& ring = a.ring();
  std::vector<Polynomial> at_zero{Polynomial(ring)};
  for (std::size_t i = 0; i < ring->arity(); ++i)
    at_zero.push_back(Polynomial::variable(ring, i));
  for (std::size_t i = 0; i < ring->arity(); ++i)
    if (!(compose(a.components()[i], at_zero) == Polynomial::variable(ring, i)))
      return false;
  return true;
}

bool group_law_holds(const GaAction& a) {
  const RingPtr& ring = a.ring();
  const std::size_t n = ring->arity();
  std::vector<std::string> names;
  names.push_back(fresh_name(ring->variables(), "u"));
  std::vector<std::string> taken = ring->variables();
  taken.push_back(names[0]);
  names.push_back(fresh_name(taken, "v"));
  names.insert(names.end(), ring->variables().begin(), ring->variables().end());
  RingPtr two = make_ring(names);
  const Polynomial u = Polynomial::variable(two, 0);
  const Polynomial v = Polynomial::variable(two, 1);

  auto substitution = [&](const Polynomial& param, const std::vector<Polynomial>& xs) {
    std::vector<Polynomial> images{param};
    images.insert(images.end(), xs.begin(), xs.end());
    return images;
  };
  std::vector<Polynomial> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(Polynomial::variable(two, i + 2));

  std::vector<Polynomial> inner;  // phi(v; x)
  for (const auto& c : a.components()) inner.push_back(compose(c, substitution(v, xs)));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial lhs = compose(a.components()[i], substitution(u, inner));
    Polynomial rhs = compose(a.components()[i], substitution(u + v, xs));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Polynomial act(const GaAction& a, const Polynomial& p) {
  require_same_ring(a.ring(), p.ring(), "act");
  return compose(p, a.components());
}

bool is_invariant(const GaAction& a, const Polynomial& p) {
  return act(a, p) == a.lift(p);
}

std::int64_t deg_function(const GaAction& a, const Polynomial& p) {
  if (p.is_zero()) return kMinusInfinity;
  return act(a, p).degree_in(0);
}

}  // namespace gaql
