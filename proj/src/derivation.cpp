#include "gaql/derivation.hpp"

#include <algorithm>
#include <string>

#include "gaql/error.hpp"
#include "gaql/groebner.hpp"

namespace gaql {

Derivation::Derivation(RingPtr ring, std::vector<Polynomial> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != ring_->arity())
    throw Error(ErrorCode::LengthMismatch,
                "derivation needs " + std::to_string(ring_->arity()) +
                    " images, got " + std::to_string(images_.size()));
  for (const auto& img : images_) require_same_ring(ring_, img.ring(), "Derivation");
}

Derivation Derivation::partial(RingPtr ring, std::size_t index) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->arity(); ++i)
    images.push_back(Polynomial::constant(ring, i == index ? 1 : 0));
  if (index >= ring->arity())
    throw Error(ErrorCode::IndexOutOfRange, "partial: index out of range");
  return Derivation(ring, std::move(images));
}

bool Derivation::is_zero() const noexcept {
  return std::all_of(images_.begin(), images_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial Derivation::operator()(const Polynomial& p) const {
  require_same_ring(ring_, p.ring(), "derivation");
  Polynomial out(ring_);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].is_zero() || !p.uses_variable(i)) continue;
    out += images_[i] * partial_derivative(p, i);
  }
  return out;
}

Polynomial apply(const Derivation& d, const Polynomial& p, unsigned k,
                 std::int64_t degree_cap) {
  Polynomial cur = p;
  for (unsigned step = 0; step < k && !cur.is_zero(); ++step) {
    cur = d(cur);
    if (cur.total_degree() > degree_cap)
      throw Error(ErrorCode::DegreeExplosion,
                  "iterate " + std::to_string(step + 1) + " has total degree " +
                      std::to_string(cur.total_degree()) + " > cap " +
                      std::to_string(degree_cap));
  }
  return cur;
}

std::uint64_t NilpotencyCertificate::iteration_bound(std::int64_t degree) const {
  std::uint64_t sum = 0;
  for (unsigned o : orders) sum += o - 1;
  return sum * static_cast<std::uint64_t>(std::max<std::int64_t>(degree, 0)) + 1;
}

NilpotencyCertificate certify_locally_nilpotent(const Derivation& d, unsigned bound,
                                                std::int64_t degree_cap) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "nilpotency bound must be >= 1");
  NilpotencyCertificate cert;
  cert.bound = bound;
  cert.status = NilpotencyCertificate::Status::Certified;
  for (std::size_t i = 0; i < d.arity(); ++i) {
    std::vector<Polynomial> chain{Polynomial::variable(d.ring(), i)};
    unsigned order = 0;
    for (unsigned k = 1; k <= bound; ++k) {
      Polynomial next = apply(d, chain.back(), 1, degree_cap);
      if (next.is_zero()) {
        order = k;
        break;
      }
      chain.push_back(std::move(next));
    }
    if (order == 0) cert.status = NilpotencyCertificate::Status::Inconclusive;
    cert.orders.push_back(order);
    cert.chains.push_back(std::move(chain));
  }
  if (!cert.certified()) cert.orders.clear();
  return cert;
}

bool certificate_matches(const Derivation& d, const NilpotencyCertificate& cert) {
  if (!cert.certified() || cert.chains.size() != d.arity() ||
      cert.orders.size() != d.arity())
    return false;
  for (std::size_t i = 0; i < d.arity(); ++i) {
    const auto& chain = cert.chains[i];
    if (chain.size() != cert.orders[i]) return false;
    if (!(chain.front() == Polynomial::variable(d.ring(), i))) return false;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      if (chain[k].is_zero() || !(d(chain[k]) == chain[k + 1])) return false;
    }
    if (chain.back().is_zero() || !d(chain.back()).is_zero()) return false;
  }
  return true;
}

bool kernel_check(const Derivation& d, const Polynomial& p) { return d(p).is_zero(); }

FixedLocus fixed_locus(const Derivation& d) {
  FixedLocus locus;
  locus.ideal = d.images();
  GroebnerBasis gb = groebner_basis(locus.ideal, MonomialOrder::grevlex(), d.ring());
  locus.dimension = dimension(gb);
  locus.fixed_point_free = gb.is_unit();
  return locus;
}

}  // namespace gaql
