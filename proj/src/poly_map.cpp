#include "gaql/poly_map.hpp"

#include <string>

#include "gaql/error.hpp"

namespace gaql {

PolyMap::PolyMap(RingPtr source, std::vector<Polynomial> components,
                 std::vector<std::string> target_names)
    : ring_(std::move(source)),
      components_(std::move(components)),
      target_names_(std::move(target_names)) {
  for (const auto& c : components_) require_same_ring(ring_, c.ring(), "PolyMap");
  if (target_names_.empty()) {
    for (std::size_t i = 0; i < components_.size(); ++i)
      target_names_.push_back("t" + std::to_string(i + 1));
  }
  if (target_names_.size() != components_.size())
    throw Error(ErrorCode::LengthMismatch,
                "PolyMap: one target name per component required");
}

RingPtr PolyMap::target_ring() const { return make_ring(target_names_); }

void PolyMap::require_quotient_shape(const char* where) const {
  if (components_.size() + 1 != ring_->arity())
    throw Error(ErrorCode::ArityMismatch,
                std::string(where) + ": need " + std::to_string(ring_->arity() - 1) +
                    " components for a map out of " + std::to_string(ring_->arity()) +
                    "-space, got " + std::to_string(components_.size()));
}

}  // namespace gaql
