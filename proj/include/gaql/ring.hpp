#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gaql {

/// Ordered set of variable names for a polynomial ring Q[x_1..x_n].
///
/// Names must be distinct identifiers ([A-Za-z_][A-Za-z0-9_]*) so that every
/// polynomial can be printed and parsed back. Rings are shared by pointer and
/// compared by their name lists.
class Ring {
 public:
  explicit Ring(std::vector<std::string> variables);

  std::size_t arity() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept {
    return variables_;
  }
  const std::string& name(std::size_t i) const { return variables_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.variables_ == b.variables_;
  }

 private:
  std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables);

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Throws Error(RingMismatch) unless both rings hold the same variables.
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

bool is_identifier(const std::string& name);

/// Returns `base` if it is not already one of `taken`, otherwise `base` with
/// the smallest numeric suffix that makes it unique.
std::string fresh_name(const std::vector<std::string>& taken,
                       const std::string& base);

}  // namespace gaql
