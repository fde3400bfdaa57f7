#include "gaql/ring.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "gaql/error.hpp"

namespace gaql {

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  auto first = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(first) || first == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Ring::Ring(std::vector<std::string> variables)
    : variables_(std::move(variables)) {
  if (variables_.empty())
    throw Error(ErrorCode::InvalidRing, "a ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    if (!is_identifier(v))
      throw Error(ErrorCode::InvalidRing,
                  "variable name '" + v + "' is not an identifier");
    if (!seen.insert(v).second)
      throw Error(ErrorCode::InvalidRing, "duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

RingPtr make_ring(std::vector<std::string> variables) {
  return std::make_shared<const Ring>(std::move(variables));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b))
    throw Error(ErrorCode::RingMismatch,
                std::string(where) + ": operands live in different rings");
}

std::string fresh_name(const std::vector<std::string>& taken,
                       const std::string& base) {
  auto used = [&](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) != taken.end();
  };
  if (!used(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!used(candidate)) return candidate;
  }
}

}  // namespace gaql
