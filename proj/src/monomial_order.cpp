#include "gaql/monomial_order.hpp"

#include "gaql/error.hpp"

namespace gaql {

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Block: return "block(" + std::to_string(front_size_) + ")";
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex: return lex_compare(a, b);
    case Kind::Grevlex: return grevlex_compare(a, b);
    case Kind::Block: {
      std::size_t k = front_size_ < a.size() ? front_size_ : a.size();
      auto front = grevlex_compare_range(a, b, 0, k);
      if (front != std::strong_ordering::equal) return front;
      return grevlex_compare_range(a, b, k, a.size());
    }
  }
  return std::strong_ordering::equal;
}

const Term& leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero())
    throw Error(ErrorCode::InvalidArgument, "leading term of the zero polynomial");
  if (order.kind() == MonomialOrder::Kind::Grevlex) return p.terms().front();
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

}  // namespace gaql
