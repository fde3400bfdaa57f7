#include "gaql/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>

#include "gaql/error.hpp"

namespace gaql {

namespace {

std::atomic<bool> g_self_check{false};
std::atomic<std::size_t> g_self_check_count{0};

// Terms sorted descending under a fixed order; the working representation
// for division and Buchberger.
using TermList = std::vector<Term>;

struct OrderedContext {
  MonomialOrder order;

  TermList sorted(const Polynomial& p) const {
    TermList t = p.terms();
    if (order.kind() != MonomialOrder::Kind::Grevlex) {
      std::sort(t.begin(), t.end(), [this](const Term& a, const Term& b) {
        return order.greater(a.monomial, b.monomial);
      });
    }
    return t;
  }

  // a[from..] - c * m * b, assuming b sorted descending.
  TermList sub_scaled(const TermList& a, std::size_t from, const TermList& b,
                      const Monomial& m, const Rational& c) const {
    TermList out;
    out.reserve(a.size() - from + b.size());
    std::size_t i = from, j = 0;
    while (i < a.size() && j < b.size()) {
      Monomial bm = b[j].monomial * m;
      auto cmp = order.compare(a[i].monomial, bm);
      if (cmp == std::strong_ordering::greater) {
        out.push_back(a[i++]);
      } else if (cmp == std::strong_ordering::less) {
        out.push_back({std::move(bm), -c * b[j].coeff});
        ++j;
      } else {
        Rational v = a[i].coeff - c * b[j].coeff;
        if (v != 0) out.push_back({std::move(bm), std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].monomial * m, -c * b[j].coeff});
    return out;
  }

  TermList reduce(TermList work, const std::vector<TermList>& basis) const {
    TermList remainder;
    std::size_t pos = 0;
    while (pos < work.size()) {
      const Term& lead = work[pos];
      const TermList* divisor = nullptr;
      for (const auto& g : basis) {
        if (g.front().monomial.divides(lead.monomial)) {
          divisor = &g;
          break;
        }
      }
      if (divisor == nullptr) {
        remainder.push_back(lead);
        ++pos;
        continue;
      }
      Monomial m = divisor->front().monomial.cofactor_in(lead.monomial);
      Rational c = lead.coeff / divisor->front().coeff;
      // The leading terms cancel exactly, so skip past them.
      work = sub_scaled(work, pos + 1, TermList(divisor->begin() + 1, divisor->end()),
                        m, c);
      pos = 0;
    }
    return remainder;
  }

  static void make_monic(TermList& t) {
    Rational lc = t.front().coeff;
    if (lc == 1) return;
    for (auto& term : t) term.coeff /= lc;
  }

  TermList spoly(const TermList& f, const TermList& g) const {
    Monomial l = f.front().monomial.lcm(g.front().monomial);
    Monomial mf = f.front().monomial.cofactor_in(l);
    Monomial mg = g.front().monomial.cofactor_in(l);
    TermList scaled_f;
    scaled_f.reserve(f.size());
    for (const auto& t : f) scaled_f.push_back({t.monomial * mf, t.coeff / f.front().coeff});
    return sub_scaled(scaled_f, 0, g, mg, Rational(1) / g.front().coeff);
  }
};

Polynomial to_polynomial(const RingPtr& ring, TermList terms) {
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<TermList> sorted_basis(const OrderedContext& ctx,
                                   std::span<const Polynomial> basis) {
  std::vector<TermList> out;
  for (const auto& b : basis)
    if (!b.is_zero()) out.push_back(ctx.sorted(b));
  return out;
}

std::vector<TermList> buchberger(const OrderedContext& ctx, std::vector<TermList> g) {
  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto lm = [&](std::size_t i) -> const Monomial& { return g[i].front().monomial; };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!pending.empty()) {
    // Normal selection: smallest lcm, ties by pair index.
    auto best = pending.begin();
    Monomial best_lcm = lm(best->first).lcm(lm(best->second));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lm(it->first).lcm(lm(it->second));
      if (ctx.order.compare(l, best_lcm) == std::strong_ordering::less) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    if (lm(i).coprime(lm(j))) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (lm(k).divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;

    TermList h = ctx.reduce(ctx.spoly(g[i], g[j]), g);
    if (h.empty()) continue;
    OrderedContext::make_monic(h);
    std::size_t next = g.size();
    g.push_back(std::move(h));
    for (std::size_t k = 0; k < next; ++k) pending.insert({k, next});
  }
  return g;
}

std::vector<TermList> interreduce(const OrderedContext& ctx, std::vector<TermList> g) {
  // Drop elements whose leading monomial is a multiple of another's; among
  // equal leading monomials keep the earliest.
  std::vector<TermList> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& a = g[k].front().monomial;
      const Monomial& b = g[i].front().monomial;
      if (a.divides(b) && (a != b || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<TermList> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<TermList> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    // The leading term is irreducible by minimality; reduce the tail.
    TermList tail(minimal[i].begin() + 1, minimal[i].end());
    TermList r = ctx.reduce(std::move(tail), others);
    r.insert(r.begin(), minimal[i].front());
    OrderedContext::make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const TermList& a, const TermList& b) {
    return ctx.order.compare(a.front().monomial, b.front().monomial) ==
           std::strong_ordering::less;
  });
  return reduced;
}

RingPtr ring_of(std::span<const Polynomial> gens, const char* where) {
  if (gens.empty())
    throw Error(ErrorCode::InvalidArgument,
                std::string(where) + ": ring cannot be inferred from an empty list");
  for (const auto& g : gens) require_same_ring(gens.front().ring(), g.ring(), where);
  return gens.front().ring();
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order,
                             std::vector<Polynomial> generators,
                             std::vector<Polynomial> basis)
    : ring_(std::move(ring)),
      order_(order),
      generators_(std::move(generators)),
      basis_(std::move(basis)) {}

bool GroebnerBasis::is_unit() const noexcept {
  return basis_.size() == 1 && basis_.front().is_one();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(leading_term(b, order_).monomial);
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  require_same_ring(ring_, p.ring(), "normal_form");
  return reduce(p, basis_, order_);
}

bool GroebnerBasis::contains(const Polynomial& p) const {
  return normal_form(p).is_zero();
}

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis,
                  const MonomialOrder& order) {
  for (const auto& b : basis) require_same_ring(p.ring(), b.ring(), "reduce");
  if (basis.empty() || p.is_zero()) return p;
  OrderedContext ctx{order};
  return to_polynomial(p.ring(), ctx.reduce(ctx.sorted(p), sorted_basis(ctx, basis)));
}

GroebnerBasis groebner_basis(std::span<const Polynomial> gens,
                             const MonomialOrder& order, const RingPtr& ring) {
  for (const auto& g : gens) require_same_ring(ring, g.ring(), "groebner_basis");
  if (order.kind() == MonomialOrder::Kind::Block && order.front_size() > ring->arity())
    throw Error(ErrorCode::InvalidArgument, "block size exceeds ring arity");

  std::vector<Polynomial> inputs(gens.begin(), gens.end());
  OrderedContext ctx{order};
  std::vector<TermList> work;
  bool unit = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) unit = true;
    TermList t = ctx.sorted(g);
    OrderedContext::make_monic(t);
    work.push_back(std::move(t));
  }
  std::vector<Polynomial> basis;
  if (unit) {
    basis.push_back(Polynomial::constant(ring, 1));
  } else {
    for (auto& t : interreduce(ctx, buchberger(ctx, std::move(work))))
      basis.push_back(to_polynomial(ring, std::move(t)));
  }
  GroebnerBasis gb(ring, order, std::move(inputs), std::move(basis));
  if (g_self_check.load()) {
    if (!buchberger_criterion_holds(gb) || !is_reduced(gb))
      throw std::logic_error("groebner_basis: self check failed");
    ++g_self_check_count;
  }
  return gb;
}

GroebnerBasis groebner_basis(std::span<const Polynomial> gens,
                             const MonomialOrder& order) {
  return groebner_basis(gens, order, ring_of(gens, "groebner_basis"));
}

void set_groebner_self_check(bool enabled) { g_self_check.store(enabled); }
bool groebner_self_check() { return g_self_check.load(); }
std::size_t groebner_self_check_count() { return g_self_check_count.load(); }

bool buchberger_criterion_holds(const GroebnerBasis& gb) {
  OrderedContext ctx{gb.order()};
  std::vector<TermList> basis = sorted_basis(ctx, gb.basis());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!ctx.reduce(ctx.spoly(basis[i], basis[j]), basis).empty()) return false;
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  const auto& basis = gb.basis();
  std::vector<Monomial> lms = gb.leading_monomials();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (leading_term(basis[i], gb.order()).coeff != 1) return false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == i) continue;
      for (const auto& t : basis[i].terms())
        if (lms[k].divides(t.monomial)) return false;
    }
  }
  return true;
}

bool ideal_membership(const Polynomial& p, std::span<const Polynomial> gens) {
  if (p.is_zero()) return true;
  if (gens.empty()) return false;
  return groebner_basis(gens, MonomialOrder::grevlex(), p.ring()).contains(p);
}

bool is_unit_ideal(std::span<const Polynomial> gens) {
  if (gens.empty()) return false;
  return groebner_basis(gens).is_unit();
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> gens,
                                  const std::set<std::size_t>& drop) {
  if (gens.empty()) return {};
  RingPtr ring = ring_of(gens, "eliminate");
  const std::size_t n = ring->arity();
  for (std::size_t d : drop)
    if (d >= n) throw Error(ErrorCode::IndexOutOfRange, "eliminate: index out of range");

  // Reorder so the dropped variables come first.
  std::vector<std::size_t> forward(n);
  std::vector<std::size_t> backward;
  std::vector<std::string> names;
  for (std::size_t d : drop) {
    forward[d] = backward.size();
    backward.push_back(d);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (drop.count(i)) continue;
    forward[i] = backward.size();
    backward.push_back(i);
  }
  for (std::size_t i : backward) names.push_back(ring->name(i));
  RingPtr permuted = make_ring(names);

  std::vector<Polynomial> moved;
  for (const auto& g : gens) moved.push_back(embed(g, permuted, forward));
  GroebnerBasis gb = groebner_basis(moved, MonomialOrder::block(drop.size()), permuted);

  std::vector<Polynomial> out;
  for (const auto& b : gb.basis()) {
    bool free_of_dropped = true;
    for (std::size_t k = 0; k < drop.size(); ++k)
      if (b.uses_variable(k)) free_of_dropped = false;
    if (free_of_dropped) out.push_back(embed(b, ring, backward));
  }
  return out;
}

int dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  const std::size_t n = gb.ring()->arity();
  if (n > 24)
    throw Error(ErrorCode::InvalidArgument, "dimension: too many variables for subset search");
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] != 0) mask |= 1u << i;
    supports.push_back(mask);
  }
  // S is independent iff no leading monomial is supported inside S.
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [s](std::uint32_t m) { return (m & ~s) == 0; });
    if (independent) best = size;
  }
  return best;
}

int dimension(std::span<const Polynomial> gens, const RingPtr& ring) {
  return dimension(groebner_basis(gens, MonomialOrder::grevlex(), ring));
}

bool radical_membership(const Polynomial& p, std::span<const Polynomial> gens) {
  const RingPtr& ring = p.ring();
  std::vector<std::string> names = ring->variables();
  names.push_back(fresh_name(names, "w"));
  RingPtr extended = make_ring(names);
  std::vector<std::size_t> mapping(ring->arity());
  for (std::size_t i = 0; i < mapping.size(); ++i) mapping[i] = i;

  std::vector<Polynomial> system;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring(), "radical_membership");
    system.push_back(embed(g, extended, mapping));
  }
  Polynomial w = Polynomial::variable(extended, ring->arity());
  system.push_back(Polynomial::constant(extended, 1) - w * embed(p, extended, mapping));
  return groebner_basis(system, MonomialOrder::grevlex(), extended).is_unit();
}

std::optional<Polynomial> subalgebra_membership(const Polynomial& g,
                                                std::span<const Polynomial> fs,
                                                std::vector<std::string> tag_names) {
  if (fs.empty())
    throw Error(ErrorCode::InvalidArgument, "subalgebra_membership: no generators");
  const RingPtr& ring = g.ring();
  for (const auto& f : fs) require_same_ring(ring, f.ring(), "subalgebra_membership");
  const std::size_t n = ring->arity();
  const std::size_t m = fs.size();
  if (tag_names.empty())
    for (std::size_t i = 0; i < m; ++i) tag_names.push_back("y" + std::to_string(i + 1));
  if (tag_names.size() != m)
    throw Error(ErrorCode::LengthMismatch, "subalgebra_membership: one tag name per generator");
  RingPtr tag_ring = make_ring(tag_names);

  // Internal names only need to be distinct from the source variables.
  std::vector<std::string> names = ring->variables();
  for (std::size_t i = 0; i < m; ++i)
    names.push_back(fresh_name(names, "_tag" + std::to_string(i + 1)));
  RingPtr joint = make_ring(names);
  std::vector<std::size_t> source_map(n);
  for (std::size_t i = 0; i < n; ++i) source_map[i] = i;

  std::vector<Polynomial> system;
  for (std::size_t i = 0; i < m; ++i)
    system.push_back(Polynomial::variable(joint, n + i) - embed(fs[i], joint, source_map));
  GroebnerBasis gb = groebner_basis(system, MonomialOrder::block(n), joint);
  Polynomial nf = gb.normal_form(embed(g, joint, source_map));

  std::vector<Term> tagged;
  for (const auto& t : nf.terms()) {
    Monomial mono(m);
    for (std::size_t i = 0; i < n; ++i)
      if (t.monomial[i] != 0) return std::nullopt;
    for (std::size_t i = 0; i < m; ++i) mono[i] = t.monomial[n + i];
    tagged.push_back({std::move(mono), t.coeff});
  }
  return Polynomial::from_terms(tag_ring, std::move(tagged));
}

}  // namespace gaql
