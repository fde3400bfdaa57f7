#include "gaql/quotient.hpp"

#include <algorithm>
#include <map>

#include "gaql/error.hpp"
#include "gaql/groebner.hpp"

namespace gaql {

namespace {

// Exponent vectors of total degree exactly `degree`, in descending grevlex
// (x_1 before x_2 before ...).
void monomials_of_degree(std::size_t n, unsigned degree, std::vector<Monomial>& out) {
  std::vector<Monomial> batch;
  Monomial cur(n);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == n) {
      cur[var] = left;
      batch.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(batch.begin(), batch.end(), [](const Monomial& a, const Monomial& b) {
    return grevlex_compare(a, b) == std::strong_ordering::greater;
  });
  out.insert(out.end(), batch.begin(), batch.end());
}

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    Rational inv = Rational(1) / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] -= factor * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Derivation jacobian_derivation(const PolyMap& F) {
  F.require_quotient_shape("jacobian_derivation");
  const RingPtr& ring = F.ring();
  std::vector<Polynomial> images;
  std::vector<Polynomial> rows;
  rows.push_back(Polynomial(ring));
  rows.insert(rows.end(), F.components().begin(), F.components().end());
  for (std::size_t i = 0; i < ring->arity(); ++i) {
    rows[0] = Polynomial::variable(ring, i);
    images.push_back(jacobian_det(rows));
  }
  return Derivation(ring, std::move(images));
}

bool check_map_invariant(const GaAction& a, const PolyMap& F) {
  require_same_ring(a.ring(), F.ring(), "check_map_invariant");
  return std::all_of(F.components().begin(), F.components().end(),
                     [&](const Polynomial& f) { return is_invariant(a, f); });
}

std::optional<LocalSlice> find_local_slice(const Derivation& d, unsigned degree_bound) {
  if (d.is_zero())
    throw Error(ErrorCode::InvalidArgument, "find_local_slice: zero derivation has no slice");
  const RingPtr& ring = d.ring();
  std::vector<Monomial> basis;
  for (unsigned deg = 0; deg <= degree_bound; ++deg)
    monomials_of_degree(ring->arity(), deg, basis);

  // One column per candidate monomial, one row per monomial appearing in
  // some D^2(m).
  std::vector<Polynomial> second;
  std::map<Monomial, std::size_t> row_of;
  for (const auto& m : basis) {
    second.push_back(apply(d, Polynomial::monomial(ring, m, 1), 2));
    for (const auto& t : second.back().terms()) row_of.emplace(t.monomial, row_of.size());
  }
  const std::size_t cols = basis.size();
  std::vector<std::vector<Rational>> system(row_of.size(), std::vector<Rational>(cols));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& t : second[j].terms()) system[row_of.at(t.monomial)][j] = t.coeff;

  std::vector<std::size_t> pivots = row_reduce(system, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  // D is linear, so if every kernel basis vector has D(f) = 0 the whole
  // kernel does; scanning the basis is exhaustive.
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Term> terms{{basis[free], 1}};
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (system[r][free] != 0) terms.push_back({basis[pivots[r]], -system[r][free]});
    Polynomial f = Polynomial::from_terms(ring, std::move(terms));
    Polynomial c = d(f);
    if (!c.is_zero()) return LocalSlice{std::move(f), std::move(c), std::nullopt};
  }
  return std::nullopt;
}

std::optional<Polynomial> slice_coefficient_as_P(const Derivation& d, LocalSlice& slice,
                                                 const PolyMap& F) {
  require_same_ring(d.ring(), F.ring(), "slice_coefficient_as_P");
  if (!kernel_check(d, slice.c))
    throw Error(ErrorCode::InvalidArgument, "slice coefficient is not in the kernel");
  for (const auto& f : F.components())
    if (!kernel_check(d, f))
      throw Error(ErrorCode::InvalidArgument, "map component is not invariant");
  auto p = subalgebra_membership(slice.c, F.components(), F.target_names());
  slice.coefficient_in_map = p;
  return p;
}

std::optional<LocalizationWitness> verify_localization_identity(
    const Derivation& d, const LocalSlice& slice, const PolyMap& F, const Polynomial& r,
    unsigned power_bound) {
  require_same_ring(d.ring(), F.ring(), "verify_localization_identity");
  require_same_ring(d.ring(), r.ring(), "verify_localization_identity");
  if (!slice.coefficient_in_map)
    throw Error(ErrorCode::InvalidArgument,
                "verify_localization_identity: slice coefficient not yet expressed in F");
  std::vector<Polynomial> gens{slice.f};
  gens.insert(gens.end(), F.components().begin(), F.components().end());
  std::vector<std::string> names{fresh_name(F.target_names(), "t0")};
  names.insert(names.end(), F.target_names().begin(), F.target_names().end());

  Polynomial scaled = r;
  for (unsigned k = 0; k <= power_bound; ++k) {
    if (auto t = subalgebra_membership(scaled, gens, names))
      return LocalizationWitness{k, std::move(*t)};
    scaled *= slice.c;
  }
  return std::nullopt;
}

std::vector<GeneratorCheck> verify_invariant_generators(
    const GaAction& a, const PolyMap& F, const std::vector<Polynomial>& candidates) {
  require_same_ring(a.ring(), F.ring(), "verify_invariant_generators");
  std::vector<GeneratorCheck> report;
  for (const auto& cand : candidates) {
    GeneratorCheck check{cand, is_invariant(a, cand), std::nullopt};
    if (!F.components().empty())
      check.expression = subalgebra_membership(cand, F.components(), F.target_names());
    report.push_back(std::move(check));
  }
  return report;
}

}  // namespace gaql
