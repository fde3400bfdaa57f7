#include "gaql/geometry.hpp"

#include <string>

#include "gaql/error.hpp"

namespace gaql {

namespace {

void column_subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

FiberReport fiber_probe(const PolyMap& F, std::span<const Rational> point,
                        const MonomialOrder& order) {
  if (point.size() != F.size())
    throw Error(ErrorCode::LengthMismatch,
                "fiber_probe: point has " + std::to_string(point.size()) +
                    " coordinates, map has " + std::to_string(F.size()) + " components");
  std::vector<Polynomial> ideal;
  for (std::size_t i = 0; i < F.size(); ++i)
    ideal.push_back(F[i] - Polynomial::constant(F.ring(), point[i]));
  GroebnerBasis gb = groebner_basis(ideal, order, F.ring());
  bool empty = gb.is_unit();
  int dim = dimension(gb);
  return FiberReport{std::vector<Rational>(point.begin(), point.end()),
                     empty ? FiberStatus::Empty : FiberStatus::Nonempty, dim, std::move(gb)};
}

SingularityReport singular_locus(const PolyMap& F, const MonomialOrder& order) {
  F.require_quotient_shape("singular_locus");
  const RingPtr& ring = F.ring();
  const std::size_t n = ring->arity();
  const std::size_t m = F.size();

  std::vector<Polynomial> minors;
  if (m == 0) {
    minors.push_back(Polynomial::constant(ring, 1));
  } else {
    PolyMatrix jac = jacobian_matrix(F.components());
    std::vector<std::vector<std::size_t>> subsets;
    column_subsets(n, m, subsets);
    for (const auto& cols : subsets) {
      PolyMatrix sub;
      for (const auto& row : jac) {
        std::vector<Polynomial> r;
        for (std::size_t c : cols) r.push_back(row[c]);
        sub.push_back(std::move(r));
      }
      minors.push_back(determinant(std::move(sub)));
    }
  }
  GroebnerBasis gb = groebner_basis(minors, order, ring);
  int dim = dimension(gb);
  int codim = gb.is_unit() ? static_cast<int>(n) + 1 : static_cast<int>(n) - dim;
  bool flag = gb.is_unit() || codim >= 2;
  return SingularityReport{std::move(minors), std::move(gb), dim, codim, flag};
}

std::vector<std::vector<Rational>> grid_points(const Grid& grid) {
  const std::size_t d = grid.lower.size();
  if (d == 0 || grid.upper.size() != d || grid.steps.size() != d)
    throw Error(ErrorCode::MalformedGrid, "grid: lower, upper and steps need one entry per axis");
  std::vector<std::vector<Rational>> axes(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (grid.steps[i] == 0)
      throw Error(ErrorCode::MalformedGrid, "grid: steps must be positive");
    if (grid.lower[i] > grid.upper[i])
      throw Error(ErrorCode::MalformedGrid, "grid: lower bound exceeds upper bound");
    if (grid.steps[i] == 1) {
      if (grid.lower[i] != grid.upper[i])
        throw Error(ErrorCode::MalformedGrid, "grid: a single step needs lower == upper");
      axes[i].push_back(grid.lower[i]);
      continue;
    }
    Rational width = (grid.upper[i] - grid.lower[i]) / Rational(grid.steps[i] - 1);
    for (unsigned k = 0; k < grid.steps[i]; ++k)
      axes[i].push_back(grid.lower[i] + width * Rational(k));
  }
  std::vector<std::vector<Rational>> points{{}};
  for (const auto& axis : axes) {
    std::vector<std::vector<Rational>> next;
    for (const auto& prefix : points) {
      for (const auto& v : axis) {
        auto p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  return points;
}

std::vector<FiberReport> complement_scan(const PolyMap& F,
                                         std::span<const std::vector<Rational>> points) {
  if (points.empty())
    throw Error(ErrorCode::MalformedGrid, "complement_scan: no points given");
  std::vector<FiberReport> empties;
  for (const auto& p : points) {
    FiberReport r = fiber_probe(F, p);
    if (r.empty()) empties.push_back(std::move(r));
  }
  return empties;
}

std::vector<FiberReport> complement_scan(const PolyMap& F, const Grid& grid) {
  if (grid.lower.size() != F.size())
    throw Error(ErrorCode::MalformedGrid, "grid dimension differs from the number of components");
  auto points = grid_points(grid);
  return complement_scan(F, points);
}

}  // namespace gaql
