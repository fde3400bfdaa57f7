#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaql/error.hpp"
#include "gaql/quotient.hpp"
#include "support.hpp"

using namespace gaql;
using gaql::test::P;
using gaql::test::Ps;

namespace {

const RingPtr x123 = make_ring({"x1", "x2", "x3"});
const RingPtr xyz = make_ring({"x", "y", "z"});
const RingPtr xyuv = make_ring({"x", "y", "u", "v"});

Derivation D(const RingPtr& ring, const std::vector<std::string>& images) {
  return Derivation(ring, Ps(ring, images));
}

GaAction exp_of(const Derivation& d) { return exponentiate(d, certify_locally_nilpotent(d)); }

// Images computed by expanding J(x_i, f_1, .., f_m) along cofactors.
std::vector<Polynomial> oracle_images(const PolyMap& F) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < F.ring()->arity(); ++i) {
    std::vector<Polynomial> rows{Polynomial::variable(F.ring(), i)};
    rows.insert(rows.end(), F.components().begin(), F.components().end());
    out.push_back(test::cofactor_jacobian(rows));
  }
  return out;
}

}  // namespace

TEST_CASE("jacobian_derivation") {
  PolyMap f1(xyuv, Ps(xyuv, {"x", "y", "x*u + y*v"}));
  CHECK(jacobian_derivation(f1).images() == Ps(xyuv, {"0", "0", "y", "-x"}));
  CHECK(jacobian_derivation(f1).images() == oracle_images(f1));

  PolyMap f2(xyz, Ps(xyz, {"x", "2*x*z - y^2"}));
  CHECK(jacobian_derivation(f2).images() == Ps(xyz, {"0", "-2*x", "-2*y"}));
  CHECK(jacobian_derivation(f2).images() == oracle_images(f2));

  PolyMap proj(x123, Ps(x123, {"x2", "x3"}));
  CHECK(jacobian_derivation(proj).images() == Ps(x123, {"1", "0", "0"}));

  CHECK_THROWS_AS(jacobian_derivation(PolyMap(xyz, Ps(xyz, {"x"}))), Error);
}

TEST_CASE("jacobian derivation agrees with J(R, F) by multilinearity") {
  test::RandomPolys gen(51);
  for (int i = 0; i < 50; ++i) {
    PolyMap F(xyz, {gen.poly(xyz, 3, 2, 3), gen.poly(xyz, 3, 2, 3)});
    Derivation d = jacobian_derivation(F);
    CHECK(d.images() == oracle_images(F));
    Polynomial r = gen.poly(xyz, 3, 2, 3);
    std::vector<Polynomial> rows{r, F[0], F[1]};
    CHECK(d(r) == jacobian_det(rows));
    // Components of F lie in the kernel.
    CHECK(d(F[0]).is_zero());
    CHECK(d(F[1]).is_zero());
  }
}

TEST_CASE("check_map_invariant") {
  PolyMap F(xyuv, Ps(xyuv, {"x", "y", "x*u + y*v"}));
  CHECK(check_map_invariant(exp_of(jacobian_derivation(F)), F));
  auto phi0 = exp_of(D(x123, {"1", "0", "0"}));
  CHECK_FALSE(check_map_invariant(phi0, PolyMap(x123, Ps(x123, {"x1", "x2"}))));
  auto id = exp_of(D(xyz, {"0", "0", "0"}));
  CHECK(check_map_invariant(id, PolyMap(xyz, Ps(xyz, {"x^2 - z", "y*z"}))));
}

TEST_CASE("find_local_slice") {
  auto s0 = find_local_slice(D(x123, {"1", "0", "0"}), 1);
  REQUIRE(s0.has_value());
  CHECK(s0->f == P(x123, "x1"));
  CHECK(s0->c == P(x123, "1"));

  auto s1 = find_local_slice(D(xyz, {"0", "x", "y"}), 1);
  REQUIRE(s1.has_value());
  CHECK(s1->f == P(xyz, "y"));
  CHECK(s1->c == P(xyz, "x"));

  auto s2 = find_local_slice(D(xyuv, {"0", "0", "y", "-x"}), 1);
  REQUIRE(s2.has_value());
  CHECK(s2->f == P(xyuv, "u"));
  CHECK(s2->c == P(xyuv, "y"));

  // Degree 0 admits only constants, which D kills.
  CHECK_FALSE(find_local_slice(D(xyz, {"0", "x", "y"}), 0).has_value());
  CHECK_THROWS_AS(find_local_slice(D(xyz, {"0", "0", "0"}), 2), Error);
}

TEST_CASE("local slices satisfy their invariants") {
  test::RandomPolys gen(52);
  for (int i = 0; i < 20; ++i) {
    PolyMap F(xyz, {gen.poly(xyz, 2, 1, 2), gen.poly(xyz, 2, 1, 2)});
    Derivation d = jacobian_derivation(F);
    if (d.is_zero()) continue;
    if (auto s = find_local_slice(d, 2)) {
      CHECK_FALSE(s->c.is_zero());
      CHECK(s->c == d(s->f));
      CHECK(d(s->c).is_zero());
      CHECK(s->f.total_degree() <= 2);
    }
  }
}

TEST_CASE("slice_coefficient_as_P") {
  PolyMap F(xyz, Ps(xyz, {"x", "2*x*z - y^2"}));
  auto d = D(xyz, {"0", "x", "y"});
  LocalSlice s{P(xyz, "y"), P(xyz, "x"), std::nullopt};
  auto p = slice_coefficient_as_P(d, s, F);
  REQUIRE(p.has_value());
  CHECK(p->ring()->variables() == std::vector<std::string>{"t1", "t2"});
  CHECK(*p == P(p->ring(), "t1"));
  REQUIRE(s.coefficient_in_map.has_value());
  CHECK(compose(*s.coefficient_in_map, F.components()) == s.c);

  PolyMap G(xyuv, Ps(xyuv, {"x", "y", "x*u + y*v"}));
  LocalSlice s2{P(xyuv, "u"), P(xyuv, "y"), std::nullopt};
  auto p2 = slice_coefficient_as_P(D(xyuv, {"0", "0", "y", "-x"}), s2, G);
  REQUIRE(p2.has_value());
  CHECK(*p2 == P(p2->ring(), "t2"));

  PolyMap H(x123, Ps(x123, {"x2", "x3"}));
  LocalSlice s3{P(x123, "x1"), P(x123, "1"), std::nullopt};
  auto p3 = slice_coefficient_as_P(D(x123, {"1", "0", "0"}), s3, H);
  REQUIRE(p3.has_value());
  CHECK(p3->is_one());

  // c is not in the kernel.
  LocalSlice bad{P(xyz, "z"), P(xyz, "y"), std::nullopt};
  CHECK_THROWS_AS(slice_coefficient_as_P(d, bad, F), Error);
}

TEST_CASE("verify_localization_identity") {
  PolyMap F(xyz, Ps(xyz, {"x", "2*x*z - y^2"}));
  auto d = D(xyz, {"0", "x", "y"});
  LocalSlice s{P(xyz, "y"), P(xyz, "x"), std::nullopt};
  REQUIRE(slice_coefficient_as_P(d, s, F).has_value());

  auto w = verify_localization_identity(d, s, F, P(xyz, "z"));
  REQUIRE(w.has_value());
  CHECK(w->exponent == 1);
  CHECK(w->expression.ring()->variables() == std::vector<std::string>{"t0", "t1", "t2"});
  // 2xz = f2 + f^2, so x z = (t2 + t0^2) / 2.
  CHECK(w->expression == P(w->expression.ring(), "1/2*t2 + 1/2*t0^2"));
  std::vector<Polynomial> images{s.f, F[0], F[1]};
  CHECK(compose(w->expression, images) == P(xyz, "x*z"));

  auto w0 = verify_localization_identity(d, s, F, F[0]);
  REQUIRE(w0.has_value());
  CHECK(w0->exponent == 0);
  CHECK(w0->expression == P(w0->expression.ring(), "t1"));

  PolyMap G(xyuv, Ps(xyuv, {"x", "y", "x*u + y*v"}));
  auto rot = D(xyuv, {"0", "0", "y", "-x"});
  LocalSlice s2{P(xyuv, "u"), P(xyuv, "y"), std::nullopt};
  REQUIRE(slice_coefficient_as_P(rot, s2, G).has_value());
  auto w2 = verify_localization_identity(rot, s2, G, P(xyuv, "v"));
  REQUIRE(w2.has_value());
  CHECK(w2->exponent == 1);
  CHECK(w2->expression == P(w2->expression.ring(), "t3 - t1*t0"));

  // Power bound 0 rules out z itself.
  CHECK_FALSE(verify_localization_identity(d, s, F, P(xyz, "z"), 0).has_value());
}

TEST_CASE("localization identity on random polynomials") {
  PolyMap F(xyz, Ps(xyz, {"x", "2*x*z - y^2"}));
  auto d = D(xyz, {"0", "x", "y"});
  LocalSlice s{P(xyz, "y"), P(xyz, "x"), std::nullopt};
  REQUIRE(slice_coefficient_as_P(d, s, F).has_value());
  std::vector<Polynomial> images{s.f, F[0], F[1]};
  test::RandomPolys gen(53);
  for (int i = 0; i < 15; ++i) {
    Polynomial r = gen.poly(xyz, 3, 2, 3);
    auto w = verify_localization_identity(d, s, F, r);
    REQUIRE(w.has_value());
    CHECK(compose(w->expression, images) == s.c.pow(w->exponent) * r);
    // z appears at most cubed, so x^3 clears every denominator.
    CHECK(w->exponent <= 3);
  }
}

TEST_CASE("verify_invariant_generators") {
  PolyMap F(xyuv, Ps(xyuv, {"x", "y", "x*u + y*v"}));
  auto a = exp_of(D(xyuv, {"0", "0", "y", "-x"}));
  auto report = verify_invariant_generators(a, F, Ps(xyuv, {"x", "y", "x*u + y*v", "x^2*u + x*y*v", "u", "1"}));
  REQUIRE(report.size() == 6);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(report[i].invariant);
    CHECK(report[i].in_subalgebra());
    CHECK(compose(*report[i].expression, F.components()) == report[i].candidate);
  }
  CHECK_FALSE(report[4].invariant);
  CHECK_FALSE(report[4].in_subalgebra());
  CHECK(report[5].invariant);
  CHECK(report[5].in_subalgebra());
}
