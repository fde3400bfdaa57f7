#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaql/action.hpp"
#include "gaql/error.hpp"
#include "support.hpp"

using namespace gaql;
using gaql::test::P;
using gaql::test::Ps;

namespace {

const RingPtr x123 = make_ring({"x1", "x2", "x3"});
const RingPtr xyz = make_ring({"x", "y", "z"});
const RingPtr xyuv = make_ring({"x", "y", "u", "v"});

GaAction exp_of(const RingPtr& ring, const std::vector<std::string>& images) {
  Derivation d(ring, Ps(ring, images));
  return exponentiate(d, certify_locally_nilpotent(d));
}

std::vector<GaAction> corpus() {
  return {exp_of(x123, {"1", "0", "0"}),          exp_of(xyuv, {"0", "0", "y", "-x"}),
          exp_of(xyz, {"0", "x", "y"}),           exp_of(xyz, {"0", "0", "0"}),
          exp_of(xyz, {"2", "x^2", "x*y - 1/3"}), exp_of(xyz, {"0", "-2*x", "-2*y"})};
}

}  // namespace

TEST_CASE("exponentiate") {
  auto phi0 = exp_of(x123, {"1", "0", "0"});
  CHECK(phi0.action_ring()->variables() == std::vector<std::string>{"t", "x1", "x2", "x3"});
  CHECK(phi0.components() == Ps(phi0.action_ring(), {"x1 + t", "x2", "x3"}));

  auto rot = exp_of(xyuv, {"0", "0", "y", "-x"});
  CHECK(rot.components() == Ps(rot.action_ring(), {"x", "y", "u + t*y", "v - t*x"}));

  auto id = exp_of(xyz, {"0", "0", "0"});
  CHECK(id.components() == Ps(id.action_ring(), {"x", "y", "z"}));

  auto d3 = exp_of(xyz, {"0", "x", "y"});
  CHECK(d3.components() == Ps(d3.action_ring(), {"x", "y + t*x", "z + t*y + 1/2*t^2*x"}));

  // Parameter name clashes with a ring variable.
  const RingPtr tx = make_ring({"t", "x"});
  Derivation dt(tx, Ps(tx, {"0", "t"}));
  auto a = exponentiate(dt, certify_locally_nilpotent(dt));
  CHECK(a.parameter() == "t_1");
  CHECK(a.components() == Ps(a.action_ring(), {"t", "x + t_1*t"}));
}

TEST_CASE("exponentiate rejects uncertified input") {
  const RingPtr xr = make_ring({"x"});
  Derivation e(xr, Ps(xr, {"x"}));
  auto cert = certify_locally_nilpotent(e, 10);
  CHECK_THROWS_AS(exponentiate(e, cert), Error);
  try {
    exponentiate(e, cert);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::Uncertified);
  }
  // A certificate for another derivation does not transfer.
  Derivation d(xyz, Ps(xyz, {"1", "0", "0"}));
  Derivation other(xyz, Ps(xyz, {"0", "1", "0"}));
  CHECK_THROWS_AS(exponentiate(other, certify_locally_nilpotent(d)), Error);
}

TEST_CASE("act") {
  auto phi0 = exp_of(x123, {"1", "0", "0"});
  CHECK(act(phi0, P(x123, "x1")) == P(phi0.action_ring(), "x1 + t"));
  auto rot = exp_of(xyuv, {"0", "0", "y", "-x"});
  CHECK(act(rot, P(xyuv, "x*u + y*v")) == P(rot.action_ring(), "x*u + y*v"));
  auto id = exp_of(xyz, {"0", "0", "0"});
  Polynomial p = P(xyz, "x^3 - y*z + 5");
  CHECK(act(id, p) == id.lift(p));
}

TEST_CASE("is_invariant and deg_function") {
  auto rot = exp_of(xyuv, {"0", "0", "y", "-x"});
  CHECK(is_invariant(rot, P(xyuv, "x")));
  CHECK(is_invariant(rot, P(xyuv, "y")));
  CHECK(is_invariant(rot, P(xyuv, "x*u + y*v")));
  CHECK_FALSE(is_invariant(rot, P(xyuv, "u")));
  CHECK(is_invariant(rot, P(xyuv, "3")));
  auto phi0 = exp_of(x123, {"1", "0", "0"});
  CHECK_FALSE(is_invariant(phi0, P(x123, "x1")));

  CHECK(deg_function(rot, P(xyuv, "x*u + y*v")) == 0);
  CHECK(deg_function(rot, P(xyuv, "v")) == 1);
  CHECK(deg_function(rot, P(xyuv, "u*v")) == 2);
  CHECK(deg_function(rot, Polynomial(xyuv)) == kMinusInfinity);
  auto d3 = exp_of(xyz, {"0", "x", "y"});
  CHECK(deg_function(d3, P(xyz, "z")) == 2);
}

TEST_CASE("identity at zero and group law hold for the corpus") {
  for (const auto& a : corpus()) {
    CHECK(identity_at_zero(a));
    CHECK(group_law_holds(a));
  }
}

TEST_CASE("group law oracle by substitution") {
  // phi(u; phi(v; x)) = phi(u + v; x) checked at sample parameter values.
  for (const auto& a : corpus()) {
    const std::size_t n = a.ring()->arity();
    for (int s : {-2, 1, 3}) {
      for (int r : {-1, 2}) {
        auto at = [&](int t) {
          std::vector<Polynomial> images{Polynomial::constant(a.ring(), Rational(t))};
          for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(a.ring(), i));
          std::vector<Polynomial> out;
          for (const auto& c : a.components()) out.push_back(compose(c, images));
          return out;
        };
        auto inner = at(r);
        std::vector<Polynomial> lhs;
        for (const auto& c : at(s)) lhs.push_back(compose(c, inner));
        CHECK(lhs == at(s + r));
      }
    }
  }
}

TEST_CASE("degree additivity and homomorphism") {
  test::RandomPolys gen(41);
  for (const auto& a : corpus()) {
    for (int i = 0; i < 30; ++i) {
      Polynomial p = gen.poly(a.ring(), 3, 2, 3), q = gen.poly(a.ring(), 3, 2, 3);
      CHECK(deg_function(a, p * q) == deg_function(a, p) + deg_function(a, q));
      CHECK(act(a, p * q) == act(a, p) * act(a, q));
      CHECK(act(a, p + q) == act(a, p) + act(a, q));
      CHECK(is_invariant(a, p) == (deg_function(a, p) == 0));
    }
  }
}

TEST_CASE("invariant times non-invariant is non-invariant") {
  test::RandomPolys gen(42);
  auto rot = exp_of(xyuv, {"0", "0", "y", "-x"});
  const RingPtr tags = make_ring({"a", "b", "c"});
  auto fs = Ps(xyuv, {"x", "y", "x*u + y*v"});
  int tested = 0;
  for (int i = 0; i < 50; ++i) {
    Polynomial p = compose(gen.poly(tags, 3, 2, 3), fs);
    Polynomial q = gen.poly(xyuv, 3, 2, 3);
    REQUIRE(is_invariant(rot, p));
    if (is_invariant(rot, q)) continue;
    ++tested;
    CHECK(deg_function(rot, p * q) > 0);
  }
  CHECK(tested > 25);
}
