#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaql/error.hpp"
#include "gaql/poly_map.hpp"
#include "support.hpp"

using namespace gaql;
using gaql::test::P;
using gaql::test::Ps;

namespace {

const RingPtr xy = make_ring({"x", "y"});
const RingPtr xyz = make_ring({"x", "y", "z"});
const RingPtr xyuv = make_ring({"x", "y", "u", "v"});

}  // namespace

TEST_CASE("ring invariants") {
  CHECK_THROWS_AS(make_ring({}), Error);
  CHECK_THROWS_AS(make_ring({"x", "x"}), Error);
  CHECK_THROWS_AS(make_ring({""}), Error);
  CHECK_THROWS_AS(make_ring({"2x"}), Error);
  CHECK(xyz->arity() == 3);
  CHECK(*xyz->index_of("z") == 2);
  CHECK_FALSE(xyz->index_of("w").has_value());
  CHECK(fresh_name({"t", "t_1"}, "t") == "t_2");
  CHECK(fresh_name({"x"}, "t") == "t");
}


TEST_CASE("rational parsing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0/7")) == "0");
  CHECK(parse_rational("-3/9").get_den() == 3);
  CHECK(parse_rational("-3/9").get_num() == -1);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(factorial(5) == 120);
}

TEST_CASE("arith examples") {
  CHECK(arith(P(xy, "x+y"), P(xy, "x-y"), ArithOp::Mul) == P(xy, "x^2 - y^2"));
  Polynomial p = P(xy, "3*x^2*y - 1/2");
  CHECK(arith(p, Polynomial(xy), ArithOp::Add) == p);
  CHECK(arith(p, p, ArithOp::Sub).is_zero());
  // (1+xz)*y is the y-dependent part of y + z + xyz.
  CHECK(arith(P(xyz, "1+x*z"), P(xyz, "y"), ArithOp::Mul) == P(xyz, "y + x*y*z"));
  CHECK_THROWS_AS(arith(P(xy, "x"), P(xyz, "x"), ArithOp::Add), Error);
  try {
    arith(P(xy, "x"), P(xyz, "x"), ArithOp::Mul);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RingMismatch);
  }
}

TEST_CASE("terms stay sorted and zero-free") {
  Polynomial p = P(xyz, "z + y^2 + x*z - x*z + 0*x + x^3");
  CHECK(p.size() == 3);
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    CHECK(grevlex_compare(p.terms()[i].monomial, p.terms()[i + 1].monomial) ==
          std::strong_ordering::greater);
  for (const auto& t : p.terms()) CHECK(t.coeff != 0);
  CHECK(p.total_degree() == 3);
  CHECK(Polynomial(xyz).total_degree() == -1);
}

TEST_CASE("partial derivatives") {
  const RingPtr x1 = make_ring({"x1", "x2"});
  CHECK(partial_derivative(P(x1, "x1^2"), 0) == P(x1, "2*x1"));
  CHECK(partial_derivative(P(xyuv, "x*u + y*v"), 2) == P(xyuv, "x"));
  CHECK(partial_derivative(P(xyz, "7/3"), 1).is_zero());
  CHECK_THROWS_AS(partial_derivative(P(xyz, "x"), 3), Error);
}

TEST_CASE("compose") {
  auto ids = Ps(xyz, {"x", "y", "z"});
  CHECK(compose(P(xyz, "x"), ids) == P(xyz, "x"));
  const RingPtr txyuv = make_ring({"t", "x", "y", "u", "v"});
  auto phi = Ps(txyuv, {"x", "y", "u - t*y", "v + t*x"});
  CHECK(compose(P(xyuv, "x*u + y*v"), phi) == P(txyuv, "x*u + y*v"));
  const RingPtr t = make_ring({"t"});
  CHECK(compose(P(xy, "x + y"), Ps(t, {"t^2", "t^3"})) == P(t, "t^2 + t^3"));
  CHECK_THROWS_AS(compose(P(xy, "x"), Ps(t, {"t"})), Error);
}

TEST_CASE("evaluate") {
  std::vector<Rational> origin{0, 0, 0};
  CHECK(evaluate(P(xyz, "1 + x*z"), origin) == 1);
  CHECK(evaluate(Polynomial(xyz), origin) == 0);
  std::vector<Rational> pt{1, 1, 2, 3};
  CHECK(evaluate(P(xyuv, "x*u + y*v"), pt) == 5);
  std::vector<Rational> half{Rational(1, 2), Rational(-2, 3)};
  CHECK(evaluate(P(xy, "x^2*y - 3"), half) == Rational(-1, 6) - 3);
  CHECK_THROWS_AS(evaluate(P(xy, "x"), origin), Error);
}

TEST_CASE("jacobian_det examples") {
  CHECK(jacobian_det(Ps(xyz, {"x", "y", "z"})) == P(xyz, "1"));
  // Oracle: cofactor expansion of the 4x4 matrix gives y.
  auto rows = Ps(xyuv, {"u", "x", "y", "x*u + y*v"});
  CHECK(test::cofactor_jacobian(rows) == P(xyuv, "y"));
  CHECK(jacobian_det(rows) == P(xyuv, "y"));
  auto repeated = Ps(xyuv, {"x*u + 1", "x*u + 1", "y^2", "v - u"});
  CHECK(jacobian_det(repeated).is_zero());
  CHECK_THROWS_AS(jacobian_det(Ps(xyz, {"x", "y"})), Error);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  test::RandomPolys gen(11);
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    RingPtr ring = make_ring(names);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Polynomial> fs;
      for (int i = 0; i < n; ++i) fs.push_back(gen.poly(ring, 3, 2, 3));
      CHECK(jacobian_det(fs) == test::cofactor_jacobian(fs));
    }
  }
  // Zero leading pivot forces a row swap.
  PolyMatrix m{{P(xy, "0"), P(xy, "x")}, {P(xy, "y"), P(xy, "1")}};
  CHECK(determinant(m) == P(xy, "-x*y"));
}

TEST_CASE("exact division") {
  Polynomial a = P(xyz, "x^2 - y^2");
  CHECK(exact_divide(a, P(xyz, "x - y")) == P(xyz, "x + y"));
  CHECK_THROWS_AS(exact_divide(a, P(xyz, "x - z")), Error);
  CHECK_THROWS_AS(exact_divide(a, Polynomial(xyz)), Error);
}

TEST_CASE("exponent overflow is detected") {
  Monomial big(std::vector<Exponent>{4000000000u});
  CHECK_THROWS_AS(big * big, Error);
}

TEST_CASE("embed") {
  const RingPtr wide = make_ring({"a", "x", "y"});
  std::vector<std::size_t> map{1, 2};
  CHECK(embed(P(xy, "x*y + 2"), wide, map) == P(wide, "x*y + 2"));
}

TEST_CASE("PolyMap shape") {
  PolyMap F(xyz, Ps(xyz, {"x", "y"}));
  CHECK(F.target_names() == std::vector<std::string>{"t1", "t2"});
  CHECK_NOTHROW(F.require_quotient_shape("test"));
  PolyMap G(xyz, Ps(xyz, {"x"}));
  CHECK_THROWS_AS(G.require_quotient_shape("test"), Error);
  CHECK_THROWS_AS(PolyMap(xyz, Ps(xyz, {"x"}), {"a", "b"}), Error);
}

TEST_CASE("unnormalized rationals are canonicalized") {
  Polynomial two_halves = Polynomial::constant(xyz, Rational(2, 2));
  CHECK(two_halves.is_one());
  CHECK(Polynomial::from_terms(xyz, {{Monomial(3), Rational(-4, 6)}}) == P(xyz, "-2/3"));
  CHECK(Rational(3, 9) * P(xyz, "x") == P(xyz, "1/3*x"));
  CHECK(P(xyz, "x").times_monomial(Monomial(3), Rational(4, 2)) == P(xyz, "2*x"));
}

// --- properties ------------------------------------------------------------

TEST_CASE("ring axioms on random triples") {
  test::RandomPolys gen(1);
  for (int i = 0; i < 120; ++i) {
    Polynomial a = gen.poly(xyz), b = gen.poly(xyz), c = gen.poly(xyz);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("Leibniz rule for partial derivatives") {
  test::RandomPolys gen(2);
  for (int i = 0; i < 120; ++i) {
    Polynomial p = gen.poly(xyz), q = gen.poly(xyz);
    for (std::size_t v = 0; v < 3; ++v)
      CHECK(partial_derivative(p * q, v) ==
            p * partial_derivative(q, v) + q * partial_derivative(p, v));
  }
}

TEST_CASE("composition is associative") {
  test::RandomPolys gen(3);
  const RingPtr ab = make_ring({"a", "b"});
  const RingPtr s = make_ring({"s", "r"});
  for (int i = 0; i < 30; ++i) {
    Polynomial p = gen.poly(xyz, 3, 2, 3);
    std::vector<Polynomial> G{gen.poly(ab, 2, 1, 2), gen.poly(ab, 2, 1, 2), gen.poly(ab, 2, 1, 2)};
    std::vector<Polynomial> H{gen.poly(s, 2, 1, 2), gen.poly(s, 2, 1, 2)};
    std::vector<Polynomial> GH;
    for (const auto& g : G) GH.push_back(compose(g, H));
    CHECK(compose(compose(p, G), H) == compose(p, GH));
  }
}

TEST_CASE("jacobian_det is alternating") {
  test::RandomPolys gen(4);
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    RingPtr ring = make_ring(names);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Polynomial> fs;
      for (int i = 0; i < n; ++i) fs.push_back(gen.poly(ring, 3, 2, 3));
      Polynomial det = jacobian_det(fs);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          auto swapped = fs;
          std::swap(swapped[i], swapped[j]);
          CHECK(jacobian_det(swapped) == -det);
          auto repeated = fs;
          repeated[j] = repeated[i];
          CHECK(jacobian_det(repeated).is_zero());
        }
      }
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  test::RandomPolys gen(5);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = gen.poly(xyz), q = gen.poly(xyz);
    std::vector<Rational> a{Rational(coord(gen.rng), 2), Rational(coord(gen.rng)), Rational(coord(gen.rng), 3)};
    CHECK(evaluate(p * q, a) == evaluate(p, a) * evaluate(q, a));
    CHECK(evaluate(p + q, a) == evaluate(p, a) + evaluate(q, a));
  }
}
