#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "olift/exactnum.hpp"

using namespace olift;

namespace {
HeckeScalar Lam() { return HeckeScalar::lambda(); }

HeckeScalar random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 4), num(-9, 9), den(1, 5);
  std::vector<Rat> c(deg(rng) + 1);
  for (auto& x : c) x = Rat(num(rng), den(rng));
  return HeckeScalar(std::move(c));
}

RationalFunction random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 2), num(-6, 6);
  auto poly = [&](bool nonzero) {
    std::vector<HeckeScalar> c(deg(rng) + 1);
    bool any = false;
    for (auto& x : c) {
      x = HeckeScalar(num(rng));
      any = any || !x.is_zero();
    }
    if (nonzero && !any) c[0] = HeckeScalar(1);
    return c;
  };
  return RationalFunction(poly(false), poly(true));
}
}  // namespace

TEST_CASE("poly_arith spec examples") {
  CHECK(poly_arith(Lam(), Lam(), ArithOp::mul) == Lam() * Lam());
  CHECK(poly_arith(Lam() * Lam() - HeckeScalar(1), HeckeScalar(1),
                   ArithOp::add) == Lam() * Lam());
  HeckeScalar expanded = (Lam() - HeckeScalar(1)) * (Lam() + HeckeScalar(1));
  CHECK(poly_arith(expanded, Lam() * Lam() - HeckeScalar(1), ArithOp::sub)
            .is_zero());
}

TEST_CASE("poly canonical form") {
  HeckeScalar z(std::vector<Rat>{Rat(0), Rat(0)});
  CHECK(z.is_zero());
  CHECK(z.coeffs().empty());
  CHECK(HeckeScalar(std::vector<Rat>{Rat(3), Rat(1), Rat(0)}).degree() == 1);
}

TEST_CASE("poly ring axioms, randomized") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 200; ++it) {
    HeckeScalar a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("poly gcd and exact division") {
  HeckeScalar a = (Lam() - HeckeScalar(1)) * (Lam() + HeckeScalar(2));
  HeckeScalar b = (Lam() - HeckeScalar(1)) * Lam();
  HeckeScalar g = poly_gcd(a, b);
  CHECK(g == Lam() - HeckeScalar(1));
  CHECK(poly_div_exact(a, g) == Lam() + HeckeScalar(2));
  CHECK_THROWS(poly_div_exact(a, Lam()));
}

TEST_CASE("poly serialization round trip") {
  std::mt19937 rng(99);
  for (int it = 0; it < 50; ++it) {
    HeckeScalar a = random_poly(rng);
    CHECK(HeckeScalar::from_json_coeffs(a.to_json_coeffs()) == a);
  }
  CHECK(rat_to_string(Rat(-3, 6)) == "-1/2");
  CHECK(rat_from_string("-1/2") == Rat(-1, 2));
}

TEST_CASE("ratfunc spec examples") {
  RationalFunction one(1);
  RationalFunction inv_1mt({HeckeScalar(1)}, {HeckeScalar(1), HeckeScalar(-1)});
  RationalFunction m1mt({HeckeScalar(1), HeckeScalar(-1)}, {HeckeScalar(1)});
  CHECK(ratfunc_arith(inv_1mt, m1mt, ArithOp::mul) == one);
  CHECK(ratfunc_arith(inv_1mt, inv_1mt, ArithOp::sub).is_zero());

  RationalFunction a({HeckeScalar(1)}, {HeckeScalar(1), HeckeScalar(-2)});
  RationalFunction b({HeckeScalar(1)}, {HeckeScalar(1), HeckeScalar(-3)});
  RationalFunction expect({HeckeScalar(1)},
                          {HeckeScalar(1), HeckeScalar(-5), HeckeScalar(6)});
  CHECK(ratfunc_arith(a, b, ArithOp::mul) == expect);
}

TEST_CASE("ratfunc division inverts multiplication") {
  std::mt19937 rng(7);
  for (int it = 0; it < 60; ++it) {
    RationalFunction a = random_ratfunc(rng), b = random_ratfunc(rng);
    if (b.is_zero()) continue;
    RationalFunction q = ratfunc_arith(a, b, ArithOp::div);
    CHECK(ratfunc_arith(q, b, ArithOp::mul) == a);
  }
  CHECK_THROWS(ratfunc_arith(RationalFunction(1), RationalFunction(0),
                             ArithOp::div));
}

TEST_CASE("ratfunc canonicalization is idempotent and exact") {
  // (1-t)(1-2t) / (1-t) reduces to 1-2t over 1
  RationalFunction f(tpoly_mul(tpoly_linear(HeckeScalar(1)),
                               tpoly_linear(HeckeScalar(2))),
                     tpoly_linear(HeckeScalar(1)));
  CHECK(f == RationalFunction(tpoly_linear(HeckeScalar(2)), tpoly_one()));
  // rebuilding from the canonical parts is a fixed point
  RationalFunction g(f.num(), f.den());
  CHECK(g == f);
}

TEST_CASE("ratfunc with formal-eigenvalue coefficients") {
  HeckeScalar X = Lam() * Lam() - HeckeScalar(2);
  TPoly quad = {HeckeScalar(1), -X, HeckeScalar(1)};
  RationalFunction f(tpoly_one(), quad);
  RationalFunction g = ratfunc_arith(f, RationalFunction(quad, tpoly_one()),
                                     ArithOp::mul);
  CHECK(g == RationalFunction(1));
}
