#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <sstream>

#include "olift/coeffs.hpp"

using namespace olift;

namespace {
HeckeScalar Lam() { return HeckeScalar::lambda(); }

CoefficientFamily formal_family(std::int64_t bound) {
  std::map<std::int64_t, HeckeScalar> eig;
  eig[2] = Lam();
  for (std::int64_t p = 3; p <= bound; ++p) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) eig[p] = HeckeScalar(1);
  }
  return synthetic_family(std::move(eig), +1, bound);
}
}  // namespace

TEST_CASE("synthetic family examples") {
  auto fam = formal_family(8);
  CHECK(fam.value(1) == HeckeScalar(1));
  CHECK(fam.value(2) == Lam());
  CHECK(fam.value(4) == Lam() * Lam() - HeckeScalar(1));
  CHECK(fam.value(8) == Lam().pow(3) - HeckeScalar(2) * Lam());

  std::map<std::int64_t, HeckeScalar> eig{{2, HeckeScalar(3)},
                                          {3, HeckeScalar(1)},
                                          {5, HeckeScalar(0)}};
  auto num = synthetic_family(std::move(eig), +1, 6);
  CHECK(num.value(6) == HeckeScalar(3));  // b(2) b(3) by multiplicativity

  CHECK_THROWS(synthetic_family({{2, HeckeScalar(1)}}, +1, 6));  // missing 3,5
}

TEST_CASE("prime powers are the Chebyshev-like polynomials") {
  auto fam = formal_family(2);
  HeckeScalar prev(0), cur(1);  // b(p^{-1}) = 0, b(p^0) = 1
  std::int64_t pk = 1;
  for (int j = 0; j <= 10; ++j) {
    CHECK(fam.value(pk) == cur);
    CHECK(fam.value(pk).degree() == j);
    HeckeScalar next = Lam() * cur - prev;
    prev = cur;
    cur = next;
    pk *= 2;
  }
}

TEST_CASE("maass relations, formal eigenvalue") {
  auto fam = formal_family(2);
  CHECK(verify_maass_relations(fam, 2, 2));
  CHECK(verify_maass_relations(fam, 2, 1));
  CHECK(verify_maass_relations(fam, 2, 4));
  // b(8) = (Lam^2-1) b(2) - Lam b(1) = Lam^3 - 2 Lam
  CHECK(fam.value(8) ==
        (Lam() * Lam() - HeckeScalar(1)) * fam.value(2) - Lam());
  // second relation instance: b(16) = (Lam^2-2) b(4) - b(1)
  CHECK(fam.value(16) ==
        (Lam() * Lam() - HeckeScalar(2)) * fam.value(4) - HeckeScalar(1));
  CHECK(fam.value(16) == Lam().pow(4) - HeckeScalar(3) * Lam().pow(2) +
                             HeckeScalar(1));
  // polynomial identity across the populated range
  auto wide = formal_family(70);
  for (std::int64_t n = 1; n <= 16; ++n)
    CHECK(verify_maass_relations(wide, 2, n));
  for (std::int64_t n = 1; n <= 7; ++n)
    CHECK(verify_maass_relations(wide, 3, n));
}

TEST_CASE("delta fixture tau values") {
  auto delta = delta_fixture(100);
  CHECK(delta.value(1) == HeckeScalar(1));
  CHECK(delta.value(2) == HeckeScalar(-24));
  CHECK(delta.value(3) == HeckeScalar(252));
  CHECK(delta.value(4) == HeckeScalar(-1472));
  CHECK(delta.value(5) == HeckeScalar(4830));
  CHECK(delta.value(6) == HeckeScalar(-6048));
  CHECK(delta.value(7) == HeckeScalar(-16744));
  CHECK(delta.value(12) == HeckeScalar(-370944));
  // tau(4) = tau(2)^2 - 2^11
  CHECK(delta.value(4) ==
        delta.value(2) * delta.value(2) - HeckeScalar(2048));
}

TEST_CASE("holomorphic relations on the delta fixture") {
  auto delta = delta_fixture(100);
  CHECK(verify_holomorphic_relations(delta, 2, 1));
  CHECK(verify_holomorphic_relations(delta, 3, 1));
  // tau(9) = tau(3)^2 - 3^11
  CHECK(delta.value(9) == HeckeScalar(252 * 252 - 177147));
  CHECK(delta.value(9) == HeckeScalar(-113643));
  CHECK(verify_holomorphic_relations(delta, 2, 4));  // second relation branch
  for (std::int64_t m = 1; m <= 25; ++m) {
    CHECK(verify_holomorphic_relations(delta, 2, m));
    CHECK(verify_holomorphic_relations(delta, 3, m));
  }
}

TEST_CASE("tau multiplicativity is a consequence, tested") {
  auto delta = delta_fixture(100);
  for (std::int64_t a = 2; a <= 10; ++a)
    for (std::int64_t b = a + 1; a * b <= 100; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(delta.value(a * b) == delta.value(a) * delta.value(b));
    }
}

TEST_CASE("numeric maass data parsing") {
  std::istringstream good(
      "# r 13.7797513519\n"
      "# parity 1\n"
      "# precision 1e-9\n"
      "2 1.549304477941\n"
      "1 1.0\n"
      "3 0.246899772453\n");
  auto d = parse_numeric_maass(good);
  CHECK(d.r == doctest::Approx(13.7797513519));
  CHECK(d.parity == 1);
  CHECK(d.value(2) == doctest::Approx(1.549304477941));
  CHECK(d.value(-2) == doctest::Approx(1.549304477941));  // even parity
  CHECK(d.support_bound() == 3);

  std::istringstream no_c1("# r 9.5\n2 0.5\n");
  CHECK_THROWS(parse_numeric_maass(no_c1));

  std::istringstream bad_c1("# r 9.5\n1 0.9\n");
  CHECK_THROWS(parse_numeric_maass(bad_c1));

  std::istringstream odd(
      "# r 9.53369526135\n# parity -1\n1 1.0\n2 -1.068333551\n");
  auto od = parse_numeric_maass(odd);
  CHECK(od.value(-2) == doctest::Approx(1.068333551));
}
