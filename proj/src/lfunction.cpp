#include "olift/lfunction.hpp"

#include <cmath>
#include <stdexcept>

namespace olift {

SatakeData satake(LiftMode mode, int n, std::int64_t p, const HeckeScalar& lam,
                  int kappa) {
  if (n < 1) throw std::invalid_argument("n >= 1");
  SatakeData sd;
  sd.mode = mode;
  sd.n = n;
  sd.p = p;
  sd.kappa = kappa;
  HeckeScalar middle;  // alpha^2 + alpha^{-2}
  if (mode == LiftMode::maass) {
    middle = lam * lam - HeckeScalar(2);
    for (int e = 4 * n - 1; e >= 1; --e) sd.exponents.push_back(e);
    sd.exponents.push_back(0);
    sd.exponents.push_back(0);
    for (int e = 1; e <= 4 * n - 1; ++e) sd.exponents.push_back(-e);
  } else {
    if (kappa <= 8 * n + 4)
      throw std::invalid_argument("ors requires kappa > 8n+4");
    middle = HeckeScalar(pow_rat(Rat(p), -(kappa - 4 * n - 1))) * lam * lam -
             HeckeScalar(2);
    for (int e = 4 * n; e >= 1; --e) sd.exponents.push_back(e);
    sd.exponents.push_back(0);
    sd.exponents.push_back(0);
    for (int e = 1; e <= 4 * n; ++e) sd.exponents.push_back(-e);
  }
  sd.quad = {HeckeScalar(1), -middle, HeckeScalar(1)};
  return sd;
}

RationalFunction local_l_factor(LiftMode mode, int n, std::int64_t p,
                                const HeckeScalar& lam, int kappa) {
  SatakeData sd = satake(mode, n, p, lam, kappa);
  TPoly den = tpoly_linear(HeckeScalar(1));  // 1 - t, the zeta_p(s) factor
  den = tpoly_mul(den, sd.quad);
  int top = mode == LiftMode::maass ? 4 * n - 1 : 4 * n;
  int count = mode == LiftMode::maass ? 8 * n - 1 : 8 * n + 1;
  for (int j = 0; j < count; ++j)
    den = tpoly_mul(den, tpoly_linear(HeckeScalar(pow_rat(Rat(p), top - j))));
  return RationalFunction(tpoly_one(), den);
}

bool verify_satake_product(const SatakeData& sd, const RationalFunction& lf) {
  if (lf.num() != tpoly_one()) return false;
  TPoly prod = sd.quad;
  for (int e : sd.exponents)
    prod = tpoly_mul(prod, tpoly_linear(HeckeScalar(pow_rat(Rat(sd.p), e))));
  return prod == lf.den();
}

TemperednessReport temperedness_report(const SatakeData& sd,
                                       double lam_numeric) {
  TemperednessReport rep;
  double p = static_cast<double>(sd.p);
  for (int e : sd.exponents) rep.abs_values.push_back(std::pow(p, e));
  // quad roots: t^2 - X t + 1 with X = alpha^2 + alpha^{-2}
  double X = -sd.quad[1].eval_double(lam_numeric);
  double disc = X * X - 4.0;
  double amax;
  if (disc <= 0) {
    amax = 1.0;  // conjugate pair on the unit circle
  } else {
    amax = (std::abs(X) + std::sqrt(disc)) / 2.0;
  }
  rep.abs_values.push_back(amax);
  rep.abs_values.push_back(amax == 0 ? 0 : 1.0 / amax);
  rep.max_abs = 0;
  for (double a : rep.abs_values) rep.max_abs = std::max(rep.max_abs, a);
  for (double a : rep.abs_values)
    if (std::abs(a - 1.0) > 1e-12) rep.non_tempered = true;
  return rep;
}

}  // namespace olift
