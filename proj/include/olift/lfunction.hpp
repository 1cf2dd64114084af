#pragma once

#include <cstdint>
#include <vector>

#include "olift/exactnum.hpp"
#include "olift/lift.hpp"

// Satake parameter data, standard local L-factors as exact rational
// functions in t = p^{-s}, product/factored-form cross-validation, and the
// non-temperedness witness.

namespace olift {

struct SatakeData {
  LiftMode mode = LiftMode::maass;
  int n = 1;
  std::int64_t p = 2;
  int kappa = 0;  // ors only
  // 1 - (alpha^2 + alpha^{-2}) t + t^2 encoding the conjugate pair without
  // radicals; alpha^2 + alpha^{-2} = lam^2 - 2 (maass) resp. lam'^2 - 2
  // with lam'^2 = p^{-(kappa-4n-1)} lam^2 (ors).
  TPoly quad;
  std::vector<int> exponents;  // the p-power entries, negation-symmetric

  std::size_t parameter_count() const { return exponents.size() + 2; }
};

SatakeData satake(LiftMode mode, int n, std::int64_t p, const HeckeScalar& lam,
                  int kappa = 0);

// [(1-t) * quad * prod_j (1 - p^{(4n-1)-j} t)]^{-1}, j = 0..8n-2 (maass);
// ors analog with exponents 4n-j, j = 0..8n.
RationalFunction local_l_factor(LiftMode mode, int n, std::int64_t p,
                                const HeckeScalar& lam, int kappa = 0);

// exact: prod over the exponent list of (1 - p^e t), times quad, equals the
// denominator of lf (numerator 1)
bool verify_satake_product(const SatakeData& sd, const RationalFunction& lf);

struct TemperednessReport {
  std::vector<double> abs_values;  // archimedean absolute values
  double max_abs = 0;
  bool non_tempered = false;
};

// |.| of every Satake parameter with the eigenvalue specialized to
// lam_numeric; flags non-tempered iff any abs value differs from 1.
TemperednessReport temperedness_report(const SatakeData& sd,
                                       double lam_numeric);

}  // namespace olift
