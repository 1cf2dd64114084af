#pragma once

#include <cstdint>
#include <vector>

#include "olift/coeffs.hpp"
#include "olift/lattice.hpp"

// Lift Fourier coefficients: the Maass-lift A(lambda) in the exact
// b-normalization, the Oda-Rallis-Schiffman coefficient C_lambda, and the
// adelic scaling rule tying global vectors to local (k,l) data.

namespace olift {

enum class LiftMode { maass, ors };

struct LiftContext {
  int n = 1;  // group O(1,8n+1); lattice rank 8n
  GramLattice lattice;
  const CoefficientFamily* family = nullptr;
  LiftMode mode = LiftMode::maass;
  int kappa = 0;  // ors only: kappa = weight_kappa_prime + 4n - 2, > 8n+4
};

LiftContext make_maass_context(int n, const CoefficientFamily& fam);
// ors_coefficient works from (norm, content) data only; the lattice member
// stays empty in this mode.
LiftContext make_ors_context(int n, const CoefficientFamily& fam);

// A(lambda) = parity * sum_{d | content} d^{4n-1} b(norm/d^2), the exact
// b-form of the paper's divisor sum.
HeckeScalar lift_coefficient(const LiftContext& ctx, const LatticeVector& v);
HeckeScalar lift_coefficient_nc(const LiftContext& ctx, std::int64_t norm,
                                std::int64_t content);

// C_lambda = sum_{d | content} d^{kappa-1} c(norm/d^2)
HeckeScalar ors_coefficient(const LiftContext& ctx, std::int64_t norm,
                            std::int64_t content);

// ||beta||^{4n} A(||beta||^{-1} lambda) with ||beta|| = p^{-beta_valuation};
// exact 0 when the rescaled vector leaves the lattice (Def-cond-1 zero
// branch).  In (norm, content) data: content must stay integral.
HeckeScalar adelic_scale(const LiftContext& ctx, const LatticeVector& v,
                         int beta_valuation, std::int64_t p);

// deduplicated (norm, content) classes with multiplicities, for CSV export
struct CoeffClass {
  std::int64_t norm = 0;
  std::int64_t content = 0;
  std::int64_t multiplicity = 0;
  HeckeScalar value;
};
std::vector<CoeffClass> lift_coefficient_classes(const LiftContext& ctx,
                                                 std::int64_t norm_bound);

}  // namespace olift
