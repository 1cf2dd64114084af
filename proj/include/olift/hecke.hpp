#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "olift/coeffs.hpp"
#include "olift/lift.hpp"

// Sugano-style local Hecke theory: f_{m,j} and |R_m^{(r)}| combinatorics,
// Whittaker grids W_{k,l}, the C^{(r)} recurrence, local Maass relation
// checks, Hecke-module identities, and the closed-form eigenvalues mu_i.

namespace olift {

struct LocalParams {
  int m = 2;          // 4n+1 for the Maass lift, 4n+2 for ORS
  std::int64_t q = 2; // residue field size (the prime p)
  static constexpr int n0 = 0;       // anisotropic kernel dimension
  static constexpr int partial = 0;  // Sugano's "partial" invariant
};

// f_{m,j} = q^{j-1}(q^{m-j+1}-1)(q^{m-j}+1)/(q^j-1), n0 = partial = 0;
// f_{0,1} = 0 by convention; j != 0.  q may be any rational != 0,1 (the
// f-identities are checked at rational q values).
Rat f_mj(int m, int j, const Rat& q);
// |R_m^{(r)}| = prod_{j=1..r} f_{m,j}; 1 for r = 0; requires 0 <= r <= m.
Rat r_card(int m, int r, const Rat& q);
// u_r = q^r f_{m-2,r} + q^{r-1} - 1
Rat u_coeff(int m, int r, const Rat& q);

// Grid of local Whittaker values, 0 <= k <= K, 0 <= l <= L; reads at
// negative k or l return exact 0.  `normalization` records which adelic
// scaling produced the values (4n for the Maass lift, kappa for ORS); the
// Hecke recurrence on the raw values depends on it.
class WhittakerGrid {
 public:
  WhittakerGrid(LocalParams params, int beta, LiftMode normalization, int K,
                int L);

  const LocalParams& params() const { return params_; }
  int beta() const { return beta_; }
  LiftMode normalization() const { return norm_; }
  int K() const { return K_; }
  int L() const { return L_; }

  const HeckeScalar& stored(int k, int l) const;
  HeckeScalar& stored(int k, int l);
  // read with the zero convention for negative indices
  HeckeScalar at(int k, int l) const;

  WhittakerGrid scaled(const HeckeScalar& c) const;
  WhittakerGrid plus(const WhittakerGrid& o) const;
  bool equal_on(const WhittakerGrid& o, int kmax, int lmax) const;

 private:
  LocalParams params_;
  int beta_;
  LiftMode norm_;
  int K_, L_;
  std::vector<HeckeScalar> v_;
};

// W_{k,l} built from a coefficient family (Lemma "p^{-4n(l+m)} (C *
// A_{p^{l+m} M_m^{-1} lambda})" shape):
//   maass: eps * p^{-4n(k+l)} sum_{j=0..l} p^{j(4n-1)} b(p^{2(k+l-j)+e} m')
//   ors:         p^{-kappa(k+l)} sum_{j=0..l} p^{j(kappa-1)} c(...)
// mprime must be coprime to p.
WhittakerGrid whittaker_from_family(const CoefficientFamily& fam,
                                    LiftMode mode, int n, std::int64_t p,
                                    int e, std::int64_t mprime, int K, int L);

// W_{k,l} - W_{k+1,l-1} = q^{-l} W_{k,0} on the full grid, plus the summed
// form W_{k,l} = sum_i q^{-i} W_{k+l-i,0} where it fits.
bool check_maass_relation(const WhittakerGrid& W);

// The C^{(r)} recurrence.  Output valid on k <= K-1, l <= L-2 (stored with
// those dimensions).  1 <= r <= m.
WhittakerGrid apply_hecke(const WhittakerGrid& W, int r);

// Closed-form Hecke eigenvalues.
//   maass: mu_1 = p^{4n}(lam^2-2"+"p f_{4n,1}); mu_i via |R_{4n}^{(i-1)}|.
//   ors:   mu_1 = p^{4n+1}(p^{-(kappa-4n-1)} lam^2 + p^{4n}+...+p^{-4n}).
HeckeScalar mu(LiftMode mode, int n, std::int64_t p, const HeckeScalar& lam,
               int i, int kappa = 0);

struct IdentityReport {
  bool r_ge3_reduction = true;   // C^{(r)}, r>=3, via C^{(2)}, C^{(1)}
  bool c2_formula = true;        // the C^{(2)} formula on W^M
  bool simplified = true;        // C^{(r)} = |R^{(r-1)}_{m-1}|(C^{(1)} - s_r)
  bool f_identities = true;      // the two auxiliary f-identities
  std::vector<std::string> failures;
  bool all() const {
    return r_ge3_reduction && c2_formula && simplified && f_identities;
  }
};

// Exact grid identities on the valid region; precondition: W passes
// check_maass_relation.
IdentityReport check_module_identities(const WhittakerGrid& W);

// the two auxiliary f-identities at an arbitrary rational q
bool f_identities_at(int m, const Rat& q);

}  // namespace olift
