#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "olift/coeffs.hpp"
#include "olift/lattice.hpp"

// Floating-point layer: modified Bessel K with imaginary order, the
// Whittaker relation, the EMOT integral identity, evaluation of the lift's
// Fourier expansion on hyperbolic space, and the Gamma_S action through the
// Grassmannian of positive lines.

namespace olift {

// K_{ir}(y) = int_0^inf exp(-y cosh t) cos(rt) dt, |r| <= 50,
// y in [1e-3, 500]; relative accuracy ~1e-10 on the supported range.
double bessel_k_im(double r, double y);
// W_{0,ir}(2y) = sqrt(2y/pi) K_{ir}(y)
double whittaker_w0(double r, double y);

struct EmotResult {
  double lhs = 0, rhs = 0, rel_err = 0;
};
// int_0^inf exp(-pt - a/(2t)) W_{0,ir/2}(a/t) dt  vs  2 sqrt(a/p) K_{ir}(2 sqrt(ap))
EmotResult emot_check(double a, double p, double r);

struct HyperbolicPoint {
  std::vector<double> x;  // length 8n
  double y = 1;
};

struct GrassLine {
  std::vector<double> w;  // length 8n+2, B_Q(w,w) = 1, last coordinate > 0
};

using IMat = std::vector<std::vector<std::int64_t>>;

double q_s_real(const GramLattice& S, const std::vector<double>& x);

GrassLine nu(const GramLattice& S, const HyperbolicPoint& pt);
HyperbolicPoint point_from_line(const GramLattice& S, const GrassLine& w);

// the (8n+2)x(8n+2) matrix Q = antidiag(1, -S, 1) blocks
IMat q_matrix(const GramLattice& S);
bool preserves_q(const IMat& g, const GramLattice& S);  // exact integer test

// explicit Gamma_S test elements: the swap sigma, translations n(e_i),
// n(e_i+e_j), and block reflections from E8 roots.  Every returned matrix
// satisfies g^T Q g = Q exactly.
IMat sigma_swap(const GramLattice& S);
IMat translation_matrix(const GramLattice& S, const std::vector<std::int64_t>& lam);
IMat block_reflection(const GramLattice& S, const std::vector<std::int64_t>& root);
std::vector<IMat> gamma_s_elements(int n);

HyperbolicPoint gamma_action(const IMat& g, const GramLattice& S,
                             const HyperbolicPoint& pt);

// numeric coefficient source: b(n) = sqrt(n) c(n) for n >= 1, plus parity
// (c(-n) = parity * c(n)) and the spectral parameter r
struct NumericCoefficients {
  int parity = 1;
  double r = 0;
  std::int64_t support = 0;
  std::function<double(std::int64_t)> b;
};

NumericCoefficients numeric_from_family(const CoefficientFamily& fam, double r);
NumericCoefficients numeric_from_maass_data(const NumericMaassData& data);

// F(x,y) = y^{4n} sum_{0 < q(lam) <= bound} A(lam) K_{ir}(4 pi |lam| y)
//          cos(2 pi lam^T S x),  deterministic pairwise tree reduction.
struct LiftValue {
  double value = 0;
  double max_term = 0;  // largest |term|, for residual normalization
};
LiftValue evaluate_lift(int n, const GramLattice& S,
                        const NumericCoefficients& coeffs,
                        const HyperbolicPoint& pt, std::int64_t norm_bound);

double invariance_residual(const IMat& g, const HyperbolicPoint& pt, int n,
                           const GramLattice& S,
                           const NumericCoefficients& coeffs,
                           std::int64_t norm_bound);

struct ResumResult {
  double lhs = 0, rhs = 0, rel_err = 0;
};
// Borcherds resummation: double sum over (lam, multiple m) against the
// A(lam)-form, identical truncation on both sides.
ResumResult borcherds_resummation_check(int n, const GramLattice& S,
                                        const NumericCoefficients& coeffs,
                                        const HyperbolicPoint& pt,
                                        std::int64_t norm_bound);

}  // namespace olift
