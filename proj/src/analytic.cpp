#include "olift/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace olift {

namespace {
constexpr double kPi = 3.14159265358979323846;

double trapezoid_k(double r, double y, double h) {
  // K_{ir}(y) = int_0^inf exp(-y cosh t) cos(rt) dt; the integrand is even
  // in t and analytic in a strip, so the trapezoid rule converges
  // geometrically.  Truncate when y cosh t underflows the sum.
  double T = std::acosh(760.0 / y);
  double s = 0.5 * std::exp(-y);  // t = 0 term, cos(0) = 1, half weight
  for (double t = h; t <= T; t += h) {
    double e = y * std::cosh(t);
    if (e > 760.0) break;
    s += std::exp(-e) * std::cos(r * t);
  }
  return s * h;
}
}  // namespace

double bessel_k_im(double r, double y) {
  r = std::abs(r);
  if (!(y >= 1e-3 && y <= 500.0))
    throw std::domain_error("bessel_k_im: y outside [1e-3, 500]");
  if (r > 50.0) throw std::domain_error("bessel_k_im: |r| > 50");
  // step chosen so the aliasing term K_{i(2pi/h - r)} is negligible
  double h = 2.0 * kPi / (2.0 * r + 120.0);
  return trapezoid_k(r, y, h);
}

double whittaker_w0(double r, double y) {
  return std::sqrt(2.0 * y / kPi) * bessel_k_im(r, y);
}

EmotResult emot_check(double a, double p, double r) {
  if (a <= 0 || p <= 0) throw std::domain_error("emot_check: a, p > 0");
  // lhs: substitute t = e^u; integrand
  //   exp(-p e^u - (a/2) e^{-u}) W_{0,ir/2}(a e^{-u}) e^u
  // decays double-exponentially both ways.
  double uhi = std::log(760.0 / p);
  double ulo = -std::log(1500.0 / a);  // beyond this the K factor underflows
  double h = 0.02;
  double s = 0;
  for (double u = ulo; u <= uhi; u += h) {
    double t = std::exp(u);
    double arg = a / (2.0 * t);
    double expo = -p * t - arg;
    if (expo < -745.0) continue;
    // W_{0,ir/2}(a/t) = sqrt((a/t)/pi) K_{ir/2}(a/(2t)); split off the
    // K-factor's own exponential decay to stay in range
    if (arg > 500.0) continue;  // product e^{-2 arg} below 1e-400
    double w = std::sqrt(2.0 * arg / kPi) * bessel_k_im(r / 2.0, arg);
    s += std::exp(expo) * w * t;
  }
  EmotResult res;
  res.lhs = s * h;
  res.rhs = 2.0 * std::sqrt(a / p) * bessel_k_im(r, 2.0 * std::sqrt(a * p));
  res.rel_err = std::abs(res.lhs - res.rhs) /
                std::max({std::abs(res.lhs), std::abs(res.rhs), 1e-300});
  return res;
}

double q_s_real(const GramLattice& S, const std::vector<double>& x) {
  double q = 0;
  for (int i = 0; i < S.rank; ++i)
    for (int j = 0; j < S.rank; ++j)
      q += x[i] * static_cast<double>(S.gram[i][j]) * x[j];
  return q / 2.0;
}

GrassLine nu(const GramLattice& S, const HyperbolicPoint& pt) {
  if (static_cast<int>(pt.x.size()) != S.rank || pt.y <= 0)
    throw std::invalid_argument("bad hyperbolic point");
  GrassLine w;
  w.w.resize(S.rank + 2);
  double inv = 1.0 / std::sqrt(2.0);
  w.w[0] = inv * (pt.y + q_s_real(S, pt.x) / pt.y);
  for (int i = 0; i < S.rank; ++i) w.w[1 + i] = -inv * pt.x[i] / pt.y;
  w.w[S.rank + 1] = inv / pt.y;
  return w;
}

HyperbolicPoint point_from_line(const GramLattice& S, const GrassLine& line) {
  std::vector<double> w = line.w;
  if (static_cast<int>(w.size()) != S.rank + 2)
    throw std::invalid_argument("bad line dimension");
  // normalize the representative to B_Q(w,w) = 1 (line semantics)
  std::vector<double> mid(w.begin() + 1, w.end() - 1);
  double bq = 2.0 * (w.front() * w.back() - q_s_real(S, mid));
  if (bq <= 0) throw std::domain_error("not a positive line");
  double scale = 1.0 / std::sqrt(bq);
  for (auto& c : w) c *= scale;
  double last = w[S.rank + 1];
  if (last <= 0) throw std::domain_error("nonpositive last coordinate");
  HyperbolicPoint pt;
  pt.y = 1.0 / (std::sqrt(2.0) * last);
  pt.x.resize(S.rank);
  for (int i = 0; i < S.rank; ++i)
    pt.x[i] = -std::sqrt(2.0) * pt.y * w[1 + i];
  return pt;
}

IMat q_matrix(const GramLattice& S) {
  int N = S.rank;
  IMat Q(N + 2, std::vector<std::int64_t>(N + 2, 0));
  Q[0][N + 1] = Q[N + 1][0] = 1;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) Q[1 + i][1 + j] = -S.gram[i][j];
  return Q;
}

bool preserves_q(const IMat& g, const GramLattice& S) {
  IMat Q = q_matrix(S);
  int N = S.rank + 2;
  if (static_cast<int>(g.size()) != N) return false;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Int acc(0);
      for (int a = 0; a < N; ++a) {
        if (g[a][i] == 0) continue;
        for (int b = 0; b < N; ++b)
          acc += Int(g[a][i]) * Int(Q[a][b]) * Int(g[b][j]);
      }
      if (acc != Q[i][j]) return false;
    }
  return true;
}

IMat sigma_swap(const GramLattice& S) {
  int N = S.rank;
  IMat g(N + 2, std::vector<std::int64_t>(N + 2, 0));
  g[0][N + 1] = g[N + 1][0] = 1;
  for (int i = 0; i < N; ++i) g[1 + i][1 + i] = 1;
  return g;
}

IMat translation_matrix(const GramLattice& S,
                        const std::vector<std::int64_t>& lam) {
  // n(-lam) in the paper's block form; through nu (which stores -x/y in
  // the middle slot) this acts on the hyperbolic space as (x,y) -> (x+lam,y).
  int N = S.rank;
  if (static_cast<int>(lam.size()) != N) throw std::invalid_argument("bad lam");
  IMat g(N + 2, std::vector<std::int64_t>(N + 2, 0));
  g[0][0] = g[N + 1][N + 1] = 1;
  std::vector<std::int64_t> Sl(N, 0);
  std::int64_t two_q = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) Sl[i] += S.gram[i][j] * lam[j];
  for (int i = 0; i < N; ++i) two_q += lam[i] * Sl[i];
  for (int i = 0; i < N; ++i) {
    g[0][1 + i] = -Sl[i];
    g[1 + i][1 + i] = 1;
    g[1 + i][N + 1] = -lam[i];
  }
  g[0][N + 1] = two_q / 2;
  return g;
}

IMat block_reflection(const GramLattice& S,
                      const std::vector<std::int64_t>& root) {
  int N = S.rank;
  if (static_cast<int>(root.size()) != N)
    throw std::invalid_argument("bad root");
  std::vector<std::int64_t> Sr(N, 0);
  std::int64_t two_q = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) Sr[i] += S.gram[i][j] * root[j];
  for (int i = 0; i < N; ++i) two_q += root[i] * Sr[i];
  if (two_q != 2)
    throw std::invalid_argument("reflection requires a norm-1 root");
  IMat g(N + 2, std::vector<std::int64_t>(N + 2, 0));
  g[0][0] = g[N + 1][N + 1] = 1;
  // s_v(x) = x - (v^T S x) v on the middle block
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      g[1 + i][1 + j] = (i == j ? 1 : 0) - root[i] * Sr[j];
  return g;
}

std::vector<IMat> gamma_s_elements(int n) {
  GramLattice S = e8_power(n);
  std::vector<IMat> out;
  out.push_back(sigma_swap(S));
  std::vector<std::int64_t> e1(S.rank, 0), e12(S.rank, 0);
  e1[0] = 1;
  e12[0] = 1;
  e12[1] = 1;
  out.push_back(translation_matrix(S, e1));
  out.push_back(translation_matrix(S, e12));
  std::vector<std::int64_t> r1(S.rank, 0), r2(S.rank, 0);
  r1[0] = 1;           // simple root e_1
  r2[1] = 1;           // simple root e_2
  out.push_back(block_reflection(S, r1));
  out.push_back(block_reflection(S, r2));
  for (const auto& g : out)
    if (!preserves_q(g, S)) throw std::logic_error("Gamma_S element broken");
  return out;
}

HyperbolicPoint gamma_action(const IMat& g, const GramLattice& S,
                             const HyperbolicPoint& pt) {
  if (!preserves_q(g, S))
    throw std::invalid_argument("matrix does not preserve Q");
  GrassLine line = nu(S, pt);
  int N = S.rank + 2;
  GrassLine out;
  out.w.assign(N, 0.0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      out.w[i] += static_cast<double>(g[i][j]) * line.w[j];
  if (out.w[N - 1] < 0)
    for (auto& v : out.w) v = -v;
  return point_from_line(S, out);
}

NumericCoefficients numeric_from_family(const CoefficientFamily& fam,
                                        double r) {
  if (fam.kind() != FamilyKind::maass_b)
    throw std::invalid_argument("numeric adapter expects a maass_b family");
  NumericCoefficients nc;
  nc.parity = fam.parity();
  nc.r = r;
  nc.support = fam.support_bound();
  const CoefficientFamily* f = &fam;
  nc.b = [f](std::int64_t m) { return f->value(m).as_rational().get_d(); };
  return nc;
}

NumericCoefficients numeric_from_maass_data(const NumericMaassData& data) {
  NumericCoefficients nc;
  nc.parity = data.parity;
  nc.r = data.r;
  nc.support = data.support_bound();
  const NumericMaassData* d = &data;
  nc.b = [d](std::int64_t m) {
    return std::sqrt(static_cast<double>(m)) * d->value(m);
  };
  return nc;
}

namespace {

double tree_sum(std::vector<double>& terms) {
  // deterministic pairwise reduction
  if (terms.empty()) return 0;
  while (terms.size() > 1) {
    std::size_t half = (terms.size() + 1) / 2;
    for (std::size_t i = 0; i + half < terms.size(); ++i)
      terms[i] += terms[i + half];
    terms.resize(half);
  }
  return terms[0];
}

// A(lam) in the b-normalization, numerically
double a_coeff_numeric(int n, const NumericCoefficients& c, std::int64_t norm,
                       std::int64_t content) {
  double acc = 0;
  for (std::int64_t d = 1; d <= content; ++d) {
    if (content % d) continue;
    acc += std::pow(static_cast<double>(d), 4 * n - 1) * c.b(norm / (d * d));
  }
  return c.parity == 1 ? acc : -acc;
}

}  // namespace

LiftValue evaluate_lift(int n, const GramLattice& S,
                        const NumericCoefficients& coeffs,
                        const HyperbolicPoint& pt, std::int64_t norm_bound) {
  LiftValue out;
  std::vector<double> terms;
  double y4n = std::pow(pt.y, 4 * n);
  std::vector<double> Sx(S.rank, 0.0);
  for (int i = 0; i < S.rank; ++i)
    for (int j = 0; j < S.rank; ++j)
      Sx[i] += static_cast<double>(S.gram[i][j]) * pt.x[j];
  for (std::int64_t m = 1; m <= norm_bound; ++m) {
    double bessel_y = 4.0 * kPi * std::sqrt(static_cast<double>(m)) * pt.y;
    double K = bessel_k_im(coeffs.r, bessel_y);
    for (const auto& v : enumerate_by_norm(S, m)) {
      double a = a_coeff_numeric(n, coeffs, v.norm, v.content);
      double phase = 0;
      for (int i = 0; i < S.rank; ++i)
        phase += static_cast<double>(v.coords[i]) * Sx[i];
      double term = a * y4n * K * std::cos(2.0 * kPi * phase);
      out.max_term = std::max(out.max_term, std::abs(term));
      terms.push_back(term);
    }
  }
  out.value = tree_sum(terms);
  return out;
}

double invariance_residual(const IMat& g, const HyperbolicPoint& pt, int n,
                           const GramLattice& S,
                           const NumericCoefficients& coeffs,
                           std::int64_t norm_bound) {
  LiftValue f0 = evaluate_lift(n, S, coeffs, pt, norm_bound);
  HyperbolicPoint moved = gamma_action(g, S, pt);
  LiftValue f1 = evaluate_lift(n, S, coeffs, moved, norm_bound);
  double scale = std::max({f0.max_term, f1.max_term, 1e-300});
  return std::abs(f0.value - f1.value) / scale;
}

ResumResult borcherds_resummation_check(int n, const GramLattice& S,
                                        const NumericCoefficients& coeffs,
                                        const HyperbolicPoint& pt,
                                        std::int64_t norm_bound) {
  // rhs: the A(lam)-form
  ResumResult res;
  res.rhs = evaluate_lift(n, S, coeffs, pt, norm_bound).value;
  // lhs: sum over lam != 0 and multiples m >= 1 with q(m lam) <= bound,
  // c(-q(lam)) m^{4n-1} |lam| K_{ir}(4 pi m |lam| y) e(m lam^T S x); in the
  // b-normalization the |lam| prefactor cancels the sqrt in c = b/sqrt.
  std::vector<double> terms;
  double y4n = std::pow(pt.y, 4 * n);
  double sgn = coeffs.parity == 1 ? 1.0 : -1.0;
  std::vector<double> Sx(S.rank, 0.0);
  for (int i = 0; i < S.rank; ++i)
    for (int j = 0; j < S.rank; ++j)
      Sx[i] += static_cast<double>(S.gram[i][j]) * pt.x[j];
  for (std::int64_t q0 = 1; q0 <= norm_bound; ++q0) {
    for (const auto& v : enumerate_by_norm(S, q0)) {
      double phase0 = 0;
      for (int i = 0; i < S.rank; ++i)
        phase0 += static_cast<double>(v.coords[i]) * Sx[i];
      for (std::int64_t mul = 1; mul * mul * q0 <= norm_bound; ++mul) {
        double K = bessel_k_im(
            coeffs.r,
            4.0 * kPi * mul * std::sqrt(static_cast<double>(q0)) * pt.y);
        double term = sgn * coeffs.b(q0) *
                      std::pow(static_cast<double>(mul), 4 * n - 1) * y4n * K *
                      std::cos(2.0 * kPi * mul * phase0);
        terms.push_back(term);
      }
    }
  }
  res.lhs = tree_sum(terms);
  res.rel_err = std::abs(res.lhs - res.rhs) /
                std::max({std::abs(res.lhs), std::abs(res.rhs), 1e-300});
  return res;
}

}  // namespace olift
