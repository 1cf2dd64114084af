#include "olift/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace olift {

Int GramLattice::det() const {
  // Bareiss fraction-free elimination
  int n = rank;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = gram[i][j];
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Int(0);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

GramLattice e8_gram() {
  // Root basis with Dynkin diagram 1-2-3-4-5-6-7 and node 8 attached to 5.
  GramLattice L;
  L.rank = 8;
  L.gram.assign(8, std::vector<std::int64_t>(8, 0));
  for (int i = 0; i < 8; ++i) L.gram[i][i] = 2;
  auto link = [&](int i, int j) { L.gram[i][j] = L.gram[j][i] = -1; };
  for (int i = 0; i < 6; ++i) link(i, i + 1);
  link(4, 7);
  L.even = true;
  L.unimodular = true;
  return L;
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  GramLattice L;
  L.rank = a.rank + b.rank;
  L.gram.assign(L.rank, std::vector<std::int64_t>(L.rank, 0));
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j) L.gram[i][j] = a.gram[i][j];
  for (int i = 0; i < b.rank; ++i)
    for (int j = 0; j < b.rank; ++j)
      L.gram[a.rank + i][a.rank + j] = b.gram[i][j];
  L.even = a.even && b.even;
  L.unimodular = a.unimodular && b.unimodular;
  return L;
}

GramLattice e8_power(int n) {
  if (n < 1) throw std::invalid_argument("e8_power: n >= 1 required");
  GramLattice L = e8_gram();
  for (int i = 1; i < n; ++i) L = direct_sum(L, e8_gram());
  return L;
}

LatticeVector norm_and_content(const GramLattice& L,
                               const std::vector<std::int64_t>& coords) {
  if (static_cast<int>(coords.size()) != L.rank)
    throw std::invalid_argument("coordinate length != rank");
  std::int64_t two_q = 0;
  for (int i = 0; i < L.rank; ++i) {
    if (coords[i] == 0) continue;
    for (int j = 0; j < L.rank; ++j)
      two_q += coords[i] * L.gram[i][j] * coords[j];
  }
  if (two_q % 2 != 0) throw std::logic_error("odd v^T S v on an even lattice");
  std::int64_t c = 0;
  for (auto x : coords) c = std::gcd(c, x < 0 ? -x : x);
  if (c == 0) throw std::invalid_argument("zero vector has no content");
  return LatticeVector{coords, two_q / 2, c};
}

namespace {

// Exact LDL^T data for the quadratic form: q(x) = sum_i d_i (x_i + sum_{j>i}
// u_{ij} x_j)^2 with rational d_i > 0, u_{ij}.
struct Ldl {
  int n;
  std::vector<Rat> d;
  std::vector<std::vector<Rat>> u;
};

Ldl ldl_decompose(const GramLattice& L) {
  int n = L.rank;
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(L.gram[i][j], 2);
  Ldl out{n, std::vector<Rat>(n), std::vector<std::vector<Rat>>(
                                      n, std::vector<Rat>(n, Rat(0)))};
  for (int i = 0; i < n; ++i) {
    out.d[i] = a[i][i];
    if (out.d[i] <= 0) throw std::domain_error("Gram matrix not positive definite");
    for (int j = i + 1; j < n; ++j) {
      out.u[i][j] = a[i][j] / out.d[i];
      out.u[i][j].canonicalize();
    }
    for (int r = i + 1; r < n; ++r)
      for (int c = r; c < n; ++c) {
        a[r][c] -= out.d[i] * out.u[i][r] * out.u[i][c];
        a[r][c].canonicalize();
        a[c][r] = a[r][c];
      }
  }
  return out;
}


// Denominator-cleared form of the LDL data: with D = lcm of the d_i
// denominators and Du = lcm of the u_{ij} denominators,
//   D Du^2 q(x) = sum_i dd_i (Du x_i + sum_{j>i} U_{ij} x_j)^2 / ...
// stays in integers throughout; the search is the same exact Fincke-Pohst
// recursion with all comparisons integral.
struct IntLdl {
  int n;
  std::int64_t Du;                       // common center denominator
  std::vector<std::int64_t> dd;          // D * d_i (integers)
  std::vector<std::vector<std::int64_t>> U;  // Du * u_{ij}
  std::int64_t budget_scale;             // D * Du^2
};

IntLdl scale_ldl(const Ldl& F) {
  IntLdl out;
  out.n = F.n;
  Int D(1), Du(1);
  for (int i = 0; i < F.n; ++i) {
    D = lcm(D, Int(F.d[i].get_den()));
    for (int j = i + 1; j < F.n; ++j) Du = lcm(Du, Int(F.u[i][j].get_den()));
  }
  if (!D.fits_slong_p() || !Du.fits_slong_p())
    throw std::overflow_error("LDL denominators too large");
  out.Du = Du.get_si();
  out.dd.resize(F.n);
  out.U.assign(F.n, std::vector<std::int64_t>(F.n, 0));
  for (int i = 0; i < F.n; ++i) {
    Rat sd = F.d[i] * Rat(D);
    sd.canonicalize();
    out.dd[i] = Int(sd.get_num()).get_si();
    for (int j = i + 1; j < F.n; ++j) {
      Rat su = F.u[i][j] * Rat(Du);
      su.canonicalize();
      out.U[i][j] = Int(su.get_num()).get_si();
    }
  }
  Int bs = D * Du * Du;
  if (!bs.fits_slong_p()) throw std::overflow_error("budget scale too large");
  out.budget_scale = bs.get_si();
  return out;
}

inline std::int64_t isqrt64(std::int64_t v) {
  if (v < 0) return -1;
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void fp_recurse_int(const IntLdl& F, std::int64_t m, int i,
                    std::vector<std::int64_t>& x,
                    std::vector<std::int64_t>& cnum, std::int64_t budget,
                    std::vector<LatticeVector>& out, const GramLattice& L) {
  if (i < 0) {
    std::int64_t two_q = 0;
    for (int a = 0; a < L.rank; ++a) {
      if (x[a] == 0) continue;
      for (int b = 0; b < L.rank; ++b) two_q += x[a] * L.gram[a][b] * x[b];
    }
    if (two_q == 2 * m) {
      bool zero = std::all_of(x.begin(), x.end(),
                              [](std::int64_t v) { return v == 0; });
      if (!zero) out.push_back(norm_and_content(L, x));
    }
    return;
  }
  // dd_i (Du x + cnum_i)^2 <= budget, exact integer bound
  std::int64_t s = isqrt64(budget / F.dd[i]);
  std::int64_t lo = -s - cnum[i], hi = s - cnum[i];
  // divide by Du with floor/ceil semantics
  auto floordiv = [](std::int64_t a, std::int64_t b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
  };
  auto ceildiv = [](std::int64_t a, std::int64_t b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
  };
  std::int64_t xlo = ceildiv(lo, F.Du), xhi = floordiv(hi, F.Du);
  for (std::int64_t xi = xlo; xi <= xhi; ++xi) {
    std::int64_t v = F.Du * xi + cnum[i];
    __int128 used = static_cast<__int128>(F.dd[i]) * v * v;
    if (used > budget) continue;
    x[i] = xi;
    for (int j = 0; j < i; ++j) cnum[j] += F.U[j][i] * xi;
    fp_recurse_int(F, m, i - 1, x, cnum,
                   budget - static_cast<std::int64_t>(used), out, L);
    for (int j = 0; j < i; ++j) cnum[j] -= F.U[j][i] * xi;
  }
  x[i] = 0;
}

}  // namespace

std::vector<LatticeVector> enumerate_by_norm(const GramLattice& L,
                                             std::int64_t m) {
  if (m < 1) throw std::invalid_argument("enumerate_by_norm: m >= 1");
  Ldl F = ldl_decompose(L);
  IntLdl FI = scale_ldl(F);
  // overflow audit: the worst intermediate is dd_max * (Du*xmax + cmax)^2;
  // bail out to a clear error rather than risk wraparound
  {
    double b0 = static_cast<double>(FI.budget_scale) * static_cast<double>(m);
    if (b0 > 1.0e17) throw std::overflow_error("norm bound too large");
  }
  std::vector<LatticeVector> out;
  std::vector<std::int64_t> x(L.rank, 0);
  std::vector<std::int64_t> cnum(L.rank, 0);
  fp_recurse_int(FI, m, L.rank - 1, x, cnum, FI.budget_scale * m, out, L);
  std::sort(out.begin(), out.end(),
            [](const LatticeVector& a, const LatticeVector& b) {
              return a.coords < b.coords;
            });
  return out;
}

std::int64_t representation_count(const GramLattice& L, std::int64_t m) {
  return static_cast<std::int64_t>(enumerate_by_norm(L, m).size());
}

LocalInvariants local_invariants(const LatticeVector& v, long p) {
  if (v.content == 0) throw std::invalid_argument("zero vector");
  if (p < 2) throw std::invalid_argument("p must be prime");
  auto vp = [&](std::int64_t x) {
    int n = 0;
    while (x % p == 0) {
      x /= p;
      ++n;
    }
    return n;
  };
  LocalInvariants inv;
  inv.p = p;
  inv.l = vp(v.content);
  int vnorm = vp(v.norm);
  inv.e = (vnorm - 2 * inv.l) % 2;
  inv.k = (vnorm - 2 * inv.l - inv.e) / 2;
  if (inv.k < 0)
    throw std::logic_error("negative k: content^2 does not divide norm pattern");
  inv.beta = inv.e == 1 ? 0 : -1;
  return inv;
}

std::int64_t sigma3(std::int64_t m) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    s += d * d * d;
    std::int64_t e = m / d;
    if (e != d) s += e * e * e;
  }
  return s;
}

}  // namespace olift
