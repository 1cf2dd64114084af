#include "olift/coeffs.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace olift {

CoefficientFamily::CoefficientFamily(FamilyKind kind,
                                     std::map<std::int64_t, HeckeScalar> eigen,
                                     int parity, int weight_kappa_prime)
    : kind_(kind), eigen_(std::move(eigen)), parity_(parity),
      weight_(weight_kappa_prime) {
  if (parity_ != 1 && parity_ != -1)
    throw std::invalid_argument("parity must be +1 or -1");
  if (kind_ == FamilyKind::holomorphic &&
      (weight_ < 12 || weight_ % 2 != 0))
    throw std::invalid_argument("holomorphic weight must be even and >= 12");
  memo_[1] = HeckeScalar(1);
}

HeckeScalar CoefficientFamily::eigenvalue(std::int64_t p) const {
  auto it = eigen_.find(p);
  if (it == eigen_.end())
    throw std::out_of_range("no eigenvalue for prime " + std::to_string(p));
  return it->second;
}

HeckeScalar CoefficientFamily::value(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("value index must be positive");
  auto it = memo_.find(n);
  if (it != memo_.end()) return it->second;
  // factor n over the primes with known eigenvalues
  HeckeScalar out(1);
  std::int64_t rest = n;
  for (const auto& [p, lam] : eigen_) {
    if (rest == 1) break;
    if (rest % p) continue;
    int j = 0;
    while (rest % p == 0) {
      rest /= p;
      ++j;
    }
    // prime-power values by the three-term recursion
    HeckeScalar prev(1), cur = lam;
    HeckeScalar pk = kind_ == FamilyKind::holomorphic
                         ? HeckeScalar(pow_rat(Rat(p), weight_ - 1))
                         : HeckeScalar(1);
    for (int i = 1; i < j; ++i) {
      HeckeScalar next = lam * cur - pk * prev;
      prev = cur;
      cur = next;
    }
    out *= (j == 0 ? HeckeScalar(1) : cur);
  }
  if (rest != 1)
    throw std::out_of_range("missing eigenvalue for a prime factor of " +
                            std::to_string(n));
  memo_[n] = out;
  return out;
}

HeckeScalar CoefficientFamily::signed_value(std::int64_t n) const {
  if (n == 0) throw std::invalid_argument("index 0 has no coefficient");
  if (n > 0) return value(n);
  return parity_ == 1 ? value(-n) : -value(-n);
}

CoefficientFamily synthetic_family(std::map<std::int64_t, HeckeScalar> eigen,
                                   int parity, std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("bound >= 1 required");
  for (std::int64_t p = 2; p <= bound; ++p) {
    bool prime = p >= 2;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime && !eigen.count(p))
      throw std::invalid_argument("missing eigenvalue for prime " +
                                  std::to_string(p));
  }
  CoefficientFamily fam(FamilyKind::maass_b, std::move(eigen), parity);
  for (std::int64_t n = 1; n <= bound; ++n) fam.value(n);
  return fam;
}

bool verify_maass_relations(const CoefficientFamily& fam, std::int64_t p,
                            std::int64_t n) {
  if (fam.kind() != FamilyKind::maass_b)
    throw std::invalid_argument("maass_b family required");
  HeckeScalar lam = fam.eigenvalue(p);
  HeckeScalar lhs = fam.value(p * p * n);
  HeckeScalar rhs = (lam * lam - HeckeScalar(1)) * fam.value(n);
  if (n % p == 0) rhs -= lam * fam.value(n / p);
  if (lhs != rhs) return false;
  if (n % (p * p) == 0) {
    HeckeScalar rhs2 =
        (lam * lam - HeckeScalar(2)) * fam.value(n) - fam.value(n / (p * p));
    if (lhs != rhs2) return false;
  }
  return true;
}

bool verify_holomorphic_relations(const CoefficientFamily& fam, std::int64_t p,
                                  std::int64_t m) {
  if (fam.kind() != FamilyKind::holomorphic)
    throw std::invalid_argument("holomorphic family required");
  HeckeScalar lam = fam.eigenvalue(p);
  HeckeScalar pk(pow_rat(Rat(p), fam.weight_kappa_prime() - 1));
  HeckeScalar lhs = fam.value(p * p * m);
  HeckeScalar rhs = (lam * lam - pk) * fam.value(m);
  if (m % p == 0) rhs -= pk * lam * fam.value(m / p);
  if (lhs != rhs) return false;
  if (m % (p * p) == 0) {
    HeckeScalar rhs2 = (lam * lam - HeckeScalar(2) * pk) * fam.value(m) -
                       pk * pk * fam.value(m / (p * p));
    if (lhs != rhs2) return false;
  }
  return true;
}

std::vector<Int> tau_coefficients(std::int64_t bound) {
  // q prod (1-q^m)^24 = q * P^24 where P = prod (1-q^m); use Euler's
  // pentagonal series for P, then three squarings of P^3 (Jacobi's cube).
  // Direct: compute P via pentagonal numbers, then P^24 by repeated
  // squaring of dense series truncated at degree bound-1.
  std::int64_t N = bound;  // need coefficients of q^1..q^N
  std::vector<Int> P(N, Int(0));
  P[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    std::int64_t g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
    if (g1 >= N && g2 >= N) break;
    Int s = (k % 2 == 0) ? Int(1) : Int(-1);
    if (g1 < N) P[g1] += s;
    if (g2 < N) P[g2] += s;
  }
  auto mul = [N](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(N, Int(0));
    for (std::int64_t i = 0; i < N; ++i) {
      if (a[i] == 0) continue;
      for (std::int64_t j = 0; j + i < N; ++j) {
        if (b[j] == 0) continue;
        r[i + j] += a[i] * b[j];
      }
    }
    return r;
  };
  std::vector<Int> P3 = mul(mul(P, P), P);
  std::vector<Int> P6 = mul(P3, P3);
  std::vector<Int> P12 = mul(P6, P6);
  std::vector<Int> P24 = mul(P12, P12);
  std::vector<Int> tau(N + 1, Int(0));
  for (std::int64_t n = 1; n <= N; ++n) tau[n] = P24[n - 1];
  return tau;
}

CoefficientFamily delta_fixture(std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("bound >= 1 required");
  std::int64_t need = std::max<std::int64_t>(bound, 2);
  std::vector<Int> tau = tau_coefficients(need);
  std::map<std::int64_t, HeckeScalar> eigen;
  for (std::int64_t p = 2; p <= need; ++p) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime) eigen[p] = HeckeScalar(Rat(tau[p]));
  }
  CoefficientFamily fam(FamilyKind::holomorphic, std::move(eigen), +1, 12);
  // cross-check the eta-product values against the Hecke recursion
  for (std::int64_t n = 1; n <= bound; ++n) {
    if (fam.value(n) != HeckeScalar(Rat(tau[n])))
      throw std::logic_error("tau fixture mismatch at n=" + std::to_string(n));
  }
  return fam;
}

double NumericMaassData::value(std::int64_t n) const {
  if (n == 0) throw std::invalid_argument("index 0 has no coefficient");
  auto it = c.find(n < 0 ? -n : n);
  if (it == c.end())
    throw std::out_of_range("numeric Maass data missing n=" + std::to_string(n));
  return n > 0 || parity == 1 ? it->second : -it->second;
}

std::int64_t NumericMaassData::support_bound() const {
  return c.empty() ? 0 : c.rbegin()->first;
}

NumericMaassData parse_numeric_maass(std::istream& in) {
  NumericMaassData d;
  d.precision = 1e-8;
  bool saw_r = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      std::string hash, key;
      ls >> hash >> key;
      if (key == "r") {
        ls >> d.r;
        saw_r = true;
      } else if (key == "parity") {
        ls >> d.parity;
      } else if (key == "precision") {
        ls >> d.precision;
      }
      continue;
    }
    std::int64_t n;
    double v;
    if (!(ls >> n >> v)) throw std::runtime_error("bad data line: " + line);
    if (n < 1) throw std::runtime_error("coefficient index must be positive");
    d.c[n] = v;
  }
  if (!saw_r) throw std::runtime_error("missing '# r <value>' header");
  if (d.parity != 1 && d.parity != -1)
    throw std::runtime_error("parity must be +1 or -1");
  auto it = d.c.find(1);
  if (it == d.c.end()) throw std::runtime_error("missing c(1)");
  if (std::abs(it->second - 1.0) > std::max(d.precision, 1e-12) * 10)
    throw std::runtime_error("c(1) deviates from 1 beyond declared precision");
  return d;
}

NumericMaassData load_numeric_maass(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return parse_numeric_maass(f);
}

}  // namespace olift
