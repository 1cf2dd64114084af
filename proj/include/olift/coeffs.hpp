#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "olift/exactnum.hpp"

// Coefficient families attached to the input cusp form: synthetic
// Hecke-eigen families in the rational b-normalization (Maass case, b(n) =
// sqrt(n) c(n)), the Delta/Ramanujan-tau fixture (holomorphic case), the
// two Hecke recurrences, and ingestion of numeric Maass data.

namespace olift {

enum class FamilyKind { maass_b, holomorphic };

class CoefficientFamily {
 public:
  // eigenvalues: prime -> HeckeScalar (the formal symbol allowed at one
  // distinguished prime).  For maass_b:
  //   b(1)=1, b(p^{j+1}) = lam_p b(p^j) - b(p^{j-1}), multiplicative.
  // For holomorphic (weight kappa' = weight_kappa_prime):
  //   c(1)=1, c(p^{j+1}) = lam_p c(p^j) - p^{kappa'-1} c(p^{j-1}).
  CoefficientFamily(FamilyKind kind, std::map<std::int64_t, HeckeScalar> eigen,
                    int parity, int weight_kappa_prime = 0);

  FamilyKind kind() const { return kind_; }
  int parity() const { return parity_; }
  int weight_kappa_prime() const { return weight_; }
  const std::map<std::int64_t, HeckeScalar>& eigenvalues() const {
    return eigen_;
  }
  HeckeScalar eigenvalue(std::int64_t p) const;

  // value at any n >= 1 whose prime factors all carry eigenvalues;
  // lazily computed and memoized.  Throws on a missing eigenvalue.
  HeckeScalar value(std::int64_t n) const;
  // signed value: value(-n) = parity * value(n)
  HeckeScalar signed_value(std::int64_t n) const;

  std::int64_t support_bound() const { return support_bound_; }

 private:
  FamilyKind kind_;
  std::map<std::int64_t, HeckeScalar> eigen_;
  int parity_;
  int weight_;
  std::int64_t support_bound_ = 0;
  mutable std::map<std::int64_t, HeckeScalar> memo_;
};

// Family populated on [1, bound]; eigenvalues must cover every prime <=
// bound (checked).  values beyond bound resolve lazily.
CoefficientFamily synthetic_family(std::map<std::int64_t, HeckeScalar> eigen,
                                   int parity, std::int64_t bound);

// b-form of the paper's two Maass Hecke relations:
//   b(p^2 n) = (lam^2 - 1) b(n) - lam b(n/p)   (p | n; drop the term else)
//   b(p^2 n) = (lam^2 - 2) b(n) - b(n/p^2)     (p^2 | n)
bool verify_maass_relations(const CoefficientFamily& fam, std::int64_t p,
                            std::int64_t n);

// Holomorphic relations, kappa' = weight_kappa_prime (= kappa - 4n + 2):
//   c(p^2 m) = (lam^2 - p^{kappa'-1}) c(m) - p^{kappa'-1} lam c(m/p)  (p|m)
//   c(p^2 m) = (lam^2 - 2 p^{kappa'-1}) c(m) - p^{2(kappa'-1)} c(m/p^2)
bool verify_holomorphic_relations(const CoefficientFamily& fam, std::int64_t p,
                                  std::int64_t m);

// Ramanujan tau via the eta product q prod (1-q^m)^24, exact integers.
std::vector<Int> tau_coefficients(std::int64_t bound);
CoefficientFamily delta_fixture(std::int64_t bound);

struct NumericMaassData {
  double r = 0;           // spectral parameter
  int parity = +1;        // +1 even, -1 odd
  double precision = 0;   // declared absolute precision of the c(n)
  std::map<std::int64_t, double> c;

  double value(std::int64_t n) const;  // signed lookup, throws if missing
  std::int64_t support_bound() const;
};

// File format: '#'-prefixed header lines "# r <dec>", "# parity <+1|-1>",
// "# precision <dec>", then "<n> <c(n)>" pairs in any order.
NumericMaassData load_numeric_maass(const std::string& path);
NumericMaassData parse_numeric_maass(std::istream& in);

}  // namespace olift
