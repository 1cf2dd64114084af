#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic substrate: big rationals, univariate polynomials in the
// formal Hecke eigenvalue Lam, and rational functions in the formal
// variable t (standing for p^{-s}).  Everything here is immutable-by-value
// and exact; no floating point anywhere.

namespace olift {

using Rat = mpq_class;
using Int = mpz_class;

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);
Rat pow_rat(const Rat& base, long e);  // negative e allowed, base != 0

// Polynomial in the formal eigenvalue Lam with big-rational coefficients.
// Degree 0 is a plain rational; the zero polynomial has an empty
// coefficient list (canonical form: trailing zero coefficients stripped).
class HeckeScalar {
 public:
  HeckeScalar() = default;
  HeckeScalar(long v) : c_{Rat(v)} { trim(); }
  HeckeScalar(const Rat& v) : c_{v} { trim(); }
  explicit HeckeScalar(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static HeckeScalar lambda();  // the formal symbol Lam

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  // value of a degree-<=0 scalar
  Rat as_rational() const;

  HeckeScalar operator-() const;
  HeckeScalar operator+(const HeckeScalar& o) const;
  HeckeScalar operator-(const HeckeScalar& o) const;
  HeckeScalar operator*(const HeckeScalar& o) const;
  HeckeScalar& operator+=(const HeckeScalar& o) { return *this = *this + o; }
  HeckeScalar& operator-=(const HeckeScalar& o) { return *this = *this - o; }
  HeckeScalar& operator*=(const HeckeScalar& o) { return *this = *this * o; }
  bool operator==(const HeckeScalar& o) const { return c_ == o.c_; }
  bool operator!=(const HeckeScalar& o) const { return c_ != o.c_; }

  HeckeScalar pow(unsigned e) const;
  Rat eval(const Rat& x) const;
  double eval_double(double x) const;

  std::string to_string(const std::string& var = "Lam") const;
  std::vector<std::string> to_json_coeffs() const;
  static HeckeScalar from_json_coeffs(const std::vector<std::string>& v);

 private:
  void trim();
  std::vector<Rat> c_;  // ascending powers of Lam
};

HeckeScalar operator*(const Rat& a, const HeckeScalar& p);

// monic gcd in Q[Lam]; gcd(0,0) = 0
HeckeScalar poly_gcd(HeckeScalar a, HeckeScalar b);
// quotient/remainder, divisor nonzero
void poly_divmod(const HeckeScalar& a, const HeckeScalar& b, HeckeScalar* q,
                 HeckeScalar* rem);
HeckeScalar poly_div_exact(const HeckeScalar& a, const HeckeScalar& b);

enum class ArithOp { add, sub, mul, div };

HeckeScalar poly_arith(const HeckeScalar& a, const HeckeScalar& b, ArithOp op);

// Rational function in t with HeckeScalar coefficients, kept in canonical
// form: numerator/denominator coprime in Q(Lam)[t], both with polynomial
// (not fractional) Lam-coefficients, no common Lam-content, and the
// denominator's lowest-degree nonzero t-coefficient normalized to have
// leading Lam-coefficient 1.
class RationalFunction {
 public:
  RationalFunction() : num_{}, den_{HeckeScalar(1)} {}
  RationalFunction(long v) : num_{}, den_{HeckeScalar(1)} {
    if (v != 0) num_ = {HeckeScalar(v)};
  }
  // num/den as t-polynomials (ascending), den nonzero
  RationalFunction(std::vector<HeckeScalar> num, std::vector<HeckeScalar> den);

  static RationalFunction t();  // the formal variable

  const std::vector<HeckeScalar>& num() const { return num_; }
  const std::vector<HeckeScalar>& den() const { return den_; }
  bool is_zero() const { return num_.empty(); }
  int num_degree() const { return static_cast<int>(num_.size()) - 1; }
  int den_degree() const { return static_cast<int>(den_.size()) - 1; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;  // o nonzero
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<HeckeScalar> num_, den_;  // ascending powers of t
};

RationalFunction ratfunc_arith(const RationalFunction& a,
                               const RationalFunction& b, ArithOp op);

// t-polynomial helpers shared with lfunction
using TPoly = std::vector<HeckeScalar>;  // ascending powers of t
TPoly tpoly_mul(const TPoly& a, const TPoly& b);
TPoly tpoly_one();
// 1 - c*t
TPoly tpoly_linear(const HeckeScalar& c);

}  // namespace olift
