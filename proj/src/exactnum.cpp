#include "olift/exactnum.hpp"

#include <algorithm>
#include <sstream>

namespace olift {

std::string rat_to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat x;
  if (x.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  x.canonicalize();
  return x;
}

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("0 to a negative power");
    return Rat(0);
  }
  Rat b = e < 0 ? Rat(base.get_den(), base.get_num()) : base;
  b.canonicalize();
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  acc.canonicalize();
  return acc;
}

void HeckeScalar::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  for (auto& x : c_) x.canonicalize();
}

HeckeScalar HeckeScalar::lambda() {
  return HeckeScalar(std::vector<Rat>{Rat(0), Rat(1)});
}

Rat HeckeScalar::as_rational() const {
  if (c_.size() > 1) throw std::domain_error("HeckeScalar is not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

HeckeScalar HeckeScalar::operator-() const {
  std::vector<Rat> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return HeckeScalar(std::move(r));
}

HeckeScalar HeckeScalar::operator+(const HeckeScalar& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return HeckeScalar(std::move(r));
}

HeckeScalar HeckeScalar::operator-(const HeckeScalar& o) const {
  return *this + (-o);
}

HeckeScalar HeckeScalar::operator*(const HeckeScalar& o) const {
  if (c_.empty() || o.c_.empty()) return HeckeScalar();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return HeckeScalar(std::move(r));
}

HeckeScalar operator*(const Rat& a, const HeckeScalar& p) {
  return HeckeScalar(a) * p;
}

HeckeScalar HeckeScalar::pow(unsigned e) const {
  HeckeScalar acc(1), b = *this;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Rat HeckeScalar::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

double HeckeScalar::eval_double(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::string HeckeScalar::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = c_[i];
    if (a == 0) continue;
    Rat mag = a < 0 ? Rat(-a) : a;
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0) {
      os << rat_to_string(mag);
    } else {
      if (!unit) os << rat_to_string(mag) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<std::string> HeckeScalar::to_json_coeffs() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(rat_to_string(x));
  return out;
}

HeckeScalar HeckeScalar::from_json_coeffs(const std::vector<std::string>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (const auto& s : v) c.push_back(rat_from_string(s));
  return HeckeScalar(std::move(c));
}

void poly_divmod(const HeckeScalar& a, const HeckeScalar& b, HeckeScalar* q,
                 HeckeScalar* rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> r(a.coeffs());
  const auto& d = b.coeffs();
  int db = b.degree();
  std::vector<Rat> qq(a.degree() >= db ? a.degree() - db + 1 : 0, Rat(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    Rat f = r[i] / d[db];
    f.canonicalize();
    qq[i - db] = f;
    for (int j = 0; j <= db; ++j) {
      r[i - db + j] -= f * d[j];
      r[i - db + j].canonicalize();
    }
  }
  if (q) *q = HeckeScalar(std::move(qq));
  if (rem) *rem = HeckeScalar(std::move(r));
}

HeckeScalar poly_div_exact(const HeckeScalar& a, const HeckeScalar& b) {
  HeckeScalar q, r;
  poly_divmod(a, b, &q, &r);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

HeckeScalar poly_gcd(HeckeScalar a, HeckeScalar b) {
  while (!b.is_zero()) {
    HeckeScalar r;
    poly_divmod(a, b, nullptr, &r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  // monic
  Rat lead = a.coeffs().back();
  return Rat(1 / lead) * a;
}

HeckeScalar poly_arith(const HeckeScalar& a, const HeckeScalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return poly_div_exact(a, b);
  }
  throw std::logic_error("bad op");
}

namespace {

// ---- Q(Lam)[t] machinery used only for canonicalization ----------------

struct Frac {  // element of Q(Lam), canonical: reduced, monic denominator
  HeckeScalar num, den;
  Frac() : num(), den(1) {}
  Frac(HeckeScalar n, HeckeScalar d) : num(std::move(n)), den(std::move(d)) {
    reduce();
  }
  explicit Frac(HeckeScalar n) : num(std::move(n)), den(1) {}
  void reduce() {
    if (den.is_zero()) throw std::domain_error("zero denominator in Q(Lam)");
    if (num.is_zero()) {
      den = HeckeScalar(1);
      return;
    }
    HeckeScalar g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = poly_div_exact(num, g);
      den = poly_div_exact(den, g);
    }
    Rat lead = den.coeffs().back();
    num = Rat(1 / lead) * num;
    den = Rat(1 / lead) * den;
  }
  bool is_zero() const { return num.is_zero(); }
  Frac operator+(const Frac& o) const {
    return Frac(num * o.den + o.num * den, den * o.den);
  }
  Frac operator-(const Frac& o) const {
    return Frac(num * o.den - o.num * den, den * o.den);
  }
  Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
  Frac operator/(const Frac& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(Lam)");
    return Frac(num * o.den, den * o.num);
  }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
};

using FPoly = std::vector<Frac>;  // poly in t over Q(Lam), ascending

void ftrim(FPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void fdivmod(FPoly a, const FPoly& b, FPoly* q, FPoly* rem) {
  if (b.empty()) throw std::domain_error("t-polynomial division by zero");
  FPoly qq(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  for (int i = static_cast<int>(a.size()) - 1;
       i >= static_cast<int>(b.size()) - 1; --i) {
    if (a[i].is_zero()) continue;
    Frac f = a[i] / b.back();
    qq[i - (b.size() - 1)] = f;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = i - (b.size() - 1) + j;
      a[k] = a[k] - f * b[j];
    }
  }
  ftrim(a);
  if (q) {
    ftrim(qq);
    *q = qq;
  }
  if (rem) *rem = a;
}

FPoly fgcd(FPoly a, FPoly b) {
  ftrim(a);
  ftrim(b);
  while (!b.empty()) {
    FPoly r;
    fdivmod(a, b, nullptr, &r);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    Frac lead = a.back();
    for (auto& x : a) x = x / lead;
  }
  return a;
}

FPoly to_fpoly(const std::vector<HeckeScalar>& p) {
  FPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.emplace_back(c);
  ftrim(r);
  return r;
}

}  // namespace

RationalFunction::RationalFunction(std::vector<HeckeScalar> num,
                                   std::vector<HeckeScalar> den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

RationalFunction RationalFunction::t() {
  return RationalFunction({HeckeScalar(0), HeckeScalar(1)}, {HeckeScalar(1)});
}

void RationalFunction::canonicalize() {
  FPoly n = to_fpoly(num_), d = to_fpoly(den_);
  if (d.empty()) throw std::domain_error("zero denominator rational function");
  if (n.empty()) {
    num_.clear();
    den_ = {HeckeScalar(1)};
    return;
  }
  FPoly g = fgcd(n, d);
  if (g.size() > 1) {
    FPoly n2, d2;
    fdivmod(n, g, &n2, nullptr);
    fdivmod(d, g, &d2, nullptr);
    n = n2;
    d = d2;
  }
  // clear Lam-denominators: multiply through by lcm of all Frac denominators
  HeckeScalar mult(1);
  for (const auto* side : {&n, &d})
    for (const auto& fr : *side) {
      if (fr.is_zero()) continue;
      HeckeScalar g2 = poly_gcd(mult, fr.den);
      mult = mult * poly_div_exact(fr.den, g2);
    }
  std::vector<HeckeScalar> np, dp;
  np.reserve(n.size());
  dp.reserve(d.size());
  for (const auto& fr : n)
    np.push_back(fr.is_zero() ? HeckeScalar()
                              : fr.num * poly_div_exact(mult, fr.den));
  for (const auto& fr : d)
    dp.push_back(fr.is_zero() ? HeckeScalar()
                              : fr.num * poly_div_exact(mult, fr.den));
  // remove common Lam-content of all coefficients (both sides)
  HeckeScalar content;
  for (const auto* side : {&np, &dp})
    for (const auto& c : *side)
      if (!c.is_zero()) content = poly_gcd(content, c);
  if (content.degree() > 0) {
    for (auto& c : np)
      if (!c.is_zero()) c = poly_div_exact(c, content);
    for (auto& c : dp)
      if (!c.is_zero()) c = poly_div_exact(c, content);
  }
  // unit normalization: lowest nonzero den coefficient gets leading coeff 1
  for (const auto& c : dp)
    if (!c.is_zero()) {
      Rat u = c.coeffs().back();
      if (u != 1) {
        Rat inv = 1 / u;
        for (auto& x : np) x = inv * x;
        for (auto& x : dp) x = inv * x;
      }
      break;
    }
  num_ = std::move(np);
  den_ = std::move(dp);
  while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
  while (!den_.empty() && den_.back().is_zero()) den_.pop_back();
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return ratfunc_arith(*this, o, ArithOp::add);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return ratfunc_arith(*this, o, ArithOp::sub);
}
RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return ratfunc_arith(*this, o, ArithOp::mul);
}
RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  return ratfunc_arith(*this, o, ArithOp::div);
}

std::string RationalFunction::to_string() const {
  auto side = [](const std::vector<HeckeScalar>& p) {
    if (p.empty()) return std::string("0");
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << "(" << p[i].to_string() << ")";
      } else {
        os << "(" << p[i].to_string() << ")*t";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  };
  return "[" + side(num_) + "] / [" + side(den_) + "]";
}

RationalFunction ratfunc_arith(const RationalFunction& a,
                               const RationalFunction& b, ArithOp op) {
  auto mul = [](const TPoly& x, const TPoly& y) { return tpoly_mul(x, y); };
  auto add = [](TPoly x, const TPoly& y, bool sub) {
    if (x.size() < y.size()) x.resize(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
      x[i] = sub ? x[i] - y[i] : x[i] + y[i];
    while (!x.empty() && x.back().is_zero()) x.pop_back();
    return x;
  };
  switch (op) {
    case ArithOp::add:
      return RationalFunction(
          add(mul(a.num(), b.den()), mul(b.num(), a.den()), false),
          mul(a.den(), b.den()));
    case ArithOp::sub:
      return RationalFunction(
          add(mul(a.num(), b.den()), mul(b.num(), a.den()), true),
          mul(a.den(), b.den()));
    case ArithOp::mul:
      return RationalFunction(mul(a.num(), b.num()), mul(a.den(), b.den()));
    case ArithOp::div:
      if (b.is_zero()) throw std::domain_error("division by zero function");
      return RationalFunction(mul(a.num(), b.den()), mul(a.den(), b.num()));
  }
  throw std::logic_error("bad op");
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly r(a.size() + b.size() - 1, HeckeScalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

TPoly tpoly_one() { return {HeckeScalar(1)}; }

TPoly tpoly_linear(const HeckeScalar& c) { return {HeckeScalar(1), -c}; }

}  // namespace olift
