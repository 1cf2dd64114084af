#include "olift/lift.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace olift {

LiftContext make_maass_context(int n, const CoefficientFamily& fam) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  if (fam.kind() != FamilyKind::maass_b)
    throw std::invalid_argument("maass mode needs a maass_b family");
  LiftContext ctx;
  ctx.n = n;
  ctx.lattice = e8_power(n);
  ctx.family = &fam;
  ctx.mode = LiftMode::maass;
  return ctx;
}

LiftContext make_ors_context(int n, const CoefficientFamily& fam) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  if (fam.kind() != FamilyKind::holomorphic)
    throw std::invalid_argument("ors mode needs a holomorphic family");
  LiftContext ctx;
  ctx.n = n;
  ctx.family = &fam;
  ctx.mode = LiftMode::ors;
  ctx.kappa = fam.weight_kappa_prime() + 4 * n - 2;
  if (ctx.kappa <= 8 * n + 4)
    throw std::invalid_argument("ors requires kappa > 8n+4");
  return ctx;
}

HeckeScalar lift_coefficient_nc(const LiftContext& ctx, std::int64_t norm,
                                std::int64_t content) {
  if (ctx.mode != LiftMode::maass)
    throw std::invalid_argument("lift_coefficient: maass mode only");
  if (norm < 1 || content < 1) throw std::invalid_argument("bad (norm, content)");
  HeckeScalar acc(0);
  for (std::int64_t d = 1; d <= content; ++d) {
    if (content % d) continue;
    if (norm % (d * d))
      throw std::logic_error("content^2 does not divide norm");
    acc += HeckeScalar(pow_rat(Rat(d), 4 * ctx.n - 1)) *
           ctx.family->value(norm / (d * d));
  }
  return ctx.family->parity() == 1 ? acc : -acc;
}

HeckeScalar lift_coefficient(const LiftContext& ctx, const LatticeVector& v) {
  return lift_coefficient_nc(ctx, v.norm, v.content);
}

HeckeScalar ors_coefficient(const LiftContext& ctx, std::int64_t norm,
                            std::int64_t content) {
  if (ctx.mode != LiftMode::ors)
    throw std::invalid_argument("ors_coefficient: ors mode only");
  if (norm < 1 || content < 1) throw std::invalid_argument("bad (norm, content)");
  HeckeScalar acc(0);
  for (std::int64_t d = 1; d <= content; ++d) {
    if (content % d) continue;
    if (norm % (d * d)) throw std::logic_error("content^2 does not divide norm");
    acc += HeckeScalar(pow_rat(Rat(d), ctx.kappa - 1)) *
           ctx.family->value(norm / (d * d));
  }
  return acc;
}

HeckeScalar adelic_scale(const LiftContext& ctx, const LatticeVector& v,
                         int beta_valuation, std::int64_t p) {
  // ||beta|| = p^{-beta_valuation}; the rescaled vector is
  // p^{beta_valuation} * v with norm p^{2bv} q(v), content p^{bv} d_v.
  int bv = beta_valuation;
  long expo = ctx.mode == LiftMode::maass ? 4 * ctx.n : ctx.kappa;
  // integrality: p^{bv} v integral <=> bv >= -v_p(content)
  int vp_content = 0;
  {
    std::int64_t c = v.content;
    while (c % p == 0) {
      c /= p;
      ++vp_content;
    }
  }
  if (bv + vp_content < 0) return HeckeScalar(0);  // out of the lattice
  Rat scale = pow_rat(Rat(p), -static_cast<long>(bv) * expo);
  std::int64_t norm = v.norm, content = v.content;
  for (int i = 0; i < bv; ++i) {
    norm *= p * p;
    content *= p;
  }
  for (int i = 0; i > bv; --i) {
    norm /= p * p;
    content /= p;
  }
  HeckeScalar base = ctx.mode == LiftMode::maass
                         ? lift_coefficient_nc(ctx, norm, content)
                         : ors_coefficient(ctx, norm, content);
  return HeckeScalar(scale) * base;
}

std::vector<CoeffClass> lift_coefficient_classes(const LiftContext& ctx,
                                                 std::int64_t norm_bound) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> mult;
  for (std::int64_t m = 1; m <= norm_bound; ++m)
    for (const auto& v : enumerate_by_norm(ctx.lattice, m))
      ++mult[{v.norm, v.content}];
  std::vector<CoeffClass> out;
  for (const auto& [nc, cnt] : mult) {
    CoeffClass c;
    c.norm = nc.first;
    c.content = nc.second;
    c.multiplicity = cnt;
    c.value = ctx.mode == LiftMode::maass
                  ? lift_coefficient_nc(ctx, c.norm, c.content)
                  : ors_coefficient(ctx, c.norm, c.content);
    out.push_back(c);
  }
  return out;
}

}  // namespace olift
