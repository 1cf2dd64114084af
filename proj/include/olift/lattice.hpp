#pragma once

#include <cstdint>
#include <vector>

#include "olift/exactnum.hpp"

// Even unimodular positive definite lattices (E8 and direct sums of it),
// exact norm/content computation, vector enumeration by norm, and p-local
// (k,l,e) invariants of vectors.

namespace olift {

struct GramLattice {
  int rank = 0;
  std::vector<std::vector<std::int64_t>> gram;  // symmetric, q(v) = v^T S v / 2
  bool even = false;
  bool unimodular = false;

  Int det() const;  // exact, fraction-free elimination
};

struct LatticeVector {
  std::vector<std::int64_t> coords;
  std::int64_t norm = 0;     // q_S(v), exact
  std::int64_t content = 0;  // gcd of nonzero coords, undefined for 0
};

struct LocalInvariants {
  long p = 0;
  int k = 0;
  int l = 0;
  int e = 0;     // v_p(norm) - 2(k+l) in {0,1}
  int beta = 0;  // 0 iff e==1, -1 iff e==0
};

// Standard rank-8 even unimodular Gram matrix in the root basis
// (diagonal 2s, Dynkin-diagram adjacency -1s), det = 1.
GramLattice e8_gram();
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice e8_power(int n);  // E8^n, rank 8n

// Exact norm and content; throws on a zero vector (content undefined).
LatticeVector norm_and_content(const GramLattice& L,
                               const std::vector<std::int64_t>& coords);

// All v with q_S(v) = m, each exactly once, sorted lexicographically by
// coordinates.  Fincke-Pohst bounded search with exact rational Cholesky
// bounds and an exact integer acceptance test.
std::vector<LatticeVector> enumerate_by_norm(const GramLattice& L,
                                             std::int64_t m);

std::int64_t representation_count(const GramLattice& L, std::int64_t m);

// l = v_p(content), e = (v_p(norm) - 2l) mod 2, k = (v_p(norm) - 2l - e)/2.
LocalInvariants local_invariants(const LatticeVector& v, long p);

// sigma_3 and the E8 theta-series count 240*sigma_3(m), used as oracles.
std::int64_t sigma3(std::int64_t m);

}  // namespace olift
