#pragma once

// Character theory of G2(C) on the weight lattice.  Weights are (n, m) =
// n*w1 + m*w2 over the fundamental weights; w1 is the highest weight of the
// 7-dimensional representation (short), w2 that of the adjoint (long).
// Characters live in any ring containing the torus variables a = tau^w1 and
// b = tau^w2; polynomials in q^-1 use the ring variable q.

#include "g2e8/symra/laurent.hpp"
#include "g2e8/symra/ratfunc.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace g2e8::g2 {

using symra::LaurentPoly;
using symra::RatFunc;
using symra::RingPtr;

struct Weight {
  int n = 0, m = 0;

  bool dominant() const { return n >= 0 && m >= 0; }
  friend Weight operator+(Weight a, Weight b) { return {a.n + b.n, a.m + b.m}; }
  friend Weight operator-(Weight a, Weight b) { return {a.n - b.n, a.m - b.m}; }
  friend Weight operator-(Weight a) { return {-a.n, -a.m}; }
  friend Weight operator*(int k, Weight a) { return {k * a.n, k * a.m}; }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Ring with variables x, q, a, b used throughout the unramified computation.
RingPtr standard_ring();

/// Simple roots: short alpha1 = 2w1 - w2, long alpha2 = -3w1 + 2w2.
Weight simple_root(int i);
/// The six positive roots: a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2.
const std::array<Weight, 6>& positive_roots();
/// Half the sum of the positive roots, (1, 1).
Weight rho();

struct WeylElt {
  /// Action on (n, m): (n, m) -> (mat[0][0] n + mat[0][1] m, mat[1][0] n + mat[1][1] m).
  std::array<std::array<int, 2>, 2> mat;
  int length;
  std::vector<int> word;
};

/// All 12 elements, identity first, in order of length.
const std::vector<WeylElt>& weyl_group();
Weight act(const WeylElt& w, Weight v);
/// Simple reflections: s1(n,m) = (-n, m+n), s2(n,m) = (n+3m, -m).
Weight reflect(int i, Weight v);

/// Dominant regular conjugate of mu with the sign of the conjugating
/// element, or nullopt if mu lies on a wall.
std::optional<std::pair<Weight, int>> straighten(Weight mu);

LaurentPoly monomial(const RingPtr& ring, Weight w);
/// A_lambda = sum_w (-1)^l(w) tau^(w lambda).
LaurentPoly alt_sum(const RingPtr& ring, Weight lambda);
/// A_(lambda+rho) / A_rho by exact division; lambda must be dominant.
LaurentPoly weyl_character(const RingPtr& ring, Weight lambda);
long weyl_dimension(Weight lambda);

/// Linear combination of irreducible characters, keyed by highest weight.
using CharExpansion = std::map<Weight, LaurentPoly>;
LaurentPoly to_character(const RingPtr& ring, const CharExpansion& e);
/// Expansion of sum_k c_k A_(mu_k) / A_rho.
CharExpansion alt_ratio(const std::vector<std::pair<Weight, LaurentPoly>>& terms);

/// prod_{a>0} (1 - q^-1 tau^-a) = sum_{nu in S0} P_nu(q^-1) tau^-nu.
struct S0Table {
  std::map<Weight, LaurentPoly> P;
};
S0Table s0_and_p(const RingPtr& ring);

/// Q = (1 - q^-2)(1 - q^-6) / (1 - q^-1)^2 = 1 + 2q^-1 + ... + 2q^-5 + q^-6.
LaurentPoly q_constant(const RingPtr& ring);
/// Q for 0, 1 + q^-1 on the two edges of the dominant chamber, else 1.
LaurentPoly q_varpi(const RingPtr& ring, Weight varpi);

/// sum_nu P_nu A_(varpi + rho - nu) / A_rho as a character expansion.
CharExpansion spherical_sum(const RingPtr& ring, Weight varpi);
/// Spherical function at the torus point with coordinates varpi:
/// q^(-3n-5m) / Q * sum_nu P_nu A_(varpi + rho - nu) / A_rho.
RatFunc spherical(const RingPtr& ring, Weight varpi);

/// chi_(r,0) and the characters of Sym^r of the 7-dimensional
/// representation, for r = 0..r_max.
struct SymSeries {
  std::vector<LaurentPoly> chi;
  std::vector<LaurentPoly> sym;
};
SymSeries sym_series(const RingPtr& ring, int r_max);

/// Weights of the 7-dimensional representation (zero and the short roots).
const std::array<Weight, 7>& standard_weights();

}  // namespace g2e8::g2
