#pragma once

// Quotients of zeta factors zeta(17k s - j) = 1 / (1 - x^k q^j) with x = q^(-17s),
// kept as exact multisets.  The index k doubles as the power of the Hecke
// character: the factor stands for L(17k s - j, chi^k).

#include "g2e8/rootsys.hpp"
#include "g2e8/symra/ratfunc.hpp"
#include "g2e8/weyl.hpp"

#include <map>
#include <string>
#include <vector>

namespace g2e8::zeta {

using symra::LaurentPoly;
using symra::RatFunc;
using symra::RingPtr;

struct ZetaKey {
  int k = 1;
  int j = 0;
  friend auto operator<=>(const ZetaKey&, const ZetaKey&) = default;
};

using ZetaMultiset = std::map<ZetaKey, int>;

struct ZetaQuotient {
  ZetaMultiset num, den;

  /// Cancel common factors; multiplicities stay positive.
  ZetaQuotient& cancel();
  ZetaQuotient& operator*=(const ZetaQuotient& o);
  friend bool operator==(const ZetaQuotient&, const ZetaQuotient&) = default;

  /// As a rational function of x, q (ring must contain both).
  RatFunc value(const RingPtr& ring) const;
  /// "zeta(17s-6)^4 zeta(34s-13) / (...)".
  std::string str() const;
};

std::string zeta_str(ZetaKey z);
/// 1 - x^k q^j.
LaurentPoly one_minus(const RingPtr& ring, int k, int j);

/// zeta(17s) prod_{i=2}^6 zeta(17s-i) prod_{i=5}^8 zeta(34s-2i) zeta(51s-21).
ZetaQuotient normalizing_factor();
/// Z1: the six quotients zeta(17s-j)/zeta(17s-i); Z2: the four in 34s and
/// zeta(51s-29)/zeta(51s-21).
ZetaQuotient z1();
ZetaQuotient z2();
/// Z1(s) Z2(s), the parabolic product after cancellation.
ZetaQuotient z1z2();

/// Affine forms a*s + b, one per simple root, giving the unramified
/// character on the coroots.
struct GKContext {
  const RootSystem* rs = nullptr;
  std::vector<std::pair<int, int>> forms;
};

/// prod over roots of zeta(<lambda, a>) / zeta(<lambda, a> + 1), where
/// <lambda, a> = sum_i n_i (a_i s + b_i) for a = sum n_i alpha_i.  The
/// s-coefficient must be a positive multiple of 17.
ZetaQuotient gk_product(const GKContext& ctx, const std::vector<Root>& roots);
/// Roots with positive coefficient at the 1-based simple index.
ZetaQuotient gk_parabolic(const GKContext& ctx, int index);
/// Roots in the inversion set of w.
ZetaQuotient gk_weyl(const GKContext& ctx, const WeylGroup& W, const WeylElt& w);

/// Forms of the character delta_P^s for the maximal parabolic at `index`
/// in E8: 17s on alpha_index, shifted by -1 on every simple root.
GKContext e8_parabolic_context(const RootSystem& e8, int index);
/// Character exponents [17s-6, 17s-6, 17s-6, -34s+14, 17s-6, -17s+7, 17s-6, 17s-5]
/// on the simple coroots, entered as the forms rho - exponents (1 - e_i on
/// alpha_i), which is the sign that makes the inversion-set product finite.
GKContext e8_intertwining_context(const RootSystem& e8);

/// One numerator factor L(17k s - j, chi^k) with the point s where its
/// argument equals 1.
struct PoleCandidate {
  ZetaKey factor;
  int s_num, s_den;  // s = s_num / s_den, reduced
};
/// Numerator factors of Z1 Z2 whose pole lies in Re(s) > 1/2, for a
/// character of the given order (0 for infinite order).
std::vector<PoleCandidate> pole_candidates(const ZetaQuotient& q, int chi_order);

}  // namespace g2e8::zeta
