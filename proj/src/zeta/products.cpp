#include "g2e8/zeta/products.hpp"

#include "g2e8/error.hpp"

#include <fmt/format.h>

#include <numeric>

namespace g2e8::zeta {

ZetaQuotient& ZetaQuotient::cancel() {
  for (auto it = num.begin(); it != num.end();) {
    auto d = den.find(it->first);
    if (d != den.end()) {
      int c = std::min(it->second, d->second);
      it->second -= c;
      d->second -= c;
      if (d->second == 0) den.erase(d);
    }
    it = it->second == 0 ? num.erase(it) : std::next(it);
  }
  return *this;
}

ZetaQuotient& ZetaQuotient::operator*=(const ZetaQuotient& o) {
  for (auto [k, c] : o.num) num[k] += c;
  for (auto [k, c] : o.den) den[k] += c;
  return cancel();
}

LaurentPoly one_minus(const RingPtr& ring, int k, int j) {
  return LaurentPoly::constant(ring, 1) - LaurentPoly::var(ring, "x", k) * LaurentPoly::var(ring, "q", j);
}

RatFunc ZetaQuotient::value(const RingPtr& ring) const {
  LaurentPoly top = LaurentPoly::constant(ring, 1), bottom = LaurentPoly::constant(ring, 1);
  for (auto [z, c] : den) top *= one_minus(ring, z.k, z.j).pow(c);
  RatFunc r(top);
  for (auto [z, c] : num) r /= RatFunc(one_minus(ring, z.k, z.j)).pow(c);
  return r;
}

std::string zeta_str(ZetaKey z) {
  std::string s = z.k == 1 ? "17s" : fmt::format("{}s", 17 * z.k);
  if (z.j > 0) s += fmt::format("-{}", z.j);
  if (z.j < 0) s += fmt::format("+{}", -z.j);
  return "zeta(" + s + ")";
}

std::string ZetaQuotient::str() const {
  auto side = [](const ZetaMultiset& m) {
    std::string s;
    for (auto [z, c] : m) {
      if (!s.empty()) s += " ";
      s += zeta_str(z);
      if (c != 1) s += fmt::format("^{}", c);
    }
    return s.empty() ? std::string("1") : s;
  };
  if (den.empty()) return side(num);
  return side(num) + " / (" + side(den) + ")";
}

ZetaQuotient normalizing_factor() {
  ZetaQuotient n;
  n.num[{1, 0}] = 1;
  for (int i = 2; i <= 6; ++i) n.num[{1, i}] = 1;
  for (int i = 5; i <= 8; ++i) n.num[{2, 2 * i}] = 1;
  n.num[{3, 21}] = 1;
  return n;
}

ZetaQuotient z1() {
  ZetaQuotient z;
  for (int j : {10, 11, 12, 13, 14, 16}) z.num[{1, j}] += 1;
  for (int j : {0, 2, 3, 4, 5, 6}) z.den[{1, j}] += 1;
  return z.cancel();
}

ZetaQuotient z2() {
  ZetaQuotient z;
  for (int j : {17, 19, 21, 23}) z.num[{2, j}] += 1;
  for (int j : {10, 12, 14, 16}) z.den[{2, j}] += 1;
  z.num[{3, 29}] += 1;
  z.den[{3, 21}] += 1;
  return z.cancel();
}

ZetaQuotient z1z2() {
  ZetaQuotient z = z1();
  return z *= z2();
}

ZetaQuotient gk_product(const GKContext& ctx, const std::vector<Root>& roots) {
  if (!ctx.rs || static_cast<int>(ctx.forms.size()) != ctx.rs->rank())
    throw Error("GK context needs one affine form per simple root");
  ZetaQuotient q;
  for (const auto& a : roots) {
    long sc = 0, c = 0;
    for (int i = 0; i < ctx.rs->rank(); ++i) {
      sc += static_cast<long>(a[i]) * ctx.forms[i].first;
      c += static_cast<long>(a[i]) * ctx.forms[i].second;
    }
    if (sc <= 0 || sc % 17 != 0)
      throw Error(fmt::format("GK factor for root {} has s-coefficient {}, not a positive multiple of 17", ctx.rs->str(a), sc));
    int k = static_cast<int>(sc / 17);
    q.num[{k, static_cast<int>(-c)}] += 1;
    q.den[{k, static_cast<int>(-c - 1)}] += 1;
  }
  return q.cancel();
}

ZetaQuotient gk_parabolic(const GKContext& ctx, int index) { return gk_product(ctx, ctx.rs->radical_roots(index)); }

ZetaQuotient gk_weyl(const GKContext& ctx, const WeylGroup& W, const WeylElt& w) {
  return gk_product(ctx, W.inversion_set(w));
}

GKContext e8_parabolic_context(const RootSystem& e8, int index) {
  GKContext c{&e8, {}};
  for (int i = 1; i <= e8.rank(); ++i) c.forms.push_back({i == index ? 17 : 0, -1});
  return c;
}

GKContext e8_intertwining_context(const RootSystem& e8) {
  const std::vector<std::pair<int, int>> exps{{17, -6}, {17, -6}, {17, -6}, {-34, 14}, {17, -6}, {-17, 7}, {17, -6}, {17, -5}};
  GKContext c{&e8, {}};
  for (auto [a, b] : exps) c.forms.push_back({-a, 1 - b});
  return c;
}

std::vector<PoleCandidate> pole_candidates(const ZetaQuotient& q, int chi_order) {
  std::vector<PoleCandidate> out;
  for (auto [z, c] : q.num) {
    bool trivial_power = chi_order == 1 || (chi_order > 1 && z.k % chi_order == 0);
    if (!trivial_power) continue;
    // 17k s - j = 1
    int num = z.j + 1, den = 17 * z.k;
    int g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (2 * num <= den) continue;
    for (int r = 0; r < c; ++r) out.push_back({z, num, den});
  }
  return out;
}

}  // namespace g2e8::zeta
