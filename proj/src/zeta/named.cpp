#include "g2e8/zeta/named.hpp"

#include "g2e8/error.hpp"
#include "g2e8/zeta/jfamily.hpp"
#include "g2e8/zeta/products.hpp"

namespace g2e8::zeta {

LaurentPoly xq(const RingPtr& ring, int i, int j) { return LaurentPoly::var(ring, "x", i) * LaurentPoly::var(ring, "q", j); }

namespace {

LaurentPoly om(const RingPtr& r, int i, int j) { return one_minus(r, i, j); }

}  // namespace

LaurentPoly Z(const RingPtr& r) { return om(r, 1, 0) * om(r, 1, 2) * om(r, 1, 3) * om(r, 1, 4) * om(r, 2, 10) * om(r, 2, 12); }

LaurentPoly I0(const RingPtr& r, int n, int m) {
  if (n < 0 || m < 0) throw Error("I0 needs n, m >= 0");
  return om(r, 1, 6) * om(r, 3, 21) - xq(r, 1, 8).pow(m + 1) * om(r, 1, 5) * om(r, 1, 6) -
         xq(r, 1, 7).pow(n + 1) * xq(r, 1, 8).pow(m) * om(r, 1, 5) * om(r, 1, 8);
}

LaurentPoly I0_expanded(const RingPtr& r, int n, int m) {
  if (n < 0 || m < 0) throw Error("I0 needs n, m >= 0");
  const int k = n + m;
  return LaurentPoly::constant(r, 1) - xq(r, 1, 6) - xq(r, 3, 21) + xq(r, 4, 27) - xq(r, m + 1, 8 * (m + 1)) +
         xq(r, m + 2, 8 * m + 14) - xq(r, k + 1, 7 * (n + 1) + 8 * m) + xq(r, k + 2, 7 * n + 8 * m + 12) +
         xq(r, k + 2, 7 * n + 8 * m + 15) - xq(r, k + 3, 7 * n + 8 * m + 20) + xq(r, m + 2, 8 * m + 13) -
         xq(r, m + 3, 8 * m + 19);
}

LaurentPoly z0(const RingPtr& r) { return om(r, 1, 5) * om(r, 1, 6) * om(r, 1, 7) * om(r, 1, 8) * om(r, 2, 14) * om(r, 3, 21); }

LaurentPoly n_inverse(const RingPtr& r) {
  LaurentPoly out = LaurentPoly::constant(r, 1);
  for (auto [z, c] : normalizing_factor().num) out *= om(r, z.k, z.j).pow(c);
  return out;
}

RatFunc P0(const RingPtr& r) {
  return RatFunc(om(r, 1, 0) * om(r, 1, 2) * om(r, 1, 3) * om(r, 1, 4) * om(r, 2, 10)) / RatFunc(om(r, 1, 6)) /
         RatFunc(om(r, 1, 7));
}

LaurentPoly J0c(const RingPtr& r) { return om(r, 1, 6) * om(r, 3, 21); }
LaurentPoly J1c(const RingPtr& r) { return xq(r, 1, 8) * om(r, 1, 5) * om(r, 1, 6); }
LaurentPoly J2c(const RingPtr& r) { return xq(r, 1, 7) * om(r, 1, 5) * om(r, 1, 8); }

TauPoint tau(const RingPtr& r, int i) {
  switch (i) {
    case 0: return {xq(r, 1, 8), xq(r, 2, 15)};
    case 1: return {xq(r, 1, 8), xq(r, 3, 23)};
    case 2: return {xq(r, 2, 15), xq(r, 3, 23)};
  }
  throw Error("tau index must be 0, 1 or 2");
}

RatFunc named(const std::string& id, const std::map<std::string, int>& params) {
  const RingPtr r = jring();
  auto param = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) throw Error("named polynomial " + id + " needs parameter " + key);
    return it->second;
  };
  if (id == "Z") return RatFunc(Z(r));
  if (id == "I0") return RatFunc(I0(r, param("n"), param("m")));
  if (id == "I0_expanded") return RatFunc(I0_expanded(r, param("n"), param("m")));
  if (id == "z0") return RatFunc(z0(r));
  if (id == "N") return normalizing_factor().value(r);
  if (id == "Z1") return z1().value(r);
  if (id == "Z2") return z2().value(r);
  if (id == "Z1Z2") return z1z2().value(r);
  if (id == "P0") return P0(r);
  if (id == "J0c") return RatFunc(J0c(r));
  if (id == "J1c") return RatFunc(J1c(r));
  if (id == "J2c") return RatFunc(J2c(r));
  if (id == "J21") return RatFunc(J21());
  if (id == "J22") return RatFunc(J22());
  if (id == "J0") return J0_assembled();
  throw Error("unknown named polynomial: " + id);
}

}  // namespace g2e8::zeta
