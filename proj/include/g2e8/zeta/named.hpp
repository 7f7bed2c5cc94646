#pragma once

// The polynomials in x = q^(-17s) and q that appear in the unramified
// computation.  Every function builds its value in the ring it is given,
// which must contain the variables x and q.

#include "g2e8/symra/ratfunc.hpp"

#include <map>
#include <string>

namespace g2e8::zeta {

using symra::LaurentPoly;
using symra::RatFunc;
using symra::RingPtr;

/// x^i q^j.
LaurentPoly xq(const RingPtr& ring, int i, int j);

/// (1-x)(1-xq^2)(1-xq^3)(1-xq^4)(1-x^2q^10)(1-x^2q^12).
LaurentPoly Z(const RingPtr& ring);
/// (1-xq^6)(1-x^3q^21) - (xq^8)^(m+1)(1-xq^5)(1-xq^6) - (xq^7)^(n+1)(xq^8)^m(1-xq^5)(1-xq^8).
LaurentPoly I0(const RingPtr& ring, int n, int m);
/// The same polynomial written out as twelve monomials.
LaurentPoly I0_expanded(const RingPtr& ring, int n, int m);
/// (1-xq^5)(1-xq^6)(1-xq^7)(1-xq^8)(1-x^2q^14)(1-x^3q^21).
LaurentPoly z0(const RingPtr& ring);
/// Product of 1 - x^k q^j over the factors of the normalizing factor, so the
/// normalizing factor itself is 1 / n_inverse.
LaurentPoly n_inverse(const RingPtr& ring);
/// (1-x)(1-xq^2)(1-xq^3)(1-xq^4)(1-x^2q^10) / ((1-xq^6)(1-xq^7)).
RatFunc P0(const RingPtr& ring);

/// Coefficients in I0 tau0^w = J0c tau0^w - J1c tau1^w - J2c tau2^w.
LaurentPoly J0c(const RingPtr& ring);  // (1-xq^6)(1-x^3q^21)
LaurentPoly J1c(const RingPtr& ring);  // xq^8 (1-xq^5)(1-xq^6)
LaurentPoly J2c(const RingPtr& ring);  // xq^7 (1-xq^5)(1-xq^8)

/// Values of the two fundamental weights at the torus points tau_i, i = 0,1,2:
/// (xq^8, x^2q^15), (xq^8, x^3q^23), (x^2q^15, x^3q^23).
struct TauPoint {
  LaurentPoly w1, w2;
  /// tau^(n w1 + m w2).
  LaurentPoly at(int n, int m) const { return w1.pow(n) * w2.pow(m); }
};
TauPoint tau(const RingPtr& ring, int i);

/// Lookup by identifier, with values in jring(): Z, I0 and I0_expanded
/// (params n, m), z0, N, Z1, Z2, Z1Z2, P0, J0c, J1c, J2c, J21, J22, J0.  Unknown
/// identifiers and missing parameters throw Error.
RatFunc named(const std::string& id, const std::map<std::string, int>& params = {});

}  // namespace g2e8::zeta
