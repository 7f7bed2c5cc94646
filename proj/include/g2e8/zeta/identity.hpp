#pragma once

// The unramified identity: the weighted sum over dominant weights of
// p(n,m) I0(n,m) tau0^(n,m), its finite-case reduction, and the assembled
// statement I(s,pi) N(s) = L(s,pi,St), all as exact truncated series in
// x with coefficients in q and the torus variables a, b.

#include "g2e8/g2chars.hpp"
#include "g2e8/zeta/named.hpp"

#include <string>
#include <vector>

namespace g2e8::zeta {

using g2::Weight;

/// Coefficient of chi_lambda in Q_varpi p(varpi): the sum over (w, S) with
/// w in W, S a set of positive roots and varpi + rho - Sigma(S) =
/// w(lambda + rho) of (-1)^l(w) (-q^-1)^|S|, by enumeration of all 12 x 64
/// pairs.
LaurentPoly p_coefficient(const RingPtr& ring, Weight varpi, Weight lambda);

/// Both sides of the identity multiplied by Q, truncated at x-degree D:
///   sum_{n+2m<=D} (Q/Q_(n,m)) p-expansion I0(n,m) x^(n+2m) q^(8n+15m)
///   Q z0 sum_{r<=D} chi_(r,0) x^r q^(8r)
/// in g2::standard_ring().
struct Sides {
  LaurentPoly lhs, rhs;
  bool equal() const { return lhs == rhs; }
};
Sides check3_sides(int D);

/// The finite-case form for one dominant lambda: the sum over dominant varpi
/// in lambda + S0 of p_coefficient(varpi, lambda) I0(varpi) tau0^varpi Q/Q_varpi
/// against Q z0 (xq^8)^r when lambda = (r, 0) and 0 otherwise.
Sides check3_finite_case(Weight lambda);

/// Dominant weights varpi, in a box around lambda, outside lambda + S0 with a
/// nonzero p_coefficient (expected empty).
std::vector<Weight> p_support_violations(Weight lambda, int margin);

/// For tau_i, the positive roots alpha of G2 (in fundamental-weight
/// coordinates) with tau_i^alpha = q.
std::vector<Weight> tau_roots(int i);

/// I0(n,m) tau0^(n,m) == J0c tau0^(n,m) - J1c tau1^(n,m) - J2c tau2^(n,m)
/// for all 0 <= n, m <= bound.
bool j_decomposition_holds(int bound);

/// Both sides of I(s,pi) N(s) = L(s,pi,St), each multiplied by Q and
/// truncated at x-degree D:
///   series(Z N / ((1-xq^7)(1-xq^8))) * sum x^(n+2m) q^(8n+15m) I0 (Q/Q_varpi) inner(varpi)
///   series(1 / (1-x^2q^16)) * Q * sum_r chi_(r,0) x^r q^(8r)
/// with inner(varpi) = sum_nu P_nu A_(varpi+rho-nu) / A_rho by exact division.
/// With perturb_q set, Q_varpi is replaced by 1 everywhere.
Sides end_to_end_sides(int D, bool perturb_q = false);

}  // namespace g2e8::zeta
