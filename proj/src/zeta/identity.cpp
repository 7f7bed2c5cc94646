#include "g2e8/zeta/identity.hpp"

#include "g2e8/error.hpp"
#include "g2e8/zeta/products.hpp"

#include <set>

namespace g2e8::zeta {

using namespace g2;

namespace {

RingPtr R() { return standard_ring(); }
std::size_t xi() { return R()->index("x"); }

LaurentPoly tau0_at(Weight w) { return tau(R(), 0).at(w.n, w.m); }

// Q / Q_varpi, or Q when Q_varpi is replaced by 1.
LaurentPoly q_ratio(Weight w, bool perturb) {
  const LaurentPoly Q = q_constant(R());
  return perturb ? Q : symra::divexact(Q, q_varpi(R(), w));
}

std::vector<Weight> dominant_upto(int D) {
  std::vector<Weight> out;
  for (int m = 0; 2 * m <= D; ++m)
    for (int n = 0; n + 2 * m <= D; ++n) out.push_back({n, m});
  return out;
}

const std::set<Weight>& s0() {
  static const std::set<Weight> s = [] {
    std::set<Weight> out;
    for (const auto& [nu, p] : s0_and_p(R()).P) out.insert(nu);
    return out;
  }();
  return s;
}

}  // namespace

LaurentPoly p_coefficient(const RingPtr& ring, Weight varpi, Weight lambda) {
  if (!varpi.dominant() || !lambda.dominant()) throw Error("p_coefficient needs dominant weights");
  const auto& pos = positive_roots();
  symra::LaurentBuilder acc(ring);
  for (const auto& w : weyl_group()) {
    const Weight target = act(w, lambda + rho());
    for (int mask = 0; mask < 64; ++mask) {
      Weight s{};
      int size = 0;
      for (int k = 0; k < 6; ++k)
        if (mask >> k & 1) {
          s = s + pos[k];
          ++size;
        }
      if (varpi + rho() - s != target) continue;
      const int sign = (w.length + size) % 2 ? -1 : 1;
      acc.add(LaurentPoly::var(ring, "q", -size).mul_scalar(sign));
    }
  }
  return acc.finish();
}

Sides check3_sides(int D) {
  if (D < 1) throw Error("check3 needs D >= 1");
  const RingPtr r = R();
  CharExpansion lhs_coeffs;
  for (Weight w : dominant_upto(D)) {
    const LaurentPoly weight = q_ratio(w, false) * I0(r, w.n, w.m) * tau0_at(w);
    for (const auto& [lambda, c] : spherical_sum(r, w)) {
      LaurentPoly term = (weight * c).truncate_degree(xi(), D);
      auto it = lhs_coeffs.find(lambda);
      if (it == lhs_coeffs.end())
        lhs_coeffs.emplace(lambda, term);
      else
        it->second += term;
    }
  }
  Sides s{to_character(r, lhs_coeffs), LaurentPoly(r)};
  const LaurentPoly base = q_constant(r) * z0(r);
  for (int k = 0; k <= D; ++k)
    s.rhs += (base * xq(r, k, 8 * k)).truncate_degree(xi(), D) * weyl_character(r, {k, 0});
  return s;
}

Sides check3_finite_case(Weight lambda) {
  if (!lambda.dominant()) throw Error("check3_finite_case needs a dominant weight");
  const RingPtr r = R();
  Sides s{LaurentPoly(r), LaurentPoly(r)};
  for (Weight nu : s0()) {
    Weight w = lambda + nu;
    if (!w.dominant()) continue;
    LaurentPoly c = p_coefficient(r, w, lambda);
    if (c.is_zero()) continue;
    s.lhs += c * q_ratio(w, false) * I0(r, w.n, w.m) * tau0_at(w);
  }
  if (lambda.m == 0) s.rhs = q_constant(r) * z0(r) * xq(r, lambda.n, 8 * lambda.n);
  return s;
}

std::vector<Weight> p_support_violations(Weight lambda, int margin) {
  std::vector<Weight> out;
  for (int n = 0; n <= lambda.n + margin; ++n)
    for (int m = 0; m <= lambda.m + margin; ++m) {
      Weight w{n, m};
      if (s0().count(w - lambda)) continue;
      if (!p_coefficient(R(), w, lambda).is_zero()) out.push_back(w);
    }
  return out;
}

std::vector<Weight> tau_roots(int i) {
  const RingPtr r = R();
  const TauPoint t = tau(r, i);
  const LaurentPoly q = LaurentPoly::var(r, "q");
  std::vector<Weight> out;
  for (Weight a : positive_roots()) {
    // tau^alpha with possibly negative exponents; the values are monomials.
    LaurentPoly v = LaurentPoly::constant(r, 1);
    auto mul_pow = [&](const LaurentPoly& base, int e) {
      const auto& term = base.leading();
      v *= LaurentPoly::monomial(r, term.mono.pow(e), 1);
    };
    mul_pow(t.w1, a.n);
    mul_pow(t.w2, a.m);
    if (v == q) out.push_back(a);
  }
  return out;
}

bool j_decomposition_holds(int bound) {
  const RingPtr r = R();
  const TauPoint t0 = tau(r, 0), t1 = tau(r, 1), t2 = tau(r, 2);
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m) {
      LaurentPoly lhs = I0(r, n, m) * t0.at(n, m);
      LaurentPoly rhs = J0c(r) * t0.at(n, m) - J1c(r) * t1.at(n, m) - J2c(r) * t2.at(n, m);
      if (lhs != rhs) return false;
    }
  return true;
}

Sides end_to_end_sides(int D, bool perturb_q) {
  if (D < 1) throw Error("end_to_end needs D >= 1");
  const RingPtr r = R();
  const std::size_t x = xi();
  const RatFunc outer =
      RatFunc(Z(r)) * normalizing_factor().value(r) / RatFunc(one_minus(r, 1, 7)) / RatFunc(one_minus(r, 1, 8));
  const LaurentPoly outer_series = outer.series("x", D);
  const auto P = s0_and_p(r).P;
  const LaurentPoly arho = alt_sum(r, rho());

  Sides s{LaurentPoly(r), LaurentPoly(r)};
  for (Weight w : dominant_upto(D)) {
    LaurentPoly alt(r);
    for (const auto& [nu, p] : P) alt += p * alt_sum(r, w + rho() - nu);
    const LaurentPoly inner = symra::divexact(alt, arho);
    const LaurentPoly coeff = q_ratio(w, perturb_q) * I0(r, w.n, w.m) * xq(r, w.n + 2 * w.m, 8 * w.n + 15 * w.m);
    s.lhs += symra::mul_truncated(outer_series, coeff, x, D) * inner;
  }
  const LaurentPoly brion = RatFunc(LaurentPoly::constant(r, 1), one_minus(r, 2, 16)).series("x", D);
  const LaurentPoly Q = q_constant(r);
  for (int k = 0; k <= D; ++k)
    s.rhs += symra::mul_truncated(brion, Q * xq(r, k, 8 * k), x, D) * weyl_character(r, {k, 0});
  return s;
}

}  // namespace g2e8::zeta
