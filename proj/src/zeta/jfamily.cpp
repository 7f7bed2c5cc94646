#include "g2e8/zeta/jfamily.hpp"

#include "g2e8/error.hpp"
#include "g2e8/zeta/products.hpp"

#include <fmt/format.h>

#include <array>
#include <map>

namespace g2e8::zeta {

RingPtr jring() {
  static RingPtr r = symra::Ring::make({"x", "q", "X1", "X2", "X3", "X4", "X5", "X6"});
  return r;
}

namespace {

constexpr std::size_t kX1 = 2;  // ring index of X1

LaurentPoly one() { return LaurentPoly::constant(jring(), 1); }
LaurentPoly m(int i, int j) { return xq(jring(), i, j); }
LaurentPoly om(int i, int j) { return one_minus(jring(), i, j); }
LaurentPoly Xv(int i, int p = 1) { return LaurentPoly::var(jring(), "X" + std::to_string(i), p); }
LaurentPoly Xm(int i, int pi, int j, int pj) { return Xv(i, pi) * Xv(j, pj); }
LaurentPoly one_minus_qinv() { return one() - m(0, -1); }

// The bracket of J2 without the prefactor (1-xq^6)(1-(xq^7)^(B+1)) / ((1-xq^7)^2 (1-x^2q^13)).
LaurentPoly j2_bracket(int C, std::optional<int> E) {
  if (!E || *E >= C)
    return om(2, 12) * om(1, 6) - om(1, 5) * om(2, 13) * m(1, 7).pow(C + 1) +
           one_minus_qinv() * m(1, 6) * om(1, 7) * m(2, 13).pow(C + 1);
  return om(2, 12) * om(1, 6) * (one() - m(2, 13).pow(*E + 1)) -
         m(1, 7).pow(C + 1) * om(1, 5) * om(2, 13) * (one() - m(1, 6).pow(*E + 1));
}

// J2 with the constant factor (1-xq^6) / ((1-xq^7)^2 (1-x^2q^13)) removed.
LaurentPoly j2_poly(int B, int C, std::optional<int> E) {
  if (B < 0 || C < 0 || (E && *E < 0)) return LaurentPoly(jring());
  return (one() - m(1, 7).pow(B + 1)) * j2_bracket(C, E);
}

using XExp = std::array<int, 6>;

// Split f by its exponents in X1..X6.
std::map<XExp, LaurentPoly> group_by_x(const LaurentPoly& f) {
  std::map<XExp, symra::LaurentBuilder> acc;
  for (const auto& t : f.terms()) {
    XExp e;
    symra::Mono rest = t.mono;
    for (int i = 0; i < 6; ++i) {
      e[i] = t.mono.e[kX1 + i];
      rest.e[kX1 + i] = 0;
    }
    acc.try_emplace(e, jring()).first->second.add(rest, t.coeff);
  }
  std::map<XExp, LaurentPoly> out;
  for (auto& [e, b] : acc) out.emplace(e, b.finish());
  return out;
}

std::string mono_str(const XExp& n) {
  std::string s;
  for (int i = 0; i < 6; ++i)
    if (n[i] != 0) s += fmt::format("X{}^{}", i + 1, n[i]);
  return s.empty() ? "1" : s;
}

RatFunc geometric_den(const LaurentPoly& r, TOp op, const XExp& n) {
  if (r == one())
    throw Error(fmt::format("T{} is singular on the monomial {}", static_cast<int>(op), mono_str(n)));
  return RatFunc(one(), one() - r);
}

RatFunc apply_mono(TOp op, const XExp& n) {
  const LaurentPoly pre = Xv(1, n[0]) * Xv(2, n[1]) * Xv(3, n[2]) * Xv(4, n[3]);
  auto no_x56 = [&] {
    if (n[4] != 0 || n[5] != 0)
      throw Error(fmt::format("T{} acts on polynomials in X1..X4; got {}", static_cast<int>(op), mono_str(n)));
  };
  switch (op) {
    case TOp::T0: {
      no_x56();
      const int a = n[0] + n[2], b = n[1] + n[3];
      return RatFunc(pre * (one() - m(2 - a, 14 - b)) * (one() - m(3 - a, 21 - b)));
    }
    case TOp::T1: {
      no_x56();
      const int a = 1 - n[0] - n[2], b = 8 - n[1] - n[3];
      const LaurentPoly r = m(a, b);
      return RatFunc(pre * (r - Xm(1, a, 2, b))) * geometric_den(r, op, n);
    }
    case TOp::T2: {
      no_x56();
      const int a = 2 - n[0], b = 13 - n[1];
      const LaurentPoly r = m(a, b);
      return RatFunc(pre * (r - Xm(1, a, 2, b))) * geometric_den(r, op, n);
    }
    case TOp::T3: {
      // sum_{k=1}^B u^k sum_{l=0}^{k-1} p^l
      const LaurentPoly lead = pre * Xv(3, n[4]) * Xv(4, n[5]);
      const LaurentPoly u = m(2 - n[0] - n[4], 14 - n[1] - n[5]), p = m(n[4], n[5] - 1), up = m(2 - n[0], 13 - n[1]);
      const LaurentPoly U = Xm(1, 2 - n[0] - n[4], 2, 14 - n[1] - n[5]), UP = Xm(1, 2 - n[0], 2, 13 - n[1]);
      const RatFunc du = geometric_den(u, op, n), dup = geometric_den(up, op, n), dp = geometric_den(p, op, n);
      return RatFunc(lead) * (RatFunc(u) * du * dup + (RatFunc(UP) * dup - RatFunc(U) * du) * dp);
    }
    case TOp::T4: {
      // sum over k, l >= 1 with k + l <= B of u^k v^l
      const LaurentPoly lead = pre * Xv(3, n[4]) * Xv(4, n[5]);
      const LaurentPoly u = m(2 - n[0] - n[4], 14 - n[1] - n[5]), v = m(1 - n[0] - n[2] - n[4], 8 - n[1] - n[3] - n[5]);
      const LaurentPoly w = m(1 + n[2], 6 + n[3]);  // u / v
      const LaurentPoly U = Xm(1, 2 - n[0] - n[4], 2, 14 - n[1] - n[5]);
      const LaurentPoly V = Xm(1, 1 - n[0] - n[2] - n[4], 2, 8 - n[1] - n[3] - n[5]);
      const RatFunc du = geometric_den(u, op, n), dv = geometric_den(v, op, n), dw = geometric_den(w, op, n);
      return RatFunc(lead) * (RatFunc(u * v) * dv * du - RatFunc(w * V) * dv * dw + RatFunc(U) * du * dw);
    }
  }
  throw InternalError("unhandled T operator");
}

bool free_of_x(const LaurentPoly& p) {
  for (int i = 0; i < 6; ++i)
    if (!p.is_zero() && (p.max_degree(kX1 + i) != 0 || p.min_degree(kX1 + i) != 0)) return false;
  return true;
}

}  // namespace

RatFunc j_prefactor() { return RatFunc(om(1, 6)) / RatFunc(om(1, 7)) / RatFunc(om(1, 7)) / RatFunc(om(2, 13)); }

RatFunc J2(int B, int C, std::optional<int> E) { return j_prefactor() * RatFunc(j2_poly(B, C, E)); }

RatFunc j_oracle(int B, int C) {
  if (B < 0 || C < 0) return RatFunc{LaurentPoly(jring())};
  if (B > C) throw Error(fmt::format("j_oracle needs B <= C, got B={} C={}", B, C));
  const LaurentPoly a = one_minus_qinv();
  LaurentPoly s1(jring()), s3(jring());
  for (int l = 1; l <= B; ++l) s1 += j2_poly(B - l, C - l, std::nullopt) * m(1, 8).pow(l);
  for (int k = 1; k <= B; ++k) s1 += m(2, 13).pow(k) * j2_poly(B - k, C, std::nullopt);
  for (int k = 1; k <= B; ++k) {
    LaurentPoly inner(jring());
    for (int l = 0; l <= k - 1; ++l) inner += j2_poly(B - k, C, C - k + l) * m(0, -l);
    for (int l = 1; l <= B - k; ++l) inner += j2_poly(B - k - l, C - l, C - k - l) * m(1, 8).pow(l);
    s3 += m(2, 14).pow(k) * inner;
  }
  return j_prefactor() * RatFunc(j2_poly(B, C, std::nullopt) + a * s1 + a * a * s3);
}

LaurentPoly J41(int a, int b) {
  return om(2, 12) * om(1, 6) - om(1, 5) * om(2, 13) * Xm(a, 1, b, 7) + one_minus_qinv() * m(1, 6) * om(1, 7) * Xm(a, 2, b, 13);
}

LaurentPoly J21() { return (one() - Xm(1, 1, 2, 7)) * J41(3, 4); }

LaurentPoly J22() {
  return (one() - Xm(1, 1, 2, 7)) * (om(2, 12) * om(1, 6) * (one() - Xm(5, 2, 6, 13)) -
                                     Xm(3, 1, 4, 7) * om(1, 5) * om(2, 13) * (one() - Xm(5, 1, 6, 6)));
}

RatFunc apply(TOp op, const LaurentPoly& f) {
  RatFunc out{LaurentPoly(jring())};
  for (const auto& [n, c] : group_by_x(f)) out += RatFunc(c) * apply_mono(op, n);
  return out;
}

RatFunc apply(TOp op, const RatFunc& f) {
  if (f.is_zero()) return f;
  for (const auto& [key, fac] : f.den_factors())
    if (!free_of_x(fac.first)) throw Error("T operators need a denominator free of X1..X6");
  return apply(op, f.num()) * (f / RatFunc(f.num()));
}

RatFunc J0_assembled() {
  const RatFunc a(one_minus_qinv());
  const LaurentPoly j21 = J21(), j22 = J22();
  return j_prefactor() * (RatFunc(j21) + a * (apply(TOp::T1, j21) + apply(TOp::T2, j21)) +
                          a * a * (apply(TOp::T3, j22) + apply(TOp::T4, j22)));
}

RatFunc J0_assembled_on_J21() {
  const RatFunc a(one_minus_qinv());
  const LaurentPoly j21 = J21();
  return j_prefactor() * (RatFunc(j21) + a * (apply(TOp::T1, j21) + apply(TOp::T2, j21)) +
                          a * a * (apply(TOp::T3, j21) + apply(TOp::T4, j21)));
}

RatFunc specialize(const RatFunc& f, int B, int C) {
  const std::size_t i5 = kX1 + 4, i6 = kX1 + 5;
  auto uses_56 = [&](const LaurentPoly& p) {
    return !p.is_zero() && (p.max_degree(i5) || p.min_degree(i5) || p.max_degree(i6) || p.min_degree(i6));
  };
  if (uses_56(f.num())) throw Error("specialize: X5, X6 must not occur");
  const RingPtr r = jring();
  std::vector<LaurentPoly> images{LaurentPoly::var(r, "x"), LaurentPoly::var(r, "q"), m(B + 1, 0), m(0, B + 1),
                                  m(C + 1, 0), m(0, C + 1), Xv(5), Xv(6)};
  return f.substitute(r, images);
}

RatFunc J0_closed_form() {
  const RatFunc a(one_minus_qinv());
  const RatFunc line1 = RatFunc(om(1, 6) * om(2, 13)) / RatFunc(om(1, 8)) -
                        RatFunc(Xm(1, 1, 2, 8) * om(1, 5) * om(2, 14)) / RatFunc(om(1, 8)) +
                        a * RatFunc(m(1, 6) * Xm(1, 2, 2, 14));
  const LaurentPoly line2 = Xm(3, 1, 4, 7) * om(1, 5) *
                            (-(one() + m(1, 6)) * om(1, 7) * Xv(2) * m(0, -1) + om(2, 13) * m(0, -1) * Xm(1, 1, 2, 7) -
                             one_minus_qinv() * m(1, 6) * Xm(1, 2, 2, 14));
  const RatFunc line3 =
      RatFunc(Xm(3, 2, 4, 13)) * a / RatFunc(m(1, 7)) / RatFunc(om(1, 8)) *
      RatFunc(om(1, 8) * (one() + m(2, 12) - m(2, 13) - m(3, 19)) * Xv(2) +
              m(1, 8) * (one() - m(1, 4) - m(1, 6) + m(2, 11) + m(2, 12) - m(2, 13)) * Xm(1, 1, 2, 8));
  // The first line carries (1-x^2q^12)/(1+xq^7) on top of the common prefactor.
  return j_prefactor() * (RatFunc(om(2, 12)) / RatFunc(one() + m(1, 7)) * line1 + RatFunc(line2) + line3);
}

RatFunc T0J0_closed_form() {
  const RatFunc pre = RatFunc(om(1, 6) * om(2, 12)) / RatFunc(om(1, 7)) / RatFunc(om(1, 8));
  return pre * RatFunc(om(1, 6) * om(3, 21) - om(1, 5) * om(1, 6) * Xm(1, 1, 2, 8) -
                       m(0, -1) * Xv(2) * Xm(3, 1, 4, 7) * om(1, 5) * om(1, 8));
}

ICase case_of(int n, int m) {
  if (n < 0 || m < 0) throw Error("valuations must be >= 0");
  if (m >= 1) return ICase::T2NonUnit;
  return n == 0 ? ICase::BothUnit : ICase::T2Unit;
}

RatFunc t2_unit_combination() {
  const RingPtr r = jring();
  const RatFunc j0 = J0_assembled();
  auto at = [&](int sx, int sq) {
    std::vector<LaurentPoly> img{LaurentPoly::var(r, "x"), LaurentPoly::var(r, "q"), m(1, 0), m(0, 1),
                                 Xv(3) * m(sx, 0), Xv(4) * m(0, sq), Xv(5), Xv(6)};
    return j0.substitute(r, img);
  };
  return at(0, 0) - RatFunc(m(4, 26)) * at(-2, -2);
}

RatFunc t2_unit_closed_form() {
  return RatFunc(om(1, 6)) / RatFunc(om(1, 7)) / RatFunc(om(2, 13)) *
         RatFunc(om(1, 6) * om(2, 12) * om(4, 26) - om(1, 5) * om(2, 13) * om(2, 12) * Xm(3, 1, 4, 7));
}

RatFunc closed_I(int n, int m_, ICase c) {
  if (case_of(n, m_) != c) throw Error(fmt::format("case does not match valuations n={} m={}", n, m_));
  const RingPtr r = jring();
  const RatFunc lead = P0(r) * RatFunc(om(1, 7));
  switch (c) {
    case ICase::BothUnit: return lead * RatFunc(one() + m(3, 18)) * specialize(J0_assembled(), 0, 0);
    case ICase::T2Unit: {
      std::vector<LaurentPoly> img{LaurentPoly::var(r, "x"), LaurentPoly::var(r, "q"), Xv(1), Xv(2),
                                   m(n + 1, 0), m(0, n + 1), Xv(5), Xv(6)};
      return lead * t2_unit_combination().substitute(r, img);
    }
    case ICase::T2NonUnit: return lead * specialize(apply(TOp::T0, J0_assembled()), m_, n + m_);
  }
  throw InternalError("unhandled case");
}

RatFunc direct_I(int n, int m_) {
  const RingPtr r = jring();
  auto J = [&](int A, int B, int C) { return P0(r) * RatFunc(one() - m(1, 7).pow(A + 1)) * j_oracle(B, C); };
  switch (case_of(n, m_)) {
    case ICase::BothUnit: return J(0, 0, 0) * RatFunc(one() + m(3, 18));
    case ICase::T2Unit: return J(0, 0, n) - RatFunc(m(4, 26)) * J(0, 0, n - 2);
    case ICase::T2NonUnit:
      return J(0, m_, n + m_) - RatFunc(m(2, 14)) * J(1, m_ - 1, n + m_ - 1) + RatFunc(m(5, 35)) * J(0, m_ - 2, n + m_ - 2);
  }
  throw InternalError("unhandled case");
}

RatFunc factored_I(int n, int m_) {
  const RingPtr r = jring();
  return RatFunc(Z(r) * I0(r, n, m_)) / RatFunc(om(1, 7)) / RatFunc(om(1, 8));
}

}  // namespace g2e8::zeta
