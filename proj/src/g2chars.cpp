#include "g2e8/g2chars.hpp"

#include "g2e8/error.hpp"

#include <gmpxx.h>

namespace g2e8::g2 {

RingPtr standard_ring() {
  static RingPtr r = symra::Ring::make({"x", "q", "a", "b"});
  return r;
}

Weight simple_root(int i) {
  if (i == 1) return {2, -1};
  if (i == 2) return {-3, 2};
  throw Error("G2 simple root index must be 1 or 2");
}

const std::array<Weight, 6>& positive_roots() {
  static const std::array<Weight, 6> r = [] {
    Weight a = simple_root(1), b = simple_root(2);
    return std::array<Weight, 6>{a, b, a + b, 2 * a + b, 3 * a + b, 3 * a + 2 * b};
  }();
  return r;
}

Weight rho() { return {1, 1}; }

Weight reflect(int i, Weight v) {
  if (i == 1) return {-v.n, v.m + v.n};
  if (i == 2) return {v.n + 3 * v.m, -v.m};
  throw Error("G2 reflection index must be 1 or 2");
}

Weight act(const WeylElt& w, Weight v) {
  return {w.mat[0][0] * v.n + w.mat[0][1] * v.m, w.mat[1][0] * v.n + w.mat[1][1] * v.m};
}

const std::vector<WeylElt>& weyl_group() {
  static const std::vector<WeylElt> group = [] {
    // Breadth-first from the identity; elements are told apart by their
    // columns (images of w1 and w2).
    auto matrix_of = [](const std::vector<int>& word) {
      Weight e1{1, 0}, e2{0, 1};
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        e1 = reflect(*it, e1);
        e2 = reflect(*it, e2);
      }
      return std::array<std::array<int, 2>, 2>{{{e1.n, e2.n}, {e1.m, e2.m}}};
    };
    std::vector<WeylElt> out{{matrix_of({}), 0, {}}};
    for (std::size_t k = 0; k < out.size(); ++k)
      for (int i : {1, 2}) {
        std::vector<int> word = out[k].word;
        word.push_back(i);
        auto mat = matrix_of(word);
        bool seen = false;
        for (const auto& e : out) seen |= e.mat == mat;
        if (!seen) out.push_back({mat, static_cast<int>(word.size()), word});
      }
    if (out.size() != 12) throw InternalError("G2 Weyl group closure did not give 12 elements");
    return out;
  }();
  return group;
}

std::optional<std::pair<Weight, int>> straighten(Weight mu) {
  int sign = 1;
  while (mu.n < 0 || mu.m < 0) {
    mu = reflect(mu.n < 0 ? 1 : 2, mu);
    sign = -sign;
  }
  if (mu.n == 0 || mu.m == 0) return std::nullopt;
  return std::pair{mu, sign};
}

LaurentPoly monomial(const RingPtr& ring, Weight w) {
  return LaurentPoly::var(ring, "a", w.n) * LaurentPoly::var(ring, "b", w.m);
}

LaurentPoly alt_sum(const RingPtr& ring, Weight lambda) {
  symra::LaurentBuilder acc(ring);
  for (const auto& w : weyl_group()) acc.add(monomial(ring, act(w, lambda)).mul_scalar(w.length % 2 ? -1 : 1));
  return acc.finish();
}

LaurentPoly weyl_character(const RingPtr& ring, Weight lambda) {
  if (!lambda.dominant()) throw Error("Weyl character needs a dominant weight");
  return symra::divexact(alt_sum(ring, lambda + rho()), alt_sum(ring, rho()));
}

long weyl_dimension(Weight lambda) {
  if (!lambda.dominant()) throw Error("Weyl dimension needs a dominant weight");
  // Pairings with the six positive coroots.
  auto pairings = [](Weight v) {
    return std::array<long, 6>{v.n, v.m, v.n + 3L * v.m, 2L * v.n + 3L * v.m, v.n + v.m, v.n + 2L * v.m};
  };
  auto top = pairings(lambda + rho()), bottom = pairings(rho());
  mpz_class num = 1, den = 1;
  for (int k = 0; k < 6; ++k) {
    num *= top[k];
    den *= bottom[k];
  }
  mpz_class d = num / den;
  return d.get_si();
}

LaurentPoly to_character(const RingPtr& ring, const CharExpansion& e) {
  LaurentPoly out(ring);
  for (const auto& [lambda, c] : e)
    if (!c.is_zero()) out += c * weyl_character(ring, lambda);
  return out;
}

CharExpansion alt_ratio(const std::vector<std::pair<Weight, LaurentPoly>>& terms) {
  CharExpansion out;
  for (const auto& [mu, c] : terms) {
    auto s = straighten(mu);
    if (!s) continue;
    Weight lambda = s->first - rho();
    auto it = out.find(lambda);
    LaurentPoly add = s->second > 0 ? c : -c;
    if (it == out.end())
      out.emplace(lambda, add);
    else
      it->second += add;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

S0Table s0_and_p(const RingPtr& ring) {
  S0Table t;
  const auto& pos = positive_roots();
  const LaurentPoly mq = -LaurentPoly::var(ring, "q", -1);
  for (int mask = 0; mask < 64; ++mask) {
    Weight nu{};
    LaurentPoly c = LaurentPoly::constant(ring, 1);
    for (int k = 0; k < 6; ++k)
      if (mask >> k & 1) {
        nu = nu + pos[k];
        c *= mq;
      }
    auto it = t.P.find(nu);
    if (it == t.P.end())
      t.P.emplace(nu, c);
    else
      it->second += c;
  }
  return t;
}

LaurentPoly q_constant(const RingPtr& ring) {
  LaurentPoly out = LaurentPoly::constant(ring, 1) + LaurentPoly::var(ring, "q", -6);
  for (int k = 1; k <= 5; ++k) out += LaurentPoly::var(ring, "q", -k).mul_scalar(2);
  return out;
}

LaurentPoly q_varpi(const RingPtr& ring, Weight varpi) {
  if (!varpi.dominant()) throw Error("Q_varpi needs a dominant weight");
  if (varpi.n == 0 && varpi.m == 0) return q_constant(ring);
  if (varpi.n == 0 || varpi.m == 0) return LaurentPoly::constant(ring, 1) + LaurentPoly::var(ring, "q", -1);
  return LaurentPoly::constant(ring, 1);
}

CharExpansion spherical_sum(const RingPtr& ring, Weight varpi) {
  std::vector<std::pair<Weight, LaurentPoly>> terms;
  for (const auto& [nu, p] : s0_and_p(ring).P) terms.push_back({varpi + rho() - nu, p});
  return alt_ratio(terms);
}

RatFunc spherical(const RingPtr& ring, Weight varpi) {
  if (!varpi.dominant()) throw Error("spherical function needs a dominant weight");
  LaurentPoly num = LaurentPoly::var(ring, "q", -3 * varpi.n - 5 * varpi.m) * to_character(ring, spherical_sum(ring, varpi));
  return RatFunc(num, q_constant(ring));
}

const std::array<Weight, 7>& standard_weights() {
  static const std::array<Weight, 7> w = [] {
    Weight a = simple_root(1), b = simple_root(2);
    return std::array<Weight, 7>{Weight{0, 0}, a, a + b, 2 * a + b, -a, -(a + b), -(2 * a + b)};
  }();
  return w;
}

SymSeries sym_series(const RingPtr& ring, int r_max) {
  if (r_max < 0) throw Error("sym_series needs r_max >= 0");
  SymSeries s;
  for (int r = 0; r <= r_max; ++r) s.chi.push_back(weyl_character(ring, {r, 0}));
  // prod over the seven weights of 1 / (1 - X tau^mu), truncated at X^r_max.
  std::vector<LaurentPoly> h(r_max + 1, LaurentPoly(ring));
  h[0] = LaurentPoly::constant(ring, 1);
  for (const auto& mu : standard_weights()) {
    LaurentPoly t = monomial(ring, mu);
    for (int r = 1; r <= r_max; ++r) h[r] += h[r - 1] * t;
  }
  s.sym = std::move(h);
  return s;
}

}  // namespace g2e8::g2
