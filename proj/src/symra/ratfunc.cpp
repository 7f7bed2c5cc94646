#include "g2e8/symra/ratfunc.hpp"

#include <fmt/format.h>

#include <mutex>
#include <numeric>

namespace g2e8::symra {

namespace {

using UPoly = std::vector<mpz_class>;  // coefficient i is the t^i coefficient

UPoly udivexact(UPoly f, const UPoly& g) {
  UPoly q(f.size() - g.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    mpz_class c = f[i + g.size() - 1] / g.back();
    q[i] = c;
    for (std::size_t j = 0; j < g.size(); ++j) f[i + j] -= c * g[j];
  }
  return q;
}

std::recursive_mutex cache_mutex;

const UPoly& cyclotomic_coeffs(unsigned d) {
  static std::map<unsigned, UPoly> cache;
  std::lock_guard lock(cache_mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  UPoly f(d + 1);
  f[0] = -1;
  f[d] = 1;
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) f = udivexact(f, cyclotomic_coeffs(e));
  return cache.emplace(d, std::move(f)).first->second;
}

void add_factor(std::map<std::string, std::pair<LaurentPoly, int>>& fs, const LaurentPoly& p, int mult) {
  auto key = p.str();
  auto it = fs.find(key);
  if (it == fs.end()) {
    fs.emplace(key, std::make_pair(p, mult));
  } else {
    it->second.second += mult;
    if (it->second.second == 0) fs.erase(it);
  }
}

// Split a normalized factor into cyclotomic pieces when it is m^k -/+ 1.
std::vector<LaurentPoly> split_binomial(const LaurentPoly& p) {
  if (p.size() != 2) return {p};
  const Term& hi = p.terms()[0];
  const Term& lo = p.terms()[1];
  if (!lo.mono.is_one() || hi.coeff != 1 || (lo.coeff != 1 && lo.coeff != -1)) return {p};
  int k = 0;
  for (auto e : hi.mono.e) k = std::gcd(k, int(e));
  Mono g;
  for (std::size_t i = 0; i < kMaxVars; ++i) g.e[i] = static_cast<int16_t>(hi.mono.e[i] / k);
  std::vector<LaurentPoly> out;
  if (lo.coeff == -1) {
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) out.push_back(cyclotomic(p.ring(), d, g));
  } else {
    for (int d = 1; d <= 2 * k; ++d)
      if ((2 * k) % d == 0 && k % d != 0) out.push_back(cyclotomic(p.ring(), d, g));
  }
  return out;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

LaurentPoly cyclotomic(const RingPtr& ring, unsigned d, const Mono& m) {
  const UPoly& c = cyclotomic_coeffs(d);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) terms.push_back({m.pow(static_cast<int>(i)), c[i]});
  return LaurentPoly::from_terms(ring, std::move(terms));
}

RatFunc::RatFunc(const LaurentPoly& num) : num_(num) {}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num) { divide_by(den, 1); }

void RatFunc::divide_by(const LaurentPoly& p, int mult) {
  if (p.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (mult == 0) return;
  Mono m = p.min_exponents();
  LaurentPoly p1 = p.mul_term(Mono{} / m, 1);
  mpz_class c = p1.content();
  if (p1.leading().coeff < 0) c = -c;
  LaurentPoly p2 = p1.div_scalar(c);
  num_ = num_.mul_term(m.pow(-mult), 1);
  if (mult > 0) {
    mpz_class cp;
    mpz_class ac = abs(c);
    mpz_pow_ui(cp.get_mpz_t(), ac.get_mpz_t(), static_cast<unsigned long>(mult));
    dconst_ *= cp;
    if (c < 0 && (mult % 2)) num_ = -num_;
  } else {
    mpz_class cp;
    mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-mult));
    num_ = num_.mul_scalar(cp);
  }
  if (!p2.is_constant())
    for (auto& piece : split_binomial(p2)) add_factor(factors_, piece, mult);
  // Negative multiplicities mean the factor belongs in the numerator.
  for (auto it = factors_.begin(); it != factors_.end();) {
    if (it->second.second < 0) {
      num_ *= it->second.first.pow(static_cast<unsigned>(-it->second.second));
      it = factors_.erase(it);
    } else {
      ++it;
    }
  }
  mpz_class g = gcd(num_.content(), dconst_);
  if (g > 1) {
    num_ = num_.div_scalar(g);
    dconst_ /= g;
  }
}

LaurentPoly RatFunc::den() const {
  LaurentPoly d = LaurentPoly::constant(ring(), dconst_);
  for (const auto& [_, fe] : factors_) d *= fe.first.pow(static_cast<unsigned>(fe.second));
  return d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.dconst_.get_mpz_t(), b.dconst_.get_mpz_t());
  RatFunc r;
  r.dconst_ = l;
  r.factors_ = a.factors_;
  for (const auto& [key, fe] : b.factors_) {
    auto it = r.factors_.find(key);
    if (it == r.factors_.end())
      r.factors_.emplace(key, fe);
    else
      it->second.second = std::max(it->second.second, fe.second);
  }
  auto lift = [&](const RatFunc& x) {
    LaurentPoly n = x.num_.mul_scalar(l / x.dconst_);
    for (const auto& [key, fe] : r.factors_) {
      auto it = x.factors_.find(key);
      int have = it == x.factors_.end() ? 0 : it->second.second;
      if (fe.second > have) n *= fe.first.pow(static_cast<unsigned>(fe.second - have));
    }
    return n;
  };
  r.num_ = lift(a) + lift(b);
  if (r.num_.is_zero()) return RatFunc(LaurentPoly(a.ring()));
  mpz_class g = gcd(r.num_.content(), r.dconst_);
  if (g > 1) {
    r.num_ = r.num_.div_scalar(g);
    r.dconst_ /= g;
  }
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(LaurentPoly(a.ring()));
  RatFunc r;
  r.num_ = a.num_ * b.num_;
  r.dconst_ = a.dconst_ * b.dconst_;
  r.factors_ = a.factors_;
  for (const auto& [key, fe] : b.factors_) add_factor(r.factors_, fe.first, fe.second);
  mpz_class g = gcd(r.num_.content(), r.dconst_);
  if (g > 1) {
    r.num_ = r.num_.div_scalar(g);
    r.dconst_ /= g;
  }
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("rational function division by zero");
  RatFunc r = a;
  r.num_ = r.num_.mul_scalar(b.dconst_);
  for (const auto& [key, fe] : b.factors_) r.num_ *= fe.first.pow(static_cast<unsigned>(fe.second));
  r.divide_by(b.num_, 1);
  return r;
}

RatFunc RatFunc::pow(int k) const {
  RatFunc base = k >= 0 ? *this : RatFunc::constant(ring(), 1) / *this;
  unsigned n = static_cast<unsigned>(std::abs(k));
  RatFunc r = RatFunc::constant(ring(), 1);
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  LaurentPoly lhs = a.num_.mul_scalar(b.dconst_);
  LaurentPoly rhs = b.num_.mul_scalar(a.dconst_);
  for (const auto& [key, fe] : b.factors_) {
    auto it = a.factors_.find(key);
    int extra = fe.second - (it == a.factors_.end() ? 0 : it->second.second);
    if (extra > 0) lhs *= fe.first.pow(static_cast<unsigned>(extra));
  }
  for (const auto& [key, fe] : a.factors_) {
    auto it = b.factors_.find(key);
    int extra = fe.second - (it == b.factors_.end() ? 0 : it->second.second);
    if (extra > 0) rhs *= fe.first.pow(static_cast<unsigned>(extra));
  }
  return lhs == rhs;
}

RatFunc& RatFunc::simplify() {
  for (auto it = factors_.begin(); it != factors_.end();) {
    while (it->second.second > 0 && !num_.is_zero()) {
      auto q = try_divexact(num_, it->second.first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second.second;
    }
    if (it->second.second == 0 || num_.is_zero())
      it = factors_.erase(it);
    else
      ++it;
  }
  if (num_.is_zero()) {
    factors_.clear();
    dconst_ = 1;
  }
  return *this;
}

LaurentPoly RatFunc::to_poly() const {
  RatFunc r = *this;
  r.simplify();
  if (!r.factors_.empty()) throw InexactDivision("rational function is not a polynomial: " + str());
  return r.num_.div_scalar(r.dconst_);
}

LaurentPoly RatFunc::series(std::string_view var, int max_deg) const {
  const std::size_t vi = ring()->index(var);
  if (num_.is_zero()) return num_;
  const int bound = max_deg - num_.min_degree(vi);
  LaurentPoly total = LaurentPoly::constant(ring(), 1);
  for (const auto& [key, fe] : factors_) {
    const LaurentPoly& f = fe.first;
    LaurentPoly low = f.degree_part(vi, f.min_degree(vi));
    if (!low.is_unit() || f.min_degree(vi) != 0)
      throw Error(fmt::format("cannot expand 1/({}) in powers of {}", f.str(), var));
    const Term& u = low.leading();
    LaurentPoly inv_low = LaurentPoly::monomial(ring(), Mono{} / u.mono, u.coeff);
    LaurentPoly h = LaurentPoly::constant(ring(), 1) - f * inv_low;
    LaurentPoly geo = LaurentPoly::constant(ring(), 1);
    LaurentPoly power = geo;
    while (true) {
      power = mul_truncated(power, h, vi, bound);
      if (power.is_zero()) break;
      geo += power;
    }
    geo = geo * inv_low;
    for (int k = 0; k < fe.second; ++k) total = mul_truncated(total, geo, vi, bound);
  }
  LaurentPoly out = mul_truncated(num_, total, vi, max_deg);
  return out.div_scalar(dconst_);
}

RatFunc RatFunc::substitute(const RingPtr& target, const std::vector<LaurentPoly>& images) const {
  RatFunc r(symra::substitute(num_, target, images));
  mpz_class c = dconst_;
  for (const auto& [key, fe] : factors_) r.divide_by(symra::substitute(fe.first, target, images), fe.second);
  r.divide_by(LaurentPoly::constant(target, c), 1);
  return r;
}

RatFunc RatFunc::embed(const RingPtr& target) const {
  RatFunc r;
  r.num_ = num_.embed(target);
  r.dconst_ = dconst_;
  for (const auto& [key, fe] : factors_) add_factor(r.factors_, fe.first.embed(target), fe.second);
  return r;
}

mpq_class RatFunc::evaluate(const std::vector<mpq_class>& point) const {
  mpq_class d = dconst_;
  for (const auto& [key, fe] : factors_) {
    mpq_class v = symra::evaluate(fe.first, point);
    if (v == 0) throw DivisionByZero("rational function pole at evaluation point");
    for (int k = 0; k < fe.second; ++k) d *= v;
  }
  return symra::evaluate(num_, point) / d;
}

std::string RatFunc::str() const {
  if (is_poly()) return num_.str();
  std::string s = "(" + num_.str() + ")/(";
  bool first = true;
  if (dconst_ != 1) {
    s += dconst_.get_str();
    first = false;
  }
  for (const auto& [key, fe] : factors_) {
    if (!first) s += "*";
    first = false;
    s += "(" + key + ")";
    if (fe.second != 1) s += fmt::format("^{}", fe.second);
  }
  return s + ")";
}

}  // namespace g2e8::symra
