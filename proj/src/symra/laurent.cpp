#include "g2e8/symra/laurent.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <limits>

namespace g2e8::symra {

namespace {

int16_t checked_exp(int v) {
  if (v > std::numeric_limits<int16_t>::max() || v < std::numeric_limits<int16_t>::min())
    throw Error(fmt::format("exponent {} out of range", v));
  return static_cast<int16_t>(v);
}

void sort_terms(std::vector<Term>& t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return mono_greater(a.mono, b.mono); });
}

}  // namespace

RingPtr Ring::make(std::vector<std::string> names) {
  if (names.size() > kMaxVars) throw Error(fmt::format("ring with {} variables exceeds limit {}", names.size(), kMaxVars));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw Error("duplicate variable name " + names[i]);
  return RingPtr(new Ring(std::move(names)));
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw Error(fmt::format("unknown variable '{}'", name));
  return *i;
}

Mono operator*(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = checked_exp(int(a.e[i]) + int(b.e[i]));
  return r;
}

Mono operator/(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = checked_exp(int(a.e[i]) - int(b.e[i]));
  return r;
}

Mono Mono::pow(int k) const {
  Mono r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = checked_exp(int(e[i]) * k);
  return r;
}

bool mono_greater(const Mono& a, const Mono& b) {
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta > tb;
  return a.e > b.e;
}

std::size_t MonoHash::operator()(const Mono& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : m.e) {
    h ^= static_cast<uint16_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

// ---- construction ----

LaurentPoly LaurentPoly::constant(RingPtr ring, const mpz_class& c) {
  LaurentPoly p(std::move(ring));
  if (c != 0) p.terms_.push_back({Mono{}, c});
  return p;
}

LaurentPoly LaurentPoly::monomial(RingPtr ring, const Mono& m, const mpz_class& c) {
  LaurentPoly p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::var(RingPtr ring, std::string_view name, int power) {
  Mono m;
  m.e[ring->index(name)] = checked_exp(power);
  return monomial(std::move(ring), m);
}

LaurentPoly LaurentPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  LaurentBuilder b(std::move(ring));
  for (auto& t : terms) b.add(t.mono, t.coeff);
  return b.finish();
}

LaurentPoly LaurentPoly::parse(RingPtr ring, std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const char* what) {
    throw Error(fmt::format("parse error at {} in '{}': {}", pos, text, what));
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) fail("expected integer");
    return std::string(text.substr(start, pos - start));
  };

  LaurentBuilder b(ring);
  skip();
  if (pos == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    mpz_class coeff = sign;
    Mono m;
    while (true) {
      skip();
      if (pos >= text.size()) fail("expected factor");
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= mpz_class(read_int());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        std::size_t v = ring->index(text.substr(start, pos - start));
        int e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          bool paren = pos < text.size() && text[pos] == '(';
          if (paren) ++pos;
          e = std::stoi(read_int());
          if (paren) {
            if (pos >= text.size() || text[pos] != ')') fail("expected )");
            ++pos;
          }
        }
        m.e[v] = checked_exp(m.e[v] + e);
      } else {
        fail("unexpected character");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    b.add(m, coeff);
  }
  return b.finish();
}

// ---- queries ----

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

mpz_class LaurentPoly::coeff(const Mono& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
  return g;
}

int LaurentPoly::max_degree(std::size_t var) const {
  if (terms_.empty()) throw Error("degree of zero polynomial");
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) d = std::max(d, int(t.mono.e[var]));
  return d;
}

int LaurentPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) throw Error("degree of zero polynomial");
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, int(t.mono.e[var]));
  return d;
}

Mono LaurentPoly::min_exponents() const {
  Mono r;
  if (terms_.empty()) return r;
  r = terms_[0].mono;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::min(r.e[i], t.mono.e[i]);
  return r;
}

// ---- arithmetic ----

void LaurentPoly::check_ring(const LaurentPoly& o) const {
  if (!ring_ || !o.ring_) throw RingMismatch("polynomial without ring");
  if (!ring_->same_as(*o.ring_)) throw RingMismatch("polynomials over different rings");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_ring(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && mono_greater(terms_[i].mono, o.terms_[j].mono))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || mono_greater(o.terms_[j].mono, terms_[i].mono)) {
      out.push_back(o.terms_[j++]);
    } else {
      mpz_class c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) out.push_back({terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.ring_);
  if (b.is_monomial()) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.is_monomial()) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  LaurentBuilder acc(a.ring_);
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& big = a.size() <= b.size() ? b : a;
  for (const auto& t : small.terms_) acc.add_product(big, t.mono, t.coeff);
  return acc.finish();
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::mul_term(const Mono& m, const mpz_class& c) const {
  LaurentPoly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

LaurentPoly LaurentPoly::mul_scalar(const mpz_class& c) const { return mul_term(Mono{}, c); }

LaurentPoly LaurentPoly::div_scalar(const mpz_class& c) const {
  if (c == 0) throw DivisionByZero("division of polynomial by zero scalar");
  LaurentPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
      throw InexactDivision(fmt::format("{} not divisible by {}", t.coeff.get_str(), c.get_str()));
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    r.terms_.push_back({t.mono, std::move(q)});
  }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(ring_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_ring(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

LaurentPoly LaurentPoly::truncate_degree(std::size_t var, int max_deg) const {
  LaurentPoly r(ring_);
  for (const auto& t : terms_)
    if (t.mono.e[var] <= max_deg) r.terms_.push_back(t);
  return r;
}

LaurentPoly LaurentPoly::degree_part(std::size_t var, int d) const {
  LaurentPoly r(ring_);
  for (const auto& t : terms_)
    if (t.mono.e[var] == d) r.terms_.push_back(t);
  return r;
}

LaurentPoly LaurentPoly::embed(const RingPtr& target) const {
  if (ring_->same_as(*target)) {
    LaurentPoly r = *this;
    r.ring_ = target;
    return r;
  }
  std::vector<std::size_t> map(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto j = target->find(ring_->name(i));
    bool used = std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.e[i] != 0; });
    if (!j) {
      if (used) throw RingMismatch("cannot embed: variable " + ring_->name(i) + " missing from target ring");
      map[i] = kMaxVars;
    } else {
      map[i] = *j;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Mono m;
    for (std::size_t i = 0; i < ring_->size(); ++i)
      if (map[i] < kMaxVars) m.e[map[i]] = t.mono.e[i];
    out.push_back({m, t.coeff});
  }
  sort_terms(out);
  LaurentPoly r(target);
  r.terms_ = std::move(out);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    if (c < 0) {
      s += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      s += " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      int e = t.mono.e[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (e != 1) mono += fmt::format("^{}", e);
    }
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s;
}

// ---- builder ----

void LaurentBuilder::add(const Mono& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void LaurentBuilder::add(const LaurentPoly& p) {
  if (p.ring_ && !p.ring_->same_as(*ring_)) throw RingMismatch("builder ring mismatch");
  for (const auto& t : p.terms_) add(t.mono, t.coeff);
}

void LaurentBuilder::add_product(const LaurentPoly& p, const Mono& m, const mpz_class& c) {
  if (p.ring_ && !p.ring_->same_as(*ring_)) throw RingMismatch("builder ring mismatch");
  mpz_class prod;
  for (const auto& t : p.terms_) {
    Mono mm = t.mono * m;
    auto [it, inserted] = acc_.try_emplace(mm);
    mpz_addmul(it->second.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  }
}

LaurentPoly LaurentBuilder::finish() {
  LaurentPoly r(ring_);
  r.terms_.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  acc_.clear();
  sort_terms(r.terms_);
  return r;
}

// ---- division ----

std::optional<LaurentPoly> try_divexact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (f.ring() && g.ring() && !f.ring()->same_as(*g.ring())) throw RingMismatch("division over different rings");
  if (f.is_zero()) return LaurentPoly(g.ring());
  if (g.is_monomial()) {
    const Term& t = g.leading();
    LaurentPoly r = f.mul_term(Mono{} / t.mono, 1);
    try {
      return r.div_scalar(t.coeff);
    } catch (const InexactDivision&) {
      return std::nullopt;
    }
  }
  const std::size_t nv = f.ring()->size();
  // Newton polytope bounds: every quotient exponent lies in this box.
  std::vector<int> lo(nv), hi(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    lo[i] = f.min_degree(i) - g.min_degree(i);
    hi[i] = f.max_degree(i) - g.max_degree(i);
    if (lo[i] > hi[i]) return std::nullopt;
  }
  auto cmp = [](const Mono& a, const Mono& b) { return mono_greater(a, b); };
  std::map<Mono, mpz_class, decltype(cmp)> rem(cmp);
  for (const auto& t : f.terms()) rem.emplace(t.mono, t.coeff);
  const Term& lg = g.leading();
  std::vector<Term> quot;
  mpz_class qc;
  while (!rem.empty()) {
    auto it = rem.begin();
    Mono qm = it->first / lg.mono;
    for (std::size_t i = 0; i < nv; ++i)
      if (qm.e[i] < lo[i] || qm.e[i] > hi[i]) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lg.coeff.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lg.coeff.get_mpz_t());
    for (const auto& t : g.terms()) {
      Mono m = t.mono * qm;
      auto [jt, inserted] = rem.try_emplace(m);
      mpz_submul(jt->second.get_mpz_t(), t.coeff.get_mpz_t(), qc.get_mpz_t());
      if (jt->second == 0) rem.erase(jt);
    }
    quot.push_back({qm, qc});
  }
  // Quotient terms were produced in strictly decreasing order.
  LaurentPoly r = LaurentPoly::from_terms(g.ring(), std::move(quot));
  return r;
}

LaurentPoly divexact(const LaurentPoly& f, const LaurentPoly& g) {
  auto r = try_divexact(f, g);
  if (!r) throw InexactDivision("inexact division: (" + f.str() + ") / (" + g.str() + ")");
  return std::move(*r);
}

// ---- substitution / evaluation ----

LaurentPoly substitute(const LaurentPoly& f, const RingPtr& target, const std::vector<LaurentPoly>& images) {
  const auto& ring = f.ring();
  if (images.size() != ring->size()) throw Error("substitute: wrong number of images");
  std::vector<std::optional<LaurentPoly>> inverse(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i].ring()->same_as(*target)) throw RingMismatch("substitute: image in wrong ring");
    if (images[i].is_unit()) {
      const Term& t = images[i].leading();
      inverse[i] = LaurentPoly::monomial(target, Mono{} / t.mono, t.coeff);
    }
  }
  // Cache powers per variable; substitutions are typically reused heavily.
  std::vector<std::map<int, LaurentPoly>> cache(images.size());
  auto power = [&](std::size_t i, int e) -> const LaurentPoly& {
    auto it = cache[i].find(e);
    if (it != cache[i].end()) return it->second;
    LaurentPoly p;
    if (e >= 0) {
      p = images[i].pow(static_cast<unsigned>(e));
    } else {
      if (!inverse[i]) throw Error("substitute: negative power of non-unit image for " + ring->name(i));
      p = inverse[i]->pow(static_cast<unsigned>(-e));
    }
    return cache[i].emplace(e, std::move(p)).first->second;
  };
  LaurentBuilder acc(target);
  for (const auto& t : f.terms()) {
    LaurentPoly prod = LaurentPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < ring->size(); ++i)
      if (t.mono.e[i] != 0) prod *= power(i, t.mono.e[i]);
    acc.add(prod);
  }
  return acc.finish();
}

LaurentPoly substitute(const LaurentPoly& f, const std::map<std::string, LaurentPoly>& assignment) {
  const auto& ring = f.ring();
  std::vector<LaurentPoly> images;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    auto it = assignment.find(ring->name(i));
    images.push_back(it != assignment.end() ? it->second : LaurentPoly::var(ring, ring->name(i)));
  }
  for (const auto& [name, _] : assignment) ring->index(name);
  return substitute(f, ring, images);
}

mpq_class evaluate(const LaurentPoly& f, const std::vector<mpq_class>& point) {
  const auto& ring = f.ring();
  if (point.size() != ring->size()) throw Error("evaluate: wrong number of coordinates");
  mpq_class sum = 0;
  for (const auto& t : f.terms()) {
    mpq_class v = t.coeff;
    for (std::size_t i = 0; i < ring->size(); ++i) {
      int e = t.mono.e[i];
      if (e == 0) continue;
      if (point[i] == 0 && e < 0) throw DivisionByZero("evaluate: negative power of zero");
      mpq_class b = e > 0 ? point[i] : mpq_class(1) / point[i];
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
      mpz_pow_ui(p.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
      p.canonicalize();
      v *= p;
    }
    sum += v;
  }
  return sum;
}

}  // namespace g2e8::symra

namespace g2e8::symra {

LaurentPoly mul_truncated(const LaurentPoly& a, const LaurentPoly& b, std::size_t var, int max_deg) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.ring());
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch("mul_truncated over different rings");
  int bmin = b.min_degree(var);
  LaurentBuilder acc(a.ring());
  for (const auto& t : a.terms()) {
    if (t.mono.e[var] + bmin > max_deg) continue;
    for (const auto& u : b.terms()) {
      if (t.mono.e[var] + u.mono.e[var] > max_deg) continue;
      acc.add(t.mono * u.mono, t.coeff * u.coeff);
    }
  }
  return acc.finish();
}

}  // namespace g2e8::symra
