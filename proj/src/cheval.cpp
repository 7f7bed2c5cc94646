#include "g2e8/cheval.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace g2e8::cheval {

namespace {

// Order used to pick extraspecial pairs: height, then alpha_1 < alpha_2 < ...
bool extraspecial_less(const Root& a, const Root& b) {
  int ha = RootSystem::height(a), hb = RootSystem::height(b);
  if (ha != hb) return ha < hb;
  return a > b;
}

}  // namespace

StructureConstants::StructureConstants(const RootSystem& rs) : rs_(rs), n_(static_cast<int>(rs.roots().size())) {
  if (!rs.simply_laced()) throw Error("structure constants are implemented for simply-laced types only");
  const int r = rs.rank();
  // Frenkel-Kac cocycle: eps(a, b) = prod eps_ij^{a_i b_j}.
  std::vector<std::vector<int>> odd(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) odd[i][j] = (i == j) || (i < j && rs.cartan(i, j) == -1);
  auto eps = [&](const Root& a, const Root& b) {
    int s = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (odd[i][j]) s += a[i] * b[j];
    return (s % 2 == 0) ? 1 : -1;
  };
  auto sign = [](const Root& a) { return RootSystem::is_positive(a) ? 1 : -1; };
  // e'_a = e_a for a > 0 and -e_a for a < 0 turns [e_a, e_-a] = -h_a into +h_a.
  std::vector<int8_t> raw(static_cast<std::size_t>(n_) * n_, 0);
  const auto& roots = rs.roots();
  for (int ia = 0; ia < n_; ++ia)
    for (int ib = 0; ib < n_; ++ib) {
      Root s = roots[ia] + roots[ib];
      if (auto is = rs.index_of(s))
        raw[ia * n_ + ib] = static_cast<int8_t>(sign(roots[ia]) * sign(roots[ib]) * sign(s) * eps(roots[ia], roots[ib]));
    }

  // Rescale e_xi by d_xi (d_-xi = d_xi) so extraspecial pairs get +1.
  std::vector<int> d(n_, 1);
  table_ = raw;
  for (const auto& xi : rs.positive_roots()) {
    if (RootSystem::height(xi) == 1) continue;
    auto [a, b] = extraspecial_pair(xi);
    int ia = *rs.index_of(a), ib = *rs.index_of(b);
    int v = d[ia] * d[ib] * raw[ia * n_ + ib];
    d[*rs.index_of(xi)] = v;
    d[*rs.index_of(-xi)] = v;
  }
  for (int ia = 0; ia < n_; ++ia)
    for (int ib = 0; ib < n_; ++ib) {
      int8_t x = raw[ia * n_ + ib];
      if (x == 0) continue;
      int is = *rs.index_of(roots[ia] + roots[ib]);
      table_[ia * n_ + ib] = static_cast<int8_t>(d[ia] * d[ib] * d[is] * x);
    }
}

std::pair<Root, Root> StructureConstants::extraspecial_pair(const Root& xi) const {
  std::vector<Root> pos = rs_.positive_roots();
  std::sort(pos.begin(), pos.end(), extraspecial_less);
  for (const auto& a : pos) {
    Root b = xi - a;
    if (RootSystem::is_positive(b) && rs_.is_root(b)) return {a, b};
  }
  throw Error("root has no extraspecial pair (simple or not a positive root)");
}

int StructureConstants::N(const Root& a, const Root& b) const {
  auto ia = rs_.index_of(a), ib = rs_.index_of(b);
  if (!ia || !ib) throw Error("structure constant requested for a non-root");
  return table_[*ia * n_ + *ib];
}

StructureConstants::Violations StructureConstants::verify() const {
  Violations v;
  const auto& roots = rs_.roots();
  for (int ia = 0; ia < n_; ++ia)
    for (int ib = 0; ib < n_; ++ib) {
      int x = N(ia, ib);
      if (x == 0) continue;
      if (N(ib, ia) != -x) ++v.antisymmetry;
      int na = *rs_.index_of(-roots[ia]), nb = *rs_.index_of(-roots[ib]);
      if (N(na, nb) != -x) ++v.negation;
      int ic = *rs_.index_of(-(roots[ia] + roots[ib]));
      ++v.triangles_checked;
      if (N(ib, ic) != x || N(ic, ia) != x) ++v.triangle;
    }
  for (const auto& xi : rs_.positive_roots()) {
    if (RootSystem::height(xi) == 1) continue;
    auto [a, b] = extraspecial_pair(xi);
    if (N(a, b) != 1) ++v.extraspecial;
  }
  return v;
}

long StructureConstants::jacobi_failures(long* triples_checked) const {
  const int r = rs_.rank();
  const auto& roots = rs_.roots();
  // Sparse vectors over the basis e_0..e_{n-1}, h_0..h_{r-1}.
  using Vec = std::vector<std::pair<int, int>>;
  auto bracket_ee = [&](int ia, int ib, Vec& out) {
    int x = N(ia, ib);
    if (x != 0) {
      out.push_back({*rs_.index_of(roots[ia] + roots[ib]), x});
      return;
    }
    if (roots[ia] == -roots[ib])
      for (int i = 0; i < r; ++i)
        if (roots[ia][i] != 0) out.push_back({n_ + i, roots[ia][i]});
  };
  // [e_a, y] for a sparse y, accumulated with multiplier.
  auto bracket_e_vec = [&](int ia, const Vec& y, int mult, std::vector<int>& acc, std::vector<int>& touched) {
    Vec tmp;
    for (auto [b, c] : y) {
      tmp.clear();
      if (b < n_) {
        bracket_ee(ia, b, tmp);
      } else {
        // [e_a, h_i] = -<a, alpha_i^vee> e_a
        int p = rs_.pairing(roots[ia], b - n_);
        if (p != 0) tmp.push_back({ia, -p});
      }
      for (auto [k, x] : tmp) {
        if (acc[k] == 0) touched.push_back(k);
        acc[k] += mult * c * x;
      }
    }
  };
  long failures = 0, checked = 0;
  std::vector<int> acc(n_ + r, 0);
  std::vector<int> touched;
  Vec yz, zx, xy;
  for (int ix = 0; ix < n_; ++ix)
    for (int iy = 0; iy < n_; ++iy)
      for (int iz = 0; iz < n_; ++iz) {
        yz.clear();
        zx.clear();
        xy.clear();
        bracket_ee(iy, iz, yz);
        bracket_ee(iz, ix, zx);
        bracket_ee(ix, iy, xy);
        if (yz.empty() && zx.empty() && xy.empty()) continue;
        ++checked;
        touched.clear();
        bracket_e_vec(ix, yz, 1, acc, touched);
        bracket_e_vec(iy, zx, 1, acc, touched);
        bracket_e_vec(iz, xy, 1, acc, touched);
        bool bad = false;
        for (int k : touched) {
          bad |= acc[k] != 0;
          acc[k] = 0;
        }
        failures += bad;
      }
  if (triples_checked) *triples_checked = checked;
  return failures;
}

UnipotentWord canonical(const StructureConstants& sc, const UnipotentWord& w) {
  const RootSystem& rs = sc.roots();
  std::vector<Factor> f;
  std::vector<int> idx;
  int sign = 0;
  for (const auto& x : w.factors) {
    if (x.coeff.is_zero()) continue;
    auto i = rs.index_of(x.root);
    if (!i) throw Error("unipotent factor on a non-root");
    int s = RootSystem::is_positive(x.root) ? 1 : -1;
    if (sign != 0 && s != sign)
      throw Error("unipotent word mixes positive and negative roots; commutator expansion may not terminate");
    sign = s;
    f.push_back(x);
    idx.push_back(*i);
  }
  std::size_t i = 0;
  std::size_t steps = 0;
  while (i + 1 < f.size()) {
    if (++steps > 10'000'000) throw InternalError("commutator collection did not terminate");
    if (idx[i] == idx[i + 1]) {
      f[i].coeff += f[i + 1].coeff;
      f.erase(f.begin() + static_cast<long>(i) + 1);
      idx.erase(idx.begin() + static_cast<long>(i) + 1);
      if (f[i].coeff.is_zero()) {
        f.erase(f.begin() + static_cast<long>(i));
        idx.erase(idx.begin() + static_cast<long>(i));
      }
      if (i > 0) --i;
      continue;
    }
    if (idx[i] < idx[i + 1]) {
      ++i;
      continue;
    }
    // x_a(t) x_b(u) = x_b(u) x_a(t) x_{a+b}(N_{a,b} t u)
    Factor a = f[i], b = f[i + 1];
    int n = sc.N(a.root, b.root);
    f[i] = b;
    f[i + 1] = a;
    std::swap(idx[i], idx[i + 1]);
    if (n != 0) {
      Root s = a.root + b.root;
      Factor c{s, (a.coeff * b.coeff).mul_scalar(n)};
      f.insert(f.begin() + static_cast<long>(i) + 2, c);
      idx.insert(idx.begin() + static_cast<long>(i) + 2, *rs.index_of(s));
    }
    if (i > 0) --i;
  }
  return UnipotentWord{std::move(f)};
}

UnipotentWord multiply(const StructureConstants& sc, const UnipotentWord& a, const UnipotentWord& b) {
  UnipotentWord w = a;
  w.factors.insert(w.factors.end(), b.factors.begin(), b.factors.end());
  return canonical(sc, w);
}

UnipotentWord inverse(const UnipotentWord& w) {
  UnipotentWord r;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) r.factors.push_back({it->root, -it->coeff});
  return r;
}

UnipotentWord conjugate(const StructureConstants& sc, const UnipotentWord& w, const UnipotentWord& by) {
  UnipotentWord p = by;
  p.factors.insert(p.factors.end(), w.factors.begin(), w.factors.end());
  UnipotentWord inv = inverse(by);
  p.factors.insert(p.factors.end(), inv.factors.begin(), inv.factors.end());
  return canonical(sc, p);
}

std::string word_str(const RootSystem& rs, const UnipotentWord& w) {
  if (w.factors.empty()) return "1";
  std::string s;
  for (const auto& f : w.factors) s += fmt::format("x_{}({})", rs.str(f.root), f.coeff.str());
  return s;
}

std::vector<Condition> character_conditions(const StructureConstants& sc, const WeylGroup& W, const WeylElt& sigma,
                                            const std::vector<Root>& unipotent_roots, const CharacterSupport& psi,
                                            const UnipotentWord& delta, const std::string& v) {
  if (psi.terms.empty()) return {};
  RingPtr ring = psi.terms.front().second.ring();
  const std::size_t vi = ring->index(v);
  for (const auto& f : delta.factors)
    if (!f.coeff.is_zero() && (f.coeff.max_degree(vi) != 0 || f.coeff.min_degree(vi) != 0))
      throw Error("delta coordinates must not involve " + v);
  const LaurentPoly vpoly = LaurentPoly::var(ring, v);
  const UnipotentWord dinv = inverse(delta);
  std::vector<Condition> out;
  for (const auto& gamma : unipotent_roots) {
    if (!RootSystem::is_positive(W.act(sigma, gamma))) continue;
    UnipotentWord w = dinv;
    w.factors.push_back({gamma, vpoly});
    w.factors.insert(w.factors.end(), delta.factors.begin(), delta.factors.end());
    UnipotentWord c = canonical(sc, w);
    LaurentPoly value(ring);
    for (const auto& [beta, coeff] : psi.terms)
      for (const auto& f : c.factors)
        if (f.root == beta) value += coeff * f.coeff;
    LaurentPoly lin = value.degree_part(vi, 1);
    if (lin != value) throw InternalError("character value is not linear in " + v);
    if (!lin.is_zero()) out.push_back({gamma, symra::divexact(lin, vpoly)});
  }
  return out;
}

D0Report d0_structure_check(const RootSystem& rs, const std::vector<Root>& roots, const std::vector<int>& simple) {
  D0Report rep;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (rs.is_root(roots[i] + roots[j])) rep.bad_sums.push_back({roots[i], roots[j]});
  for (const auto& a : roots)
    for (int k : simple) {
      Root d = a - rs.simple(k - 1);
      if (rs.is_root(d) && std::find(roots.begin(), roots.end(), d) == roots.end()) rep.bad_differences.push_back({a, k});
    }
  return rep;
}

}  // namespace g2e8::cheval
