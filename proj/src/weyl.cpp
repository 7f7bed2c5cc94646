#include "g2e8/weyl.hpp"

#include <fmt/format.h>
#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace g2e8 {

WeylWord parse_word(std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 2) == "w[" && text.back() == ']') text = text.substr(2, text.size() - 3);
  WeylWord w;
  for (char c : text) {
    if (c == ' ' || c == ',') continue;
    if (c < '1' || c > '9') throw Error(fmt::format("bad letter '{}' in Weyl word", c));
    w.push_back(c - '0');
  }
  return w;
}

std::string word_str(const WeylWord& w) {
  std::string s = "w[";
  for (int i : w) s += std::to_string(i);
  return s + "]";
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(rs) {
  const int n = rs.rank();
  for (const auto& r : rs.positive_roots()) two_rho_ = two_rho_ + r;
  // Solve sum_j x_j cartan[j][k] = delta_ik exactly, then clear denominators.
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) m[k][j] = rs.cartan(j, k);
      m[k][n] = i == k ? 1 : 0;
    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (piv < n && m[piv][col] == 0) ++piv;
      if (piv == n) throw Error("singular Cartan matrix");
      std::swap(m[piv], m[col]);
      for (int r = 0; r < n; ++r) {
        if (r == col || m[r][col] == 0) continue;
        mpq_class f = m[r][col] / m[col][col];
        for (int k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
      }
    }
    std::vector<mpq_class> x(n);
    mpz_class den = 1;
    for (int k = 0; k < n; ++k) {
      x[k] = m[k][n] / m[k][k];
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x[k].get_den_mpz_t());
    }
    for (int k = 0; k < n; ++k) {
      mpq_class v = x[k] * den;
      fund_[i][k] = static_cast<int>(v.get_num().get_si());
    }
  }
}

WeylElt WeylGroup::identity() const {
  WeylElt w;
  for (int j = 0; j < rank(); ++j) w.images[j] = rs_.simple(j);
  return w;
}

WeylElt WeylGroup::reflection(int i) const {
  if (i < 1 || i > rank()) throw Error(fmt::format("Weyl letter {} outside 1..{}", i, rank()));
  WeylElt w;
  for (int j = 0; j < rank(); ++j) w.images[j] = rs_.reflect(i - 1, rs_.simple(j));
  return w;
}

WeylElt WeylGroup::evaluate(const WeylWord& word) const {
  WeylElt w = identity();
  for (int i : word) w = right_mul(w, i);
  return w;
}

Root WeylGroup::act(const WeylElt& w, const Root& v) const {
  Root r{};
  for (int j = 0; j < rank(); ++j)
    if (v[j] != 0)
      for (int k = 0; k < rank(); ++k) r[k] += v[j] * w.images[j][k];
  return r;
}

WeylElt WeylGroup::compose(const WeylElt& a, const WeylElt& b) const {
  WeylElt w;
  for (int j = 0; j < rank(); ++j) w.images[j] = act(a, b.images[j]);
  return w;
}

WeylElt WeylGroup::left_mul(int i, const WeylElt& w) const {
  if (i < 1 || i > rank()) throw Error(fmt::format("Weyl letter {} outside 1..{}", i, rank()));
  WeylElt r;
  for (int j = 0; j < rank(); ++j) r.images[j] = rs_.reflect(i - 1, w.images[j]);
  return r;
}

WeylElt WeylGroup::right_mul(const WeylElt& w, int i) const {
  if (i < 1 || i > rank()) throw Error(fmt::format("Weyl letter {} outside 1..{}", i, rank()));
  WeylElt r = w;
  const Root& wi = w.images[i - 1];
  for (int j = 0; j < rank(); ++j) {
    int c = rs_.cartan(j, i - 1);
    if (c != 0) r.images[j] = w.images[j] - c * wi;
  }
  return r;
}

int WeylGroup::length(const WeylElt& w) const {
  int l = 0;
  for (const auto& a : rs_.positive_roots())
    if (!RootSystem::is_positive(act(w, a))) ++l;
  return l;
}

std::vector<Root> WeylGroup::inversion_set(const WeylElt& w) const {
  std::vector<Root> out;
  for (const auto& a : rs_.positive_roots())
    if (!RootSystem::is_positive(act(w, a))) out.push_back(a);
  return out;
}

std::vector<int> WeylGroup::right_descents(const WeylElt& w) const {
  std::vector<int> d;
  for (int i = 0; i < rank(); ++i)
    if (!RootSystem::is_positive(w.images[i])) d.push_back(i + 1);
  return d;
}

std::vector<int> WeylGroup::left_descents(const WeylElt& w) const { return right_descents(inverse(w)); }

WeylWord WeylGroup::reduced_word(const WeylElt& w0) const {
  WeylWord rev;
  WeylElt w = w0;
  while (true) {
    int found = 0;
    for (int i = 0; i < rank() && !found; ++i)
      if (!RootSystem::is_positive(w.images[i])) found = i + 1;
    if (!found) break;
    rev.push_back(found);
    w = right_mul(w, found);
  }
  return WeylWord(rev.rbegin(), rev.rend());
}

WeylElt WeylGroup::inverse(const WeylElt& w) const {
  WeylWord word = reduced_word(w);
  std::reverse(word.begin(), word.end());
  return evaluate(word);
}

WeylElt WeylGroup::min_left_coset_rep(const std::vector<int>& J, WeylElt w) const {
  WeylElt inv = inverse(w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : J) {
      // l(s_i w) < l(w) iff w^-1 alpha_i < 0.
      if (!RootSystem::is_positive(inv.images[i - 1])) {
        w = left_mul(i, w);
        inv = right_mul(inv, i);
        changed = true;
      }
    }
  }
  return w;
}

WeylElt WeylGroup::min_right_coset_rep(WeylElt w, const std::vector<int>& K) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k : K) {
      if (!RootSystem::is_positive(w.images[k - 1])) {
        w = right_mul(w, k);
        changed = true;
      }
    }
  }
  return w;
}

WeylElt WeylGroup::min_double_coset_rep(const std::vector<int>& J, WeylElt w, const std::vector<int>& K) const {
  // Each step strictly shortens w, so alternating the two reductions
  // terminates at the element reduced on both sides, which is the unique
  // minimum of the double coset.
  while (true) {
    WeylElt next = min_right_coset_rep(min_left_coset_rep(J, w), K);
    if (next == w) return w;
    w = next;
  }
}

std::size_t WeylGroup::hash(const WeylElt& w) const {
  Root v = act(w, two_rho_);
  std::size_t h = 0;
  for (int c : v) h = h * 1000003u + static_cast<std::size_t>(c + 100000);
  return h;
}

std::vector<WeylElt> WeylGroup::enumerate_double_cosets(const std::vector<int>& J, const std::vector<int>& K) const {
  for (int i : J)
    if (i < 1 || i > rank()) throw Error(fmt::format("index {} outside 1..{}", i, rank()));
  for (int k : K)
    if (k < 1 || k > rank()) throw Error(fmt::format("index {} outside 1..{}", k, rank()));

  struct Node {
    WeylElt w, inv;
  };
  // w(2 rho) determines w since 2 rho is regular.
  auto key = [&](const WeylElt& w) {
    Root v = act(w, two_rho_);
    std::string k(reinterpret_cast<const char*>(v.data()), sizeof(int) * kMaxRank);
    return k;
  };
  std::vector<WeylElt> out;
  std::vector<Node> level{{identity(), identity()}};
  std::unordered_set<std::string> seen{key(identity())};
  while (!level.empty()) {
    std::vector<Node> next;
    for (const auto& node : level) {
      bool right_reduced = true;
      for (int k : K) right_reduced &= RootSystem::is_positive(node.w.images[k - 1]);
      if (right_reduced) out.push_back(node.w);
      for (int i = 1; i <= rank(); ++i) {
        if (!RootSystem::is_positive(node.w.images[i - 1])) continue;  // w s_i would be shorter
        WeylElt inv = left_mul(i, node.inv);
        bool left_reduced = true;
        for (int j : J) left_reduced &= RootSystem::is_positive(inv.images[j - 1]);
        if (!left_reduced) continue;
        WeylElt w = right_mul(node.w, i);
        if (!seen.insert(key(w)).second) continue;
        next.push_back({w, inv});
      }
    }
    level = std::move(next);
  }
  return out;
}

bool WeylGroup::in_parabolic_without(const WeylElt& w, int i) const {
  const Root& f = fund_[i - 1];
  return act(w, f) == f;
}

bool WeylGroup::in_parabolic_without_by_inversions(const WeylElt& w, int i) const {
  for (const auto& a : inversion_set(w))
    if (a[i - 1] != 0) return false;
  return true;
}

std::vector<WeylElt> support_filter(const WeylGroup& W, const std::vector<WeylElt>& reps, const std::vector<Root>& supp) {
  std::vector<WeylElt> out;
  for (const auto& s : reps) {
    bool all_negative = true;
    for (const auto& a : supp) all_negative &= !RootSystem::is_positive(W.act(s, a));
    if (all_negative) out.push_back(s);
  }
  return out;
}

SurvivorClasses classify_survivors(const WeylGroup& W, const std::vector<WeylElt>& S, const std::vector<int>& J,
                                   const std::vector<int>& K, const WeylElt& w_sht, const WeylElt& w_lng, int i, int j) {
  SurvivorClasses c;
  const WeylElt sht_rep = W.min_double_coset_rep(J, w_sht, K);
  const WeylElt lng_rep = W.min_double_coset_rep(J, w_lng, K);
  const WeylElt lng_inv = W.inverse(w_lng);
  for (const auto& s : S) {
    WeylElt rep = W.min_double_coset_rep(J, s, K);
    if (rep == sht_rep) {
      c.sht.push_back(s);
    } else if (rep == lng_rep) {
      c.lng.push_back(s);
      WeylElt nu = W.compose(lng_inv, s);
      if (!W.in_parabolic_without(nu, i) && !W.in_parabolic_without(nu, j)) c.lng_prime.push_back(s);
    } else {
      c.other.push_back(s);
    }
  }
  return c;
}

}  // namespace g2e8
