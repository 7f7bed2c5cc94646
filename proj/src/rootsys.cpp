#include "g2e8/rootsys.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <deque>

namespace g2e8 {

Root operator+(const Root& a, const Root& b) {
  Root r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = a[i] + b[i];
  return r;
}

Root operator-(const Root& a, const Root& b) {
  Root r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = a[i] - b[i];
  return r;
}

Root operator-(const Root& a) {
  Root r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = -a[i];
  return r;
}

Root operator*(int k, const Root& a) {
  Root r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = k * a[i];
  return r;
}

RootSystemSpec RootSystemSpec::e8() {
  RootSystemSpec s;
  s.rank = 8;
  s.cartan.assign(8, std::vector<int>(8, 0));
  for (int i = 0; i < 8; ++i) s.cartan[i][i] = 2;
  const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (auto [a, b] : edges) s.cartan[a - 1][b - 1] = s.cartan[b - 1][a - 1] = -1;
  for (int i = 1; i <= 8; ++i) s.labels.push_back(fmt::format("alpha{}", i));
  return s;
}

RootSystemSpec RootSystemSpec::g2() {
  RootSystemSpec s;
  s.rank = 2;
  s.cartan = {{2, -1}, {-3, 2}};
  s.labels = {"sht", "lng"};
  return s;
}

RootSystemSpec RootSystemSpec::a(int n) {
  RootSystemSpec s;
  s.rank = n;
  s.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    s.cartan[i][i] = 2;
    if (i + 1 < n) s.cartan[i][i + 1] = s.cartan[i + 1][i] = -1;
  }
  for (int i = 1; i <= n; ++i) s.labels.push_back(fmt::format("alpha{}", i));
  return s;
}

RootSystemSpec RootSystemSpec::from_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  RootSystemSpec s;
  s.cartan = j.at("cartan").get<std::vector<std::vector<int>>>();
  s.rank = static_cast<int>(s.cartan.size());
  if (j.contains("labels")) {
    s.labels = j.at("labels").get<std::vector<std::string>>();
  } else {
    for (int i = 1; i <= s.rank; ++i) s.labels.push_back(fmt::format("alpha{}", i));
  }
  return s;
}

RootSystem::RootSystem(RootSystemSpec spec) : spec_(std::move(spec)) {
  const int n = spec_.rank;
  if (n < 1 || n > kMaxRank) throw Error(fmt::format("rank {} outside 1..{}", n, kMaxRank));
  if (static_cast<int>(spec_.cartan.size()) != n) throw Error("Cartan matrix has wrong number of rows");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(spec_.cartan[i].size()) != n) throw Error("Cartan matrix is not square");
    if (spec_.cartan[i][i] != 2) throw Error("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (spec_.cartan[i][j] > 0) throw Error("Cartan matrix off-diagonal entries must be <= 0");
      if ((spec_.cartan[i][j] == 0) != (spec_.cartan[j][i] == 0)) throw Error("Cartan matrix zero pattern is not symmetric");
    }
  }
  if (static_cast<int>(spec_.labels.size()) != n) throw Error("label count does not match rank");

  // E8 has the most roots among finite types of rank <= 8.
  const std::size_t bound = 240;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r = simple(i);
    index_.emplace(key(r), 0);
    roots_.push_back(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root s = reflect(i, r);
      if (index_.emplace(key(s), 0).second) {
        roots_.push_back(s);
        queue.push_back(s);
        if (roots_.size() > bound)
          throw NonFiniteType(fmt::format("reflection closure exceeds {} roots: not of finite type", bound));
      }
    }
  }
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  index_.clear();
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    index_.emplace(key(roots_[k]), static_cast<int>(k));
    if (is_positive(roots_[k])) positive_.push_back(roots_[k]);
  }
  if (positive_.size() * 2 != roots_.size()) throw InternalError("root set is not symmetric");
}

bool RootSystem::simply_laced() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (i != j && spec_.cartan[i][j] < -1) return false;
  return true;
}

Root RootSystem::simple(int i) const {
  Root r{};
  r[i] = 1;
  return r;
}

uint64_t RootSystem::key(const Root& r) {
  uint64_t k = 0;
  for (int i = 0; i < kMaxRank; ++i) {
    if (r[i] < -15 || r[i] > 15) throw NonFiniteType("root coefficient out of range for finite type");
    k = (k << 5) | static_cast<uint64_t>(r[i] + 16);
  }
  return k;
}

std::optional<int> RootSystem::index_of(const Root& r) const {
  for (int i = 0; i < kMaxRank; ++i)
    if (r[i] < -15 || r[i] > 15) return std::nullopt;
  auto it = index_.find(key(r));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_positive(const Root& r) {
  bool any = false;
  for (int c : r) {
    if (c < 0) return false;
    any |= c > 0;
  }
  return any;
}

int RootSystem::height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

int RootSystem::pairing(const Root& r, int j) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += r[i] * spec_.cartan[i][j];
  return s;
}

Root RootSystem::reflect(int i, const Root& r) const {
  Root s = r;
  s[i] -= pairing(r, i);
  return s;
}

std::vector<Root> RootSystem::radical_roots(int i) const {
  if (i < 1 || i > rank()) throw Error(fmt::format("simple index {} outside 1..{}", i, rank()));
  std::vector<Root> out;
  for (const auto& r : positive_)
    if (r[i - 1] > 0) out.push_back(r);
  return out;
}

std::vector<Root> RootSystem::subsystem_roots(const std::vector<int>& indices) const {
  std::vector<bool> allowed(rank(), false);
  for (int i : indices) {
    if (i < 1 || i > rank()) throw Error(fmt::format("simple index {} outside 1..{}", i, rank()));
    allowed[i - 1] = true;
  }
  std::vector<Root> out;
  for (const auto& r : roots_) {
    bool ok = true;
    for (int k = 0; k < rank(); ++k) ok &= r[k] == 0 || allowed[k];
    if (ok) out.push_back(r);
  }
  return out;
}

std::string RootSystem::str(const Root& r) const {
  std::string s;
  bool neg = !is_positive(r);
  for (int i = 0; i < rank(); ++i) {
    int c = neg ? -r[i] : r[i];
    if (c < 0 || c > 9) throw Error("vector is not printable as a root string");
    s += static_cast<char>('0' + c);
  }
  return neg ? "-" + s : s;
}

Root RootSystem::parse(std::string_view digits) const {
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.remove_prefix(1);
  if (static_cast<int>(digits.size()) != rank()) throw Error(fmt::format("root string '{}' has wrong length", digits));
  Root r{};
  for (int i = 0; i < rank(); ++i) {
    if (digits[i] < '0' || digits[i] > '9') throw Error(fmt::format("bad digit in root string '{}'", digits));
    r[i] = (neg ? -1 : 1) * (digits[i] - '0');
  }
  return r;
}

TorusRestriction TorusRestriction::g2_in_e8() {
  TorusRestriction tr;
  tr.coweights[0] = {0, 1, 1, 0, 1, 0, 0, 0};
  tr.coweights[1] = {0, 0, 0, 1, 0, 0, 0, 0};
  // t1 = a1^-3 a2^2 and t2 = a1^2 a2^-1, hence a1 = t1 t2^2, a2 = t1^2 t2^3.
  tr.basis_change = {{{1, 2}, {2, 3}}};
  return tr;
}

std::pair<int, int> restrict_root(const RootSystem& rs, const TorusRestriction& tr, const Root& alpha) {
  int e[2] = {0, 0};
  for (int k = 0; k < 2; ++k) {
    if (static_cast<int>(tr.coweights[k].size()) != rs.rank()) throw Error("coweight length does not match rank");
    for (int j = 0; j < rs.rank(); ++j)
      if (tr.coweights[k][j] != 0) e[k] += tr.coweights[k][j] * rs.pairing(alpha, j);
  }
  return {tr.basis_change[0][0] * e[0] + tr.basis_change[0][1] * e[1],
          tr.basis_change[1][0] * e[0] + tr.basis_change[1][1] * e[1]};
}

}  // namespace g2e8

namespace g2e8 {

std::pair<int, int> conjugation_exponents(const RootSystem& rs, const TorusRestriction& tr, const Root& alpha) {
  auto [a, b] = restrict_root(rs, tr, alpha);
  return {-a, -b};
}

}  // namespace g2e8
