#include <doctest.h>

#include "g2e8/e8data.hpp"
#include "g2e8/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace g2e8;

namespace {

const RootSystem& e8() {
  static RootSystem rs(RootSystemSpec::e8());
  return rs;
}

const RootSystem& g2() {
  static RootSystem rs(RootSystemSpec::g2());
  return rs;
}

std::vector<Root> parse_all(const RootSystem& rs, auto const& strs) {
  std::vector<Root> out;
  for (auto s : strs) out.push_back(rs.parse(s));
  return out;
}

// All elements of the subgroup generated by the given letters, by closure.
std::vector<WeylElt> generated_subgroup(const WeylGroup& W, const std::vector<int>& letters) {
  std::vector<WeylElt> out{W.identity()};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i : letters) {
      WeylElt w = W.right_mul(out[k], i);
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
  return out;
}

}  // namespace

TEST_CASE("words and basic group laws") {
  WeylGroup W(e8());
  CHECK(W.evaluate(parse_word("44")) == W.identity());
  CHECK(parse_word("w[243]") == WeylWord{2, 4, 3});
  CHECK(word_str({3, 4, 5}) == "w[345]");
  CHECK_THROWS(parse_word("12a"));
  CHECK_THROWS(W.reflection(9));
  auto u = parse_word("2431542345"), v = parse_word("765423");
  WeylWord uv = u;
  uv.insert(uv.end(), v.begin(), v.end());
  CHECK(W.evaluate(uv) == W.compose(W.evaluate(u), W.evaluate(v)));
  WeylElt w = W.evaluate(parse_word(e8data::kWordLng));
  CHECK(W.length(w) == static_cast<int>(W.inversion_set(w).size()));
  CHECK(W.length(w) <= static_cast<int>(e8data::kWordLng.size()));
  auto red = W.reduced_word(w);
  CHECK(static_cast<int>(red.size()) == W.length(w));
  CHECK(W.evaluate(red) == w);
  CHECK(W.compose(w, W.inverse(w)) == W.identity());
  CHECK(W.inversion_set(W.identity()).empty());
}

TEST_CASE("G2 full group and parabolic membership") {
  WeylGroup W(g2());
  auto all = W.enumerate_double_cosets({}, {});
  CHECK(all.size() == 12);
  auto brute = generated_subgroup(W, {1, 2});
  CHECK(brute.size() == 12);
  for (const auto& w : all) CHECK(std::find(brute.begin(), brute.end(), w) != brute.end());
  CHECK(W.enumerate_double_cosets({1, 2}, {1, 2}).size() == 1);
  // Membership in <s_j> (j != i) against brute force.
  for (int i = 1; i <= 2; ++i) {
    auto sub = generated_subgroup(W, {3 - i});
    for (const auto& w : all) {
      bool in = std::find(sub.begin(), sub.end(), w) != sub.end();
      CHECK(W.in_parabolic_without(w, i) == in);
      CHECK(W.in_parabolic_without_by_inversions(w, i) == in);
    }
  }
  CHECK(W.enumerate_double_cosets({1}, {}).size() * 2 == 12);
}

TEST_CASE("E8 parabolic coset counts") {
  WeylGroup W(e8());
  auto left = W.enumerate_double_cosets(e8data::kLeviM2, {});
  CHECK(left.size() * 40320 == 696729600u);  // |W(A7)| = 8!
  auto reps = W.enumerate_double_cosets(e8data::kLeviM2, e8data::kRight47);
  CHECK(reps.size() == 6576);
  // Route 2: reduce every left coset representative on both sides.
  std::set<std::vector<int>> distinct;
  for (const auto& w : left) {
    auto r = W.min_double_coset_rep(e8data::kLeviM2, w, e8data::kRight47);
    distinct.insert(W.reduced_word(r));
  }
  CHECK(distinct.size() == 6576);
  // Route 3: double coset sizes |W_J||W_K| / |W_J cap d W_K d^-1| sum to |W|.
  auto wk = generated_subgroup(W, e8data::kRight47);
  REQUIRE(wk.size() == 4);
  unsigned long long total = 0;
  for (const auto& d : reps) {
    WeylElt dinv = W.inverse(d);
    int stab = 0;
    for (const auto& u : wk) stab += W.in_parabolic_without(W.compose(W.compose(d, u), dinv), 2);
    total += 40320ull * 4 / stab;
  }
  CHECK(total == 696729600ull);
  // Representatives are pairwise in distinct double cosets.
  std::set<std::vector<int>> words;
  for (const auto& d : reps) words.insert(W.reduced_word(d));
  CHECK(words.size() == reps.size());
}

TEST_CASE("support filter and classification") {
  WeylGroup W(e8());
  auto reps = W.enumerate_double_cosets(e8data::kLeviM2, e8data::kRight47);
  auto supp = parse_all(e8(), e8data::kPsiSupport);
  auto S = support_filter(W, reps, supp);
  CHECK(S.size() == 25);
  CHECK(support_filter(W, reps, {}).size() == reps.size());
  CHECK(support_filter(W, {W.identity()}, {e8().simple(0)}).empty());
  WeylElt w_sht = W.evaluate(parse_word(e8data::kWordSht));
  WeylElt w_lng = W.evaluate(parse_word(e8data::kWordLng));
  auto cls = classify_survivors(W, S, e8data::kLeviM2, e8data::kLeviM1, w_sht, w_lng, 4, 7);
  CHECK(cls.sht.size() == 9);
  CHECK(cls.lng.size() == 16);
  CHECK(cls.other.empty());
  CHECK(cls.lng_prime.size() == 8);
  // Cross-check the letter test through inversion sets.
  WeylElt lng_inv = W.inverse(w_lng);
  int count = 0;
  for (const auto& s : cls.lng) {
    WeylElt nu = W.compose(lng_inv, s);
    for (int i : {4, 7}) CHECK(W.in_parabolic_without(nu, i) == W.in_parabolic_without_by_inversions(nu, i));
    count += !W.in_parabolic_without_by_inversions(nu, 4) && !W.in_parabolic_without_by_inversions(nu, 7);
  }
  CHECK(count == 8);
  // Shortest element of the first class.
  auto shortest = *std::min_element(cls.sht.begin(), cls.sht.end(),
                                    [&](const WeylElt& a, const WeylElt& b) { return W.length(a) < W.length(b); });
  WeylWord expect = parse_word(e8data::kWordSht);
  expect.push_back(5);
  expect.push_back(6);
  CHECK(shortest == W.evaluate(expect));
  // w_lng is the minimal element of the double coset of the longest element.
  WeylElt longest = W.identity();
  for (int j = 0; j < 8; ++j) longest.images[j] = -e8().simple(j);
  CHECK(W.length(longest) == 120);
  CHECK(W.min_double_coset_rep(e8data::kLeviM2, longest, e8data::kLeviM1) == w_lng);
  CHECK(W.length(w_lng) == static_cast<int>(e8data::kWordLng.size()));
  CHECK(W.length(w_sht) == static_cast<int>(e8data::kWordSht.size()));
}

TEST_CASE("nu0 and w0 root data") {
  WeylGroup W(e8());
  WeylElt a = W.evaluate(parse_word(e8data::kWordNu0A));
  WeylElt b = W.evaluate(parse_word(e8data::kWordNu0B));
  WeylElt w_lng = W.evaluate(parse_word(e8data::kWordLng));
  auto expect = parse_all(e8(), e8data::kNu0Inversions);
  std::sort(expect.begin(), expect.end());
  auto inv = W.inversion_set(a);
  std::sort(inv.begin(), inv.end());
  CHECK(inv == expect);
  WeylElt w0 = W.compose(w_lng, a);
  for (int i : {2, 3, 4, 5}) CHECK(RootSystem::is_positive(W.act(w0, e8().simple(i - 1))));
  CHECK(W.act(a, e8().simple(3)) == e8().simple(6));
  CHECK(W.act(a, e8().simple(6)) == e8().simple(3));
  std::set<Root> removed;
  for (const auto& r : e8().radical_roots(1))
    if (RootSystem::is_positive(W.act(w0, r))) removed.insert(r);
  auto expect7 = parse_all(e8(), e8data::kUMinusU0);
  CHECK(removed == std::set<Root>(expect7.begin(), expect7.end()));
  // The two printed words for nu0 define the same element.
  CHECK(a == b);
  // U0' = nu0 U0 nu0^-1 inside U, and its complement in U.
  std::set<Root> u0prime;
  for (const auto& r : e8().radical_roots(1))
    if (!removed.count(r)) u0prime.insert(W.act(a, r));
  std::set<Root> complement, by_lng;
  for (const auto& r : e8().radical_roots(1)) {
    if (!u0prime.count(r)) complement.insert(r);
    if (RootSystem::is_positive(W.act(w_lng, r))) by_lng.insert(r);
  }
  CHECK(u0prime.size() == 71);
  auto expect_prime = parse_all(e8(), e8data::kUMinusU0Prime);
  CHECK(complement == std::set<Root>(expect_prime.begin(), expect_prime.end()));
  CHECK(by_lng == complement);
}
