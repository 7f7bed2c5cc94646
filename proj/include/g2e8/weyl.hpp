#pragma once

// Weyl group elements stored as the images of the simple roots.  Words use
// 1-based letters: w[i1 i2 ... in] = s_i1 s_i2 ... s_in.

#include "g2e8/rootsys.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace g2e8 {

using WeylWord = std::vector<int>;

/// Parse "243154..." (single digits) or "w[2431...]".
WeylWord parse_word(std::string_view text);
std::string word_str(const WeylWord& w);

struct WeylElt {
  /// images[j] = w(alpha_j); unused slots are zero.
  std::array<Root, kMaxRank> images{};

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.images == b.images; }
  friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a == b); }
};

class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }

  WeylElt identity() const;
  /// 1-based letter.
  WeylElt reflection(int i) const;
  WeylElt evaluate(const WeylWord& w) const;

  /// Linear action on the root lattice (also valid for any integer vector).
  Root act(const WeylElt& w, const Root& v) const;
  WeylElt compose(const WeylElt& a, const WeylElt& b) const;
  WeylElt inverse(const WeylElt& w) const;
  /// s_i * w and w * s_i for 1-based i.
  WeylElt left_mul(int i, const WeylElt& w) const;
  WeylElt right_mul(const WeylElt& w, int i) const;

  int length(const WeylElt& w) const;
  /// {alpha > 0 : w alpha < 0}, in root order.
  std::vector<Root> inversion_set(const WeylElt& w) const;
  /// Deterministic reduced word: peel the smallest right descent repeatedly.
  WeylWord reduced_word(const WeylElt& w) const;

  /// 1-based letters i with l(w s_i) < l(w).
  std::vector<int> right_descents(const WeylElt& w) const;
  /// 1-based letters i with l(s_i w) < l(w).
  std::vector<int> left_descents(const WeylElt& w) const;

  /// Minimal element of W_J w (left), w W_K (right), or W_J w W_K.
  WeylElt min_left_coset_rep(const std::vector<int>& J, WeylElt w) const;
  WeylElt min_right_coset_rep(WeylElt w, const std::vector<int>& K) const;
  WeylElt min_double_coset_rep(const std::vector<int>& J, WeylElt w, const std::vector<int>& K) const;

  /// Minimal-length representatives of W_J \ W / W_K in breadth-first
  /// (length, then discovery) order.
  std::vector<WeylElt> enumerate_double_cosets(const std::vector<int>& J, const std::vector<int>& K) const;

  /// True iff w lies in the standard parabolic subgroup generated by every
  /// simple reflection except s_i, tested by whether w fixes the i-th
  /// fundamental weight.
  bool in_parabolic_without(const WeylElt& w, int i) const;
  /// Same membership tested through the inversion set (no root involving
  /// alpha_i is inverted).
  bool in_parabolic_without_by_inversions(const WeylElt& w, int i) const;

  /// Fundamental weight i (1-based) scaled to integer root coordinates.
  const Root& scaled_fundamental_weight(int i) const { return fund_[i - 1]; }
  /// Sum of the positive roots.
  const Root& two_rho() const { return two_rho_; }

  std::size_t hash(const WeylElt& w) const;

 private:
  const RootSystem& rs_;
  std::array<Root, kMaxRank> fund_{};
  Root two_rho_{};
};

/// Survivors sigma with sigma(alpha) < 0 for every alpha in supp.
std::vector<WeylElt> support_filter(const WeylGroup& W, const std::vector<WeylElt>& reps, const std::vector<Root>& supp);

struct SurvivorClasses {
  std::vector<WeylElt> sht;
  std::vector<WeylElt> lng;
  std::vector<WeylElt> lng_prime;
  /// Elements whose double coset matches neither reference.
  std::vector<WeylElt> other;
};

/// Sort elements by the W_J \ W / W_K double coset they share with w_sht or
/// w_lng, and select within the second class those sigma for which
/// w_lng^-1 sigma needs both letters i and j in every reduced word.
SurvivorClasses classify_survivors(const WeylGroup& W, const std::vector<WeylElt>& S, const std::vector<int>& J,
                                   const std::vector<int>& K, const WeylElt& w_sht, const WeylElt& w_lng, int i, int j);

}  // namespace g2e8
