#pragma once

// Crystallographic root systems of rank <= 8 built from a Cartan matrix by
// reflection closure.  Roots are integer coefficient vectors over the simple
// roots.

#include "g2e8/error.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace g2e8 {

inline constexpr int kMaxRank = 8;

using Root = std::array<int, kMaxRank>;

Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);
Root operator-(const Root& a);
Root operator*(int k, const Root& a);

struct RootSystemSpec {
  int rank = 0;
  /// cartan[i][j] = <alpha_i, alpha_j^vee>.
  std::vector<std::vector<int>> cartan;
  std::vector<std::string> labels;

  /// Bourbaki labeling: 1-3-4-5-6-7-8 chain with 2 attached to 4.
  static RootSystemSpec e8();
  /// alpha_1 short, alpha_2 long.
  static RootSystemSpec g2();
  static RootSystemSpec a(int n);
  /// Reads {"cartan": [[...]], "labels": [...]}; labels optional.
  static RootSystemSpec from_json(std::string_view text);
};

class RootSystem {
 public:
  /// Throws NonFiniteType if the closure exceeds the bound for finite type,
  /// and Error for malformed Cartan data.
  explicit RootSystem(RootSystemSpec spec);

  int rank() const { return spec_.rank; }
  const RootSystemSpec& spec() const { return spec_; }
  int cartan(int i, int j) const { return spec_.cartan[i][j]; }
  bool simply_laced() const;

  /// All roots ordered by (height, lexicographic).
  const std::vector<Root>& roots() const { return roots_; }
  /// Positive roots ordered by (height, lexicographic).
  const std::vector<Root>& positive_roots() const { return positive_; }
  Root simple(int i) const;  // 0-based
  const Root& highest_root() const { return positive_.back(); }

  std::optional<int> index_of(const Root& r) const;
  bool is_root(const Root& r) const { return index_of(r).has_value(); }
  static bool is_positive(const Root& r);
  static int height(const Root& r);

  /// <r, alpha_j^vee> for 0-based j.
  int pairing(const Root& r, int j) const;
  /// Simple reflection s_i (0-based) applied to an element of the root lattice.
  Root reflect(int i, const Root& r) const;

  /// {alpha > 0 : coefficient of alpha_i is positive}; i is 1-based.
  std::vector<Root> radical_roots(int i) const;
  /// Roots whose support lies in the given 1-based index set.
  std::vector<Root> subsystem_roots(const std::vector<int>& indices) const;

  /// Coefficients as a digit string, e.g. "11221111"; a leading '-' marks
  /// negative roots.  Coefficients above 9 are rejected.
  std::string str(const Root& r) const;
  Root parse(std::string_view digits) const;

 private:
  static uint64_t key(const Root& r);
  RootSystemSpec spec_;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  std::unordered_map<uint64_t, int> index_;
};

/// A torus of rank 2 mapped into the maximal torus of a larger group by two
/// one-parameter coweights, followed by a change of coordinates on the rank-2
/// torus.
struct TorusRestriction {
  /// coweights[k] holds coefficients over the simple coroots.
  std::array<std::vector<int>, 2> coweights;
  /// Maps exponents of the coweight parameters (a1, a2) to exponents of the
  /// target coordinates (t1, t2).
  std::array<std::array<int, 2>, 2> basis_change;

  /// a1 -> alpha_2^vee alpha_3^vee alpha_5^vee, a2 -> alpha_4^vee, expressed
  /// in the coordinates t1 = beta_lng(t), t2 = beta_sht(t) of the G2 torus.
  static TorusRestriction g2_in_e8();
};

/// Exponents (e1, e2) with alpha(h(t)) = t1^e1 t2^e2.
std::pair<int, int> restrict_root(const RootSystem& rs, const TorusRestriction& tr, const Root& alpha);

/// Exponents of the coefficient acquired under u -> h(t)^-1 u h(t), i.e.
/// h(t)^-1 x_alpha(r) h(t) = x_alpha(t1^e1 t2^e2 r).  The negative of
/// restrict_root.
std::pair<int, int> conjugation_exponents(const RootSystem& rs, const TorusRestriction& tr, const Root& alpha);

}  // namespace g2e8
