#pragma once

// Chevalley structure constants for simply-laced root systems and symbolic
// products of root-group elements x_alpha(t) with polynomial coordinates.

#include "g2e8/rootsys.hpp"
#include "g2e8/symra/laurent.hpp"
#include "g2e8/weyl.hpp"

#include <string>
#include <vector>

namespace g2e8::cheval {

using symra::LaurentPoly;
using symra::RingPtr;

class StructureConstants {
 public:
  /// Signs N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b} and [e_a, e_-a] = h_a.
  /// Seeded from the bimultiplicative Frenkel-Kac cocycle, then rescaled so
  /// that every extraspecial pair has N = +1.  The extraspecial pair of a
  /// positive non-simple root xi is (a, xi - a) with a the first positive
  /// root, ordered by height and then with alpha_1 < alpha_2 < ... within a
  /// height, such that xi - a is a positive root.
  explicit StructureConstants(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  /// 0 when a + b is not a root.
  int N(const Root& a, const Root& b) const;
  int N(int ia, int ib) const { return table_[ia * n_ + ib]; }

  struct Violations {
    long antisymmetry = 0;  // N_{a,b} != -N_{b,a}
    long negation = 0;      // N_{-a,-b} != -N_{a,b}
    long triangle = 0;      // a+b+c = 0 with N_{a,b}, N_{b,c}, N_{c,a} not all equal
    long extraspecial = 0;  // extraspecial pair with N != +1
    long triangles_checked = 0;
    bool ok() const { return antisymmetry + negation + triangle + extraspecial == 0; }
  };
  Violations verify() const;

  /// Jacobi identity of the Lie algebra spanned by h_i, e_a on every triple
  /// of root vectors.  Returns the number of failing triples.
  long jacobi_failures(long* triples_checked = nullptr) const;

  /// Extraspecial pair of a positive non-simple root.
  std::pair<Root, Root> extraspecial_pair(const Root& xi) const;

 private:
  const RootSystem& rs_;
  int n_;
  std::vector<int8_t> table_;
};

struct Factor {
  Root root;
  LaurentPoly coeff;
};

/// Ordered product of root-group elements.
struct UnipotentWord {
  std::vector<Factor> factors;
};

/// Rewrites a product into the ordered form (root order of the root system,
/// each root at most once, no zero coefficients) by the commutator relation
///   x_a(t) x_b(u) = x_b(u) x_a(t) x_{a+b}(N_{a,b} t u).
/// All roots must have the same sign; otherwise the expansion need not
/// terminate and an Error is thrown.
UnipotentWord canonical(const StructureConstants& sc, const UnipotentWord& w);
UnipotentWord multiply(const StructureConstants& sc, const UnipotentWord& a, const UnipotentWord& b);
UnipotentWord inverse(const UnipotentWord& w);
/// by * w * by^-1 in canonical form.
UnipotentWord conjugate(const StructureConstants& sc, const UnipotentWord& w, const UnipotentWord& by);

std::string word_str(const RootSystem& rs, const UnipotentWord& w);

/// Character u -> psi(sum_i c_i u_{beta_i}) on a unipotent group whose
/// support roots have no positive-root differences.
struct CharacterSupport {
  std::vector<std::pair<Root, LaurentPoly>> terms;
};

struct Condition {
  Root gamma;
  /// Coefficient c with [delta . psi](x_gamma(v)) = psi(c v).
  LaurentPoly coeff;
};

/// For gamma in {alpha in unipotent_roots : sigma alpha > 0}, computes c_gamma
/// with psi(delta^-1 x_gamma(v) delta) = psi(c_gamma v).  `v` names a ring
/// variable not used by delta.  Only nonzero c_gamma are returned, so the
/// conjugated character is trivial on the group iff the result vanishes.
std::vector<Condition> character_conditions(const StructureConstants& sc, const WeylGroup& W, const WeylElt& sigma,
                                            const std::vector<Root>& unipotent_roots, const CharacterSupport& psi,
                                            const UnipotentWord& delta, const std::string& v);

struct D0Report {
  /// Pairs among the listed roots whose sum is a root.
  std::vector<std::pair<Root, Root>> bad_sums;
  /// (root, simple index) where subtracting alpha_i gives a root outside the list.
  std::vector<std::pair<Root, int>> bad_differences;
  bool ok() const { return bad_sums.empty() && bad_differences.empty(); }
};

/// Root-level closure test for the abelian group on `roots` normalized by
/// SL2's of the given simple roots.
D0Report d0_structure_check(const RootSystem& rs, const std::vector<Root>& roots, const std::vector<int>& simple);

}  // namespace g2e8::cheval
