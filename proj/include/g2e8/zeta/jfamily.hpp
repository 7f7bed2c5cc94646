#pragma once

// The SL5 period J0(p^B, p^C) as a function of the valuations B <= C, two
// ways: by the finite summation over J2(B, C, E), and as a rational function
// of X = (X1..X6) obtained with the summation operators T1..T4, to be
// specialized at X = (x^(B+1), q^(B+1), x^(C+1), q^(C+1), x^(E+1), q^(E+1)).

#include "g2e8/zeta/named.hpp"

#include <optional>

namespace g2e8::zeta {

/// Variables x, q, X1, ..., X6.
RingPtr jring();

/// J2(B, C, E); E = nullopt stands for E = infinity.  Zero when any
/// argument is negative.
RatFunc J2(int B, int C, std::optional<int> E);
/// J0(p^B, p^C) by direct summation.  Zero when B or C is negative;
/// throws Error when 0 <= C < B.
RatFunc j_oracle(int B, int C);

/// (1 - X1 X2^7)((1-x^2q^12)(1-xq^6) - (1-xq^5)(1-x^2q^13) X3X4^7
///   + (1-q^-1) xq^6 (1-xq^7) X3^2 X4^13).
LaurentPoly J21();
/// (1 - X1 X2^7)((1-x^2q^12)(1-xq^6)(1 - X5^2 X6^13)
///   - X3X4^7 (1-xq^5)(1-x^2q^13)(1 - X5 X6^6)).
LaurentPoly J22();
/// The bracket of J21 in the variables (Xa, Xb) given by their indices
/// (1-based, so J41(3, 4) uses X3, X4).
LaurentPoly J41(int a, int b);
/// (1-xq^6) / ((1-xq^7)^2 (1-x^2q^13)).
RatFunc j_prefactor();

enum class TOp { T0, T1, T2, T3, T4 };

/// Apply a summation operator monomial by monomial in X.  The argument's
/// denominator must be free of X.  A monomial on which the operator is
/// singular raises Error naming it.
RatFunc apply(TOp op, const RatFunc& f);
RatFunc apply(TOp op, const LaurentPoly& f);

/// prefactor * [J21 + (1-q^-1)(T1+T2) J21 + (1-q^-1)^2 (T3+T4) J22].
RatFunc J0_assembled();
/// The same with T3, T4 applied to J21 instead of J22.
RatFunc J0_assembled_on_J21();
/// Closed form of J0 as a function of X1..X4 (printed form, with the
/// corrected leading denominator).
RatFunc J0_closed_form();
/// Closed form of T0 applied to J0.
RatFunc T0J0_closed_form();

/// Substitute X = (x^(B+1), q^(B+1), x^(C+1), q^(C+1)); X5, X6 must not occur.
RatFunc specialize(const RatFunc& f, int B, int C);

enum class ICase { BothUnit, T2Unit, T2NonUnit };

/// I(s,t) for valuations n = v(t1), m = v(t2) from the closed form of J0:
///   both units:       P0 (1-xq^7)(1+x^3q^18) J0(x,q,x,q)
///   t2 unit, n >= 1:  P0 (1-xq^7)[J0(x,q,X3,X4) - x^4q^26 J0(x,q,X3/x^2,X4/q^2)]
///   t2 not a unit:    P0 (1-xq^7)[T0.J0](x^(m+1), q^(m+1), x^(n+m+1), q^(n+m+1))
/// Throws Error if the case does not fit (n, m).
RatFunc closed_I(int n, int m, ICase c);
ICase case_of(int n, int m);
/// The same three formulas evaluated with j_oracle in place of J0 and
/// J(a,b,c) = P0 (1 - (xq^7)^(A+1)) J0(B, C).
RatFunc direct_I(int n, int m);
/// Z I0(n,m) / ((1-xq^7)(1-xq^8)).
RatFunc factored_I(int n, int m);

/// J0(x,q,X3,X4) - x^4q^26 J0(x,q,X3 x^-2,X4 q^-2) with X1 = x, X2 = q,
/// and its printed simplification.
RatFunc t2_unit_combination();
RatFunc t2_unit_closed_form();

}  // namespace g2e8::zeta
