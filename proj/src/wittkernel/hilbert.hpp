#ifndef WITTKERNEL_HILBERT_HPP
#define WITTKERNEL_HILBERT_HPP

// Hilbert symbols (a,b)_v at every place of Q, computed two independent
// ways: by the classical local formulas, and by a brute-force solvability
// search over residues.  (a,b)_v = +1 iff z^2 = a x^2 + b y^2 has a
// nontrivial solution over Q_v.

#include <vector>

#include "wittkernel/rational.hpp"

namespace wk {

// {inf, 2} together with the odd primes dividing any numerator or
// denominator of a and b, in canonical order (2 < 3 < ... < inf).
std::vector<PlaceQ> relevant_places(const Rational& a, const Rational& b);

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const PlaceQ& v);
int hilbert_symbol(const Rational& a, const Rational& b, const PlaceQ& v);

// Independent verification oracle.  Reduces a, b to squarefree integers
// and searches for a primitive solution of aX^2 + bY^2 - Z^2 = 0 modulo
// p^3 (odd p) or 2^8; at the real place it is a sign analysis.  The moduli
// are large enough that every primitive approximate zero of a squarefree
// form lifts, so the result agrees with hilbert_symbol on its full domain.
int hilbert_oracle(const Rational& a, const Rational& b, const PlaceQ& v);

// Product of hilbert_symbol(a, b, v) over the relevant place set.  Always
// true for a correct implementation; callers treat false as a bug to
// escalate, never as an answer.
bool reciprocity_check(const Rational& a, const Rational& b);

} // namespace wk

#endif
