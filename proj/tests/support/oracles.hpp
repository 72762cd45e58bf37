#ifndef WITTKERNEL_TESTS_ORACLES_HPP
#define WITTKERNEL_TESTS_ORACLES_HPP

// Test-side oracles, kept independent of the production decision paths
// they cross-check.

#include <cstdint>
#include <optional>
#include <vector>

#include "wittkernel/qform.hpp"

namespace wk::testing {

struct IntegerZero {
    int64_t x, y, z;
};

// Search box for zero-cycle oracles; WITT_KERNEL_SEARCH_BOUND overrides
// the default of 200.
int64_t kernel_search_bound();

// Exhaustive integer zero search for a ternary form inside the box
// |x|, |y|, |z| <= bound (signs absorbed by squares).
std::optional<IntegerZero> ternary_zero_search(const QuadraticForm& q, int64_t bound);

// Residue search for squares in Q_v: real sign test, or x^2 = num*den
// modulo p^(k+3) (odd p) resp. 2^(k+6), k the valuation of num*den.
bool local_square_search(const Rational& r, const PlaceQ& v);

// Similarity by scalar search: try all c among square classes supported on
// the joint relevant prime set (both signs) plus each auxiliary prime
// below 100 outside it, testing equivalent(c q, q').  Cross-checks the
// closed-form rank-4 similarity criterion.
bool similar_by_scalar_search(const QuadraticForm& q, const QuadraticForm& r);

} // namespace wk::testing

#endif
