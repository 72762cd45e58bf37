#ifndef WITTKERNEL_BRAUER_HPP
#define WITTKERNEL_BRAUER_HPP

// Brauer classes over Q as finite vectors of local invariants in Q/Z with
// zero sum, cyclic-subgroup comparison, and the Severi-Brauer decisions.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wittkernel/conic.hpp"
#include "wittkernel/rational.hpp"

namespace wk {

class BrauerClassQ {
public:
    using Entry = std::pair<PlaceQ, Rational>;

    BrauerClassQ() = default; // the zero class

    // Validates and rejects: entries must be nonzero rationals in (0, 1),
    // places distinct, the real invariant 1/2 if present, and the sum an
    // integer.  Invalid input is rejected, never repaired.
    static BrauerClassQ from_invariants(std::vector<Entry> entries);

    const std::vector<Entry>& invariants() const { return inv_; }
    bool is_zero() const { return inv_.empty(); }

    // Order in Br(Q): the lcm of the invariant denominators.
    int64_t order() const;

    BrauerClassQ negated() const;
    BrauerClassQ plus(const BrauerClassQ& other) const;
    BrauerClassQ scaled(int64_t k) const;

    std::string to_string() const; // "7:1/3,13:2/3", "0" for the zero class

    friend bool operator==(const BrauerClassQ& x, const BrauerClassQ& y) {
        return x.inv_ == y.inv_;
    }

private:
    // Arithmetic results normalize internally (reduce mod 1, drop zeros);
    // only boundary input goes through from_invariants validation.
    static BrauerClassQ normalized(std::vector<Entry> entries);

    std::vector<Entry> inv_; // sorted by place, nonzero values only
};

// Invariant 1/2 at every ramified place; the zero class iff B splits.
BrauerClassQ class_of_quaternion(const QuaternionAlgebra& B);

// True iff x and y generate the same cyclic subgroup of Br(Q):
// equal orders and y = a x for some a prime to the order.
bool same_cyclic_subgroup(const BrauerClassQ& x, const BrauerClassQ& y);

struct SBVariety {
    int64_t dimension;
    BrauerClassQ cls;

    // Period divides degree: the class order must divide dimension + 1.
    SBVariety(int64_t dimension_, BrauerClassQ cls_);
};

// Function fields of equal-dimensional Severi-Brauer varieties are
// isomorphic iff the classes generate the same cyclic subgroup; for these
// fields isomorphism, isogeny and kernel equality all coincide.
bool sb_fields_isomorphic(const SBVariety& v, const SBVariety& w);

struct SbQuadricVerdict {
    bool fields_isomorphic;
    std::string separating; // empty when isomorphic
    // Kernels over Q alone cannot separate the trivial Severi-Brauer
    // surface from an anisotropic quadric of nontrivial discriminant (both
    // are trivial); that case is decided by rationality and flagged here.
    bool kernel_test_inconclusive;
};

// Compare the function field of a dimension-2 Severi-Brauer variety with
// that of a quadric surface (rank-4 form).  They are isomorphic only when
// both are rational function fields.
SbQuadricVerdict sb_vs_quadric_decide(const SBVariety& v, const QuadraticForm& q);

} // namespace wk

#endif
