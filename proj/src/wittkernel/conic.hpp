#ifndef WITTKERNEL_CONIC_HPP
#define WITTKERNEL_CONIC_HPP

// Quaternion algebras (a,b) over Q and their genus zero curves
// a X^2 + b Y^2 - ab Z^2 = 0: ramification sets, splitting, splitting over
// quadratic extensions Q(sqrt(e)), and the isomorphism decision for conic
// function fields.

#include <string>
#include <vector>

#include "wittkernel/qform.hpp"

namespace wk {

struct QuaternionAlgebra {
    SquareClass a;
    SquareClass b;

    QuaternionAlgebra(SquareClass a_, SquareClass b_) : a(std::move(a_)), b(std::move(b_)) {}
    QuaternionAlgebra(int64_t a_, int64_t b_)
        : a(SquareClass::of(a_)), b(SquareClass::of(b_)) {}

    std::string to_string() const; // "(a,b)"

    friend bool operator==(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
        return x.a == y.a && x.b == y.b;
    }
};

struct GenusZeroCurve {
    QuaternionAlgebra algebra;
};

// The conic a X^2 + b Y^2 - ab Z^2 = 0 as the ternary form <a, b, -ab>.
QuadraticForm conic_form(const QuaternionAlgebra& B);

// The discriminant-1 companion <-a, -b, ab>, whose Witt invariant is B.
QuadraticForm norm_ternary(const QuaternionAlgebra& B);

// {v : (a,b)_v = -1}; finite of even cardinality, and a complete
// isomorphism invariant of the algebra.  Throws TheoremError if the
// computed set has odd size (reciprocity violated).
std::vector<PlaceQ> ramification_set(const QuaternionAlgebra& B);

// Split means isomorphic to 2x2 matrices, equivalently the conic has a
// rational point.  Computed both from isotropy of the conic form and from
// emptiness of the ramification set; disagreement throws TheoremError.
bool is_split(const QuaternionAlgebra& B);

// Does B split over Q(sqrt(e))?  For e = 1 this is is_split; otherwise B
// splits iff no ramified place of B has e as a local square.
bool splits_over(const QuaternionAlgebra& B, const SquareClass& e);

// Same local rule on a bare ramification set (the canonical representation
// of a 2-torsion Brauer class).
bool ram_set_splits_over(const std::vector<PlaceQ>& ram, const SquareClass& e);

// A quaternion symbol realizing a given even set of places, searched among
// square classes supported on small primes.  Memoized; deterministic.
QuaternionAlgebra quaternion_with_ramification(const std::vector<PlaceQ>& ram);

enum class GenusZeroCompare { Isomorphic, NotIsogenous };

// Genus zero function fields admit no intermediate outcome: the curves are
// isomorphic or the fields are not even isogenous.
GenusZeroCompare conic_fields_compare(const GenusZeroCurve& c, const GenusZeroCurve& d);

} // namespace wk

#endif
