#ifndef WITTKERNEL_KERNEL_HPP
#define WITTKERNEL_KERNEL_HPP

// Brauer kernels of function fields: the subgroup of Br(Q) killed by the
// field.  Trivial, cyclic of order two (generated by a quaternion class),
// or cyclic with a given generator.

#include <optional>
#include <string>
#include <vector>

#include "wittkernel/brauer.hpp"
#include "wittkernel/conic.hpp"

namespace wk {

enum class KernelKind { Trivial, Order2, Cyclic };

struct BrauerKernel {
    KernelKind kind = KernelKind::Trivial;
    // Order2: a generating quaternion symbol plus its ramification set,
    // which is the canonical representative (sorted, inf last).
    std::optional<QuaternionAlgebra> witness;
    std::vector<PlaceQ> ramification;
    // Cyclic: the generating class.
    std::optional<BrauerClassQ> cyclic_generator;

    static BrauerKernel trivial() { return {}; }
    static BrauerKernel order2(const QuaternionAlgebra& B);
    static BrauerKernel order2_from_ramification(std::vector<PlaceQ> ram);
    static BrauerKernel cyclic(BrauerClassQ generator);

    bool is_trivial() const { return kind == KernelKind::Trivial; }
    std::string kind_name() const;
};

// The Brauer kernel of a genus zero function field: trivial iff the curve
// is the projective line, else the order-two group generated by the
// corresponding quaternion algebra.
BrauerKernel brauer_kernel_conic(const GenusZeroCurve& c);

// Equality of two kernels after base change to Q(sqrt(e)), judged through
// the Q-witnesses: both trivial, or both of order two with the product of
// the witness classes split by the extension.
bool kernels_equal_over(const BrauerKernel& k1, const BrauerKernel& k2, const SquareClass& e);

} // namespace wk

#endif
