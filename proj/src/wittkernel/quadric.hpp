#ifndef WITTKERNEL_QUADRIC_HPP
#define WITTKERNEL_QUADRIC_HPP

// Quadric surfaces V_q for quaternary forms q: isomorphism, isogeny of
// function fields, Brauer kernels over Q and over quadratic extensions,
// the two-surface classification report, and the index.

#include <optional>
#include <vector>

#include "wittkernel/kernel.hpp"
#include "wittkernel/qform.hpp"

namespace wk {

class QuadricSurface {
public:
    explicit QuadricSurface(QuadraticForm form);

    const QuadraticForm& form() const { return form_; }
    const SquareClass& disc() const { return disc_; }
    bool isotropic() const { return isotropic_; }

private:
    QuadraticForm form_;
    SquareClass disc_;
    bool isotropic_;
};

// V_q and V_q' are isomorphic iff q and q' are similar.
bool quadrics_isomorphic(const QuadricSurface& x, const QuadricSurface& y);

enum class FieldsIsogeny { BothRational, Isomorphic, NotIsogenous };

// Isogeny classification of the two function fields: both isotropic means
// both fields are the rational function field; otherwise isogeny forces the
// surfaces themselves to be isomorphic.
FieldsIsogeny fields_isogenous(const QuadricSurface& x, const QuadricSurface& y);

// Trivial when the surface is isotropic or has nontrivial discriminant;
// otherwise the order-two group generated by the Witt class of the form.
BrauerKernel brauer_kernel_quadric(const QuadricSurface& x);

struct KernelOverExtension {
    SquareClass extension; // e; e = 1 means the base field Q
    BrauerKernel kernel;
};

// The Brauer kernel of the function field after base change to Q(sqrt(e)),
// reduced to Q-local data.  Internal consistency violations (a kernel
// generator that splits where anisotropy forbids it) throw TheoremError.
KernelOverExtension kernel_over_quadratic(const QuadricSurface& x, const SquareClass& e);

struct KernelComparisonRow {
    SquareClass extension;
    BrauerKernel first;
    BrauerKernel second;
    bool equal;
};

struct QuadricComparison {
    bool isomorphic;
    FieldsIsogeny isogeny;
    std::vector<KernelComparisonRow> kernels; // e in {1, d, d'}, 1 first
    bool kernels_all_equal;
    std::optional<SquareClass> separating_extension; // first e with unequal kernels
};

// Full decision report for a pair of quadric surfaces.  Asserts the
// classification coherences (isomorphism matches the isogeny verdict away
// from the both-rational case, and kernel equality over the tested
// extensions matches isomorphism-or-both-rational); violations throw
// TheoremError rather than being absorbed.
QuadricComparison theorem8b_decide(const QuadricSurface& x, const QuadricSurface& y);

// Index of the quadric hypersurface of a rank 3 or 4 form: 1 when
// isotropic, else 2.
int index_of_quadric(const QuadraticForm& q);

} // namespace wk

#endif
