#include "wittkernel/quadric.hpp"

#include <algorithm>

namespace wk {

QuadricSurface::QuadricSurface(QuadraticForm form)
    : form_(std::move(form)), disc_(discriminant(form_)), isotropic_(is_isotropic(form_)) {
    if (form_.rank() != 4)
        throw DomainError("a quadric surface needs a rank-4 form, got rank " +
                          std::to_string(form_.rank()));
}

bool quadrics_isomorphic(const QuadricSurface& x, const QuadricSurface& y) {
    return similar(x.form(), y.form());
}

FieldsIsogeny fields_isogenous(const QuadricSurface& x, const QuadricSurface& y) {
    if (x.isotropic() && y.isotropic()) return FieldsIsogeny::BothRational;
    if (x.isotropic() != y.isotropic()) return FieldsIsogeny::NotIsogenous;
    return similar(x.form(), y.form()) ? FieldsIsogeny::Isomorphic
                                       : FieldsIsogeny::NotIsogenous;
}

namespace {

// Ramification set of the Witt class c(q), i.e. where the form's Witt
// invariant is -1.
std::vector<PlaceQ> witt_ramification(const QuadraticForm& q) {
    std::vector<PlaceQ> ram;
    for (const PlaceQ& v : relevant_places(q))
        if (witt_invariant(q, v) == -1) ram.push_back(v);
    return ram;
}

} // namespace

BrauerKernel brauer_kernel_quadric(const QuadricSurface& x) {
    if (x.isotropic()) return BrauerKernel::trivial(); // a rational point splits everything
    if (!x.disc().is_one()) return BrauerKernel::trivial();
    return BrauerKernel::order2_from_ramification(witt_ramification(x.form()));
}

KernelOverExtension kernel_over_quadratic(const QuadricSurface& x, const SquareClass& e) {
    const SquareClass& d = x.disc();

    if (x.isotropic()) return {e, BrauerKernel::trivial()};

    if (!(d == SquareClass()) && !(d == e)) {
        // The discriminant stays nontrivial over Q(sqrt(e)).
        return {e, BrauerKernel::trivial()};
    }

    if (d == e && !e.is_one()) {
        // d becomes a square over the extension while the form stays
        // anisotropic, so the Witt class generates an order-2 kernel there.
        std::vector<PlaceQ> ram = witt_ramification(x.form());
        if (ram_set_splits_over(ram, e))
            throw TheoremError("anisotropic form " + x.form().to_string() +
                               " with d = e = " + e.to_string() +
                               " has a Witt class split by its own discriminant field");
        return {e, BrauerKernel::order2_from_ramification(std::move(ram))};
    }

    // d = 1: the form is similar to the norm form of its Witt class, which
    // survives exactly when the class does not split over the extension.
    std::vector<PlaceQ> ram = witt_ramification(x.form());
    if (ram.empty())
        throw TheoremError("anisotropic form " + x.form().to_string() +
                           " with trivial discriminant has a split Witt class");
    if (ram_set_splits_over(ram, e)) return {e, BrauerKernel::trivial()};
    return {e, BrauerKernel::order2_from_ramification(std::move(ram))};
}

QuadricComparison theorem8b_decide(const QuadricSurface& x, const QuadricSurface& y) {
    QuadricComparison rep;
    rep.isomorphic = quadrics_isomorphic(x, y);
    rep.isogeny = fields_isogenous(x, y);

    std::vector<SquareClass> exts{SquareClass()};
    for (const SquareClass& d : {x.disc(), y.disc()})
        if (std::find(exts.begin(), exts.end(), d) == exts.end()) exts.push_back(d);
    std::sort(exts.begin() + 1, exts.end());

    rep.kernels_all_equal = true;
    for (const SquareClass& e : exts) {
        KernelComparisonRow row{e, kernel_over_quadratic(x, e).kernel,
                                kernel_over_quadratic(y, e).kernel, false};
        row.equal = kernels_equal_over(row.first, row.second, e);
        if (!row.equal) {
            rep.kernels_all_equal = false;
            if (!rep.separating_extension) rep.separating_extension = e;
        }
        rep.kernels.push_back(std::move(row));
    }

    if (rep.isogeny != FieldsIsogeny::BothRational &&
        rep.isomorphic != (rep.isogeny == FieldsIsogeny::Isomorphic))
        throw TheoremError("isomorphism and isogeny verdicts disagree for " +
                           x.form().to_string() + " vs " + y.form().to_string());
    bool expect_equal = rep.isomorphic || rep.isogeny == FieldsIsogeny::BothRational;
    if (rep.kernels_all_equal != expect_equal)
        throw TheoremError("kernel table disagrees with the classification for " +
                           x.form().to_string() + " vs " + y.form().to_string());
    return rep;
}

int index_of_quadric(const QuadraticForm& q) {
    if (q.rank() != 3 && q.rank() != 4)
        throw DomainError("index is defined here for rank 3 and 4 forms");
    return is_isotropic(q) ? 1 : 2;
}

} // namespace wk
