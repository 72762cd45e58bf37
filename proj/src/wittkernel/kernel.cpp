#include "wittkernel/kernel.hpp"

#include <algorithm>

namespace wk {

BrauerKernel BrauerKernel::order2(const QuaternionAlgebra& B) {
    std::vector<PlaceQ> ram = ramification_set(B);
    if (ram.empty())
        throw DomainError("an order-2 kernel needs a nonsplit generator");
    BrauerKernel k;
    k.kind = KernelKind::Order2;
    k.witness = B;
    k.ramification = std::move(ram);
    return k;
}

BrauerKernel BrauerKernel::order2_from_ramification(std::vector<PlaceQ> ram) {
    if (ram.empty())
        throw DomainError("an order-2 kernel needs a nonempty ramification set");
    BrauerKernel k;
    k.kind = KernelKind::Order2;
    k.witness = quaternion_with_ramification(ram);
    k.ramification = std::move(ram);
    return k;
}

BrauerKernel BrauerKernel::cyclic(BrauerClassQ generator) {
    if (generator.is_zero())
        throw DomainError("a cyclic kernel needs a nonzero generator");
    BrauerKernel k;
    k.kind = KernelKind::Cyclic;
    k.cyclic_generator = std::move(generator);
    return k;
}

std::string BrauerKernel::kind_name() const {
    switch (kind) {
    case KernelKind::Trivial: return "Trivial";
    case KernelKind::Order2: return "Order2";
    default: return "Cyclic";
    }
}

BrauerKernel brauer_kernel_conic(const GenusZeroCurve& c) {
    if (is_split(c.algebra)) return BrauerKernel::trivial();
    return BrauerKernel::order2(c.algebra);
}

namespace {

std::vector<PlaceQ> symmetric_difference(const std::vector<PlaceQ>& a,
                                         const std::vector<PlaceQ>& b) {
    std::vector<PlaceQ> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

} // namespace

bool kernels_equal_over(const BrauerKernel& k1, const BrauerKernel& k2, const SquareClass& e) {
    if (k1.kind != k2.kind) return false;
    if (k1.kind == KernelKind::Trivial) return true;
    if (k1.kind == KernelKind::Cyclic)
        throw DomainError("cyclic kernels are not compared over extensions here");
    return ram_set_splits_over(symmetric_difference(k1.ramification, k2.ramification), e);
}

} // namespace wk
