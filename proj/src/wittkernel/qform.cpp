#include "wittkernel/qform.hpp"

#include <algorithm>
#include <set>

namespace wk {

QuadraticForm::QuadraticForm(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw DomainError("form must have rank >= 1");
    for (const Rational& c : coeffs_)
        if (c.is_zero()) throw DomainError("degenerate form: zero coefficient");
}

std::string QuadraticForm::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += coeffs_[i].to_string();
    }
    return s;
}

std::vector<PlaceQ> relevant_places(const QuadraticForm& q) {
    std::set<int64_t> odd;
    for (const Rational& c : q.coefficients()) {
        for (int64_t n : {c.num() < 0 ? -c.num() : c.num(), c.den()})
            for (int64_t p : factorize(n))
                if (p != 2) odd.insert(p);
    }
    std::vector<PlaceQ> out;
    out.push_back(PlaceQ::prime(2));
    for (int64_t p : odd) out.push_back(PlaceQ::prime(p));
    out.push_back(PlaceQ::real());
    return out;
}

std::vector<PlaceQ> relevant_places_union(const QuadraticForm& q, const QuadraticForm& r) {
    std::vector<PlaceQ> a = relevant_places(q);
    std::vector<PlaceQ> b = relevant_places(r);
    std::vector<PlaceQ> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

SquareClass discriminant(const QuadraticForm& q) {
    SquareClass d;
    for (const Rational& c : q.coefficients()) d = d.times(SquareClass::of(c));
    return d;
}

Signature signature(const QuadraticForm& q) {
    Signature s;
    for (const Rational& c : q.coefficients())
        (c.sign() > 0 ? s.positives : s.negatives)++;
    return s;
}

int hasse_invariant(const QuadraticForm& q, const PlaceQ& v) {
    std::vector<SquareClass> cls;
    cls.reserve(q.rank());
    for (const Rational& c : q.coefficients()) cls.push_back(SquareClass::of(c));
    int s = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = i + 1; j < cls.size(); ++j)
            s *= hilbert_symbol(cls[i], cls[j], v);
    return s;
}

int witt_invariant(const QuadraticForm& q, const PlaceQ& v) {
    int s = hasse_invariant(q, v);
    SquareClass minus_one(-1, {});
    SquareClass d = discriminant(q);
    switch (q.rank() % 8) {
    case 1:
    case 2:
        return s;
    case 3:
    case 4:
        return s * hilbert_symbol(minus_one, d.negated(), v);
    case 5:
    case 6:
        return s * hilbert_symbol(minus_one, minus_one, v);
    default: // 7, 0
        return s * hilbert_symbol(minus_one, d, v);
    }
}

bool is_isotropic_local(const QuadraticForm& q, const PlaceQ& v) {
    const std::size_t n = q.rank();
    if (n == 1) return false;
    SquareClass d = discriminant(q);
    if (n == 2) return is_local_square(d.negated(), v);
    if (n == 3) {
        SquareClass minus_one(-1, {});
        return hilbert_symbol(minus_one, d.negated(), v) == hasse_invariant(q, v);
    }
    if (n == 4) {
        if (!is_local_square(d, v)) return true;
        SquareClass minus_one(-1, {});
        return hasse_invariant(q, v) == hilbert_symbol(minus_one, minus_one, v);
    }
    // rank >= 5: always isotropic at finite places, indefinite decides at inf
    if (v.is_finite()) return true;
    Signature s = signature(q);
    return s.positives > 0 && s.negatives > 0;
}

bool is_isotropic(const QuadraticForm& q) {
    if (q.rank() == 1) return false;
    for (const PlaceQ& v : relevant_places(q))
        if (!is_isotropic_local(q, v)) return false;
    return true;
}

bool equivalent(const QuadraticForm& q, const QuadraticForm& r) {
    if (q.rank() > 4 || r.rank() > 4)
        throw DomainError("equivalence is supported for rank <= 4 only");
    if (q.rank() != r.rank()) return false;
    if (!(discriminant(q) == discriminant(r))) return false;
    if (!(signature(q) == signature(r))) return false;
    for (const PlaceQ& v : relevant_places_union(q, r))
        if (hasse_invariant(q, v) != hasse_invariant(r, v)) return false;
    return true;
}

namespace {

// Places where the Witt classes of q and r differ, i.e. the ramification
// set of the product class c(q) c(r) in Br(Q)[2].
std::vector<PlaceQ> witt_product_ramification(const QuadraticForm& q, const QuadraticForm& r) {
    std::vector<PlaceQ> out;
    for (const PlaceQ& v : relevant_places_union(q, r))
        if (witt_invariant(q, v) != witt_invariant(r, v)) out.push_back(v);
    return out;
}

} // namespace

bool similar(const QuadraticForm& q, const QuadraticForm& r) {
    if (q.rank() != r.rank())
        throw DomainError("similarity requires equal ranks");
    if (q.rank() != 3 && q.rank() != 4)
        throw DomainError("similarity is supported for ranks 3 and 4 only");

    if (q.rank() == 3) {
        for (const PlaceQ& v : relevant_places_union(q, r))
            if (witt_invariant(q, v) != witt_invariant(r, v)) return false;
        return true;
    }

    SquareClass d = discriminant(q);
    if (!(d == discriminant(r))) return false;
    bool iso_q = is_isotropic(q);
    if (iso_q != is_isotropic(r)) return false;
    // Isotropic quadric surfaces are classified by their discriminant.
    if (iso_q) return true;
    // Anisotropic, common discriminant d: similar iff c(q) c(r) is split by
    // Q(sqrt(d)).  For d = 1 that means the Witt classes coincide.
    std::vector<PlaceQ> ram = witt_product_ramification(q, r);
    if (d.is_one()) return ram.empty();
    for (const PlaceQ& v : ram)
        if (is_local_square(d, v)) return false;
    return true;
}

QuadraticForm scale(const Rational& c, const QuadraticForm& q) {
    if (c.is_zero()) throw DomainError("scaling by zero");
    std::vector<Rational> out;
    out.reserve(q.rank());
    for (const Rational& a : q.coefficients()) out.push_back(c * a);
    return QuadraticForm(std::move(out));
}

QuadraticForm pfister2(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("pfister form with zero slot");
    return QuadraticForm({Rational(1), a, b, a * b});
}

FormInvariants invariants(const QuadraticForm& q) {
    FormInvariants inv;
    inv.rank = static_cast<int>(q.rank());
    inv.discriminant = discriminant(q);
    inv.signature = signature(q);
    for (const PlaceQ& v : relevant_places(q)) {
        inv.hasse_at.emplace_back(v, hasse_invariant(q, v));
        inv.witt_at.emplace_back(v, witt_invariant(q, v));
    }
    return inv;
}

} // namespace wk
