#include "wittkernel/brauer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wk {

namespace {

bool place_sorted(const std::vector<BrauerClassQ::Entry>& entries) {
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (!(entries[i - 1].first < entries[i].first)) return false;
    return true;
}

} // namespace

BrauerClassQ BrauerClassQ::from_invariants(std::vector<Entry> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& x, const Entry& y) { return x.first < y.first; });
    if (!place_sorted(entries))
        throw DomainError("Brauer class lists a place twice");
    Rational sum(0);
    for (const Entry& e : entries) {
        const Rational& val = e.second;
        if (val.is_zero())
            throw DomainError("Brauer class has an explicit zero invariant at " +
                              e.first.to_string());
        if (val.sign() < 0 || !(val < Rational(1)))
            throw DomainError("Brauer invariant at " + e.first.to_string() +
                              " must lie in [0,1)");
        if (e.first.is_real() && val != Rational(1, 2))
            throw DomainError("the real invariant must be 0 or 1/2");
        sum = sum + val;
    }
    if (sum.den() != 1)
        throw DomainError("Brauer invariants must sum to 0 mod 1 (got " +
                          sum.to_string() + ")");
    BrauerClassQ c;
    c.inv_ = std::move(entries);
    return c;
}

BrauerClassQ BrauerClassQ::normalized(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& x, const Entry& y) { return x.first < y.first; });
    BrauerClassQ c;
    for (Entry& e : entries) {
        Rational reduced(mod_pos(e.second.num(), e.second.den()), e.second.den());
        if (!reduced.is_zero()) c.inv_.emplace_back(e.first, reduced);
    }
    return c;
}

int64_t BrauerClassQ::order() const {
    int64_t l = 1;
    for (const Entry& e : inv_) l = checked_mul(l / gcd64(l, e.second.den()), e.second.den());
    return l;
}

BrauerClassQ BrauerClassQ::negated() const {
    std::vector<Entry> out;
    out.reserve(inv_.size());
    for (const Entry& e : inv_) out.emplace_back(e.first, -e.second);
    return normalized(std::move(out));
}

BrauerClassQ BrauerClassQ::plus(const BrauerClassQ& other) const {
    std::vector<Entry> out = inv_;
    for (const Entry& e : other.inv_) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Entry& f) { return f.first == e.first; });
        if (it == out.end())
            out.push_back(e);
        else
            it->second = it->second + e.second;
    }
    return normalized(std::move(out));
}

BrauerClassQ BrauerClassQ::scaled(int64_t k) const {
    std::vector<Entry> out;
    out.reserve(inv_.size());
    for (const Entry& e : inv_)
        out.emplace_back(e.first, e.second * Rational(k));
    return normalized(std::move(out));
}

std::string BrauerClassQ::to_string() const {
    if (inv_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < inv_.size(); ++i) {
        if (i) s += ',';
        s += inv_[i].first.to_string();
        s += ':';
        s += inv_[i].second.to_string();
    }
    return s;
}

BrauerClassQ class_of_quaternion(const QuaternionAlgebra& B) {
    std::vector<BrauerClassQ::Entry> entries;
    for (const PlaceQ& v : ramification_set(B))
        entries.emplace_back(v, Rational(1, 2));
    return BrauerClassQ::from_invariants(std::move(entries));
}

bool same_cyclic_subgroup(const BrauerClassQ& x, const BrauerClassQ& y) {
    int64_t n = x.order();
    if (n != y.order()) return false;
    for (int64_t a = 1; a <= n; ++a)
        if (gcd64(a, n) == 1 && x.scaled(a) == y) return true;
    return false;
}

SBVariety::SBVariety(int64_t dimension_, BrauerClassQ cls_)
    : dimension(dimension_), cls(std::move(cls_)) {
    if (dimension < 1) throw DomainError("Severi-Brauer dimension must be >= 1");
    if ((dimension + 1) % cls.order() != 0)
        throw DomainError("class order " + std::to_string(cls.order()) +
                          " does not divide dimension + 1 = " +
                          std::to_string(dimension + 1));
}

bool sb_fields_isomorphic(const SBVariety& v, const SBVariety& w) {
    if (v.dimension != w.dimension)
        throw DomainError("Severi-Brauer comparison requires equal dimensions");
    return same_cyclic_subgroup(v.cls, w.cls);
}

SbQuadricVerdict sb_vs_quadric_decide(const SBVariety& v, const QuadraticForm& q) {
    if (v.dimension != 2)
        throw DomainError("sb_vs_quadric compares Severi-Brauer surfaces (dimension 2)");
    if (q.rank() != 4)
        throw DomainError("sb_vs_quadric compares quadric surfaces (rank 4)");

    if (!v.cls.is_zero()) {
        // Order 3 here: the order divides dim + 1 = 3 and the class is nonzero.
        return {false, "3-torsion vs 2-torsion", false};
    }
    if (is_isotropic(q)) return {true, "", false};
    bool inconclusive = !discriminant(q).is_one(); // both kernels over Q trivial
    return {false, "rationality", inconclusive};
}

} // namespace wk
