#include "wittkernel/conic.hpp"

#include <map>
#include <mutex>
#include <set>

namespace wk {

std::string QuaternionAlgebra::to_string() const {
    return "(" + a.to_string() + "," + b.to_string() + ")";
}

QuadraticForm conic_form(const QuaternionAlgebra& B) {
    Rational ra(B.a.value());
    Rational rb(B.b.value());
    return QuadraticForm({ra, rb, -(ra * rb)});
}

QuadraticForm norm_ternary(const QuaternionAlgebra& B) {
    Rational ra(B.a.value());
    Rational rb(B.b.value());
    return QuadraticForm({-ra, -rb, ra * rb});
}

std::vector<PlaceQ> ramification_set(const QuaternionAlgebra& B) {
    std::vector<PlaceQ> ram;
    for (const PlaceQ& v : relevant_places(Rational(B.a.value()), Rational(B.b.value())))
        if (hilbert_symbol(B.a, B.b, v) == -1) ram.push_back(v);
    if (ram.size() % 2 != 0)
        throw TheoremError("ramification set of " + B.to_string() +
                           " has odd cardinality; Hilbert reciprocity violated");
    return ram;
}

bool is_split(const QuaternionAlgebra& B) {
    bool by_form = is_isotropic(conic_form(B));
    bool by_ram = ramification_set(B).empty();
    if (by_form != by_ram)
        throw TheoremError("split test disagreement for " + B.to_string() +
                           ": conic isotropy says " + (by_form ? "split" : "nonsplit") +
                           ", ramification says " + (by_ram ? "split" : "nonsplit"));
    return by_ram;
}

bool ram_set_splits_over(const std::vector<PlaceQ>& ram, const SquareClass& e) {
    if (e.is_one()) return ram.empty();
    for (const PlaceQ& v : ram)
        if (is_local_square(e, v)) return false;
    return true;
}

bool splits_over(const QuaternionAlgebra& B, const SquareClass& e) {
    if (e.is_one()) return is_split(B);
    return ram_set_splits_over(ramification_set(B), e);
}

namespace {

std::string ram_key(const std::vector<PlaceQ>& ram) {
    std::string key;
    for (const PlaceQ& v : ram) {
        key += v.to_string();
        key += ',';
    }
    return key;
}

// Candidate square classes: all subset products of the generator primes,
// both signs, ordered by absolute value so the smallest witness wins.
std::vector<SquareClass> candidate_classes(const std::vector<int64_t>& gens) {
    std::vector<int64_t> values{1};
    for (int64_t p : gens) {
        std::size_t n = values.size();
        for (std::size_t i = 0; i < n; ++i) values.push_back(checked_mul(values[i], p));
    }
    std::sort(values.begin(), values.end());
    std::vector<SquareClass> out;
    for (int64_t v : values) {
        out.push_back(SquareClass::of(v));
        out.push_back(SquareClass::of(-v));
    }
    return out;
}

bool ramification_matches(const QuaternionAlgebra& B, const std::vector<PlaceQ>& want) {
    return ramification_set(B) == want;
}

} // namespace

QuaternionAlgebra quaternion_with_ramification(const std::vector<PlaceQ>& ram) {
    if (ram.size() % 2 != 0)
        throw DomainError("a quaternion algebra has an even ramification set");

    static std::mutex mutex;
    static std::map<std::string, QuaternionAlgebra> cache;
    std::string key = ram_key(ram);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<int64_t> gens{2};
    for (const PlaceQ& v : ram)
        if (v.is_finite() && v.prime_value() != 2) gens.push_back(v.prime_value());

    // The generators almost always suffice; widen with one auxiliary prime
    // at a time if they do not.
    std::vector<int64_t> aux{0};
    for (int64_t p = 3; p < 1000; p += 2)
        if (is_prime(p) && std::find(gens.begin(), gens.end(), p) == gens.end())
            aux.push_back(p);

    for (int64_t extra : aux) {
        std::vector<int64_t> g = gens;
        if (extra) g.push_back(extra);
        std::vector<SquareClass> cands = candidate_classes(g);
        for (const SquareClass& a : cands) {
            for (const SquareClass& b : cands) {
                QuaternionAlgebra B(a, b);
                if (ramification_matches(B, ram)) {
                    cache.emplace(key, B);
                    return B;
                }
            }
        }
    }
    throw TheoremError("no quaternion symbol found with ramification {" + key + "}");
}

GenusZeroCompare conic_fields_compare(const GenusZeroCurve& c, const GenusZeroCurve& d) {
    return ramification_set(c.algebra) == ramification_set(d.algebra)
               ? GenusZeroCompare::Isomorphic
               : GenusZeroCompare::NotIsogenous;
}

} // namespace wk
