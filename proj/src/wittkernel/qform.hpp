#ifndef WITTKERNEL_QFORM_HPP
#define WITTKERNEL_QFORM_HPP

// Diagonal quadratic forms over Q: discriminant, Hasse and Witt invariants,
// signatures, isotropy at each place and globally, equivalence and
// similarity at rank <= 4, and two-fold Pfister forms.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wittkernel/hilbert.hpp"
#include "wittkernel/rational.hpp"

namespace wk {

class QuadraticForm {
public:
    // Nondegenerate by construction: rejects empty lists and zero entries.
    explicit QuadraticForm(std::vector<Rational> coefficients);

    std::size_t rank() const { return coeffs_.size(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    std::string to_string() const; // "1,-2,3/5"

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Rational> coeffs_;
};

struct Signature {
    int positives = 0;
    int negatives = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// {inf, 2} plus the odd primes dividing any coefficient numerator or
// denominator.  All local invariants are +1 outside this set.
std::vector<PlaceQ> relevant_places(const QuadraticForm& q);
std::vector<PlaceQ> relevant_places_union(const QuadraticForm& q, const QuadraticForm& r);

SquareClass discriminant(const QuadraticForm& q);
Signature signature(const QuadraticForm& q);

// Product over i < j of (a_i, a_j)_v; +1 for rank 1.
int hasse_invariant(const QuadraticForm& q, const PlaceQ& v);

// Hasse invariant times the rank-mod-8 correction symbol; a similarity
// invariant, unlike the Hasse invariant itself.
int witt_invariant(const QuadraticForm& q, const PlaceQ& v);

bool is_isotropic_local(const QuadraticForm& q, const PlaceQ& v);

// Isotropy over Q, assembled from the local criteria over the relevant
// place set (sufficient by the local-global principle; oracle-tested).
bool is_isotropic(const QuadraticForm& q);

// Equivalence over Q for rank <= 4: rank, discriminant, signature and all
// local Hasse invariants agree.  Throws DomainError above rank 4.
bool equivalent(const QuadraticForm& q, const QuadraticForm& r);

// Similarity for ranks 3 and 4.  Rank 3: equal Witt invariants everywhere.
// Rank 4: equal discriminants d and matching isotropy; anisotropic pairs are
// similar iff the product of their Witt classes is split by Q(sqrt(d)).
// Throws DomainError on rank mismatch or ranks outside {3, 4}.
bool similar(const QuadraticForm& q, const QuadraticForm& r);

QuadraticForm scale(const Rational& c, const QuadraticForm& q);

// <1, a, b, ab>, the two-fold Pfister form; discriminant always 1.
QuadraticForm pfister2(const Rational& a, const Rational& b);

struct FormInvariants {
    int rank;
    SquareClass discriminant;
    Signature signature;
    std::vector<std::pair<PlaceQ, int>> hasse_at;
    std::vector<std::pair<PlaceQ, int>> witt_at;
};

FormInvariants invariants(const QuadraticForm& q);

} // namespace wk

#endif
