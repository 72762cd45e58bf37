#ifndef WITTKERNEL_RATIONAL_HPP
#define WITTKERNEL_RATIONAL_HPP

// Exact arithmetic substrate: rationals on 64-bit numerator/denominator,
// square classes in Q^x / Q^x2 as signed squarefree integers, and places
// of Q.  Every type here is an immutable value; there is no floating point
// anywhere in the library.

#include <cstdint>
#include <string>
#include <vector>

#include "wittkernel/errors.hpp"

namespace wk {

// 64-bit helpers.  Inputs are desk scale (products of form coefficients);
// overflow is a domain error, not UB.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
int64_t gcd64(int64_t a, int64_t b);
int64_t mod_pos(int64_t a, int64_t m); // representative in [0, m)
int64_t pow_mod(int64_t base, int64_t exp, int64_t mod);

bool is_prime(int64_t n);

// Prime factors of n >= 1 in ascending order, with multiplicity.
// Trial division; throws DomainError for n <= 0.
std::vector<int64_t> factorize(int64_t n);

// Legendre symbol (a|p) for odd prime p and p not dividing a.
int legendre(int64_t a, int64_t p);

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(int64_t num, int64_t den);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    std::string to_string() const; // "n" or "n/d", denominator omitted when 1

private:
    int64_t num_;
    int64_t den_; // > 0, gcd(|num|, den) == 1
};

// A place of Q: the real place or a finite prime.
class PlaceQ {
public:
    static PlaceQ real() { return PlaceQ(0); }
    static PlaceQ prime(int64_t p); // throws DomainError unless p is prime

    bool is_real() const { return p_ == 0; }
    bool is_finite() const { return p_ != 0; }
    int64_t prime_value() const; // throws DomainError at the real place

    std::string to_string() const; // "inf" or the prime digits

    friend bool operator==(const PlaceQ& a, const PlaceQ& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PlaceQ& a, const PlaceQ& b) { return a.p_ != b.p_; }
    // Canonical report order: 2 < 3 < 5 < ... < inf.
    friend bool operator<(const PlaceQ& a, const PlaceQ& b) {
        if (a.is_real()) return false;
        if (b.is_real()) return true;
        return a.p_ < b.p_;
    }

private:
    explicit PlaceQ(int64_t p) : p_(p) {}
    int64_t p_; // 0 encodes the real place
};

// An element of Q^x / Q^x2, stored as sign and the strictly increasing list
// of primes of its squarefree representative.  The class of 1 is (+1, {}).
class SquareClass {
public:
    SquareClass() : sign_(1) {}
    SquareClass(int sign, std::vector<int64_t> primes);

    static SquareClass of(const Rational& r); // throws DomainError for r == 0
    static SquareClass of(int64_t n);

    int sign() const { return sign_; }
    const std::vector<int64_t>& primes() const { return primes_; }
    int64_t value() const; // the squarefree integer itself
    bool is_one() const { return sign_ == 1 && primes_.empty(); }

    SquareClass negated() const;
    SquareClass times(const SquareClass& other) const; // product in Q^x/Q^x2

    std::string to_string() const;

    friend bool operator==(const SquareClass& a, const SquareClass& b) {
        return a.sign_ == b.sign_ && a.primes_ == b.primes_;
    }
    friend bool operator!=(const SquareClass& a, const SquareClass& b) { return !(a == b); }
    friend bool operator<(const SquareClass& a, const SquareClass& b) {
        return a.value() < b.value();
    }

private:
    int sign_;
    std::vector<int64_t> primes_;
};

// True iff r is a square in the completion Q_v.  Real place: r > 0.
// Odd p: even valuation and unit part a residue mod p.  p = 2: even
// valuation and unit part = 1 mod 8.
bool is_local_square(const SquareClass& s, const PlaceQ& v);
bool is_local_square(const Rational& r, const PlaceQ& v);

} // namespace wk

#endif
