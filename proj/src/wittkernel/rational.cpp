#include "wittkernel/rational.hpp"

#include <algorithm>
#include <cstdlib>

namespace wk {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw DomainError("integer overflow in addition");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw DomainError("integer overflow in multiplication");
    return r;
}

int64_t gcd64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t mod_pos(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t mod) {
    __int128 acc = 1;
    __int128 b = mod_pos(base, mod);
    while (exp > 0) {
        if (exp & 1) acc = (acc * b) % mod;
        b = (b * b) % mod;
        exp >>= 1;
    }
    return static_cast<int64_t>(acc);
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<int64_t> factorize(int64_t n) {
    if (n <= 0) throw DomainError("factorize: input must be positive");
    std::vector<int64_t> out;
    while (n % 2 == 0) {
        out.push_back(2);
        n /= 2;
    }
    for (int64_t d = 3; d <= n / d; d += 2) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

int legendre(int64_t a, int64_t p) {
    int64_t r = pow_mod(a, (p - 1) / 2, p);
    if (r == 0) throw DomainError("legendre: argument divisible by the prime");
    return r == 1 ? 1 : -1;
}

Rational::Rational(int64_t num, int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    int64_t g = gcd64(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero rational");
    return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

std::string Rational::to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

PlaceQ PlaceQ::prime(int64_t p) {
    if (!is_prime(p)) throw DomainError("place: " + std::to_string(p) + " is not prime");
    return PlaceQ(p);
}

int64_t PlaceQ::prime_value() const {
    if (is_real()) throw DomainError("the real place has no prime");
    return p_;
}

std::string PlaceQ::to_string() const {
    return is_real() ? "inf" : std::to_string(p_);
}

SquareClass::SquareClass(int sign, std::vector<int64_t> primes)
    : sign_(sign), primes_(std::move(primes)) {
    if (sign_ != 1 && sign_ != -1) throw DomainError("square class sign must be +-1");
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (!is_prime(primes_[i])) throw DomainError("square class factor is not prime");
        if (i > 0 && primes_[i - 1] >= primes_[i])
            throw DomainError("square class primes must be strictly increasing");
    }
}

SquareClass SquareClass::of(int64_t n) {
    if (n == 0) throw DomainError("square class of zero");
    int sign = n > 0 ? 1 : -1;
    std::vector<int64_t> odd;
    int64_t m = n > 0 ? n : -n;
    std::vector<int64_t> fs = factorize(m);
    for (std::size_t i = 0; i < fs.size();) {
        std::size_t j = i;
        while (j < fs.size() && fs[j] == fs[i]) ++j;
        if ((j - i) % 2 == 1) odd.push_back(fs[i]);
        i = j;
    }
    return SquareClass(sign, std::move(odd));
}

SquareClass SquareClass::of(const Rational& r) {
    if (r.is_zero()) throw DomainError("square class of zero");
    // n/d = (n*d) / d^2, so the class is the class of n*d; factor the parts
    // separately and take the odd-exponent primes to stay inside 64 bits.
    return SquareClass::of(r.num()).times(SquareClass::of(r.den()));
}

int64_t SquareClass::value() const {
    int64_t v = sign_;
    for (int64_t p : primes_) v = checked_mul(v, p);
    return v;
}

SquareClass SquareClass::negated() const {
    SquareClass r = *this;
    r.sign_ = -r.sign_;
    return r;
}

SquareClass SquareClass::times(const SquareClass& other) const {
    SquareClass r;
    r.sign_ = sign_ * other.sign_;
    // symmetric difference of the two sorted prime lists
    std::size_t i = 0, j = 0;
    while (i < primes_.size() || j < other.primes_.size()) {
        if (j == other.primes_.size() || (i < primes_.size() && primes_[i] < other.primes_[j])) {
            r.primes_.push_back(primes_[i++]);
        } else if (i == primes_.size() || other.primes_[j] < primes_[i]) {
            r.primes_.push_back(other.primes_[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    return r;
}

std::string SquareClass::to_string() const { return std::to_string(value()); }

bool is_local_square(const SquareClass& s, const PlaceQ& v) {
    if (v.is_real()) return s.sign() > 0;
    int64_t p = v.prime_value();
    if (std::binary_search(s.primes().begin(), s.primes().end(), p))
        return false; // odd valuation
    if (p == 2) return mod_pos(s.value(), 8) == 1;
    return legendre(mod_pos(s.value(), p), p) == 1;
}

bool is_local_square(const Rational& r, const PlaceQ& v) {
    return is_local_square(SquareClass::of(r), v);
}

} // namespace wk
