#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

namespace wk::testing {

int64_t kernel_search_bound() {
    const char* env = std::getenv("WITT_KERNEL_SEARCH_BOUND");
    if (!env) return 200;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) return 200;
    return v;
}

std::optional<IntegerZero> ternary_zero_search(const QuadraticForm& q, int64_t bound) {
    if (q.rank() != 3) throw DomainError("zero search expects a ternary form");
    // clear denominators; zeros are unchanged
    int64_t lcm = 1;
    for (const Rational& c : q.coefficients())
        lcm = checked_mul(lcm / gcd64(lcm, c.den()), c.den());
    int64_t a = checked_mul(q.coefficients()[0].num(), lcm / q.coefficients()[0].den());
    int64_t b = checked_mul(q.coefficients()[1].num(), lcm / q.coefficients()[1].den());
    int64_t c = checked_mul(q.coefficients()[2].num(), lcm / q.coefficients()[2].den());

    for (int64_t x = 0; x <= bound; ++x) {
        for (int64_t y = 0; y <= bound; ++y) {
            // a x^2 + b y^2 + c z^2 = 0 with z^2 = t / -c
            __int128 t = static_cast<__int128>(a) * x * x + static_cast<__int128>(b) * y * y;
            if (t % c != 0) continue;
            __int128 zz = -(t / c);
            if (zz < 0) continue;
            int64_t z = static_cast<int64_t>(std::sqrt(static_cast<double>(zz)));
            while (static_cast<__int128>(z) * z < zz) ++z;
            while (z > 0 && static_cast<__int128>(z) * z > zz) --z;
            if (static_cast<__int128>(z) * z != zz || z > bound) continue;
            if (x == 0 && y == 0 && z == 0) continue;
            return IntegerZero{x, y, z};
        }
    }
    return std::nullopt;
}

bool local_square_search(const Rational& r, const PlaceQ& v) {
    if (r.is_zero()) throw DomainError("local square search of zero");
    if (v.is_real()) return r.sign() > 0;

    int64_t m = checked_mul(r.num(), r.den());
    int64_t p = v.prime_value();
    int64_t k = 0;
    int64_t reduced = m;
    while (reduced % p == 0) {
        reduced /= p;
        ++k;
    }
    int64_t extra = (p == 2) ? 6 : 3;
    int64_t modulus = 1;
    for (int64_t i = 0; i < k + extra; ++i) modulus = checked_mul(modulus, p);
    int64_t target = mod_pos(m, modulus);
    for (int64_t x = 0; x < modulus; ++x)
        if ((static_cast<__int128>(x) * x - target) % modulus == 0) return true;
    return false;
}

bool similar_by_scalar_search(const QuadraticForm& q, const QuadraticForm& r) {
    std::set<int64_t> primes;
    for (const PlaceQ& v : relevant_places_union(q, r))
        if (v.is_finite()) primes.insert(v.prime_value());

    std::vector<int64_t> values{1};
    for (int64_t p : primes) {
        std::size_t n = values.size();
        for (std::size_t i = 0; i < n; ++i) values.push_back(checked_mul(values[i], p));
    }
    for (int64_t p = 2; p < 100; ++p)
        if (is_prime(p) && !primes.count(p)) values.push_back(p);

    for (int64_t v : values)
        for (int64_t s : {v, -v})
            if (equivalent(scale(Rational(s), q), r)) return true;
    return false;
}

} // namespace wk::testing
