#include "wittkernel/genus_one.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wk {

namespace {

int64_t mulmod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>((static_cast<__int128>(a) * b) % m);
}

} // namespace

CyclicTorsorModel::CyclicTorsorModel(int64_t modulus_, int64_t residue_)
    : modulus(modulus_), residue(residue_) {
    if (modulus < 1) throw DomainError("torsor modulus must be >= 1");
    if (residue < 0 || residue >= modulus)
        throw DomainError("torsor residue must lie in [0, modulus)");
}

int64_t euler_phi(int64_t n) {
    int64_t result = n;
    for (int64_t p = 2; p <= n / p; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int64_t period(const CyclicTorsorModel& t) {
    return t.modulus / std::gcd(t.residue, t.modulus);
}

bool etale_cover_exists(const CyclicTorsorModel& src, const CyclicTorsorModel& dst,
                        int64_t n) {
    if (src.modulus != dst.modulus)
        throw DomainError("cover existence is defined within one ambient group; "
                          "moduli " + std::to_string(src.modulus) + " and " +
                          std::to_string(dst.modulus) + " differ");
    if (n < 1) throw DomainError("cover degree parameter must be >= 1");
    int64_t m = src.modulus;
    int64_t fwd = mulmod(n % m, src.residue, m);
    return fwd == dst.residue || (m - fwd) % m == dst.residue;
}

std::vector<int64_t> isogeny_orbit(const CyclicTorsorModel& t) {
    int64_t m = t.modulus;
    int64_t n = period(t);
    std::vector<int64_t> orbit;
    for (int64_t u = 1; u <= n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        int64_t r = mulmod(u % m, t.residue, m);
        orbit.push_back(std::min(r, (m - r) % m));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

int64_t n_c(int64_t n) {
    if (n < 1) throw DomainError("period must be >= 1");
    int64_t phi = euler_phi(n);
    return n <= 2 ? phi : phi / 2;
}

bool theorem10_gate(int64_t period, bool jacobian_non_cm,
                    bool jacobian_isolated_or_mw_finite) {
    bool admissible = period == 1 || period == 2 || period == 3 || period == 4 ||
                      period == 6;
    return admissible && jacobian_non_cm && jacobian_isolated_or_mw_finite;
}

} // namespace wk
