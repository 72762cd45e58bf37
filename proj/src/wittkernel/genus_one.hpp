#ifndef WITTKERNEL_GENUS_ONE_HPP
#define WITTKERNEL_GENUS_ONE_HPP

// Torsor arithmetic inside one cyclic subgroup of a Weil-Chatelet group:
// a class is a residue a modulo the ambient order m, identified with its
// negative because [C] and -[C] present the same curve.

#include <cstdint>
#include <vector>

#include "wittkernel/errors.hpp"

namespace wk {

struct CyclicTorsorModel {
    int64_t modulus; // m >= 1, order of the ambient cyclic group
    int64_t residue; // a in [0, m)

    CyclicTorsorModel(int64_t modulus_, int64_t residue_);
};

int64_t euler_phi(int64_t n);

// Order of the class: m / gcd(a, m); 1 for the zero class.
int64_t period(const CyclicTorsorModel& t);

// Is there a degree n^2 etale cover from src to dst?  True iff
// dst = +-n src mod m.  Covers across different ambient groups are not
// defined; a modulus mismatch is rejected.
bool etale_cover_exists(const CyclicTorsorModel& src, const CyclicTorsorModel& dst, int64_t n);

// Residues (in the fundamental domain [0, m/2]) of the classes isogenous
// to t with the same Jacobian: {u a : gcd(u, period) = 1} mod +-1, sorted.
std::vector<int64_t> isogeny_orbit(const CyclicTorsorModel& t);

// #(Z/nZ)^x / (+-1): the number of isogeny companions of a period-n class.
// Equals 1 exactly for n in {1, 2, 3, 4, 6}.
int64_t n_c(int64_t n);

// Applicability gate for the genus-one uniqueness theorem: period in
// {1,2,3,4,6} and both caller-supplied facts about the Jacobian hold.
bool theorem10_gate(int64_t period, bool jacobian_non_cm,
                    bool jacobian_isolated_or_mw_finite);

} // namespace wk

#endif
