#include "wittkernel/hilbert.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace wk {

std::vector<PlaceQ> relevant_places(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero())
        throw DomainError("relevant places of a zero value");
    std::set<int64_t> odd;
    for (int64_t n : {a.num(), static_cast<int64_t>(a.den()), b.num(), static_cast<int64_t>(b.den())}) {
        for (int64_t p : factorize(n < 0 ? -n : n))
            if (p != 2) odd.insert(p);
    }
    std::vector<PlaceQ> out;
    out.push_back(PlaceQ::prime(2));
    for (int64_t p : odd) out.push_back(PlaceQ::prime(p));
    out.push_back(PlaceQ::real());
    return out;
}

namespace {

// (u-1)/2 mod 2 for odd u, i.e. 1 exactly for u = 3 mod 4.
int eps2(int64_t u) { return mod_pos(u, 4) == 3 ? 1 : 0; }

// (u^2-1)/8 mod 2 for odd u, i.e. 1 exactly for u = 3, 5 mod 8.
int omega2(int64_t u) {
    int64_t m = mod_pos(u, 8);
    return (m == 3 || m == 5) ? 1 : 0;
}

} // namespace

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const PlaceQ& v) {
    int64_t sa = a.value();
    int64_t sb = b.value();
    if (v.is_real())
        return (sa < 0 && sb < 0) ? -1 : 1;

    int64_t p = v.prime_value();
    int alpha = std::binary_search(a.primes().begin(), a.primes().end(), p) ? 1 : 0;
    int beta = std::binary_search(b.primes().begin(), b.primes().end(), p) ? 1 : 0;
    int64_t u = alpha ? sa / p : sa;
    int64_t w = beta ? sb / p : sb;

    if (p == 2) {
        int e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
        return (e % 2 == 0) ? 1 : -1;
    }
    // odd p: (a,b) = (-1)^{alpha beta (p-1)/2} (u|p)^beta (w|p)^alpha
    int r = 1;
    if (alpha && beta && ((p - 1) / 2) % 2 == 1) r = -r;
    if (beta) r *= legendre(mod_pos(u, p), p);
    if (alpha) r *= legendre(mod_pos(w, p), p);
    return r;
}

int hilbert_symbol(const Rational& a, const Rational& b, const PlaceQ& v) {
    if (a.is_zero() || b.is_zero())
        throw DomainError("hilbert symbol of zero");
    return hilbert_symbol(SquareClass::of(a), SquareClass::of(b), v);
}

namespace {

// Subsets of Z/M as bitsets.  Sets that are read through a shifted window
// carry a 64-bit replica of their head past position M, so a window starting
// anywhere below M never needs wrap logic.
class ResidueSet {
public:
    explicit ResidueSet(int64_t modulus)
        : modulus_(modulus), words_((modulus + 127) / 64 + 2, 0) {}

    void set(int64_t i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    bool test(int64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    // Replicate bits [0, 64) to [M, M+64); call once after filling.
    void finalize() {
        for (int64_t j = 0; j < 64; ++j)
            if (test(j)) set(modulus_ + j);
    }

    // True iff some i < M has this[i] and other[(i + shift) mod M].
    // `other` must be finalized.
    bool intersects_shifted(const ResidueSet& other, int64_t shift) const {
        const int64_t m = modulus_;
        const std::size_t nwords = static_cast<std::size_t>((m + 63) / 64);
        for (std::size_t k = 0; k < nwords; ++k) {
            uint64_t bits = word_masked(k, nwords);
            if (!bits) continue;
            int64_t s = (static_cast<int64_t>(k) * 64 + shift) % m;
            std::size_t w = static_cast<std::size_t>(s >> 6);
            int off = static_cast<int>(s & 63);
            uint64_t window = other.words_[w] >> off;
            if (off) window |= other.words_[w + 1] << (64 - off);
            if (bits & window) return true;
        }
        return false;
    }

    bool intersects(const ResidueSet& other) const {
        const std::size_t nwords = static_cast<std::size_t>((modulus_ + 63) / 64);
        for (std::size_t k = 0; k < nwords; ++k)
            if (word_masked(k, nwords) & other.words_[k]) return true;
        return false;
    }

private:
    // Word k with any replica bits at positions >= M cleared.
    uint64_t word_masked(std::size_t k, std::size_t nwords) const {
        uint64_t bits = words_[k];
        int tail = static_cast<int>(modulus_ & 63);
        if (tail && k == nwords - 1) bits &= (uint64_t{1} << tail) - 1;
        return bits;
    }

    int64_t modulus_;
    std::vector<uint64_t> words_;
};

struct PlaceTables {
    int64_t modulus;
    ResidueSet squares;                     // {z^2 mod M}
    std::map<int64_t, ResidueSet> scaled;   // c -> {c t^2 mod M}
    std::map<int64_t, ResidueSet> reflect;  // c -> {i : (1 - i) mod M in scaled[c]}

    explicit PlaceTables(int64_t m) : modulus(m), squares(m) {
        for (int64_t z = 0; z < m; ++z) squares.set((z * z) % m);
        squares.finalize();
    }

    const ResidueSet& scaled_for(int64_t c) {
        auto it = scaled.find(c);
        if (it != scaled.end()) return it->second;
        ResidueSet s(modulus);
        for (int64_t t = 0; t < modulus; ++t) s.set((c * ((t * t) % modulus)) % modulus);
        s.finalize();
        return scaled.emplace(c, std::move(s)).first->second;
    }

    const ResidueSet& reflect_for(int64_t c) {
        auto it = reflect.find(c);
        if (it != reflect.end()) return it->second;
        const ResidueSet& s = scaled_for(c);
        ResidueSet r(modulus);
        for (int64_t i = 0; i < modulus; ++i)
            if (s.test(i)) r.set(mod_pos(1 - i, modulus));
        r.finalize();
        return reflect.emplace(c, std::move(r)).first->second;
    }
};

std::mutex g_tables_mutex;

PlaceTables& tables_for(int64_t p) {
    static std::map<int64_t, std::unique_ptr<PlaceTables>> cache;
    auto it = cache.find(p);
    if (it == cache.end()) {
        int64_t m = (p == 2) ? 256 : p * p * p;
        it = cache.emplace(p, std::make_unique<PlaceTables>(m)).first;
    }
    return *it->second;
}

} // namespace

int hilbert_oracle(const Rational& a, const Rational& b, const PlaceQ& v) {
    if (a.is_zero() || b.is_zero())
        throw DomainError("hilbert oracle of zero");
    int64_t sa = SquareClass::of(a).value();
    int64_t sb = SquareClass::of(b).value();
    if (v.is_real()) {
        // a x^2 + b y^2 = z^2 has a nontrivial real solution unless both
        // coefficients are negative.
        return (sa < 0 && sb < 0) ? -1 : 1;
    }

    std::lock_guard<std::mutex> lock(g_tables_mutex);
    PlaceTables& t = tables_for(v.prime_value());
    const int64_t m = t.modulus;
    int64_t am = mod_pos(sa, m);
    int64_t bm = mod_pos(sb, m);

    // A primitive solution mod M has a unit coordinate; scaling by its
    // inverse pins that coordinate to 1, leaving three exhaustive cases.
    // x = 1: a + b y^2 = z^2
    if (t.scaled_for(bm).intersects_shifted(t.squares, am)) return 1;
    // y = 1: a x^2 + b = z^2
    if (t.scaled_for(am).intersects_shifted(t.squares, bm)) return 1;
    // z = 1: a x^2 + b y^2 = 1
    if (t.scaled_for(am).intersects(t.reflect_for(bm))) return 1;
    return -1;
}

bool reciprocity_check(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero())
        throw DomainError("reciprocity check of zero");
    int prod = 1;
    for (const PlaceQ& v : relevant_places(a, b))
        prod *= hilbert_symbol(a, b, v);
    return prod == 1;
}

} // namespace wk
