#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace linsys {

// Deterministic 64-bit stream; the one generator used everywhere so that a
// fixed seed reproduces every draw bit for bit.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// Stable seed derivation: fold words into a seed one at a time.
inline uint64_t mix_seed(uint64_t seed, uint64_t word) {
    SplitMix64 g(seed ^ (word + 0x9e3779b97f4a7c15ULL));
    g.next();
    return g.next();
}

namespace fp {

inline constexpr uint64_t kM61 = (1ULL << 61) - 1;

// Arithmetic mod a prime < 2^62.  The default (and fast path) is the
// Mersenne prime 2^61 - 1, reduced by folding; other primes go through
// 128-bit division.
struct Field {
    uint64_t p = kM61;
    bool mersenne = true;

    Field() = default;
    explicit Field(uint64_t prime) : p(prime), mersenne(prime == kM61) {
        if (prime < 3 || prime >= (1ULL << 62)) throw std::invalid_argument("prime out of range");
    }

    uint64_t reduce128(unsigned __int128 z) const {
        if (mersenne) {
            uint64_t lo = static_cast<uint64_t>(z & kM61);
            uint64_t hi = static_cast<uint64_t>(z >> 61);
            uint64_t r = lo + (hi & kM61) + (hi >> 61);
            r = (r & kM61) + (r >> 61);
            if (r >= kM61) r -= kM61;
            return r;
        }
        return static_cast<uint64_t>(z % p);
    }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t r = a + b;
        if (r >= p) r -= p;
        return r;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return reduce128(static_cast<unsigned __int128>(a) * b);
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return pow(a, p - 2);
    }
    // Signed integer into the field.
    uint64_t from_int(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        return static_cast<uint64_t>(m);
    }
    uint64_t random(SplitMix64& g) const {
        for (;;) {  // rejection keeps the draw uniform
            uint64_t v = g.next() >> 2;  // < 2^62
            if (v < p) return v;
        }
    }
    uint64_t random_nonzero(SplitMix64& g) const {
        for (;;) {
            uint64_t v = random(g);
            if (v != 0) return v;
        }
    }
};

}  // namespace fp
}  // namespace linsys
