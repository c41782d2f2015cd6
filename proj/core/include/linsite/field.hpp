#pragma once

#include <cstdint>
#include <stdexcept>

namespace linsite {

using Scalar = std::uint32_t;

/* Prime field F_p.  All residues are kept reduced to [0, p). */
struct FieldSpec {
    Scalar p;

    explicit FieldSpec(Scalar p_);

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(Scalar n);

inline Scalar addm(Scalar a, Scalar b, Scalar p) {
    Scalar s = a + b;
    return s >= p ? s - p : s;
}

inline Scalar subm(Scalar a, Scalar b, Scalar p) {
    return a >= b ? a - b : a + p - b;
}

inline Scalar negm(Scalar a, Scalar p) {
    return a == 0 ? 0 : p - a;
}

inline Scalar mulm(Scalar a, Scalar b, Scalar p) {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p);
}

/* Multiplicative inverse; throws on a = 0. */
Scalar invm(Scalar a, Scalar p);

inline Scalar reduce(long long v, Scalar p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<Scalar>(r);
}

}  // namespace linsite
