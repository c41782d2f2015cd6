#include "linsite/field.hpp"

namespace linsite {

bool is_prime(Scalar n) {
    if (n < 2) return false;
    for (Scalar d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(Scalar p_) : p(p_) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: modulus is not prime");
    if (p >= (1u << 16)) throw std::invalid_argument("FieldSpec: modulus too large");
}

Scalar invm(Scalar a, Scalar p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("invm: zero has no inverse");
    // extended Euclid
    long long t = 0, newt = 1;
    long long r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<Scalar>(t);
}

}  // namespace linsite
