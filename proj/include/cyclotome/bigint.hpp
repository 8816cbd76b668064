#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace cyclotome {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sgn(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

inline Int ipow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int igcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact quotient; caller guarantees divisibility.
inline Int idiv_exact(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Euler totient by trial factorization. Fine for the small m used here.
inline long euler_phi(long m) {
    long phi = 1, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        long pk = 1;
        while (n % p == 0) { n /= p; pk *= p; }
        phi *= pk - pk / p;
    }
    if (n > 1) phi *= n - 1;
    return phi;
}

inline int moebius(long m) {
    int mu = 1;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;
        mu = -mu;
    }
    if (m > 1) mu = -mu;
    return mu;
}

}  // namespace cyclotome
