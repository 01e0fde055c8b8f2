#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lisq {

// Exact nonnegative counts (f^lambda, ell_{n,k}, ...) and signed L-operator
// iterates.  All arithmetic is arbitrary precision; nothing in the library
// ever rounds a count.
using Big = mpz_class;
using Rat = mpq_class;

inline Big factorial(unsigned n) {
    Big r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Big binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Big r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// multinomial(n; k1,...,km) as a product of binomials, sum(ki) must equal n.
inline Big multinomial(unsigned n, std::initializer_list<unsigned> ks) {
    Big r = 1;
    unsigned rest = n;
    for (unsigned k : ks) {
        r *= binomial(rest, k);
        rest -= k;
    }
    return r;
}

inline std::string to_decimal(const Big& v) { return v.get_str(10); }

}  // namespace lisq
