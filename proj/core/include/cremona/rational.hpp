#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace cremona {

// Exact rational arithmetic. All coefficient math in the library goes
// through this type; nothing is ever rounded.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "n" or "n/d" with optional sign; throws on anything else.
Rational rational_from_string(const std::string& text);

// Always prints as "num/den", denominator positive, fraction reduced.
// This is the wire format used by the serializers.
std::string rational_to_fraction(const Rational& q);

// Human-readable: integer values print without "/1".
std::string rational_to_string(const Rational& q);

// Uniform numerator in [-bound, bound] excluding 0, denominator in [1, den_bound].
Rational random_rational(std::mt19937_64& rng, long bound = 9, long den_bound = 3);

inline Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace cremona
