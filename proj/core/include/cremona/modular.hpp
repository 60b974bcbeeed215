#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cremona/polynomial.hpp"

namespace cremona {

struct bad_prime_error : std::domain_error {
    using std::domain_error::domain_error;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
bool is_prime_u64(std::uint64_t n);

// Deterministically draws a prime of exactly `bits` bits from the rng.
std::uint64_t random_prime(std::mt19937_64& rng, unsigned bits);

// A fixed odd prime modulus for probabilistic identity checking.
struct PrimeContext {
    std::uint64_t modulus;
    unsigned bits;
};

PrimeContext make_prime_context(std::mt19937_64& rng, unsigned bits = 62);

// Rational residue num * den^-1 mod p; throws bad_prime_error when the
// denominator vanishes mod p (caller should retry with another prime).
std::uint64_t rational_mod(const Rational& q, std::uint64_t p);

// Coefficient image of an exact polynomial in Z/p, same monomial layout.
class ModPolynomial {
public:
    ModPolynomial() = default;
    ModPolynomial(RingPtr ring, std::uint64_t modulus)
        : ring_(std::move(ring)), modulus_(modulus) {}

    const RingPtr& ring() const { return ring_; }
    std::uint64_t modulus() const { return modulus_; }
    const std::vector<std::pair<Monomial, std::uint64_t>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::uint64_t evaluate(const std::vector<std::uint64_t>& values) const;

    friend ModPolynomial reduce_mod(const Polynomial& p, const PrimeContext& ctx);

private:
    RingPtr ring_;
    std::uint64_t modulus_ = 0;
    std::vector<std::pair<Monomial, std::uint64_t>> terms_;
};

ModPolynomial reduce_mod(const Polynomial& p, const PrimeContext& ctx);

// Uniform point of (Z/p)^n.
std::vector<std::uint64_t> random_mod_point(std::mt19937_64& rng, std::uint64_t p, std::size_t n);

} // namespace cremona
