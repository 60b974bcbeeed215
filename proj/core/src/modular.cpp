#include "cremona/modular.hpp"

namespace cremona {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((unsigned __int128)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1u) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1u;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    // m is prime in every call site; Fermat inverse.
    a %= m;
    if (a == 0) throw bad_prime_error("invmod: zero has no inverse");
    return powmod(a, m - 2, m);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) { d >>= 1u; ++s; }
    // Deterministic Miller-Rabin base set for 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t random_prime(std::mt19937_64& rng, unsigned bits) {
    if (bits < 3 || bits > 62)
        throw std::invalid_argument("random_prime: bits must be in [3, 62]");
    std::uint64_t lo = std::uint64_t(1) << (bits - 1);
    std::uint64_t span = lo;
    std::uniform_int_distribution<std::uint64_t> dist(0, span - 1);
    for (;;) {
        std::uint64_t cand = lo + dist(rng);
        cand |= 1u;
        if (is_prime_u64(cand)) return cand;
    }
}

PrimeContext make_prime_context(std::mt19937_64& rng, unsigned bits) {
    return PrimeContext{random_prime(rng, bits), bits};
}

std::uint64_t rational_mod(const Rational& q, std::uint64_t p) {
    Integer num = q.get_num() % Integer(static_cast<unsigned long>(p));
    Integer den = q.get_den() % Integer(static_cast<unsigned long>(p));
    // num is in (-p, p) after reduction; get_ui reads the absolute value.
    std::uint64_t n = num >= 0 ? num.get_ui() : p - num.get_ui();
    std::uint64_t d = den.get_ui();
    if (d == 0) throw bad_prime_error("rational_mod: denominator vanishes mod p");
    if (n == 0 || n == p) return 0;
    return mulmod(n, invmod(d, p), p);
}

ModPolynomial reduce_mod(const Polynomial& p, const PrimeContext& ctx) {
    ModPolynomial mp(p.ring(), ctx.modulus);
    mp.terms_.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::uint64_t c = rational_mod(t.coeff, ctx.modulus);
        if (c != 0) mp.terms_.emplace_back(t.mono, c);
    }
    return mp;
}

std::uint64_t ModPolynomial::evaluate(const std::vector<std::uint64_t>& values) const {
    if (!ring_) throw std::invalid_argument("ModPolynomial::evaluate: missing ring");
    if (values.size() != ring_->size())
        throw std::invalid_argument("ModPolynomial::evaluate: need one value per variable");
    std::uint64_t sum = 0;
    for (const auto& [m, c] : terms_) {
        std::uint64_t prod = c;
        for (std::size_t v = 0; v < values.size(); ++v) {
            unsigned e = m.degree_in(v);
            if (e) prod = mulmod(prod, powmod(values[v] % modulus_, e, modulus_), modulus_);
        }
        sum = (sum + prod) % modulus_;
    }
    return sum;
}

std::vector<std::uint64_t> random_mod_point(std::mt19937_64& rng, std::uint64_t p, std::size_t n) {
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::vector<std::uint64_t> pt(n);
    for (auto& v : pt) v = dist(rng);
    return pt;
}

} // namespace cremona
