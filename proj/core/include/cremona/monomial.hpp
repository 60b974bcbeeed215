#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "cremona/ring.hpp"

namespace cremona {

// Exponent vector, fixed capacity, unused slots zero. Total degrees stay
// far below 2^16 in every computation this library performs (the largest
// expansions reach degree a few hundred).
struct Monomial {
    std::array<std::uint16_t, Ring::max_vars> e{};

    static Monomial one() { return Monomial{}; }

    static Monomial variable(std::size_t i, std::uint16_t exp = 1) {
        Monomial m;
        m.e.at(i) = exp;
        return m;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto v : e) d += v;
        return d;
    }

    unsigned degree_in(std::size_t i) const { return e.at(i); }

    bool is_one() const {
        for (auto v : e)
            if (v) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r;
        for (std::size_t i = 0; i < e.size(); ++i) {
            unsigned s = unsigned(e[i]) + unsigned(m.e[i]);
            if (s > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
            r.e[i] = std::uint16_t(s);
        }
        return r;
    }

    // Exact quotient; caller must have checked divisibility.
    Monomial operator/(const Monomial& m) const {
        Monomial r;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (m.e[i] > e[i]) throw std::domain_error("monomial quotient not exact");
            r.e[i] = std::uint16_t(e[i] - m.e[i]);
        }
        return r;
    }

    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
};

// Graded lexicographic: higher total degree first, ties broken lexically
// with earlier variables more significant.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

inline bool grlex_greater(const Monomial& a, const Monomial& b) { return grlex_less(b, a); }

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto v : m.e) {
            h ^= v;
            h *= 0x100000001b3ull;
        }
        return std::size_t(h);
    }
};

} // namespace cremona
