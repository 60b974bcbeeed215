#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

struct ring_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A polynomial ring is an ordered list of variable names. Variable position
// is significant: the term order and all exponent vectors follow it.
// Capacity is fixed at 12 variables so monomials can live in a flat array.
class Ring {
public:
    static constexpr std::size_t max_vars = 12;

    static std::shared_ptr<const Ring> create(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index(const std::string& name) const;
    std::size_t require_index(const std::string& name) const;

    bool same_as(const Ring& other) const { return names_ == other.names_; }

private:
    explicit Ring(std::vector<std::string> names);
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline void check_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (a.get() == b.get()) return;
    if (a && b && a->same_as(*b)) return;
    throw ring_mismatch_error(std::string(what) + ": operands live in different rings");
}

namespace rings {

// The coordinate ring of P^4 in the coefficient variables x0..x4.
RingPtr coords();
// Coordinates plus one formal parameter t (maps with symbolic parameter).
RingPtr coords_t();
// Coordinates plus two formal parameters t, s (composition of two maps).
RingPtr coords_ts();
// Coordinates plus a curve parameter u (restriction along parametrized curves).
RingPtr coords_u();
// Binary form variables T0, T1 with coefficients x0..x4 kept separate:
// x0..x4, a, b, c, d (symbolic 2x2 matrix action on binary quartics).
RingPtr coords_abcd();
// Univariate ring in u (parametrizations, dehomogenized forms).
RingPtr univariate(const std::string& name = "u");

} // namespace rings

} // namespace cremona
