#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/monomial.hpp"
#include "cremona/rational.hpp"
#include "cremona/ring.hpp"

namespace cremona {

struct Term {
    Monomial mono;
    Rational coeff;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in strictly decreasing graded lexicographic order and
// never carry a zero coefficient, so representation equality is value
// equality. All operations are exact.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(const RingPtr& ring, std::size_t index, unsigned exp = 1);
    static Polynomial variable(const RingPtr& ring, const std::string& name, unsigned exp = 1);
    static Polynomial from_monomial(RingPtr ring, const Monomial& m, const Rational& c);
    // Terms in any order, duplicates allowed; normalizes.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    // Value as a constant; throws if not constant.
    Rational constant_value() const;

    // Zero polynomial has no degree.
    std::optional<unsigned> degree() const;
    // Max over terms of the exponent sum restricted to the given variables.
    std::optional<unsigned> degree_in(const std::vector<std::size_t>& vars) const;
    std::optional<unsigned> min_degree() const;
    bool is_homogeneous() const;
    bool is_homogeneous_in(const std::vector<std::size_t>& vars) const;

    const Term& leading_term() const;
    // Largest monomial dividing every term.
    Monomial monomial_content() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    Polynomial scaled(const Rational& c) const;
    Polynomial mul_monomial(const Monomial& m, const Rational& c) const;
    Polynomial pow(unsigned n) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Replaces every variable by its image; images live in a common target
    // ring. images.size() must equal ring().size().
    Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;
    // Named partial substitution: unmentioned variables map to the variable
    // of the same name in the target ring.
    Polynomial substitute(const RingPtr& target,
                          const std::map<std::string, Polynomial>& images) const;

    Rational evaluate(const std::vector<Rational>& values) const;

    Polynomial derivative(std::size_t var) const;
    Polynomial derivative(const std::string& var) const;

    // Single-divisor division with remainder: *this == q * d + r and no
    // term of r is divisible by the leading monomial of d. The pair (q, r)
    // is uniquely determined by the term order.
    std::pair<Polynomial, Polynomial> div_rem(const Polynomial& d) const;
    // Quotient when division is exact, nullopt otherwise.
    std::optional<Polynomial> exact_divide(const Polynomial& d) const;

    // Split by exponent sum over the given variables (all variables if the
    // list is empty). Keys are the degrees that occur.
    std::map<unsigned, Polynomial> homogeneous_components(
        const std::vector<std::size_t>& vars = {}) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void normalize();
    friend class PolyBuilder;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Accumulates term contributions in a hash map, then assembles a normalized
// polynomial. Used by the heavier kernels (products, substitutions).
class PolyBuilder {
public:
    explicit PolyBuilder(RingPtr ring) : ring_(std::move(ring)) {}
    void add(const Monomial& m, const Rational& c);
    void add_product(const Polynomial& a, const Polynomial& b);
    void add_scaled(const Polynomial& p, const Rational& c);
    Polynomial take();

private:
    RingPtr ring_;
    std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

// Repeated-squaring power with sparse products.
inline Polynomial pow(const Polynomial& p, unsigned n) { return p.pow(n); }

} // namespace cremona
