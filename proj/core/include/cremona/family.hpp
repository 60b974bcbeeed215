#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cremona/polynomial.hpp"
#include "cremona/quartic.hpp"

namespace cremona {

// Shape parameter of a map: phi = sum_{k=0}^{m} c_k * x0^(3(m-k)) * J^k,
// homogeneous of degree 3m. The degree-13 family is m = 1 with c = (t, 0).
struct PhiSpec {
    unsigned m = 1;
    std::vector<Rational> coeffs; // c_0..c_m
};

// Uniform small-integer coefficients, c_0 kept nonzero so the map does not
// collapse onto a lower-m member times a J-power.
PhiSpec random_phi(std::mt19937_64& rng, unsigned m, long bound = 9);

// A self-map of P^4 of degree 1 + 12m with coordinates
//   f_i = sum_{j=0}^{i} C(i,j) * x_(i-j) * phi^j * J^(m(4-j)).
// phi_parts stores the c_k as polynomials so the parameter can stay
// symbolic (a ring variable) or be a fixed rational.
struct CremonaMap {
    RingPtr ring;
    unsigned m = 1;
    std::vector<Polynomial> phi_parts; // m+1 entries, no x-variables
    Polynomial phi;                    // expanded
    std::array<Polynomial, 5> coords;
    std::string label;

    unsigned degree() const { return 1 + 12 * m; }
};

// Degenerate member m = 0, phi = 0: the identity.
CremonaMap identity_map(RingPtr ring = rings::coords());
// Degree-13 family member at a fixed parameter value (phi = t * x0^3).
CremonaMap build_gt(const Rational& t);
// Family member with the parameter as a ring variable.
CremonaMap build_gt_symbolic(RingPtr ring = rings::coords_t(), const std::string& param = "t");
// Family member whose parameter slot holds an arbitrary parameter-only
// polynomial (e.g. t + s for the group-law target, -t for the inverse).
CremonaMap build_gt_param(const RingPtr& ring, const Polynomial& param_poly,
                          const std::string& label);
// Degree 1 + 12m member with explicit phi coefficients.
CremonaMap build_generalized(const PhiSpec& spec, RingPtr ring = rings::coords());

// Composition f after g (g applied first): coordinates of f evaluated on
// the coordinate tuple of g. Works through the j-graded structure of
// `outer`, so the degree-13 x degree-13 case stays tractable.
std::array<Polynomial, 5> compose(const CremonaMap& outer,
                                  const std::array<Polynomial, 5>& inner);
std::array<Polynomial, 5> compose(const CremonaMap& outer, const CremonaMap& inner);

struct CancelResult {
    std::array<Polynomial, 5> reduced;
    unsigned removed_power = 0;
};

// Divides a coordinate tuple by the largest power of J dividing every
// entry and reports that power.
CancelResult cancel_J_power(const std::array<Polynomial, 5>& coords);

struct IdentityReport {
    std::string name;
    std::string statement;
    bool holds = false;
    std::optional<unsigned> computed_exponent;
    // Independent predictions of the exponent: from degree counting and
    // from the weight of the invariant under the unipotent structure.
    std::optional<unsigned> oracle_degree_exponent;
    std::optional<unsigned> oracle_weight_exponent;
    bool oracles_agree = true;
    // Exponent printed in the source derivation, when it differs from the
    // computed value it is flagged rather than adopted.
    std::optional<unsigned> reference_exponent;
    bool reference_mismatch = false;
    std::string mode; // "exact", "modular", "exact_specialized", "full_exact"
    unsigned trials = 0;
    std::vector<std::uint64_t> primes;
    // log2 of the Schwartz-Zippel failure probability bound; 0 for exact.
    double failure_bound_log2 = 0.0;
    std::string detail;
};

// J(f_0..f_4) == J^(12m+1), verified by iterated exact division.
IdentityReport verify_J_identity(const CremonaMap& map);
// I(f_0..f_4) == I * J^(8m); the source derivation prints 12m, which is
// flagged as a mismatch while the computed 8m is verified.
IdentityReport verify_I_identity(const CremonaMap& map);
// The map sends the quadric {I = 0} into itself (I divides I after f).
bool preserves_quadric(const CremonaMap& map);
// Report form of preserves_quadric for uniform JSON output.
IdentityReport verify_quadric_preservation(const CremonaMap& map);
// The parameter-zero member cancels by exactly J^(4m) to the identity map.
IdentityReport verify_degenerate_member(unsigned m = 1);

enum class VerifyMode { modular, exact_specialized, full_exact };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::modular;
    unsigned trials = 20;
    unsigned prime_count = 3;
    unsigned prime_bits = 62;
    std::uint64_t seed = 1;
};

// g_s after g_t equals J^52 times g_(s+t), coordinatewise in x, t, s.
IdentityReport verify_group_law(const VerifyOptions& opts = {});
// g_(-t) after g_t cancels to the identity through J^56; the source
// derivation prints 42, which is flagged.
IdentityReport verify_inverse(const VerifyOptions& opts = {});

} // namespace cremona
