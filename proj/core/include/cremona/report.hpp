#pragma once

#include <array>
#include <string>
#include <vector>

#include "cremona/family.hpp"
#include "cremona/multiplicity.hpp"

namespace cremona {

// The hypersurfaces cutting out the geometry: the quadric {I = 0}, the
// determinantal cubic {J = 0}, and the hyperplane {x0 = 0}.
struct HypersurfaceSet {
    Polynomial quadric;
    Polynomial determinantal;
    Polynomial hyperplane;
};
HypersurfaceSet standard_hypersurfaces(const RingPtr& ring);

struct HyperplaneRestriction {
    std::array<Polynomial, 5> restricted; // f_i at x0 = 0
    unsigned j_exponent = 0;              // 4m
    bool factors = false;                 // restricted_i == L_i * (J at x0=0)^(4m), L_i linear
    bool matches_coordinates = false;     // L_i == x_i at x0 = 0 (holds for the family)
};
HyperplaneRestriction restrict_to_hyperplane(const CremonaMap& map);

struct DeterminantalRestriction {
    std::array<Polynomial, 5> remainders; // canonical remainder of f_i mod J
    bool first_four_vanish = false;
    Polynomial expected_last;             // c_0^4 * x0^(12m+1); t^4 * x0^13 for the family
    bool last_matches = false;
};
DeterminantalRestriction restrict_to_determinantal(const CremonaMap& map);

struct FundamentalComponent {
    std::string name; // "B", "C", "T", "q"
    std::string kind; // "curve" or "point"
    bool on_quadric = false;
    bool on_determinantal = false;
    bool on_hyperplane = false;
};
// The distinguished subvarieties where every coordinate of the family
// vanishes, with their membership in the three hypersurfaces.
std::vector<FundamentalComponent> base_locus_components();

struct CommonFactorCheck {
    bool no_common_monomial = false;
    bool j_not_common = false; // J fails to divide at least one coordinate
    bool i_not_common = false;
    unsigned j_witness = 0;    // coordinate where the J-division fails
    unsigned i_witness = 0;
};
CommonFactorCheck no_common_factor_check(const CremonaMap& map);

struct OrderRow {
    std::string place;                      // "q", "B", "C"
    std::array<unsigned, 5> per_coordinate; // order of each f_i
    unsigned order = 0;                     // min over coordinates
    unsigned witness = 0;                   // coordinate achieving it
};

struct CounterexampleReport {
    std::string map_label;
    Rational t;
    unsigned degree = 0;
    unsigned m = 0;

    IdentityReport j_identity;
    IdentityReport i_identity;
    bool quadric_preserved = false;

    std::vector<FundamentalComponent> components;
    bool hyperplane_restriction_ok = false;
    bool determinantal_restriction_ok = false;
    CommonFactorCheck common_factor;

    OrderRow point_row;                  // at q
    std::vector<OrderRow> curve_rows;    // along B, C
    // Orders of the cubic J itself at the same places, plus along T.
    unsigned det_order_at_q = 0;
    unsigned det_order_along_T = 0;
    unsigned det_order_along_B = 0;
    unsigned det_order_along_C = 0;
    bool det_singular_along_T = false;

    Rational point_threshold; // 2*degree/3
    Rational curve_threshold; // degree/3
    bool point_exceeds = false; // point order > 2n/3 somewhere
    bool curve_exceeds = false; // curve order > n/3 somewhere
    // No center of high multiplicity exists although the map is not an
    // automorphism: the classical untwisting bound has no witness.
    bool counterexample = false;

    std::uint64_t seed = 0;
    unsigned on_quadric_samples = 0;
    // Samples where some coordinate of the image was nonzero; equality
    // with on_quadric_samples means no sampled point hit the base locus.
    unsigned nonzero_image_samples = 0;
    bool images_stay_on_quadric = false;
};

CounterexampleReport build_report(const Rational& t, std::uint64_t seed = 1,
                                  unsigned samples = 100);

// Deterministic serializations: fixed key order, exact fractions as
// "num/den" strings, no timestamps.
std::string identity_report_json(const IdentityReport& rep);
std::string report_to_json(const CounterexampleReport& rep);
std::string report_to_text(const CounterexampleReport& rep);

} // namespace cremona
