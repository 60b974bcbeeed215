#pragma once

#include <array>
#include <optional>
#include <string>

#include "cremona/polynomial.hpp"

namespace cremona {

// Point of P^4 given by homogeneous coordinates, not all zero.
struct ProjectivePoint {
    std::array<Rational, 5> coords;
    // First index with a nonzero entry; the affine chart used for local
    // computations.
    unsigned chart() const;
};

// Rational curve in P^4 given by polynomial components in one parameter.
// One component must be the constant 1: that coordinate is the affine
// chart in which local orders along the curve are computed.
struct ParametrizedCurve {
    std::array<Polynomial, 5> components; // in a univariate ring
    std::string label;
    unsigned chart() const;
    ProjectivePoint at(const Rational& value) const;
};

// Order of vanishing; empty when the input polynomial is identically zero.
struct MultiplicityValue {
    std::optional<unsigned> value;
    bool is_infinite() const { return !value.has_value(); }
    unsigned finite() const;
};

// Order of vanishing of a homogeneous f at a point: the least total degree
// appearing in the local expansion of f in the affine chart of P.
MultiplicityValue mult_at_point(const Polynomial& f, const ProjectivePoint& P);

// Order of vanishing of f along the curve at its generic point: substitute
// x_i -> gamma_i(u) + x_i into f and take the least x-degree that occurs.
MultiplicityValue mult_along_curve(const Polynomial& f, const ParametrizedCurve& curve);

// Each partial derivative of f composed with the parametrization; the
// curve lies in the singular locus of {f = 0} iff all five vanish.
std::array<Polynomial, 5> partials_on_curve(const Polynomial& f, const ParametrizedCurve& curve);
bool singular_along_curve(const Polynomial& f, const ParametrizedCurve& curve);

struct MultConsistency {
    bool consistent = false;   // every sampled point matched the curve order
    unsigned samples = 0;
    unsigned curve_mult = 0;
    std::string detail;
};

// At `samples` random rational parameter values, the pointwise order must
// equal the generic order along the curve.
MultConsistency sample_mult_consistency(const Polynomial& f, const ParametrizedCurve& curve,
                                        unsigned samples, std::uint64_t seed);

// The distinguished geometry of the construction, in the scaled
// coefficient basis:
//   B: coefficients of T1*(T0 + v*T1)^3, scaled to (0, 1, 2v, 3v^2, 4v^3)
//   C: coefficients of (T0 + v*T1)*T1^3, scaled to (0, 0, 0, 1, 4v)
//   T: the quartics with a 4-fold linear factor, (1, u, u^2, u^3, u^4)
//   q: the point (0:0:0:0:1), the common closure point of B and C.
ParametrizedCurve curve_B();
ParametrizedCurve curve_C();
ParametrizedCurve curve_T();
ProjectivePoint point_q();

} // namespace cremona
