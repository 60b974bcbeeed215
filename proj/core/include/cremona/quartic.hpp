#pragma once

#include <array>

#include "cremona/polynomial.hpp"

namespace cremona {

// Binary quartic in the binomial-scaled coefficient basis:
//   F(T0, T1) = sum_k C(4,k) * x_k * T0^(4-k) * T1^k.
// All coefficient-space formulas in this library (the invariants I and J,
// the map family, the distinguished curves) are written in this basis.
struct BinaryQuartic {
    std::array<Rational, 5> x;
};

struct Matrix2 {
    Rational a, b, c, d;
    Rational det() const { return a * d - b * c; }
};

// Quadric invariant, weight 4: I = x0*x4 - 4*x1*x3 + 3*x2^2.
Polynomial invariant_I(const RingPtr& ring);
// Determinantal invariant, weight 6: the Hankel determinant
//   J = x0*x2*x4 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^3.
Polynomial invariant_J(const RingPtr& ring);

Rational invariant_I_value(const BinaryQuartic& q);
Rational invariant_J_value(const BinaryQuartic& q);

// det [[y0,y1,y2],[y1,y2,y3],[y2,y3,y4]] by cofactor expansion along the
// first row. Entries may be arbitrary polynomials; this is how J is
// evaluated on the coordinates of a map without expanding J term by term.
Polynomial hankel_det(const std::array<Polynomial, 5>& y);

// Substitution convention, fixed once: the matrix acts on the binary form
// variables by T0 -> a*T0 + b*T1, T1 -> c*T0 + d*T1, and gl2_action returns
// the coefficients of F(a*T0 + b*T1, c*T0 + d*T1) in the same basis.
BinaryQuartic gl2_action(const Matrix2& A, const BinaryQuartic& q);

// Transformed coefficients as polynomials in x0..x4, a, b, c, d.
std::array<Polynomial, 5> gl2_action_symbolic();

struct WeightCheckResult {
    bool i_covariant; // I(A.x) == det(A)^4 * I(x)
    bool j_covariant; // J(A.x) == det(A)^6 * J(x)
};

// Full symbolic identity over the 9-variable ring: proves the covariance
// for every matrix at once.
WeightCheckResult weight_check_symbolic();
// Same identity with a fixed rational matrix, symbolic x.
WeightCheckResult weight_check(const Matrix2& A);

struct NullformResult {
    bool has_triple_factor;  // some linear form divides F at least 3 times
    bool invariants_vanish;  // I(q) == 0 and J(q) == 0
};

NullformResult nullform_test(const BinaryQuartic& q);

// Rational normal curve of quartics with a 4-fold linear factor:
// coefficients of (T0 + u*T1)^4, i.e. (1, u, u^2, u^3, u^4) in the scaled
// basis. flip = true gives the chart around the opposite end, (u^4, u^3,
// u^2, u, 1). Both I and J vanish identically along it.
std::array<Polynomial, 5> twisted_quartic(bool flip = false);
BinaryQuartic twisted_quartic_point(const Rational& u, bool flip = false);

} // namespace cremona
