#include "cremona/quartic.hpp"

#include <vector>

namespace cremona {

namespace {

Rational binom_q(unsigned n, unsigned k) { return Rational(binomial(n, k)); }

// Coefficients of F(a*T0 + b*T1, c*T0 + d*T1) where the x-entries are
// variables of `ring` and a, b, c, d are given as polynomials (constants or
// variables). Shared by the symbolic action and the fixed-matrix check.
std::array<Polynomial, 5> transform_quartic_poly(const RingPtr& ring, const Polynomial& a,
                                                 const Polynomial& b, const Polynomial& c,
                                                 const Polynomial& d) {
    std::array<Polynomial, 5> out;
    for (auto& p : out) p = Polynomial::zero(ring);
    // Powers cached up to exponent 4.
    auto pows = [&](const Polynomial& p) {
        std::array<Polynomial, 5> pw;
        pw[0] = Polynomial::constant(ring, 1);
        for (unsigned i = 1; i <= 4; ++i) pw[i] = pw[i - 1] * p;
        return pw;
    };
    auto pa = pows(a), pb = pows(b), pc = pows(c), pd = pows(d);
    for (unsigned k = 0; k <= 4; ++k) {
        Polynomial xk = Polynomial::variable(ring, "x" + std::to_string(k));
        // (a T0 + b T1)^(4-k) * (c T0 + d T1)^k, collecting T0^(4-j) T1^j.
        for (unsigned i = 0; i <= 4 - k; ++i) {
            for (unsigned m = 0; m <= k; ++m) {
                unsigned j = i + m;
                Rational scale = binom_q(4, k) * binom_q(4 - k, i) * binom_q(k, m) / binom_q(4, j);
                Polynomial piece = xk * pa[4 - k - i] * pb[i] * pc[k - m] * pd[m];
                out[j] += piece.scaled(scale);
            }
        }
    }
    return out;
}

using UniPoly = std::vector<Rational>; // coefficient list, index = degree

void trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const UniPoly& p) { return int(p.size()) - 1; }

UniPoly uderiv(const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(long(i)));
    trim(d);
    return d;
}

UniPoly umod(UniPoly a, const UniPoly& b) {
    while (deg(a) >= deg(b) && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

UniPoly ugcd(UniPoly a, UniPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UniPoly r = umod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

Polynomial invariant_I(const RingPtr& ring) {
    auto v = [&](const char* n) { return Polynomial::variable(ring, n); };
    return v("x0") * v("x4") - Rational(4) * (v("x1") * v("x3")) + Rational(3) * (v("x2") * v("x2"));
}

Polynomial invariant_J(const RingPtr& ring) {
    std::array<Polynomial, 5> x;
    for (unsigned k = 0; k <= 4; ++k) x[k] = Polynomial::variable(ring, "x" + std::to_string(k));
    return hankel_det(x);
}

Rational invariant_I_value(const BinaryQuartic& q) {
    const auto& x = q.x;
    return x[0] * x[4] - 4 * x[1] * x[3] + 3 * x[2] * x[2];
}

Rational invariant_J_value(const BinaryQuartic& q) {
    const auto& x = q.x;
    return x[0] * (x[2] * x[4] - x[3] * x[3]) - x[1] * (x[1] * x[4] - x[2] * x[3]) +
           x[2] * (x[1] * x[3] - x[2] * x[2]);
}

Polynomial hankel_det(const std::array<Polynomial, 5>& y) {
    Polynomial m0 = y[2] * y[4] - y[3] * y[3];
    Polynomial m1 = y[1] * y[4] - y[2] * y[3];
    Polynomial m2 = y[1] * y[3] - y[2] * y[2];
    return y[0] * m0 - y[1] * m1 + y[2] * m2;
}

BinaryQuartic gl2_action(const Matrix2& A, const BinaryQuartic& q) {
    BinaryQuartic out{};
    std::array<Rational, 5> pa, pb, pc, pd;
    pa[0] = pb[0] = pc[0] = pd[0] = 1;
    for (unsigned i = 1; i <= 4; ++i) {
        pa[i] = pa[i - 1] * A.a;
        pb[i] = pb[i - 1] * A.b;
        pc[i] = pc[i - 1] * A.c;
        pd[i] = pd[i - 1] * A.d;
    }
    for (unsigned k = 0; k <= 4; ++k) {
        for (unsigned i = 0; i <= 4 - k; ++i) {
            for (unsigned m = 0; m <= k; ++m) {
                unsigned j = i + m;
                Rational term = binom_q(4, k) * binom_q(4 - k, i) * binom_q(k, m) / binom_q(4, j);
                out.x[j] += term * q.x[k] * pa[4 - k - i] * pb[i] * pc[k - m] * pd[m];
            }
        }
    }
    return out;
}

std::array<Polynomial, 5> gl2_action_symbolic() {
    RingPtr ring = rings::coords_abcd();
    return transform_quartic_poly(ring, Polynomial::variable(ring, "a"),
                                  Polynomial::variable(ring, "b"),
                                  Polynomial::variable(ring, "c"),
                                  Polynomial::variable(ring, "d"));
}

WeightCheckResult weight_check_symbolic() {
    RingPtr ring = rings::coords_abcd();
    auto xp = transform_quartic_poly(ring, Polynomial::variable(ring, "a"),
                                     Polynomial::variable(ring, "b"),
                                     Polynomial::variable(ring, "c"),
                                     Polynomial::variable(ring, "d"));
    Polynomial det = Polynomial::variable(ring, "a") * Polynomial::variable(ring, "d") -
                     Polynomial::variable(ring, "b") * Polynomial::variable(ring, "c");
    Polynomial I_new = xp[0] * xp[4] - Rational(4) * (xp[1] * xp[3]) + Rational(3) * (xp[2] * xp[2]);
    Polynomial J_new = hankel_det(xp);
    bool i_ok = I_new == det.pow(4) * invariant_I(ring);
    bool j_ok = J_new == det.pow(6) * invariant_J(ring);
    return {i_ok, j_ok};
}

WeightCheckResult weight_check(const Matrix2& A) {
    RingPtr ring = rings::coords();
    auto cst = [&](const Rational& v) { return Polynomial::constant(ring, v); };
    auto xp = transform_quartic_poly(ring, cst(A.a), cst(A.b), cst(A.c), cst(A.d));
    Rational det = A.det();
    Polynomial I_new = xp[0] * xp[4] - Rational(4) * (xp[1] * xp[3]) + Rational(3) * (xp[2] * xp[2]);
    Polynomial J_new = hankel_det(xp);
    Rational det4 = det * det * det * det;
    bool i_ok = I_new == invariant_I(ring).scaled(det4);
    bool j_ok = J_new == invariant_J(ring).scaled(det4 * det * det);
    return {i_ok, j_ok};
}

NullformResult nullform_test(const BinaryQuartic& q) {
    NullformResult res{};
    res.invariants_vanish = invariant_I_value(q) == 0 && invariant_J_value(q) == 0;
    if (q.x[2] == 0 && q.x[3] == 0 && q.x[4] == 0) {
        // F = T0^3 (x0 T0 + 4 x1 T1): triple factor T0 (or the zero form).
        res.has_triple_factor = true;
        return res;
    }
    // Dehomogenize: f(u) = F(1, u). A root of multiplicity >= 3 survives in
    // gcd(f, f', f''). The triple-factor-at-infinity case is the branch above.
    UniPoly f(5);
    for (unsigned k = 0; k <= 4; ++k) f[k] = binom_q(4, k) * q.x[k];
    trim(f);
    UniPoly g = ugcd(ugcd(f, uderiv(f)), uderiv(uderiv(f)));
    res.has_triple_factor = deg(g) >= 1;
    return res;
}

std::array<Polynomial, 5> twisted_quartic(bool flip) {
    RingPtr ring = rings::univariate("u");
    Polynomial u = Polynomial::variable(ring, "u");
    std::array<Polynomial, 5> out;
    for (unsigned k = 0; k <= 4; ++k) out[k] = u.pow(flip ? 4 - k : k);
    return out;
}

BinaryQuartic twisted_quartic_point(const Rational& u, bool flip) {
    BinaryQuartic q{};
    Rational p(1);
    for (unsigned k = 0; k <= 4; ++k) {
        q.x[flip ? 4 - k : k] = p;
        p *= u;
    }
    return q;
}

} // namespace cremona
