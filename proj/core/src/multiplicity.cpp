#include "cremona/multiplicity.hpp"

#include "cremona/quartic.hpp"

namespace cremona {

namespace {

std::vector<std::size_t> x_indices(const RingPtr& ring) {
    std::vector<std::size_t> idx(5);
    for (unsigned k = 0; k <= 4; ++k) idx[k] = ring->require_index("x" + std::to_string(k));
    return idx;
}

unsigned min_degree_in(const Polynomial& p, const std::vector<std::size_t>& vars) {
    unsigned best = ~0u;
    for (const auto& t : p.terms()) {
        unsigned d = 0;
        for (auto v : vars) d += t.mono.degree_in(v);
        best = std::min(best, d);
    }
    return best;
}

} // namespace

unsigned ProjectivePoint::chart() const {
    for (unsigned i = 0; i <= 4; ++i)
        if (coords[i] != 0) return i;
    throw std::invalid_argument("ProjectivePoint: all coordinates are zero");
}

unsigned ParametrizedCurve::chart() const {
    for (unsigned i = 0; i <= 4; ++i)
        if (components[i].is_constant() && !components[i].is_zero() &&
            components[i].constant_value() == 1)
            return i;
    throw std::invalid_argument("ParametrizedCurve: no component is the constant 1");
}

ProjectivePoint ParametrizedCurve::at(const Rational& value) const {
    ProjectivePoint p{};
    for (unsigned i = 0; i <= 4; ++i)
        p.coords[i] = components[i].evaluate({value});
    return p;
}

unsigned MultiplicityValue::finite() const {
    if (!value) throw std::domain_error("MultiplicityValue: order is infinite");
    return *value;
}

MultiplicityValue mult_at_point(const Polynomial& f, const ProjectivePoint& P) {
    const RingPtr& ring = f.ring();
    if (!ring) throw std::invalid_argument("mult_at_point: polynomial without a ring");
    auto xi = x_indices(ring);
    if (!f.is_homogeneous_in(xi))
        throw std::invalid_argument("mult_at_point: input must be homogeneous in x0..x4");
    if (f.is_zero()) return {std::nullopt};

    unsigned c = P.chart();
    const Rational& scale = P.coords[c];
    std::vector<Polynomial> images;
    images.reserve(ring->size());
    for (std::size_t v = 0; v < ring->size(); ++v)
        images.push_back(Polynomial::variable(ring, v));
    for (unsigned i = 0; i <= 4; ++i) {
        if (i == c)
            images[xi[i]] = Polynomial::constant(ring, 1);
        else
            images[xi[i]] = Polynomial::constant(ring, P.coords[i] / scale) +
                            Polynomial::variable(ring, xi[i]);
    }
    Polynomial local = f.substitute(ring, images);
    if (local.is_zero()) return {std::nullopt};
    return {min_degree_in(local, xi)};
}

MultiplicityValue mult_along_curve(const Polynomial& f, const ParametrizedCurve& curve) {
    const RingPtr& ring = f.ring();
    if (!ring || ring->size() != 5)
        throw std::invalid_argument("mult_along_curve: form must live in the x0..x4 ring");
    if (f.is_zero()) return {std::nullopt};
    auto xi = x_indices(ring);
    if (!f.is_homogeneous_in(xi))
        throw std::invalid_argument("mult_along_curve: input must be homogeneous in x0..x4");

    unsigned c = curve.chart();
    RingPtr target = rings::coords_u();
    Polynomial u = Polynomial::variable(target, "u");
    std::vector<Polynomial> images(5);
    for (unsigned i = 0; i <= 4; ++i) {
        Polynomial gamma_i =
            curve.components[i].substitute(target, std::vector<Polynomial>{u});
        if (i == c)
            images[xi[i]] = Polynomial::constant(target, 1);
        else
            images[xi[i]] = gamma_i + Polynomial::variable(target, "x" + std::to_string(i));
    }
    Polynomial local = f.substitute(target, images);
    if (local.is_zero()) return {std::nullopt};
    auto txi = x_indices(target);
    return {min_degree_in(local, txi)};
}

std::array<Polynomial, 5> partials_on_curve(const Polynomial& f, const ParametrizedCurve& curve) {
    const RingPtr& ring = f.ring();
    if (!ring || ring->size() != 5)
        throw std::invalid_argument("partials_on_curve: form must live in the x0..x4 ring");
    RingPtr uring = curve.components[0].ring();
    std::vector<Polynomial> images(curve.components.begin(), curve.components.end());
    std::array<Polynomial, 5> out;
    for (unsigned i = 0; i <= 4; ++i)
        out[i] = f.derivative(i).substitute(uring, images);
    return out;
}

bool singular_along_curve(const Polynomial& f, const ParametrizedCurve& curve) {
    auto parts = partials_on_curve(f, curve);
    for (const auto& p : parts)
        if (!p.is_zero()) return false;
    return true;
}

MultConsistency sample_mult_consistency(const Polynomial& f, const ParametrizedCurve& curve,
                                        unsigned samples, std::uint64_t seed) {
    MultConsistency res;
    MultiplicityValue along = mult_along_curve(f, curve);
    if (along.is_infinite()) {
        res.detail = "form vanishes identically";
        return res;
    }
    res.curve_mult = along.finite();
    res.consistent = true;
    std::mt19937_64 rng(seed);
    for (unsigned k = 0; k < samples; ++k) {
        Rational v = random_rational(rng, 50, 7);
        MultiplicityValue at = mult_at_point(f, curve.at(v));
        ++res.samples;
        if (at.is_infinite() || at.finite() != res.curve_mult) {
            res.consistent = false;
            res.detail = "mismatch at parameter " + rational_to_string(v) + ": point order " +
                         (at.is_infinite() ? std::string("inf") : std::to_string(at.finite())) +
                         " vs curve order " + std::to_string(res.curve_mult);
            return res;
        }
    }
    return res;
}

ParametrizedCurve curve_B() {
    RingPtr r = rings::univariate("u");
    Polynomial u = Polynomial::variable(r, "u");
    ParametrizedCurve c;
    c.label = "B";
    c.components = {Polynomial::zero(r), Polynomial::constant(r, 1), u.scaled(2),
                    (u * u).scaled(3), (u * u * u).scaled(4)};
    return c;
}

ParametrizedCurve curve_C() {
    RingPtr r = rings::univariate("u");
    Polynomial u = Polynomial::variable(r, "u");
    ParametrizedCurve c;
    c.label = "C";
    c.components = {Polynomial::zero(r), Polynomial::zero(r), Polynomial::zero(r),
                    Polynomial::constant(r, 1), u.scaled(4)};
    return c;
}

ParametrizedCurve curve_T() {
    ParametrizedCurve c;
    c.label = "T";
    c.components = twisted_quartic(false);
    return c;
}

ProjectivePoint point_q() {
    ProjectivePoint p{};
    p.coords[4] = 1;
    return p;
}

} // namespace cremona
