#include "cremona/report.hpp"

#include <sstream>

#include <json.hpp>

namespace cremona {

namespace {

using ordered_json = nlohmann::ordered_json;

Polynomial restrict_x0(const Polynomial& p) {
    const RingPtr& ring = p.ring();
    std::map<std::string, Polynomial> sub;
    sub.emplace("x0", Polynomial::zero(ring));
    return p.substitute(ring, sub);
}

} // namespace

HypersurfaceSet standard_hypersurfaces(const RingPtr& ring) {
    return {invariant_I(ring), invariant_J(ring), Polynomial::variable(ring, "x0")};
}

HyperplaneRestriction restrict_to_hyperplane(const CremonaMap& map) {
    HyperplaneRestriction res;
    res.j_exponent = 4 * map.m;
    const RingPtr& ring = map.ring;
    Polynomial J0 = restrict_x0(invariant_J(ring));
    Polynomial J0e = J0.pow(res.j_exponent);
    res.factors = true;
    res.matches_coordinates = true;
    for (unsigned i = 0; i <= 4; ++i) {
        res.restricted[i] = restrict_x0(map.coords[i]);
        Polynomial xi0 = restrict_x0(Polynomial::variable(ring, "x" + std::to_string(i)));
        if (res.restricted[i].is_zero()) {
            res.matches_coordinates &= xi0.is_zero();
            continue;
        }
        auto L = res.restricted[i].exact_divide(J0e);
        if (!L || L->degree().value_or(0) > 1) {
            res.factors = false;
            res.matches_coordinates = false;
            continue;
        }
        res.matches_coordinates &= (*L == xi0);
    }
    return res;
}

DeterminantalRestriction restrict_to_determinantal(const CremonaMap& map) {
    DeterminantalRestriction res;
    const RingPtr& ring = map.ring;
    Polynomial J = invariant_J(ring);
    res.first_four_vanish = true;
    for (unsigned i = 0; i <= 4; ++i) {
        res.remainders[i] = map.coords[i].div_rem(J).second;
        if (i < 4) res.first_four_vanish &= res.remainders[i].is_zero();
    }
    res.expected_last = map.phi_parts[0].pow(4) *
                        Polynomial::variable(ring, "x0", 12 * map.m + 1);
    res.last_matches = (res.remainders[4] == res.expected_last);
    return res;
}

std::vector<FundamentalComponent> base_locus_components() {
    RingPtr ring = rings::coords();
    auto hs = standard_hypersurfaces(ring);
    RingPtr uring = rings::univariate("u");

    std::vector<FundamentalComponent> out;
    auto curve_membership = [&](const ParametrizedCurve& curve, const std::string& name) {
        FundamentalComponent comp;
        comp.name = name;
        comp.kind = "curve";
        std::vector<Polynomial> images(curve.components.begin(), curve.components.end());
        comp.on_quadric = hs.quadric.substitute(uring, images).is_zero();
        comp.on_determinantal = hs.determinantal.substitute(uring, images).is_zero();
        comp.on_hyperplane = hs.hyperplane.substitute(uring, images).is_zero();
        return comp;
    };
    out.push_back(curve_membership(curve_B(), "B"));
    out.push_back(curve_membership(curve_C(), "C"));
    out.push_back(curve_membership(curve_T(), "T"));

    FundamentalComponent q;
    q.name = "q";
    q.kind = "point";
    ProjectivePoint P = point_q();
    std::vector<Rational> vals(P.coords.begin(), P.coords.end());
    q.on_quadric = hs.quadric.evaluate(vals) == 0;
    q.on_determinantal = hs.determinantal.evaluate(vals) == 0;
    q.on_hyperplane = hs.hyperplane.evaluate(vals) == 0;
    out.push_back(q);
    return out;
}

CommonFactorCheck no_common_factor_check(const CremonaMap& map) {
    CommonFactorCheck res;
    Monomial common = map.coords[0].monomial_content();
    for (unsigned i = 1; i <= 4; ++i) {
        Monomial c = map.coords[i].monomial_content();
        for (std::size_t v = 0; v < common.e.size(); ++v)
            common.e[v] = std::min(common.e[v], c.e[v]);
    }
    res.no_common_monomial = common.is_one();

    Polynomial J = invariant_J(map.ring);
    Polynomial I = invariant_I(map.ring);
    res.j_not_common = false;
    res.i_not_common = false;
    for (unsigned i = 0; i <= 4; ++i) {
        if (!res.j_not_common && !map.coords[i].exact_divide(J)) {
            res.j_not_common = true;
            res.j_witness = i;
        }
        if (!res.i_not_common && !map.coords[i].exact_divide(I)) {
            res.i_not_common = true;
            res.i_witness = i;
        }
    }
    return res;
}

namespace {

OrderRow order_row_at_point(const CremonaMap& map, const ProjectivePoint& P,
                            const std::string& place) {
    OrderRow row;
    row.place = place;
    row.order = ~0u;
    for (unsigned i = 0; i <= 4; ++i) {
        row.per_coordinate[i] = mult_at_point(map.coords[i], P).finite();
        if (row.per_coordinate[i] < row.order) {
            row.order = row.per_coordinate[i];
            row.witness = i;
        }
    }
    return row;
}

OrderRow order_row_along_curve(const CremonaMap& map, const ParametrizedCurve& curve) {
    OrderRow row;
    row.place = curve.label;
    row.order = ~0u;
    for (unsigned i = 0; i <= 4; ++i) {
        row.per_coordinate[i] = mult_along_curve(map.coords[i], curve).finite();
        if (row.per_coordinate[i] < row.order) {
            row.order = row.per_coordinate[i];
            row.witness = i;
        }
    }
    return row;
}

} // namespace

CounterexampleReport build_report(const Rational& t, std::uint64_t seed, unsigned samples) {
    CounterexampleReport rep;
    CremonaMap map = build_gt(t);
    rep.map_label = map.label;
    rep.t = t;
    rep.degree = map.degree();
    rep.m = map.m;
    rep.seed = seed;

    rep.j_identity = verify_J_identity(map);
    rep.i_identity = verify_I_identity(map);
    rep.quadric_preserved = preserves_quadric(map);

    rep.components = base_locus_components();
    auto hyp = restrict_to_hyperplane(map);
    rep.hyperplane_restriction_ok = hyp.factors && hyp.matches_coordinates;
    auto det = restrict_to_determinantal(map);
    rep.determinantal_restriction_ok = det.first_four_vanish && det.last_matches;
    rep.common_factor = no_common_factor_check(map);

    rep.point_row = order_row_at_point(map, point_q(), "q");
    rep.curve_rows.push_back(order_row_along_curve(map, curve_B()));
    rep.curve_rows.push_back(order_row_along_curve(map, curve_C()));

    RingPtr ring = rings::coords();
    Polynomial J = invariant_J(ring);
    rep.det_order_at_q = mult_at_point(J, point_q()).finite();
    rep.det_order_along_T = mult_along_curve(J, curve_T()).finite();
    rep.det_order_along_B = mult_along_curve(J, curve_B()).finite();
    rep.det_order_along_C = mult_along_curve(J, curve_C()).finite();
    rep.det_singular_along_T = singular_along_curve(J, curve_T());

    rep.point_threshold = Rational(2 * long(rep.degree), 3);
    rep.curve_threshold = Rational(long(rep.degree), 3);
    rep.point_exceeds = Rational(long(rep.point_row.order)) > rep.point_threshold;
    rep.curve_exceeds = false;
    for (const auto& row : rep.curve_rows)
        rep.curve_exceeds |= Rational(long(row.order)) > rep.curve_threshold;
    rep.counterexample = rep.j_identity.holds && rep.i_identity.holds && !rep.point_exceeds &&
                         !rep.curve_exceeds;

    // Random points of the quadric: solve I = 0 for x4 after drawing the
    // first four coordinates, then check the image satisfies I = 0 again.
    std::mt19937_64 rng(seed);
    rep.images_stay_on_quadric = true;
    Polynomial I = invariant_I(ring);
    for (unsigned k = 0; k < samples; ++k) {
        Rational x0 = random_rational(rng), x1 = random_rational(rng);
        Rational x2 = random_rational(rng), x3 = random_rational(rng);
        Rational x4 = (4 * x1 * x3 - 3 * x2 * x2) / x0;
        std::vector<Rational> P{x0, x1, x2, x3, x4};
        std::vector<Rational> image(5);
        bool all_zero = true;
        for (unsigned i = 0; i <= 4; ++i) {
            image[i] = map.coords[i].evaluate(P);
            all_zero &= (image[i] == 0);
        }
        ++rep.on_quadric_samples;
        if (all_zero) continue; // base point: no image to test
        ++rep.nonzero_image_samples;
        if (I.evaluate(image) != 0) {
            rep.images_stay_on_quadric = false;
            break;
        }
    }
    return rep;
}

namespace {

ordered_json identity_json(const IdentityReport& rep) {
    ordered_json j;
    j["name"] = rep.name;
    j["statement"] = rep.statement;
    j["holds"] = rep.holds;
    if (rep.computed_exponent) j["exponent"] = *rep.computed_exponent;
    else j["exponent"] = nullptr;
    if (rep.oracle_degree_exponent) j["oracle_degree"] = *rep.oracle_degree_exponent;
    if (rep.oracle_weight_exponent) j["oracle_weight"] = *rep.oracle_weight_exponent;
    j["oracles_agree"] = rep.oracles_agree;
    if (rep.reference_exponent) j["reference_exponent"] = *rep.reference_exponent;
    j["reference_mismatch"] = rep.reference_mismatch;
    j["mode"] = rep.mode;
    if (rep.trials) j["trials"] = rep.trials;
    if (!rep.primes.empty()) j["primes"] = rep.primes;
    if (rep.failure_bound_log2 != 0.0) j["failure_bound_log2"] = rep.failure_bound_log2;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j;
}

} // namespace

std::string identity_report_json(const IdentityReport& rep) {
    return identity_json(rep).dump();
}

std::string report_to_json(const CounterexampleReport& rep) {
    ordered_json j;
    j["map"] = {{"label", rep.map_label},
                {"t", rational_to_fraction(rep.t)},
                {"degree", rep.degree},
                {"m", rep.m}};
    j["identities"] = {{"j", identity_json(rep.j_identity)},
                       {"i", identity_json(rep.i_identity)},
                       {"quadric_preserved", rep.quadric_preserved}};

    ordered_json comps = ordered_json::array();
    for (const auto& c : rep.components)
        comps.push_back({{"name", c.name},
                         {"kind", c.kind},
                         {"on_quadric", c.on_quadric},
                         {"on_determinantal", c.on_determinantal},
                         {"on_hyperplane", c.on_hyperplane}});
    j["base_locus"] = {{"components", comps},
                       {"hyperplane_restriction_ok", rep.hyperplane_restriction_ok},
                       {"determinantal_restriction_ok", rep.determinantal_restriction_ok},
                       {"no_common_monomial", rep.common_factor.no_common_monomial},
                       {"j_not_common", rep.common_factor.j_not_common},
                       {"i_not_common", rep.common_factor.i_not_common}};

    auto row_json = [](const OrderRow& r) {
        return ordered_json{{"place", r.place},
                            {"per_coordinate", r.per_coordinate},
                            {"order", r.order},
                            {"witness", r.witness}};
    };
    ordered_json curve_rows = ordered_json::array();
    for (const auto& r : rep.curve_rows) curve_rows.push_back(row_json(r));
    j["orders"] = {{"point", row_json(rep.point_row)},
                   {"curves", curve_rows},
                   {"determinantal",
                    {{"q", rep.det_order_at_q},
                     {"T", rep.det_order_along_T},
                     {"B", rep.det_order_along_B},
                     {"C", rep.det_order_along_C},
                     {"singular_along_T", rep.det_singular_along_T}}}};

    j["thresholds"] = {{"point", rational_to_fraction(rep.point_threshold)},
                       {"curve", rational_to_fraction(rep.curve_threshold)}};
    j["verdict"] = {
        {"point_order", rep.point_row.order},
        {"point_threshold", rational_to_fraction(rep.point_threshold)},
        {"point_exceeds_threshold", rep.point_exceeds},
        {"curve_orders", {rep.curve_rows[0].order, rep.curve_rows[1].order}},
        {"curve_threshold", rational_to_fraction(rep.curve_threshold)},
        {"curve_exceeds_threshold", rep.curve_exceeds},
        {"counterexample", rep.counterexample},
        {"statement",
         "no point of order above 2n/3 and no curve of order above n/3 exists, "
         "yet the map is a non-trivial birational self-map of the quadric"}};
    j["sampling"] = {{"seed", rep.seed},
                     {"on_quadric_samples", rep.on_quadric_samples},
                     {"nonzero_image_samples", rep.nonzero_image_samples},
                     {"images_stay_on_quadric", rep.images_stay_on_quadric}};
    return j.dump(2) + "\n";
}

std::string report_to_text(const CounterexampleReport& rep) {
    std::ostringstream os;
    os << "map " << rep.map_label << " (degree " << rep.degree << ", t = "
       << rational_to_string(rep.t) << ")\n";
    os << "  J identity: " << (rep.j_identity.holds ? "holds" : "FAILS");
    if (rep.j_identity.computed_exponent)
        os << ", exponent " << *rep.j_identity.computed_exponent;
    os << "\n  I identity: " << (rep.i_identity.holds ? "holds" : "FAILS");
    if (rep.i_identity.computed_exponent)
        os << ", J-exponent " << *rep.i_identity.computed_exponent;
    if (rep.i_identity.reference_mismatch && rep.i_identity.reference_exponent)
        os << " (source prints " << *rep.i_identity.reference_exponent << ", flagged)";
    os << "\n  quadric preserved: " << (rep.quadric_preserved ? "yes" : "NO") << "\n";
    os << "  order at q: " << rep.point_row.order << " (threshold "
       << rational_to_string(rep.point_threshold) << ")\n";
    for (const auto& r : rep.curve_rows)
        os << "  order along " << r.place << ": " << r.order << " (threshold "
           << rational_to_string(rep.curve_threshold) << ")\n";
    os << "  counterexample: " << (rep.counterexample ? "CONFIRMED" : "not confirmed") << "\n";
    return os.str();
}

} // namespace cremona
