#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cremona/report.hpp>

#include <json.hpp>

using namespace cremona;

TEST_CASE("standard hypersurfaces") {
    auto R = rings::coords();
    HypersurfaceSet H = standard_hypersurfaces(R);
    CHECK(H.quadric == invariant_I(R));
    CHECK(H.determinantal == invariant_J(R));
    CHECK(H.hyperplane == Polynomial::variable(R, "x0"));
}

TEST_CASE("hyperplane restriction factors through the restricted cubic") {
    CremonaMap g = build_gt(Rational(1));
    HyperplaneRestriction res = restrict_to_hyperplane(g);
    CHECK(res.j_exponent == 4);
    CHECK(res.factors);
    CHECK(res.matches_coordinates);
    // Restricted first coordinate vanishes: f_0 = x0 * J^4.
    CHECK(res.restricted[0].is_zero());
}

TEST_CASE("reduction mod the determinantal cubic") {
    CremonaMap g = build_gt(Rational(3));
    DeterminantalRestriction res = restrict_to_determinantal(g);
    CHECK(res.first_four_vanish);
    CHECK(res.last_matches);
    // c_0^4 * x0^13 with c_0 = 3.
    Polynomial expect = Polynomial::variable(g.ring, "x0", 13).scaled(Rational(81));
    CHECK(res.expected_last == expect);
    CHECK(res.remainders[4] == expect);
}

TEST_CASE("base locus membership table") {
    auto comps = base_locus_components();
    REQUIRE(comps.size() == 4);
    for (const auto& c : comps) {
        CHECK(c.on_quadric);
        CHECK(c.on_determinantal);
        if (c.name == "T")
            CHECK(!c.on_hyperplane);
        else
            CHECK(c.on_hyperplane);
    }
    CHECK(comps[0].kind == "curve");
    CHECK(comps[3].kind == "point");
}

TEST_CASE("coordinates share no common factor") {
    CommonFactorCheck res = no_common_factor_check(build_gt(Rational(1)));
    CHECK(res.no_common_monomial);
    CHECK(res.j_not_common);
    CHECK(res.i_not_common);
    CHECK(res.j_witness == 4);
}

TEST_CASE("full report for the unit parameter") {
    CounterexampleReport rep = build_report(Rational(1));
    CHECK(rep.degree == 13);
    CHECK(rep.m == 1);
    CHECK(rep.j_identity.holds);
    CHECK(rep.i_identity.holds);
    CHECK(rep.quadric_preserved);
    CHECK(rep.hyperplane_restriction_ok);
    CHECK(rep.determinantal_restriction_ok);

    CHECK(rep.point_row.order == 8);
    CHECK(rep.point_row.witness == 4);
    CHECK(rep.point_row.per_coordinate == std::array<unsigned, 5>{9, 9, 9, 9, 8});
    REQUIRE(rep.curve_rows.size() == 2);
    CHECK(rep.curve_rows[0].place == "B");
    CHECK(rep.curve_rows[0].order == 4);
    CHECK(rep.curve_rows[0].per_coordinate == std::array<unsigned, 5>{5, 4, 4, 4, 4});
    CHECK(rep.curve_rows[1].place == "C");
    CHECK(rep.curve_rows[1].order == 4);
    CHECK(rep.curve_rows[1].per_coordinate == std::array<unsigned, 5>{5, 5, 5, 4, 4});

    CHECK(rep.det_order_at_q == 2);
    CHECK(rep.det_order_along_T == 2);
    CHECK(rep.det_order_along_B == 1);
    CHECK(rep.det_order_along_C == 1);
    CHECK(rep.det_singular_along_T);

    CHECK(rep.point_threshold == Rational(26, 3));
    CHECK(rep.curve_threshold == Rational(13, 3));
    CHECK(Rational(rep.point_row.order) < rep.point_threshold);
    CHECK(Rational(rep.curve_rows[0].order) < rep.curve_threshold);
    CHECK(!rep.point_exceeds);
    CHECK(!rep.curve_exceeds);
    CHECK(rep.counterexample);

    CHECK(rep.on_quadric_samples == 100);
    CHECK(rep.images_stay_on_quadric);
}

TEST_CASE("report JSON is deterministic and well formed") {
    CounterexampleReport rep = build_report(Rational(1), 5, 40);
    std::string a = report_to_json(rep);
    std::string b = report_to_json(build_report(Rational(1), 5, 40));
    CHECK(a == b);

    auto doc = nlohmann::json::parse(a);
    CHECK(doc["map"]["degree"] == 13);
    CHECK(doc["map"]["t"] == "1/1");
    CHECK(doc["identities"]["j"]["exponent"] == 13);
    CHECK(doc["identities"]["i"]["exponent"] == 8);
    CHECK(doc["identities"]["i"]["reference_exponent"] == 12);
    CHECK(doc["identities"]["i"]["reference_mismatch"] == true);
    CHECK(doc["verdict"]["point_threshold"] == "26/3");
    CHECK(doc["verdict"]["curve_threshold"] == "13/3");
    CHECK(doc["verdict"]["counterexample"] == true);
    CHECK(doc["sampling"]["seed"] == 5);
    CHECK(doc["sampling"]["on_quadric_samples"] == 40);
    CHECK(doc["orders"]["point"]["order"] == 8);
    CHECK(doc["base_locus"]["components"].size() == 4);
}

TEST_CASE("different seeds keep the exact facts and change only sampling") {
    CounterexampleReport a = build_report(Rational(2), 1, 30);
    CounterexampleReport b = build_report(Rational(2), 99, 30);
    CHECK(a.point_row.order == b.point_row.order);
    CHECK(a.counterexample == b.counterexample);
    CHECK(a.images_stay_on_quadric);
    CHECK(b.images_stay_on_quadric);
}

TEST_CASE("text report names the verdict") {
    std::string text = report_to_text(build_report(Rational(1)));
    CHECK(text.find("counterexample: CONFIRMED") != std::string::npos);
    CHECK(text.find("26/3") != std::string::npos);
    CHECK(text.find("13/3") != std::string::npos);
}

TEST_CASE("identity report JSON carries the oracle fields") {
    IdentityReport rep = verify_I_identity(build_gt(Rational(1)));
    auto doc = nlohmann::json::parse(identity_report_json(rep));
    CHECK(doc["name"] == "I_identity");
    CHECK(doc["exponent"] == 8);
    CHECK(doc["oracle_degree"] == 8);
    CHECK(doc["oracle_weight"] == 8);
    CHECK(doc["oracles_agree"] == true);
    CHECK(doc["reference_exponent"] == 12);
    CHECK(doc["mode"] == "exact");
}

TEST_CASE("report at a fractional parameter value") {
    CounterexampleReport rep = build_report(Rational(-4, 5), 3, 25);
    CHECK(rep.counterexample);
    CHECK(rep.point_row.order == 8);
}
