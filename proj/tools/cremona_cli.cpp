// Command-line front end: builds family members, runs the identity
// verifications, evaluates multiplicities, and emits the counterexample
// report. Output is deterministic for a fixed configuration and seed.

#include <cremona/family.hpp>
#include <cremona/multiplicity.hpp>
#include <cremona/poly_io.hpp>
#include <cremona/quartic.hpp>
#include <cremona/report.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitOracleDisagreement = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;

const char* kConventions =
    "Conventions:\n"
    "  Quartic coefficients are binomially normalized: a tuple (x0..x4) is the\n"
    "  form F(T0,T1) = sum_k C(4,k) * x_k * T0^(4-k) * T1^k, so I = x0*x4 -\n"
    "  4*x1*x3 + 3*x2^2 and J is the 3x3 Hankel determinant of (x0..x4).\n"
    "  Composition order: compose(f, g) applies g first, then f; the group law\n"
    "  reads compose(g_s, g_t) = J^52 * g_(s+t) coordinatewise.\n"
    "  Rationals are written num or num/den, e.g. -3, 7/2.\n";

std::vector<cremona::Rational> parse_rational_list(const std::string& text) {
    std::vector<cremona::Rational> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(cremona::rational_from_string(item));
    if (!text.empty() && text.back() == ',')
        throw std::invalid_argument("trailing comma in list: " + text);
    return out;
}

void print_sorted(std::vector<cremona::IdentityReport>& reports) {
    std::sort(reports.begin(), reports.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    for (const auto& rep : reports) std::cout << cremona::identity_report_json(rep) << "\n";
}

int reports_exit_code(const std::vector<cremona::IdentityReport>& reports) {
    for (const auto& rep : reports)
        if (!rep.oracles_agree) return kExitOracleDisagreement;
    for (const auto& rep : reports)
        if (!rep.holds) return kExitVerificationFailed;
    return kExitOk;
}

struct VerifyArgs {
    std::string t_text;
    bool symbolic = false;
    unsigned m = 0; // 0 means the degree-13 family
    std::string phi_text;
    std::string mode = "modular";
    bool full_exact = false;
    unsigned trials = 20;
    unsigned primes = 3;
    unsigned prime_bits = 62;
    std::uint64_t seed = 1;
};

cremona::VerifyOptions make_options(const VerifyArgs& a) {
    cremona::VerifyOptions opts;
    if (a.full_exact || a.mode == "full-exact")
        opts.mode = cremona::VerifyMode::full_exact;
    else if (a.mode == "exact-specialized" || a.mode == "exact")
        opts.mode = cremona::VerifyMode::exact_specialized;
    else
        opts.mode = cremona::VerifyMode::modular;
    opts.trials = a.trials;
    opts.prime_count = a.primes;
    opts.prime_bits = a.prime_bits;
    opts.seed = a.seed;
    return opts;
}

// Reports for one generalized member: J and I identities plus quadric
// preservation, all exact.
void append_map_reports(std::vector<cremona::IdentityReport>& reports,
                        const cremona::CremonaMap& map) {
    reports.push_back(cremona::verify_J_identity(map));
    reports.push_back(cremona::verify_I_identity(map));
    reports.push_back(cremona::verify_quadric_preservation(map));
}

int cmd_verify(const VerifyArgs& a) {
    std::vector<cremona::IdentityReport> reports;
    if (a.m > 0) {
        cremona::PhiSpec spec;
        spec.m = a.m;
        if (!a.phi_text.empty()) {
            spec.coeffs = parse_rational_list(a.phi_text);
            if (spec.coeffs.size() != a.m + 1)
                throw CLI::ValidationError("--phi needs exactly m+1 coefficients");
        } else {
            std::mt19937_64 rng(a.seed);
            spec = cremona::random_phi(rng, a.m);
        }
        append_map_reports(reports, cremona::build_generalized(spec));
        print_sorted(reports);
        return reports_exit_code(reports);
    }

    cremona::CremonaMap g = a.t_text.empty()
                                ? cremona::build_gt_symbolic()
                                : cremona::build_gt(cremona::rational_from_string(a.t_text));
    append_map_reports(reports, g);
    reports.push_back(cremona::verify_degenerate_member());
    cremona::VerifyOptions opts = make_options(a);
    reports.push_back(cremona::verify_group_law(opts));
    reports.push_back(cremona::verify_inverse(opts));
    print_sorted(reports);
    return reports_exit_code(reports);
}

struct MultArgs {
    std::string form;
    std::string t_text = "1";
    std::string point_text;
    std::string curve_text;
};

cremona::Polynomial resolve_form(const MultArgs& a) {
    const std::string& name = a.form;
    auto ring = cremona::rings::coords();
    if (name.size() == 2 && name[0] == 'f' && name[1] >= '0' && name[1] <= '4') {
        cremona::Rational t = cremona::rational_from_string(a.t_text);
        return cremona::build_gt(t).coords[static_cast<unsigned>(name[1] - '0')];
    }
    if (name == "I") return cremona::invariant_I(ring);
    if (name == "J") return cremona::invariant_J(ring);
    std::ifstream probe(name);
    if (!probe.good())
        throw CLI::ValidationError("--form must be f0..f4, I, J, or a readable file: " + name);
    return cremona::load_polynomial(name);
}

cremona::ProjectivePoint parse_point(const std::string& text) {
    auto values = parse_rational_list(text);
    if (values.size() != 5)
        throw std::invalid_argument("a point needs exactly 5 coordinates");
    cremona::ProjectivePoint P;
    std::copy(values.begin(), values.end(), P.coords.begin());
    P.chart(); // rejects the zero tuple
    return P;
}

// Curve files: five lines, one component per line, each a comma-separated
// list of rational coefficients of u^0, u^1, ... One component must be the
// constant 1 (the chart normalization the local computation relies on).
cremona::ParametrizedCurve parse_curve(const std::string& text) {
    if (text == "B") return cremona::curve_B();
    if (text == "C") return cremona::curve_C();
    if (text == "T") return cremona::curve_T();
    std::ifstream in(text);
    if (!in.good()) throw std::invalid_argument("cannot read curve file: " + text);
    auto uring = cremona::rings::univariate();
    cremona::Polynomial u = cremona::Polynomial::variable(uring, "u");
    cremona::ParametrizedCurve curve;
    curve.label = text;
    std::string line;
    unsigned count = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (count == 5) throw std::invalid_argument("curve file has more than 5 components");
        auto coeffs = parse_rational_list(line);
        cremona::Polynomial comp = cremona::Polynomial::zero(uring);
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            comp += cremona::Polynomial::constant(uring, coeffs[k]) * u.pow((unsigned)k);
        curve.components[count++] = comp;
    }
    if (count != 5) throw std::invalid_argument("curve file needs exactly 5 components");
    curve.chart(); // rejects curves without a constant-1 component
    return curve;
}

int cmd_mult(const MultArgs& a, bool is_point) {
    cremona::Polynomial form = resolve_form(a);
    cremona::MultiplicityValue value;
    try {
        if (is_point)
            value = cremona::mult_at_point(form, parse_point(a.point_text));
        else
            value = cremona::mult_along_curve(form, parse_curve(a.curve_text));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    if (value.is_infinite())
        std::cout << "inf\n";
    else
        std::cout << value.finite() << "\n";
    return kExitOk;
}

struct ReportArgs {
    std::string t_text = "1";
    std::uint64_t seed = 1;
    unsigned samples = 100;
    std::string format = "json";
    std::string out_path;
};

bool report_checks_pass(const cremona::CounterexampleReport& rep) {
    bool memberships = !rep.components.empty();
    for (const auto& c : rep.components) {
        memberships = memberships && c.on_quadric && c.on_determinantal;
        // T is the singular curve of the determinantal cubic, not a piece
        // of the hyperplane section.
        if (c.name != "T") memberships = memberships && c.on_hyperplane;
    }
    return rep.j_identity.holds && rep.i_identity.holds && rep.quadric_preserved &&
           rep.hyperplane_restriction_ok && rep.determinantal_restriction_ok &&
           rep.common_factor.no_common_monomial && rep.common_factor.j_not_common &&
           rep.common_factor.i_not_common && memberships && rep.det_singular_along_T &&
           rep.images_stay_on_quadric;
}

int cmd_report(const ReportArgs& a) {
    cremona::Rational t = cremona::rational_from_string(a.t_text);
    if (t == 0) throw CLI::ValidationError("--t 0 is the degenerate member; report needs t != 0");
    cremona::CounterexampleReport rep = cremona::build_report(t, a.seed, a.samples);
    std::string text =
        a.format == "text" ? cremona::report_to_text(rep) : cremona::report_to_json(rep);
    if (a.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(a.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << a.out_path << "\n";
            return kExitVerificationFailed;
        }
        out << text;
    }
    return (rep.counterexample && report_checks_pass(rep)) ? kExitOk : kExitVerificationFailed;
}

struct GeneralizedArgs {
    unsigned m = 1;
    std::string phi_text;
    std::uint64_t seed = 1;
};

int cmd_generalized(const GeneralizedArgs& a) {
    cremona::PhiSpec spec;
    spec.m = a.m;
    if (!a.phi_text.empty()) {
        spec.coeffs = parse_rational_list(a.phi_text);
        if (spec.coeffs.size() != a.m + 1)
            throw CLI::ValidationError("--phi needs exactly m+1 coefficients");
    } else {
        std::mt19937_64 rng(a.seed);
        spec = cremona::random_phi(rng, a.m);
    }
    cremona::CremonaMap map = cremona::build_generalized(spec);

    std::ostringstream summary;
    summary << "{\"name\":\"map\",\"m\":" << spec.m << ",\"degree\":" << map.degree()
            << ",\"phi\":[";
    for (std::size_t k = 0; k < spec.coeffs.size(); ++k)
        summary << (k ? "," : "") << "\"" << cremona::rational_to_fraction(spec.coeffs[k])
                << "\"";
    summary << "],\"coordinate_terms\":[";
    for (unsigned i = 0; i <= 4; ++i)
        summary << (i ? "," : "") << map.coords[i].term_count();
    summary << "]}";
    std::cout << summary.str() << "\n";

    std::vector<cremona::IdentityReport> reports;
    append_map_reports(reports, map);
    print_sorted(reports);
    return reports_exit_code(reports);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("Exact verification for a family of degree-13 birational self-maps "
                             "of the quadric threefold.\n\n") +
                 kConventions};
    app.require_subcommand(1);
    app.footer(kConventions);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run identity verifications (JSON lines)");
    verify->require_subcommand(1);
    auto* identities =
        verify->add_subcommand("identities", "J, I, group-law, inverse, degenerate checks");
    auto* opt_t = identities->add_option("--t", va.t_text, "Fix the family parameter (rational)");
    auto* opt_sym = identities->add_flag("--symbolic", va.symbolic,
                                         "Keep the parameter symbolic (default)");
    opt_t->excludes(opt_sym);
    identities->add_option("--m", va.m, "Verify one generalized member of this index instead");
    identities->add_option("--phi", va.phi_text,
                           "Comma-separated phi coefficients c0..cm (default: seeded random)");
    identities->add_option("--mode", va.mode, "Composition checks: modular|exact-specialized|full-exact")
        ->check(CLI::IsMember({"modular", "exact", "exact-specialized", "full-exact"}));
    identities->add_flag("--full-exact", va.full_exact, "Shorthand for --mode full-exact");
    identities->add_option("--trials", va.trials, "Modular trial count")->check(CLI::Range(1u, 100000u));
    identities->add_option("--primes", va.primes, "Distinct moduli count")->check(CLI::Range(1u, 64u));
    identities->add_option("--prime-bits", va.prime_bits, "Modulus size in bits")
        ->check(CLI::Range(32u, 63u))
        ->envname("CREMONA_PRIME_BITS");
    identities->add_option("--seed", va.seed, "Deterministic seed")->envname("CREMONA_SEED");

    MultArgs ma;
    auto* mult = app.add_subcommand("mult", "Order of vanishing of a form at a point or curve");
    mult->require_subcommand(1);
    auto* mpoint = mult->add_subcommand("point", "Multiplicity at a projective point");
    mpoint->add_option("--form", ma.form, "f0..f4, I, J, or a polynomial file")->required();
    mpoint->add_option("--t", ma.t_text, "Family parameter for named forms (default 1)");
    mpoint->add_option("--point", ma.point_text, "5 comma-separated rationals")->required();
    auto* mcurve = mult->add_subcommand("curve", "Generic multiplicity along a curve");
    mcurve->add_option("--form", ma.form, "f0..f4, I, J, or a polynomial file")->required();
    mcurve->add_option("--t", ma.t_text, "Family parameter for named forms (default 1)");
    mcurve->add_option("--curve", ma.curve_text, "B, C, T, or a curve file (5 coefficient lines)")
        ->required();

    ReportArgs ra;
    auto* report = app.add_subcommand("report", "Full counterexample report for one member");
    report->add_option("--t", ra.t_text, "Family parameter, nonzero (default 1)");
    report->add_option("--seed", ra.seed, "Deterministic seed")->envname("CREMONA_SEED");
    report->add_option("--samples", ra.samples, "On-quadric sample count")
        ->check(CLI::Range(1u, 100000u));
    report->add_option("--format", ra.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    report->add_option("--out", ra.out_path, "Write to a file instead of stdout");

    GeneralizedArgs ga;
    auto* generalized =
        app.add_subcommand("generalized", "Build a degree 1+12m member and verify its identities");
    generalized->add_option("--m", ga.m, "Member index (degree 1+12m)")
        ->required()
        ->check(CLI::Range(1u, 6u));
    generalized->add_option("--phi", ga.phi_text,
                            "Comma-separated phi coefficients c0..cm (default: seeded random)");
    generalized->add_option("--seed", ga.seed, "Deterministic seed")->envname("CREMONA_SEED");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*identities) return cmd_verify(va);
        if (*mpoint) return cmd_mult(ma, true);
        if (*mcurve) return cmd_mult(ma, false);
        if (*report) return cmd_report(ra);
        if (*generalized) return cmd_generalized(ga);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cremona::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitOracleDisagreement;
    }
    return kExitUsage;
}
