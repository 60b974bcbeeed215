#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cremona/modular.hpp>
#include <cremona/poly_io.hpp>
#include <cremona/polynomial.hpp>

#include "test_util.hpp"

#include <sstream>

using namespace cremona;
using testutil::random_nonzero_polynomial;
using testutil::random_polynomial;

TEST_CASE("ring creation and lookup") {
    auto R = Ring::create({"a", "b", "c"});
    CHECK(R->size() == 3);
    CHECK(R->index("b").value() == 1);
    CHECK(!R->index("z").has_value());
    CHECK(R->require_index("c") == 2);
    CHECK_THROWS_AS((void)R->require_index("z"), std::invalid_argument);
    CHECK_THROWS_AS(Ring::create({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(Ring::create({}), std::invalid_argument);
    std::vector<std::string> too_many(Ring::max_vars + 1, "v");
    for (std::size_t i = 0; i < too_many.size(); ++i) too_many[i] += std::to_string(i);
    CHECK_THROWS_AS(Ring::create(too_many), std::invalid_argument);
}

TEST_CASE("standard rings are shared") {
    CHECK(rings::coords().get() == rings::coords().get());
    CHECK(rings::coords()->size() == 5);
    CHECK(rings::coords_t()->size() == 6);
    CHECK(rings::coords_ts()->size() == 7);
    CHECK(rings::coords_abcd()->size() == 9);
    CHECK(rings::univariate()->size() == 1);
}

TEST_CASE("graded lexicographic order") {
    auto R = rings::coords();
    auto mono = [&](std::initializer_list<unsigned> exps) {
        Monomial m;
        unsigned i = 0;
        for (unsigned e : exps) m.e[i++] = static_cast<std::uint16_t>(e);
        return m;
    };
    // Total degree dominates.
    CHECK(grlex_less(mono({1, 0, 0, 0, 0}), mono({1, 1, 0, 0, 0})));
    // Same degree: earlier variable wins.
    CHECK(grlex_less(mono({0, 2, 0, 0, 0}), mono({1, 1, 0, 0, 0})));
    CHECK(grlex_less(mono({1, 0, 1, 0, 0}), mono({1, 1, 0, 0, 0})));
    CHECK(!grlex_less(mono({1, 1, 0, 0, 0}), mono({1, 1, 0, 0, 0})));
    // Leading term of a sum is the grlex-largest monomial.
    auto x = [&](unsigned i) { return Polynomial::variable(R, i); };
    Polynomial p = x(0) * x(2) * x(4) + x(1) * x(1) * x(4) + x(2).pow(3);
    CHECK(p.leading_term().mono == mono({1, 0, 1, 0, 1}));
}

TEST_CASE("monomial arithmetic") {
    Monomial a, b;
    a.e[0] = 2;
    a.e[1] = 1;
    b.e[0] = 1;
    b.e[3] = 4;
    Monomial p = a * b;
    CHECK(p.e[0] == 3);
    CHECK(p.e[1] == 1);
    CHECK(p.e[3] == 4);
    CHECK(p.total_degree() == 8);
    CHECK(b.divides(p));
    CHECK((p / b) == a);
    CHECK(!p.divides(b));
}

TEST_CASE("polynomial construction normalizes") {
    auto R = rings::coords();
    Monomial m;
    m.e[1] = 2;
    std::vector<Term> terms = {{m, Rational(3)}, {m, Rational(-3)}};
    CHECK(Polynomial::from_terms(R, terms).is_zero());
    terms = {{m, Rational(3)}, {m, Rational(4)}, {Monomial::one(), Rational(1)}};
    Polynomial p = Polynomial::from_terms(R, terms);
    CHECK(p.term_count() == 2);
    CHECK(p.leading_term().coeff == Rational(7));
}

TEST_CASE("degree helpers on the zero polynomial") {
    auto R = rings::coords();
    Polynomial z = Polynomial::zero(R);
    CHECK(!z.degree().has_value());
    CHECK(!z.min_degree().has_value());
    CHECK(z.is_homogeneous());
    Polynomial c = Polynomial::constant(R, Rational(5));
    CHECK(c.degree().value() == 0);
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937_64 rng(101);
    auto R = Ring::create({"x", "y", "z"});
    for (int k = 0; k < 60; ++k) {
        Polynomial a = random_polynomial(rng, R);
        Polynomial b = random_polynomial(rng, R);
        Polynomial c = random_polynomial(rng, R);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        CHECK(a + Polynomial::zero(R) == a);
        CHECK(a * Polynomial::constant(R, Rational(1)) == a);
        CHECK((-a) + a == Polynomial::zero(R));
    }
}

TEST_CASE("multiplication paths agree") {
    // The packed integer path handles few variables and small exponents;
    // scaling by fractions forces the generic path. Both must agree.
    std::mt19937_64 rng(202);
    auto R = Ring::create({"x", "y", "z"});
    for (int k = 0; k < 40; ++k) {
        Polynomial a = random_polynomial(rng, R, 8, 4);
        Polynomial b = random_polynomial(rng, R, 8, 4);
        Polynomial ab = a * b;
        Rational third(1, 3);
        Polynomial scaled = a.scaled(third) * b.scaled(third);
        CHECK(ab.scaled(third * third) == scaled);
    }
    // Exponents past the packing width per variable.
    Polynomial x = Polynomial::variable(R, "x");
    Polynomial big = x.pow(400) + Polynomial::constant(R, Rational(1));
    Polynomial prod = big * big;
    CHECK(prod.term_count() == 3);
    CHECK(prod.degree().value() == 800);
    // More variables than the packing width.
    auto W = Ring::create({"v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7"});
    Polynomial s = Polynomial::zero(W);
    for (unsigned i = 0; i < 8; ++i) s += Polynomial::variable(W, i);
    CHECK((s * s).term_count() == 8 + 28);
}

TEST_CASE("pow matches repeated multiplication") {
    std::mt19937_64 rng(303);
    auto R = Ring::create({"x", "y"});
    Polynomial p = random_nonzero_polynomial(rng, R, 4, 2);
    Polynomial q = Polynomial::constant(R, Rational(1));
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(p.pow(n) == q);
        q = q * p;
    }
    CHECK(Polynomial::zero(R).pow(0) == Polynomial::constant(R, Rational(1)));
    CHECK(Polynomial::zero(R).pow(3).is_zero());
}

TEST_CASE("division with remainder invariant") {
    std::mt19937_64 rng(404);
    auto R = Ring::create({"x", "y", "z"});
    for (int k = 0; k < 60; ++k) {
        Polynomial p = random_polynomial(rng, R, 8, 4);
        Polynomial d = random_nonzero_polynomial(rng, R, 4, 2);
        auto [q, r] = p.div_rem(d);
        CHECK(p == q * d + r);
        const Monomial& lt = d.leading_term().mono;
        for (const Term& t : r.terms()) CHECK(!lt.divides(t.mono));
    }
    CHECK_THROWS_AS(Polynomial::variable(R, "x").div_rem(Polynomial::zero(R)),
                    std::domain_error);
}

TEST_CASE("exact division round trip") {
    std::mt19937_64 rng(505);
    auto R = Ring::create({"x", "y", "z"});
    for (int k = 0; k < 60; ++k) {
        Polynomial a = random_polynomial(rng, R);
        Polynomial b = random_nonzero_polynomial(rng, R);
        auto q = (a * b).exact_divide(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
        // A generic non-multiple must be rejected.
        Polynomial off = a * b + Polynomial::constant(R, Rational(1));
        auto q2 = off.exact_divide(b);
        if (!b.is_constant()) CHECK(!q2.has_value());
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(606);
    auto R = Ring::create({"x", "y"});
    for (int k = 0; k < 30; ++k) {
        Polynomial a = random_polynomial(rng, R, 4, 2);
        Polynomial b = random_polynomial(rng, R, 4, 2);
        std::vector<Polynomial> images = {random_polynomial(rng, R, 3, 2),
                                          random_polynomial(rng, R, 3, 2)};
        CHECK((a + b).substitute(R, images) == a.substitute(R, images) + b.substitute(R, images));
        CHECK((a * b).substitute(R, images) == a.substitute(R, images) * b.substitute(R, images));
    }
}

TEST_CASE("substitution composes") {
    std::mt19937_64 rng(707);
    auto R = Ring::create({"x", "y"});
    for (int k = 0; k < 30; ++k) {
        Polynomial p = random_polynomial(rng, R, 4, 2);
        std::vector<Polynomial> f = {random_polynomial(rng, R, 3, 2),
                                     random_polynomial(rng, R, 3, 2)};
        std::vector<Polynomial> g = {random_polynomial(rng, R, 2, 2),
                                     random_polynomial(rng, R, 2, 2)};
        std::vector<Polynomial> fg = {f[0].substitute(R, g), f[1].substitute(R, g)};
        CHECK(p.substitute(R, f).substitute(R, g) == p.substitute(R, fg));
    }
}

TEST_CASE("evaluation agrees with constant substitution") {
    std::mt19937_64 rng(808);
    auto R = Ring::create({"x", "y", "z"});
    for (int k = 0; k < 30; ++k) {
        Polynomial p = random_polynomial(rng, R);
        std::vector<Rational> pt = {random_rational(rng), random_rational(rng),
                                    random_rational(rng)};
        std::vector<Polynomial> consts;
        for (const auto& v : pt) consts.push_back(Polynomial::constant(R, v));
        Polynomial sub = p.substitute(R, consts);
        CHECK(sub.is_constant());
        Rational val = sub.is_zero() ? Rational(0) : sub.terms()[0].coeff;
        CHECK(p.evaluate(pt) == val);
    }
}

TEST_CASE("named substitution maps missing variables to themselves") {
    auto R = rings::coords();
    Polynomial p = Polynomial::variable(R, "x0") * Polynomial::variable(R, "x1");
    std::map<std::string, Polynomial> sub;
    sub.emplace("x0", Polynomial::constant(R, Rational(2)));
    CHECK(p.substitute(R, sub) == Polynomial::variable(R, "x1").scaled(Rational(2)));
}

TEST_CASE("derivative satisfies the product rule") {
    std::mt19937_64 rng(909);
    auto R = Ring::create({"x", "y"});
    for (int k = 0; k < 30; ++k) {
        Polynomial a = random_polynomial(rng, R, 4, 3);
        Polynomial b = random_polynomial(rng, R, 4, 3);
        for (unsigned v = 0; v < 2; ++v)
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
    Polynomial c = Polynomial::constant(R, Rational(7));
    CHECK(c.derivative(0u).is_zero());
}

TEST_CASE("homogeneous components sum back to the polynomial") {
    std::mt19937_64 rng(111);
    auto R = Ring::create({"x", "y", "z"});
    for (int k = 0; k < 20; ++k) {
        Polynomial p = random_polynomial(rng, R, 8, 4);
        Polynomial sum = Polynomial::zero(R);
        for (const auto& [deg, comp] : p.homogeneous_components()) {
            CHECK(comp.is_homogeneous());
            if (!comp.is_zero()) CHECK(comp.degree().value() == deg);
            sum += comp;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("operations across rings are rejected") {
    auto R1 = Ring::create({"x", "y"});
    auto R2 = Ring::create({"x", "z"});
    Polynomial a = Polynomial::variable(R1, "x");
    Polynomial b = Polynomial::variable(R2, "x");
    CHECK_THROWS_AS(a + b, ring_mismatch_error);
    CHECK_THROWS_AS(a * b, ring_mismatch_error);
}

TEST_CASE("text round trip") {
    std::mt19937_64 rng(222);
    auto R = rings::coords();
    for (int k = 0; k < 40; ++k) {
        Polynomial p = random_polynomial(rng, R, 8, 5);
        Polynomial q = polynomial_from_text(polynomial_to_text(p));
        CHECK(p == q);
        CHECK(polynomial_to_text(p) == polynomial_to_text(q));
    }
    Polynomial z = Polynomial::zero(R);
    CHECK(polynomial_from_text(polynomial_to_text(z)).is_zero());
}

TEST_CASE("text format is canonical and commented lines are skipped") {
    auto R = rings::coords();
    Polynomial p = Polynomial::variable(R, "x0") * Polynomial::variable(R, "x2") -
                   Polynomial::variable(R, "x1").scaled(Rational(1, 2));
    std::string text = polynomial_to_text(p);
    CHECK(text.find("vars: x0 x1 x2 x3 x4") == 0);
    CHECK(text.find("1/1 1 0 1 0 0") != std::string::npos);
    CHECK(text.find("-1/2 0 1 0 0 0") != std::string::npos);
    std::string with_comment = "# comment line\n" + text;
    CHECK(polynomial_from_text(with_comment) == p);
}

TEST_CASE("malformed text is rejected") {
    CHECK_THROWS_AS(polynomial_from_text(""), parse_error);
    CHECK_THROWS_AS(polynomial_from_text("vars:\n"), parse_error);
    CHECK_THROWS_AS(polynomial_from_text("vars: x0 x1\n1/1 2\n"), parse_error);
    CHECK_THROWS_AS(polynomial_from_text("vars: x0 x1\n1/1 2 3 4\n"), parse_error);
    CHECK_THROWS_AS(polynomial_from_text("vars: x0 x1\nnope 2 3\n"), parse_error);
    CHECK_THROWS_AS(polynomial_from_text("vars: x0 x0\n"), parse_error);
}

TEST_CASE("rational helpers") {
    CHECK(rational_from_string("-3") == Rational(-3));
    CHECK(rational_from_string("7/2") == Rational(7, 2));
    CHECK(rational_from_string("-6/4") == Rational(-3, 2));
    CHECK_THROWS(rational_from_string(""));
    CHECK_THROWS(rational_from_string("1/0"));
    CHECK_THROWS(rational_from_string("x"));
    CHECK_THROWS(rational_from_string("1/2/3"));
    CHECK(rational_to_fraction(Rational(5)) == "5/1");
    CHECK(rational_to_fraction(Rational(-3, 2)) == "-3/2");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
    CHECK(binomial(4, 2) == Integer(6));
    CHECK(binomial(13, 6) == Integer(1716));
}

TEST_CASE("primality and modular arithmetic") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64((1ull << 61) - 1));
    CHECK(!is_prime_u64(561));     // Carmichael
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(3215031751ull)); // strong pseudoprime to bases 2,3,5,7
    std::mt19937_64 rng(333);
    for (int k = 0; k < 10; ++k) {
        auto ctx = make_prime_context(rng, 62);
        CHECK(is_prime_u64(ctx.modulus));
        CHECK((ctx.modulus >> 61) == 1);
        std::uint64_t a = rng() % ctx.modulus;
        if (a == 0) a = 1;
        CHECK(mulmod(a, invmod(a, ctx.modulus), ctx.modulus) == 1);
        CHECK(powmod(a, ctx.modulus - 1, ctx.modulus) == 1);
    }
    CHECK_THROWS_AS(random_prime(rng, 2), std::invalid_argument);
}

TEST_CASE("rational reduction mod p") {
    std::uint64_t p = 2305843009213693951ull; // 2^61 - 1
    CHECK(rational_mod(Rational(5), p) == 5);
    CHECK(rational_mod(Rational(-1), p) == p - 1);
    CHECK(mulmod(rational_mod(Rational(1, 2), p), 2, p) == 1);
    CHECK(mulmod(rational_mod(Rational(-3, 7), p), 7, p) == p - 3);
    Rational bad(1, static_cast<long>(11));
    CHECK_THROWS_AS(rational_mod(bad, 11), bad_prime_error);
}

TEST_CASE("modular reduction commutes with evaluation") {
    std::mt19937_64 rng(444);
    auto R = Ring::create({"x", "y", "z"});
    std::uint64_t p = 2305843009213693951ull;
    PrimeContext ctx{p, 61};
    for (int k = 0; k < 25; ++k) {
        Polynomial f = random_polynomial(rng, R);
        Polynomial g = random_polynomial(rng, R);
        auto pt = random_mod_point(rng, p, 3);
        std::uint64_t lhs = reduce_mod(f * g, ctx).evaluate(pt);
        std::uint64_t rhs = mulmod(reduce_mod(f, ctx).evaluate(pt),
                                   reduce_mod(g, ctx).evaluate(pt), p);
        CHECK(lhs == rhs);
    }
}
