#include <doctest.h>

#include "generators.hpp"
#include "holt/ring.hpp"

using holt::ParamPoly;
using holt::Rational;

namespace {
const ParamPoly k1 = ParamPoly::k(1);
const ParamPoly k2 = ParamPoly::k(2);
const ParamPoly k3 = ParamPoly::k(3);
} // namespace

TEST_CASE("rational is kept in lowest terms")
{
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(10, 5).is_integer());
    CHECK(Rational::parse("-12/8") == Rational(-3, 2));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational does not overflow")
{
    Rational big = holt::pow(Rational(324), 12);
    CHECK(big.to_string() == "1338258845052394702439737982976");
    CHECK(big * Rational(1, 324) == holt::pow(Rational(324), 11));
}

TEST_CASE("param_arith examples")
{
    CHECK((k2 + 1) * (k2 - 1) == k2 * k2 - 1);
    CHECK(((k2 + 1) * (k2 - 1)).to_string() == "k2^2 - 1");
    CHECK(108 * k2 * k2 * k2 + ParamPoly() == 108 * holt::pow(k2, 3));
    CHECK(k2 * k2 * k2 == holt::pow(k2, 3));
    CHECK((k2 - k2).is_zero());
    CHECK((k2 - k2).to_string() == "0");
}

TEST_CASE("param_eval examples")
{
    CHECK(holt::pow(k2, 3).eval(0, 3, 0) == Rational(27));
    CHECK((108 * holt::pow(k2, 3)).eval(0, 2, 0) == Rational(864));
    CHECK((12 * k1).eval(0, 5, 7) == Rational(0));
    CHECK((Rational(1, 2) * k1 * k3).eval(Rational(2, 3), 0, 3) == Rational(1));
}

TEST_CASE("canonical rendering order")
{
    const ParamPoly p = 7 + k3 - Rational(1, 2) * k1 * k2 + 3 * k1 * k1;
    CHECK(p.to_string() == "3*k1^2 - 1/2*k1*k2 + k3 + 7");
    CHECK((-k2).to_string() == "-k2");
    CHECK(ParamPoly(Rational(-2, 3)).to_string() == "-2/3");
}

TEST_CASE("partial substitution keeps free parameters")
{
    const ParamPoly p = k1 * k2 + k2 * k2 * k3 + 5;
    const Rational two(2);
    CHECK(p.substitute({&two, nullptr, nullptr}) == 2 * k2 + k2 * k2 * k3 + 5);
    CHECK(p.substitute({nullptr, &two, nullptr}) == 2 * k1 + 4 * k3 + 5);
}

TEST_CASE("ring axioms on random parameter polynomials")
{
    holt::testing::Gen gen(1234);
    for (int i = 0; i < 200; ++i) {
        const ParamPoly a = gen.param_poly();
        const ParamPoly b = gen.param_poly();
        const ParamPoly c = gen.param_poly();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * ParamPoly(1) == a);
        const ParamPoly ab = a * b;
        for (const auto& [e, coeff] : ab.terms()) {
            CHECK_FALSE(coeff.is_zero());
        }
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    holt::testing::Gen gen(99);
    for (int i = 0; i < 200; ++i) {
        const ParamPoly a = gen.param_poly();
        const ParamPoly b = gen.param_poly();
        const Rational r1 = gen.rational();
        const Rational r2 = gen.rational();
        const Rational r3 = gen.rational();
        CHECK((a * b).eval(r1, r2, r3) == a.eval(r1, r2, r3) * b.eval(r1, r2, r3));
        CHECK((a + b).eval(r1, r2, r3) == a.eval(r1, r2, r3) + b.eval(r1, r2, r3));
    }
}
