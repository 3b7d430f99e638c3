#include <doctest.h>

#include "generators.hpp"
#include "holt/catalog.hpp"
#include "holt/phasepoly.hpp"

using namespace holt;

TEST_CASE("render examples")
{
    CHECK(render(PhasePoly()) == "0");
    CHECK(render(catalog::build("U").poly()) == "k2*x*u^-2 + k3*u^-2");
    CHECK(render(catalog::build("H_U").poly()) == "1/2*px^2 + 1/2*py^2 + k2*x*u^-2 + k3*u^-2");
    CHECK(render(PhasePoly(-1)) == "-1");
    CHECK(render(-PhasePoly::k(2) * PhasePoly::u(-2)) == "-k2*u^-2");
    CHECK(render(Rational(-2, 3) * PhasePoly::x() + 5) == "-2/3*x + 5");
}

TEST_CASE("parse examples")
{
    const PhasePoly leading = parse("2*px^3 + 3*px*py^2");
    const PhasePoly k23 = catalog::build("K2_3").poly();
    CHECK(leading.size() == 2);
    for (const auto& [m, c] : leading.terms()) {
        CHECK(k23.coeff(m) == c);
    }
    CHECK(parse("y") == PhasePoly::u(3));
    CHECK(parse("y^2*u^-2") == PhasePoly::u(4));
    CHECK(parse("  -x + x ").is_zero());
    CHECK(parse("0") == PhasePoly());
    CHECK(parse("k2 * k2 * 3/6") == Rational(1, 2) * pow(PhasePoly::k(2), 2));
    CHECK(parse("px^0") == PhasePoly(1));
    CHECK(parse("u^+2") == PhasePoly::u(2));
}

TEST_CASE("parse errors report position and reason")
{
    auto position_of = [](std::string_view text) -> std::size_t {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string_view::npos;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("x +") == 3);
    CHECK(position_of("x^-1") == 2);
    CHECK(position_of("2*z") == 2);
    CHECK(position_of("2 x") == 2);
    CHECK(position_of("1/0*x") == 2);
    CHECK(position_of("x^") == 2);
    CHECK(position_of("y^(1/3)") == 2);
    CHECK(position_of("k4") == 0);
    CHECK(position_of("x**2") == 2);

    try {
        parse("px^-2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.reason() == "negative exponent is only allowed on u");
    }
}

TEST_CASE("render and parse round-trip")
{
    testing::Gen gen(4242);
    for (int i = 0; i < 300; ++i) {
        const PhasePoly f = gen.phase_poly(6);
        CHECK(parse(render(f)) == f);
    }
    for (const auto& name : catalog::names()) {
        const auto e = catalog::build(name);
        if (e.kind != catalog::Kind::vectorfield) {
            CHECK(parse(render(e.poly())) == e.poly());
        }
    }
}
