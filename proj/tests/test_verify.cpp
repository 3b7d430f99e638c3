#include <doctest.h>

#include <algorithm>

#include "holt/catalog.hpp"
#include "holt/verify.hpp"

using namespace holt;

namespace {

PhasePoly entry(std::string_view name) { return catalog::build(name).poly(); }

bool mentions(const verify::Check& c, const std::string& name)
{
    return std::find(c.depends_on.begin(), c.depends_on.end(), name) != c.depends_on.end();
}

} // namespace

TEST_CASE("check_conserved")
{
    const verify::Check ok = verify::check_conserved(entry("K2_3"), entry("H_U"));
    CHECK(ok.passed);
    CHECK(ok.residual_rendered.empty());

    const verify::Check bad = verify::check_conserved(PhasePoly::px(), entry("H_U"));
    CHECK_FALSE(bad.passed);
    CHECK(std::get<PhasePoly>(bad.residual) == -PhasePoly::k(2) * PhasePoly::u(-2));
    CHECK(bad.residual_rendered == "-k2*u^-2");
}

TEST_CASE("check_identity and check_vf_relation")
{
    const PhasePoly x = PhasePoly::x();
    CHECK(verify::check_identity(pow(x + 1, 2), x * x + 2 * x + 1).passed);
    const verify::Check off = verify::check_identity(pow(x + 1, 2), x * x + 1);
    CHECK_FALSE(off.passed);
    CHECK(off.residual_rendered == "2*x");

    const VectorField g = catalog::build("Gamma_H").field();
    CHECK(verify::check_vf_relation(hamiltonian_vf(entry("H_U")), g).passed);
    const verify::Check wrong = verify::check_vf_relation(hamiltonian_vf(entry("H_U")), VectorField{});
    CHECK_FALSE(wrong.passed);
    CHECK(wrong.residual_rendered.find("x: px") == 0);
    CHECK(verify::render(VectorField{}) == "0");
}

TEST_CASE("check_lie_closure")
{
    const PhasePoly x = PhasePoly::x();
    const PhasePoly px = PhasePoly::px();
    const PhasePoly one(1);

    SUBCASE("canonical Heisenberg triple")
    {
        // {x, px} = 1, and 1 is central.
        const verify::BracketTable table = {{{0, 1}, one}, {{0, 2}, PhasePoly()}, {{1, 2}, PhasePoly()}};
        CHECK(verify::check_lie_closure({x, px, one}, table).passed);
    }
    SUBCASE("reversed key is read with the opposite sign")
    {
        const verify::BracketTable table = {{{1, 0}, -one}, {{0, 2}, PhasePoly()}, {{1, 2}, PhasePoly()}};
        CHECK(verify::check_lie_closure({x, px, one}, table).passed);
    }
    SUBCASE("wrong claim names the failing pair")
    {
        const verify::BracketTable table = {{{0, 1}, -one}, {{0, 2}, PhasePoly()}, {{1, 2}, PhasePoly()}};
        const verify::Check c = verify::check_lie_closure({x, px, one}, table);
        CHECK_FALSE(c.passed);
        CHECK(c.residual_rendered.find("{b0, b1}") != std::string::npos);
    }
    SUBCASE("single element basis needs no claims")
    {
        CHECK(verify::check_lie_closure({x}, {}).passed);
    }
    SUBCASE("missing claim and empty basis")
    {
        CHECK_THROWS_AS(verify::check_lie_closure({x, px}, {}), std::invalid_argument);
        CHECK_THROWS_AS(verify::check_lie_closure({}, {}), std::invalid_argument);
    }
}

TEST_CASE("check_jacobi")
{
    CHECK(verify::check_jacobi(entry("H_U"), entry("K2_3"), entry("K3_4")).passed);
}

TEST_CASE("full suite passes")
{
    const verify::VerificationReport report = verify::full_suite();
    CHECK(report.all_passed);
    CHECK(report.checks.size() >= 25);
    for (const auto& c : report.checks) {
        CAPTURE(c.id);
        CHECK(c.passed);
        CHECK(c.millis < 10000.0);
        CHECK_FALSE(c.description.empty());
        CHECK_FALSE(c.citation.empty());
    }
    for (const char* id : {"conserved_h1_k", "conserved_h2_k", "conserved_h3_k", "conserved_u_k2", "conserved_u_k3",
                           "bracket_k3_k2", "bracket_k4_k2", "bracket_k4_k3", "relation_k4", "limit_h1", "limit_h2",
                           "limit_h3", "gamma_h", "commutator_x2_x3", "commutator_x2_x4", "commutator_x3_x4",
                           "closure_heisenberg_h", "closure_heisenberg_k4", "jacobi_h_k2_k3"}) {
        CAPTURE(id);
        REQUIRE(report.find(id) != nullptr);
    }
    CHECK(report.find("no_such_check") == nullptr);
}

TEST_CASE("groups partition the full suite")
{
    const verify::SuiteInputs inputs = verify::SuiteInputs::from_catalog();
    std::size_t total = 0;
    for (const auto& id : verify::suite_ids()) {
        if (id == "full") {
            continue;
        }
        const verify::VerificationReport r = verify::run_suite(id, inputs);
        CAPTURE(id);
        CHECK(r.all_passed);
        for (const auto& c : r.checks) {
            CHECK(c.group == id);
        }
        total += r.checks.size();
    }
    CHECK(total == verify::full_suite(inputs).checks.size());
    CHECK_THROWS_AS(verify::run_suite("nonsense", inputs), std::invalid_argument);
}

TEST_CASE("fault injection on K2_3")
{
    const PhasePoly k23 = entry("K2_3");
    const std::size_t n = k23.flatten().size();
    REQUIRE(n == 5);
    for (std::size_t i = 0; i < n; ++i) {
        CAPTURE(i);
        verify::SuiteInputs inputs = verify::SuiteInputs::from_catalog();
        inputs.polys.at("K2_3") = verify::flip_term_sign(k23, i);
        CHECK_FALSE(inputs.at("K2_3") == k23);
        const verify::VerificationReport r = verify::full_suite(inputs);
        CHECK_FALSE(r.all_passed);
        for (const auto& c : r.checks) {
            if (!c.passed) {
                CAPTURE(c.id);
                CHECK(mentions(c, "K2_3"));
            }
        }
        for (const char* id : {"conserved_u_k2", "bracket_k3_k2", "relation_k4"}) {
            CAPTURE(id);
            const verify::Check* c = r.find(id);
            REQUIRE(c != nullptr);
            CHECK_FALSE(c->passed);
            CHECK_FALSE(c->residual_rendered.empty());
            CHECK(c->residual_rendered != "0");
        }
    }
    CHECK_THROWS(verify::flip_term_sign(k23, n));
}

TEST_CASE("json report")
{
    const verify::VerificationReport report = verify::run_suite("brackets", verify::SuiteInputs::from_catalog());
    const std::string a = verify::to_json(report, false);
    const std::string b = verify::to_json(verify::run_suite("brackets", verify::SuiteInputs::from_catalog()), false);
    CHECK(a == b);
    CHECK(a.find("\"all_passed\": true") != std::string::npos);
    CHECK(a.find("\"id\": \"bracket_k3_k2\"") != std::string::npos);
    CHECK(a.find("\"residual\": \"0\"") != std::string::npos);
    CHECK(a.find("\"millis\": 0") != std::string::npos);
}
