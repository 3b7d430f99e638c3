#include "holt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <type_traits>
#include <functional>
#include <future>
#include <stdexcept>

#include <json.hpp>

#include "holt/catalog.hpp"

namespace holt::verify {

namespace {

Check finish(Residual residual)
{
    Check c;
    c.passed = std::visit([](const auto& r) { return r.is_zero(); }, residual);
    if (!c.passed) {
        c.residual_rendered = render(residual);
    }
    c.residual = std::move(residual);
    return c;
}

PhasePoly k2_cubed_times(long factor)
{
    return PhasePoly(factor) * pow(PhasePoly::k(2), 3);
}

struct SuiteItem {
    std::string id;
    std::string description;
    std::string citation;
    std::string group;
    std::vector<std::string> depends_on;
    std::function<Check(const SuiteInputs&)> run;
};

Check conserved(const SuiteInputs& in, std::string_view integral, std::string_view hamiltonian)
{
    return check_conserved(in.at(integral), in.at(hamiltonian));
}

Check limit_k1_zero(const SuiteInputs& in, std::string_view family, std::string_view target)
{
    const Rational zero(0);
    return check_identity(in.at(family).substitute({&zero, nullptr, nullptr}), in.at(target));
}

Check unit_holt(const SuiteInputs& in, std::string_view family, std::string_view original)
{
    const Rational one(1);
    const Rational zero(0);
    return check_identity(in.at(family).substitute({&one, &zero, &zero}), in.at(original));
}

const std::vector<SuiteItem>& items()
{
    static const std::vector<SuiteItem> list = {
        {"conserved_h1", "{J_h1_3, H_h1} = 0", "Holt cubic integral", "conservation", {"J_h1_3", "H_h1"},
         [](const SuiteInputs& in) { return conserved(in, "J_h1_3", "H_h1"); }},
        {"conserved_h2", "{J_h2_4, H_h2} = 0", "second Holt potential, quartic integral", "conservation", {"J_h2_4", "H_h2"},
         [](const SuiteInputs& in) { return conserved(in, "J_h2_4", "H_h2"); }},
        {"conserved_h3", "{J_h3_6, H_h3} = 0", "third Holt potential, sextic integral", "conservation", {"J_h3_6", "H_h3"},
         [](const SuiteInputs& in) { return conserved(in, "J_h3_6", "H_h3"); }},
        {"conserved_h1_k", "{J_h1_3_k, H_h1_k} = 0 for symbolic k1,k2,k3", "Holt family, cubic integral", "conservation",
         {"J_h1_3_k", "H_h1_k"}, [](const SuiteInputs& in) { return conserved(in, "J_h1_3_k", "H_h1_k"); }},
        {"conserved_h2_k", "{J_h2_4_k, H_h2_k} = 0 for symbolic k1,k2,k3", "second Holt family, quartic integral",
         "conservation", {"J_h2_4_k", "H_h2_k"}, [](const SuiteInputs& in) { return conserved(in, "J_h2_4_k", "H_h2_k"); }},
        {"conserved_h3_k", "{J_h3_6_k, H_h3_k} = 0 for symbolic k1,k2,k3", "third Holt family, sextic integral",
         "conservation", {"J_h3_6_k", "H_h3_k"}, [](const SuiteInputs& in) { return conserved(in, "J_h3_6_k", "H_h3_k"); }},
        {"conserved_u_k2", "{K2_3, H_U} = 0", "U is superintegrable: cubic integral", "conservation", {"K2_3", "H_U"},
         [](const SuiteInputs& in) { return conserved(in, "K2_3", "H_U"); }},
        {"conserved_u_k3", "{K3_4, H_U} = 0", "U is superintegrable: quartic integral", "conservation", {"K3_4", "H_U"},
         [](const SuiteInputs& in) { return conserved(in, "K3_4", "H_U"); }},
        {"conserved_u_k4", "{K4_6, H_U} = 0", "sextic integral of U", "conservation", {"K4_6", "H_U"},
         [](const SuiteInputs& in) { return conserved(in, "K4_6", "H_U"); }},
        {"unit_h1", "J_h1_3_k at (k1,k2,k3) = (1,0,0) equals J_h1_3", "Holt family generalizes the Holt integral", "limits",
         {"J_h1_3_k", "J_h1_3"}, [](const SuiteInputs& in) { return unit_holt(in, "J_h1_3_k", "J_h1_3"); }},
        {"unit_h2", "J_h2_4_k at (k1,k2,k3) = (1,0,0) equals J_h2_4", "second family generalizes its integral", "limits",
         {"J_h2_4_k", "J_h2_4"}, [](const SuiteInputs& in) { return unit_holt(in, "J_h2_4_k", "J_h2_4"); }},
        {"unit_h3", "J_h3_6_k at (k1,k2,k3) = (1,0,0) equals J_h3_6", "third family generalizes its integral", "limits",
         {"J_h3_6_k", "J_h3_6"}, [](const SuiteInputs& in) { return unit_holt(in, "J_h3_6_k", "J_h3_6"); }},
        {"limit_h1", "J_h1_3_k at k1 = 0 equals K2_3", "k1 -> 0 limit gives the cubic integral of U", "limits",
         {"J_h1_3_k", "K2_3"}, [](const SuiteInputs& in) { return limit_k1_zero(in, "J_h1_3_k", "K2_3"); }},
        {"limit_h2", "J_h2_4_k at k1 = 0 equals K3_4", "k1 -> 0 limit gives the quartic integral of U", "limits",
         {"J_h2_4_k", "K3_4"}, [](const SuiteInputs& in) { return limit_k1_zero(in, "J_h2_4_k", "K3_4"); }},
        {"limit_h3", "J_h3_6_k at k1 = 0 equals K4_6", "k1 -> 0 limit gives the sextic integral of U", "limits",
         {"J_h3_6_k", "K4_6"}, [](const SuiteInputs& in) { return limit_k1_zero(in, "J_h3_6_k", "K4_6"); }},
        {"limit_u_h1", "V_h1_k at k1 = 0 equals U", "U as the k1 -> 0 limit of the Holt family", "limits",
         {"V_h1_k", "U"}, [](const SuiteInputs& in) { return limit_k1_zero(in, "V_h1_k", "U"); }},
        {"limit_u_h2", "V_h2_k at k1 = 0 equals U", "U as the k1 -> 0 limit of the second family", "limits",
         {"V_h2_k", "U"}, [](const SuiteInputs& in) { return limit_k1_zero(in, "V_h2_k", "U"); }},
        {"limit_j0", "J0 at k1 = 0 equals 324 k2^3 x", "constant-momentum term of the sextic integral", "limits", {},
         [](const SuiteInputs&) {
             const Rational zero(0);
             return check_identity(catalog::sextic_coefficients().j0.substitute({&zero, nullptr, nullptr}),
                                   k2_cubed_times(324) * PhasePoly::x());
         }},
        {"relation_k4", "K4_6 = 18 H K3_4 - 2 K2_3^2 - 324 k2^2 k3", "functional relation of the sextic integral",
         "relations", {"K4_6", "H_U", "K3_4", "K2_3"},
         [](const SuiteInputs& in) {
             const PhasePoly rhs = 18 * in.at("H_U") * in.at("K3_4") - 2 * pow(in.at("K2_3"), 2)
                 - 324 * pow(PhasePoly::k(2), 2) * PhasePoly::k(3);
             return check_identity(in.at("K4_6"), rhs);
         }},
        {"bracket_k3_k2", "{K3_4, K2_3} = 108 k2^3", "Post-Winternitz bracket", "brackets", {"K3_4", "K2_3"},
         [](const SuiteInputs& in) {
             return check_identity(poisson_bracket(in.at("K3_4"), in.at("K2_3")), k2_cubed_times(108));
         }},
        {"bracket_k4_k2", "{K4_6, K2_3} = 1944 k2^3 H", "bracket of the sextic integral with K2_3", "brackets",
         {"K4_6", "K2_3", "H_U"},
         [](const SuiteInputs& in) {
             return check_identity(poisson_bracket(in.at("K4_6"), in.at("K2_3")), k2_cubed_times(1944) * in.at("H_U"));
         }},
        {"bracket_k4_k3", "{K4_6, K3_4} = 432 k2^3 K2_3", "bracket of the sextic integral with K3_4", "brackets",
         {"K4_6", "K3_4", "K2_3"},
         [](const SuiteInputs& in) {
             return check_identity(poisson_bracket(in.at("K4_6"), in.at("K3_4")), k2_cubed_times(432) * in.at("K2_3"));
         }},
        {"gamma_h", "hamiltonian_vf(H_U) = Gamma_H as printed", "dynamical vector field of U", "commutators",
         {"H_U", "Gamma_H"},
         [](const SuiteInputs& in) { return check_vf_relation(hamiltonian_vf(in.at("H_U")), in.gamma_h); }},
        {"commutator_x2_x3", "[X2, X3] = 0", "Hamiltonian vector fields of K2_3 and K3_4 commute", "commutators",
         {"K2_3", "K3_4"},
         [](const SuiteInputs& in) {
             return check_vf_relation(vf_commutator(hamiltonian_vf(in.at("K2_3")), hamiltonian_vf(in.at("K3_4"))), {});
         }},
        {"commutator_x2_x4", "[X2, X4] = 1944 k2^3 Gamma_H", "commutator with the sextic field", "commutators",
         {"K2_3", "K4_6", "Gamma_H"},
         [](const SuiteInputs& in) {
             return check_vf_relation(vf_commutator(hamiltonian_vf(in.at("K2_3")), hamiltonian_vf(in.at("K4_6"))),
                                      k2_cubed_times(1944) * in.gamma_h);
         }},
        {"commutator_x3_x4", "[X3, X4] = 432 k2^3 X2", "commutator with the sextic field", "commutators",
         {"K3_4", "K4_6", "K2_3"},
         [](const SuiteInputs& in) {
             return check_vf_relation(vf_commutator(hamiltonian_vf(in.at("K3_4")), hamiltonian_vf(in.at("K4_6"))),
                                      k2_cubed_times(432) * hamiltonian_vf(in.at("K2_3")));
         }},
        {"closure_heisenberg_h", "(K2_3, K3_4, 1) Heisenberg algebra plus central H", "first basis choice", "closure",
         {"K2_3", "K3_4", "H_U"},
         [](const SuiteInputs& in) {
             const std::vector<PhasePoly> basis{in.at("K2_3"), in.at("K3_4"), PhasePoly(1), in.at("H_U")};
             BracketTable claims{
                 {{1, 0}, k2_cubed_times(108)},
                 {{0, 2}, 0}, {{0, 3}, 0}, {{1, 2}, 0}, {{1, 3}, 0}, {{2, 3}, 0},
             };
             return check_lie_closure(basis, claims);
         }},
        {"closure_heisenberg_k4", "(K2_3, K4_6, H) Heisenberg algebra with center H", "second basis choice", "closure",
         {"K2_3", "K4_6", "H_U"},
         [](const SuiteInputs& in) {
             const std::vector<PhasePoly> basis{in.at("K2_3"), in.at("K4_6"), in.at("H_U")};
             BracketTable claims{
                 {{1, 0}, k2_cubed_times(1944) * in.at("H_U")},
                 {{0, 2}, 0},
                 {{1, 2}, 0},
             };
             return check_lie_closure(basis, claims);
         }},
        {"jacobi_h_k2_k3", "Jacobi identity on (H_U, K2_3, K3_4)", "Poisson algebra structure", "jacobi",
         {"H_U", "K2_3", "K3_4"},
         [](const SuiteInputs& in) { return check_jacobi(in.at("H_U"), in.at("K2_3"), in.at("K3_4")); }},
    };
    return list;
}

} // namespace

const Check* VerificationReport::find(std::string_view id) const
{
    for (const auto& c : checks) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

std::string render(const VectorField& v)
{
    if (v.is_zero()) {
        return "0";
    }
    return "x: " + holt::render(v.cx) + "; y: " + holt::render(v.cy) + "; px: " + holt::render(v.cpx)
        + "; py: " + holt::render(v.cpy);
}

std::string render(const Residual& r)
{
    return std::visit(
        [](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, PhasePoly>) {
                return holt::render(v);
            } else {
                return render(v);
            }
        },
        r);
}

Check check_conserved(const PhasePoly& integral, const PhasePoly& hamiltonian)
{
    return finish(poisson_bracket(integral, hamiltonian));
}

Check check_identity(const PhasePoly& lhs, const PhasePoly& rhs)
{
    return finish(lhs - rhs);
}

Check check_vf_relation(const VectorField& lhs, const VectorField& rhs)
{
    return finish(lhs - rhs);
}

Check check_lie_closure(const std::vector<PhasePoly>& basis, const BracketTable& claimed)
{
    if (basis.empty()) {
        throw std::invalid_argument("Lie closure check needs a nonempty basis");
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            PhasePoly expected;
            if (const auto it = claimed.find({i, j}); it != claimed.end()) {
                expected = it->second;
            } else if (const auto rev = claimed.find({j, i}); rev != claimed.end()) {
                expected = -rev->second;
            } else if (i != j) {
                throw std::invalid_argument("missing claimed bracket {b" + std::to_string(i) + ", b" + std::to_string(j) + "}");
            }
            const PhasePoly diff = poisson_bracket(basis[i], basis[j]) - expected;
            if (!diff.is_zero()) {
                Check c = finish(diff);
                c.residual_rendered = "{b" + std::to_string(i) + ", b" + std::to_string(j) + "}: " + c.residual_rendered;
                return c;
            }
        }
    }
    return finish(PhasePoly());
}

Check check_jacobi(const PhasePoly& f, const PhasePoly& g, const PhasePoly& h)
{
    return finish(poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f))
                  + poisson_bracket(h, poisson_bracket(f, g)));
}

SuiteInputs SuiteInputs::from_catalog()
{
    SuiteInputs in;
    for (const auto& name : catalog::names()) {
        catalog::CatalogEntry e = catalog::build(name);
        if (e.kind != catalog::Kind::vectorfield) {
            in.polys.emplace(name, e.poly());
        }
    }
    in.gamma_h = catalog::build("Gamma_H").field();
    return in;
}

const PhasePoly& SuiteInputs::at(std::string_view name) const
{
    const auto it = polys.find(name);
    if (it == polys.end()) {
        throw std::out_of_range("suite input '" + std::string(name) + "' missing");
    }
    return it->second;
}

const std::vector<std::string>& suite_ids()
{
    static const std::vector<std::string> ids{"full", "conservation", "limits", "relations",
                                              "brackets", "commutators", "closure", "jacobi"};
    return ids;
}

VerificationReport run_suite(std::string_view suite, const SuiteInputs& inputs)
{
    if (std::find(suite_ids().begin(), suite_ids().end(), suite) == suite_ids().end()) {
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
    std::vector<const SuiteItem*> selected;
    for (const auto& item : items()) {
        if (suite == "full" || item.group == suite) {
            selected.push_back(&item);
        }
    }

    // Checks are independent; results are collected in declaration order.
    std::vector<std::future<Check>> pending;
    pending.reserve(selected.size());
    for (const SuiteItem* item : selected) {
        pending.push_back(std::async(std::launch::async, [item, &inputs] {
            const auto start = std::chrono::steady_clock::now();
            Check c = item->run(inputs);
            const auto stop = std::chrono::steady_clock::now();
            c.id = item->id;
            c.description = item->description;
            c.citation = item->citation;
            c.group = item->group;
            c.depends_on = item->depends_on;
            c.millis = std::chrono::duration<double, std::milli>(stop - start).count();
            return c;
        }));
    }

    VerificationReport report;
    report.all_passed = true;
    for (auto& f : pending) {
        report.checks.push_back(f.get());
        report.all_passed = report.all_passed && report.checks.back().passed;
    }
    return report;
}

VerificationReport full_suite(const SuiteInputs& inputs)
{
    return run_suite("full", inputs);
}

VerificationReport full_suite()
{
    return full_suite(SuiteInputs::from_catalog());
}

std::string to_json(const VerificationReport& report, bool include_timing)
{
    nlohmann::ordered_json doc;
    doc["all_passed"] = report.all_passed;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json j;
        j["id"] = c.id;
        j["description"] = c.description;
        j["citation"] = c.citation;
        j["passed"] = c.passed;
        j["residual"] = c.passed ? "0" : c.residual_rendered;
        j["millis"] = include_timing ? c.millis : 0.0;
        doc["checks"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

PhasePoly flip_term_sign(const PhasePoly& p, std::size_t index)
{
    std::vector<FlatTerm> terms = p.flatten();
    if (index >= terms.size()) {
        throw std::out_of_range("term index " + std::to_string(index) + " out of range (" + std::to_string(terms.size())
                                + " terms)");
    }
    terms[index].coeff = -terms[index].coeff;
    return PhasePoly::from_flat(terms);
}

} // namespace holt::verify
