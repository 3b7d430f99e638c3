#include "holt/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace holt::catalog {

namespace {

// Shorthands used only for transcription.
const PhasePoly X = PhasePoly::x();
const PhasePoly PX = PhasePoly::px();
const PhasePoly PY = PhasePoly::py();
const PhasePoly K1 = PhasePoly::k(1);
const PhasePoly K2 = PhasePoly::k(2);
const PhasePoly K3 = PhasePoly::k(3);

// y^(n/3)
PhasePoly y_third(int n) { return PhasePoly::u(n); }

PhasePoly sq(const PhasePoly& p) { return pow(p, 2); }

// Three-parameter potential k1*W + (k2 x + k3) y^(-2/3).
PhasePoly k_family(const PhasePoly& holt_part)
{
    return K1 * holt_part + K2 * X * y_third(-2) + K3 * y_third(-2);
}

PhasePoly holt1() { return (4 * sq(X) + 3 * pow(PhasePoly::y(), 2)) * y_third(-2); }
PhasePoly holt2() { return (2 * sq(X) + 9 * pow(PhasePoly::y(), 2)) * y_third(-2); }
PhasePoly holt3() { return (sq(X) + 12 * pow(PhasePoly::y(), 2)) * y_third(-2); }

PhasePoly j_h1_original()
{
    return 2 * pow(PX, 3) + 3 * PX * sq(PY)
        + 12 * ((2 * sq(X) - 3 * pow(PhasePoly::y(), 2)) * y_third(-2) * PX + 6 * X * y_third(1) * PY);
}

PhasePoly j_h2_original()
{
    return pow(PX, 4) + 2 * sq(PX) * sq(PY)
        + 8 * (sq(X) * y_third(-2) * sq(PX) + 6 * X * y_third(1) * PX * PY + 36 * sq(X) * y_third(2));
}

PhasePoly j_h3_original()
{
    return pow(PX, 6) + 3 * pow(PX, 4) * sq(PY) + 6 * (sq(X) * y_third(-2) + 3 * y_third(4)) * pow(PX, 4)
        + 72 * X * y_third(1) * pow(PX, 3) * PY + 648 * sq(X) * y_third(2) * sq(PX) + 648 * pow(X, 4);
}

PhasePoly j_h1_k()
{
    return 2 * pow(PX, 3) + 3 * PX * sq(PY)
        + 12 * K1 * ((2 * sq(X) - 3 * pow(PhasePoly::y(), 2)) * y_third(-2) * PX + 6 * X * y_third(1) * PY)
        + K2 * (6 * X * y_third(-2) * PX + 9 * y_third(1) * PY) + 6 * K3 * y_third(-2) * PX;
}

PhasePoly j_h2_k()
{
    return pow(PX, 4) + 2 * sq(PX) * sq(PY) + 4 * (2 * K1 * sq(X) + K2 * X + K3) * y_third(-2) * sq(PX)
        + 12 * (4 * K1 * X + K2) * y_third(1) * PX * PY + 18 * sq(4 * K1 * X + K2) * y_third(2);
}

PhasePoly j_h3_k()
{
    const SexticCoefficients c = sextic_coefficients();
    return pow(PX, 6) + 3 * pow(PX, 4) * sq(PY) + c.j40 * pow(PX, 4) + c.j31 * pow(PX, 3) * PY + c.j20 * sq(PX) + c.j0;
}

PhasePoly potential_u() { return K2 * X * y_third(-2) + K3 * y_third(-2); }

PhasePoly k2_3()
{
    return 2 * pow(PX, 3) + 3 * PX * sq(PY) + K2 * (6 * X * y_third(-2) * PX + 9 * y_third(1) * PY)
        + 6 * K3 * y_third(-2) * PX;
}

PhasePoly k3_4()
{
    return pow(PX, 4) + 2 * sq(PX) * sq(PY) + 4 * (K2 * X + K3) * y_third(-2) * sq(PX) + 12 * K2 * y_third(1) * PX * PY
        + 18 * sq(K2) * y_third(2);
}

PhasePoly k4_6()
{
    return pow(PX, 6) + 3 * pow(PX, 4) * sq(PY) + 6 * (K3 + K2 * X) * y_third(-2) * pow(PX, 4)
        + 36 * K2 * y_third(1) * pow(PX, 3) * PY + 162 * sq(K2) * y_third(2) * sq(PX) + 324 * pow(K2, 3) * X;
}

VectorField gamma_h()
{
    return {PX, PY, -K2 * y_third(-2), Rational(2, 3) * (K2 * X + K3) * y_third(-5)};
}

struct Recipe {
    Kind kind;
    std::string source;
    std::function<Expression()> make;
};

const std::vector<std::pair<std::string, Recipe>>& recipes()
{
    static const std::vector<std::pair<std::string, Recipe>> table = {
        {"V_h1", {Kind::potential, "Holt (1982) potential (4x^2+3y^2)/y^(2/3)", [] { return Expression(holt1()); }}},
        {"V_h2", {Kind::potential, "second Holt-type potential (2x^2+9y^2)/y^(2/3)", [] { return Expression(holt2()); }}},
        {"V_h3", {Kind::potential, "third Holt-type potential (x^2+12y^2)/y^(2/3)", [] { return Expression(holt3()); }}},
        {"V_h1_k", {Kind::potential, "three-parameter family of the Holt potential", [] { return Expression(k_family(holt1())); }}},
        {"V_h2_k", {Kind::potential, "three-parameter family of the second Holt potential", [] { return Expression(k_family(holt2())); }}},
        {"V_h3_k", {Kind::potential, "three-parameter family of the third Holt potential", [] { return Expression(k_family(holt3())); }}},
        {"U", {Kind::potential, "Post-Winternitz potential, k1 -> 0 limit of the Holt families", [] { return Expression(potential_u()); }}},
        {"H_h1", {Kind::hamiltonian, "Hamiltonian of V_h1", [] { return Expression(hamiltonian(holt1())); }}},
        {"H_h2", {Kind::hamiltonian, "Hamiltonian of V_h2", [] { return Expression(hamiltonian(holt2())); }}},
        {"H_h3", {Kind::hamiltonian, "Hamiltonian of V_h3", [] { return Expression(hamiltonian(holt3())); }}},
        {"H_h1_k", {Kind::hamiltonian, "Hamiltonian of V_h1_k", [] { return Expression(hamiltonian(k_family(holt1()))); }}},
        {"H_h2_k", {Kind::hamiltonian, "Hamiltonian of V_h2_k", [] { return Expression(hamiltonian(k_family(holt2()))); }}},
        {"H_h3_k", {Kind::hamiltonian, "Hamiltonian of V_h3_k", [] { return Expression(hamiltonian(k_family(holt3()))); }}},
        {"H_U", {Kind::hamiltonian, "Hamiltonian of U", [] { return Expression(hamiltonian(potential_u())); }}},
        {"J_h1_3", {Kind::integral, "Holt cubic integral of V_h1", [] { return Expression(j_h1_original()); }}},
        {"J_h2_4", {Kind::integral, "quartic integral of V_h2", [] { return Expression(j_h2_original()); }}},
        {"J_h3_6", {Kind::integral, "sextic integral of V_h3", [] { return Expression(j_h3_original()); }}},
        {"J_h1_3_k", {Kind::integral, "cubic integral of V_h1_k", [] { return Expression(j_h1_k()); }}},
        {"J_h2_4_k", {Kind::integral, "quartic integral of V_h2_k", [] { return Expression(j_h2_k()); }}},
        {"J_h3_6_k", {Kind::integral, "sextic integral of V_h3_k", [] { return Expression(j_h3_k()); }}},
        {"K2_3", {Kind::integral, "cubic integral of U (Post-Winternitz)", [] { return Expression(k2_3()); }}},
        {"K3_4", {Kind::integral, "quartic integral of U (Post-Winternitz)", [] { return Expression(k3_4()); }}},
        {"K4_6", {Kind::integral, "sextic integral of U, k1 -> 0 limit of J_h3_6_k", [] { return Expression(k4_6()); }}},
        {"X2", {Kind::vectorfield, "Hamiltonian vector field of K2_3", [] { return Expression(hamiltonian_vf(k2_3())); }}},
        {"X3", {Kind::vectorfield, "Hamiltonian vector field of K3_4", [] { return Expression(hamiltonian_vf(k3_4())); }}},
        {"X4", {Kind::vectorfield, "Hamiltonian vector field of K4_6", [] { return Expression(hamiltonian_vf(k4_6())); }}},
        {"Gamma_H", {Kind::vectorfield, "dynamical vector field of H_U, as printed", [] { return Expression(gamma_h()); }}},
    };
    return table;
}

int order_of(const Expression& e)
{
    if (const auto* p = std::get_if<PhasePoly>(&e)) {
        return p->momentum_order();
    }
    const auto& v = std::get<VectorField>(e);
    return std::max({v.cx.momentum_order(), v.cy.momentum_order(), v.cpx.momentum_order(), v.cpy.momentum_order()});
}

} // namespace

std::string_view to_string(Kind kind)
{
    switch (kind) {
    case Kind::potential:
        return "potential";
    case Kind::hamiltonian:
        return "hamiltonian";
    case Kind::integral:
        return "integral";
    case Kind::vectorfield:
        return "vectorfield";
    }
    return "?";
}

const PhasePoly& CatalogEntry::poly() const
{
    if (const auto* p = std::get_if<PhasePoly>(&expression)) {
        return *p;
    }
    throw std::logic_error("catalog entry '" + name + "' is a vector field");
}

const VectorField& CatalogEntry::field() const
{
    if (const auto* v = std::get_if<VectorField>(&expression)) {
        return *v;
    }
    throw std::logic_error("catalog entry '" + name + "' is not a vector field");
}

const std::vector<std::string>& names()
{
    static const std::vector<std::string> list = [] {
        std::vector<std::string> out;
        for (const auto& [name, recipe] : recipes()) {
            out.push_back(name);
        }
        return out;
    }();
    return list;
}

CatalogEntry build(std::string_view name)
{
    for (const auto& [key, recipe] : recipes()) {
        if (key == name) {
            CatalogEntry entry{key, recipe.kind, recipe.make(), 0, recipe.source};
            entry.momentum_order = order_of(entry.expression);
            return entry;
        }
    }
    throw UnknownEntry(std::string(name));
}

CatalogEntry specialize(const CatalogEntry& entry, const std::optional<Rational>& k1, const std::optional<Rational>& k2,
                        const std::optional<Rational>& k3)
{
    const std::array<const Rational*, 3> values{k1 ? &*k1 : nullptr, k2 ? &*k2 : nullptr, k3 ? &*k3 : nullptr};
    CatalogEntry out = entry;
    if (const auto* p = std::get_if<PhasePoly>(&entry.expression)) {
        out.expression = p->substitute(values);
    } else {
        const auto& v = std::get<VectorField>(entry.expression);
        out.expression = VectorField{v.cx.substitute(values), v.cy.substitute(values), v.cpx.substitute(values),
                                     v.cpy.substitute(values)};
    }
    out.momentum_order = order_of(out.expression);
    return out;
}

PhasePoly hamiltonian(const PhasePoly& potential)
{
    return Rational(1, 2) * (sq(PX) + sq(PY)) + potential;
}

PhasePoly potential_of(const PhasePoly& h)
{
    return h - Rational(1, 2) * (sq(PX) + sq(PY));
}

SexticCoefficients sextic_coefficients()
{
    return {
        6 * (K1 * sq(X) + 3 * K1 * pow(PhasePoly::y(), 2) + K2 * X + K3) * y_third(-2),
        36 * (2 * K1 * X + K2) * y_third(1),
        162 * sq(2 * K1 * X + K2) * y_third(2),
        324 * X * (K1 * X + K2) * (2 * sq(K1) * sq(X) + 2 * K1 * K2 * X + sq(K2)),
    };
}

std::vector<std::string> invariants_for(std::string_view name)
{
    static const std::map<std::string, std::vector<std::string>, std::less<>> table = {
        {"V_h1", {"H_h1", "J_h1_3"}},
        {"V_h2", {"H_h2", "J_h2_4"}},
        {"V_h3", {"H_h3", "J_h3_6"}},
        {"V_h1_k", {"H_h1_k", "J_h1_3_k"}},
        {"V_h2_k", {"H_h2_k", "J_h2_4_k"}},
        {"V_h3_k", {"H_h3_k", "J_h3_6_k"}},
        {"U", {"H_U", "K2_3", "K3_4", "K4_6"}},
    };
    std::string key(name);
    if (key.rfind("H_", 0) == 0) {
        key = key == "H_U" ? "U" : "V_" + key.substr(2);
    }
    const auto it = table.find(key);
    if (it == table.end()) {
        throw UnknownEntry(std::string(name));
    }
    return it->second;
}

} // namespace holt::catalog
