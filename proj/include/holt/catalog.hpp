#ifndef HOLT_CATALOG_HPP
#define HOLT_CATALOG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "holt/phasepoly.hpp"

namespace holt::catalog {

enum class Kind { potential, hamiltonian, integral, vectorfield };

std::string_view to_string(Kind kind);

using Expression = std::variant<PhasePoly, VectorField>;

struct CatalogEntry {
    std::string name;
    Kind kind = Kind::potential;
    Expression expression;
    int momentum_order = 0;
    std::string source;

    /// Throws std::logic_error for vector-field entries.
    [[nodiscard]] const PhasePoly& poly() const;
    [[nodiscard]] const VectorField& field() const;
};

class UnknownEntry : public std::out_of_range {
public:
    explicit UnknownEntry(const std::string& name) : std::out_of_range("unknown catalog entry '" + name + "'") {}
};

/// Every catalog identifier, in listing order.
const std::vector<std::string>& names();

/// Builds a fresh entry; throws UnknownEntry.
CatalogEntry build(std::string_view name);

/// Substitutes the engaged parameters; disengaged ones stay symbolic.
CatalogEntry specialize(const CatalogEntry& entry, const std::optional<Rational>& k1,
                        const std::optional<Rational>& k2 = std::nullopt,
                        const std::optional<Rational>& k3 = std::nullopt);

/// (1/2)(px^2 + py^2) + V.
PhasePoly hamiltonian(const PhasePoly& potential);

/// The potential part of a Hamiltonian built by `hamiltonian`.
PhasePoly potential_of(const PhasePoly& hamiltonian);

/// Coefficients of the sextic integral of the third Holt family:
/// J = px^6 + 3 px^4 py^2 + j40 px^4 + j31 px^3 py + j20 px^2 + j0.
struct SexticCoefficients {
    PhasePoly j40;
    PhasePoly j31;
    PhasePoly j20;
    PhasePoly j0;
};
SexticCoefficients sextic_coefficients();

/// Hamiltonian and conserved quantities that belong with a catalog potential
/// (or Hamiltonian), e.g. U -> {H_U, K2_3, K3_4, K4_6}.
std::vector<std::string> invariants_for(std::string_view name);

} // namespace holt::catalog

#endif // HOLT_CATALOG_HPP
