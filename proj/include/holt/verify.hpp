#ifndef HOLT_VERIFY_HPP
#define HOLT_VERIFY_HPP

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "holt/phasepoly.hpp"

namespace holt::verify {

using Residual = std::variant<PhasePoly, VectorField>;

/// One exact claim. `passed` holds iff `residual` (lhs - rhs) is exactly zero.
struct Check {
    std::string id;
    std::string description;
    std::string citation;
    std::string group;
    std::vector<std::string> depends_on;
    Residual residual;
    bool passed = false;
    std::string residual_rendered; // empty when passed
    double millis = 0.0;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool all_passed = false;

    [[nodiscard]] const Check* find(std::string_view id) const;
};

std::string render(const VectorField& v);
std::string render(const Residual& r);

Check check_conserved(const PhasePoly& integral, const PhasePoly& hamiltonian);
Check check_identity(const PhasePoly& lhs, const PhasePoly& rhs);
Check check_vf_relation(const VectorField& lhs, const VectorField& rhs);

/// Claimed brackets keyed by basis indices (i, j) meaning {b_i, b_j}. A claim
/// stored as (j, i) is used with the opposite sign. Self-brackets default to
/// zero; any other missing pair throws std::invalid_argument, as does an
/// empty basis.
using BracketTable = std::map<std::pair<std::size_t, std::size_t>, PhasePoly>;
Check check_lie_closure(const std::vector<PhasePoly>& basis, const BracketTable& claimed);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}} == 0.
Check check_jacobi(const PhasePoly& f, const PhasePoly& g, const PhasePoly& h);

/// Every expression the suite consumes. Defaults come from the catalog;
/// tests and the CLI replace members to inject faults.
struct SuiteInputs {
    std::map<std::string, PhasePoly, std::less<>> polys;
    VectorField gamma_h;

    static SuiteInputs from_catalog();
    [[nodiscard]] const PhasePoly& at(std::string_view name) const;
};

/// Groups accepted by `run_suite`: full, conservation, limits, relations,
/// brackets, commutators, closure, jacobi.
const std::vector<std::string>& suite_ids();

VerificationReport full_suite();
VerificationReport full_suite(const SuiteInputs& inputs);
/// Runs one group (or "full"); throws std::invalid_argument for unknown ids.
VerificationReport run_suite(std::string_view suite, const SuiteInputs& inputs);

/// Machine-readable report: {"all_passed": bool, "checks": [{id, description,
/// citation, passed, residual, millis}, ...]}. With `include_timing` false all
/// millis are written as 0 so the document is reproducible byte for byte.
std::string to_json(const VerificationReport& report, bool include_timing = true);

/// Negates the index-th term of the canonical rendering of `p`.
PhasePoly flip_term_sign(const PhasePoly& p, std::size_t index);

} // namespace holt::verify

#endif // HOLT_VERIFY_HPP
