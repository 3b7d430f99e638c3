#ifndef HOLT_DYNAMICS_HPP
#define HOLT_DYNAMICS_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "holt/catalog.hpp"
#include "holt/phasepoly.hpp"

namespace holt::dynamics {

enum class Integrator { leapfrog2, composed4 };

Integrator parse_integrator(std::string_view name);
std::string_view to_string(Integrator integrator);

struct SimConfig {
    double h = 1e-3;
    double t_end = 10.0;
    Integrator integrator = Integrator::leapfrog2;
    double y_min = 1e-6;
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
};

struct Sample {
    double t;
    PhasePoint point;
};

using Trajectory = std::vector<Sample>;

/// Raised when the orbit reaches y <= y_min.
class TrajectoryDomainError : public DomainError {
public:
    TrajectoryDomainError(double time, const PhasePoint& last);
    [[nodiscard]] double time() const { return time_; }
    [[nodiscard]] const PhasePoint& last() const { return last_; }

private:
    double time_;
    PhasePoint last_;
};

/// Force (-dV/dx, -dV/dy), differentiated symbolically once and then
/// evaluated numerically.
class ForceField {
public:
    ForceField(const PhasePoly& potential, double k1, double k2, double k3);

    struct Force {
        double fx;
        double fy;
    };
    [[nodiscard]] Force operator()(double x, double y) const;

private:
    CompiledPoly fx_;
    CompiledPoly fy_;
};

/// Potential part of a potential or Hamiltonian catalog entry. Throws
/// std::invalid_argument for anything else or for a non-kinetic momentum part.
PhasePoly potential_of(const catalog::CatalogEntry& entry);

/// Fixed-step symplectic stepper. `h` may be negative to run backwards.
class Stepper {
public:
    Stepper(const PhasePoly& potential, const SimConfig& cfg);

    /// Advances `state` from time t by h. Throws TrajectoryDomainError.
    void step(PhasePoint& state, double t, double h) const;

private:
    void leapfrog(PhasePoint& state, double t, double h) const;

    ForceField force_;
    Integrator integrator_;
    double y_min_;
};

/// Samples every step, starting with `start` at t = 0.
Trajectory integrate(const catalog::CatalogEntry& potential, const PhasePoint& start, const SimConfig& cfg);
Trajectory integrate(const PhasePoly& potential, const PhasePoint& start, const SimConfig& cfg);

struct InvariantDrift {
    std::string name;
    double initial = 0.0;
    double max_drift = 0.0; // max |I - I0| / max(|I0|, 1)
};

struct DriftReport {
    std::vector<InvariantDrift> invariants;
    std::size_t samples = 0;
};

DriftReport drift_report(const Trajectory& traj, const std::vector<catalog::CatalogEntry>& invariants, double k1,
                         double k2, double k3);

struct ConvergenceResult {
    bool exact = false; // zero drift at every step size
    double order = 0.0; // least-squares slope of log(drift) against log(h)
    std::vector<double> h;
    std::vector<double> drift;
};

/// `h_list` must hold at least three step sizes, each half the previous.
/// `cfg.h` is ignored.
ConvergenceResult convergence_order(const catalog::CatalogEntry& potential, const PhasePoint& start,
                                    const catalog::CatalogEntry& invariant, const std::vector<double>& h_list,
                                    const SimConfig& cfg);

/// Tab-separated: header `t x y px py <invariant names...>`, then one row per
/// sample in shortest round-trip notation.
void write_table(std::ostream& out, const Trajectory& traj, const std::vector<catalog::CatalogEntry>& invariants,
                 double k1, double k2, double k3);

std::string format_double(double v);

} // namespace holt::dynamics

#endif // HOLT_DYNAMICS_HPP
