#include "holt/dynamics.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

namespace holt::dynamics {

namespace {

// Triple-jump composition: (c, 1 - 2c, c) with c = 1 / (2 - 2^(1/3)).
const double kTripleJump = 1.0 / (2.0 - std::cbrt(2.0));

} // namespace

Integrator parse_integrator(std::string_view name)
{
    if (name == "leapfrog2") {
        return Integrator::leapfrog2;
    }
    if (name == "composed4") {
        return Integrator::composed4;
    }
    throw std::invalid_argument("unknown integrator '" + std::string(name) + "' (leapfrog2|composed4)");
}

std::string_view to_string(Integrator integrator)
{
    return integrator == Integrator::leapfrog2 ? "leapfrog2" : "composed4";
}

TrajectoryDomainError::TrajectoryDomainError(double time, const PhasePoint& last)
    : DomainError("trajectory left the domain y > y_min at t = " + format_double(time)), time_(time), last_(last)
{
}

ForceField::ForceField(const PhasePoly& potential, double k1, double k2, double k3)
    : fx_(-partial(potential, Direction::x), k1, k2, k3), fy_(-partial(potential, Direction::y), k1, k2, k3)
{
}

ForceField::Force ForceField::operator()(double x, double y) const
{
    const PhasePoint q{x, y, 0.0, 0.0};
    return {fx_(q), fy_(q)};
}

PhasePoly potential_of(const catalog::CatalogEntry& entry)
{
    PhasePoly v;
    switch (entry.kind) {
    case catalog::Kind::potential:
        v = entry.poly();
        break;
    case catalog::Kind::hamiltonian:
        v = catalog::potential_of(entry.poly());
        break;
    default:
        throw std::invalid_argument("'" + entry.name + "' is neither a potential nor a Hamiltonian");
    }
    if (!v.momentum_free()) {
        throw std::invalid_argument("'" + entry.name + "' is not of the form |p|^2/2 + V(x, y)");
    }
    return v;
}

Stepper::Stepper(const PhasePoly& potential, const SimConfig& cfg)
    : force_(potential, cfg.k1, cfg.k2, cfg.k3), integrator_(cfg.integrator), y_min_(cfg.y_min)
{
    if (!(cfg.y_min > 0.0)) {
        throw std::invalid_argument("y_min must be positive");
    }
}

void Stepper::leapfrog(PhasePoint& s, double t, double h) const
{
    auto f = force_(s.x, s.y);
    s.px += 0.5 * h * f.fx;
    s.py += 0.5 * h * f.fy;
    s.x += h * s.px;
    s.y += h * s.py;
    if (!(s.y > y_min_)) {
        throw TrajectoryDomainError(t + h, s);
    }
    f = force_(s.x, s.y);
    s.px += 0.5 * h * f.fx;
    s.py += 0.5 * h * f.fy;
}

void Stepper::step(PhasePoint& state, double t, double h) const
{
    if (integrator_ == Integrator::leapfrog2) {
        leapfrog(state, t, h);
        return;
    }
    const std::array<double, 3> weights{kTripleJump, 1.0 - 2.0 * kTripleJump, kTripleJump};
    for (double w : weights) {
        leapfrog(state, t, w * h);
        t += w * h;
    }
}

Trajectory integrate(const catalog::CatalogEntry& potential, const PhasePoint& start, const SimConfig& cfg)
{
    return integrate(potential_of(potential), start, cfg);
}

Trajectory integrate(const PhasePoly& potential, const PhasePoint& start, const SimConfig& cfg)
{
    if (!(cfg.h > 0.0) || !(cfg.t_end > 0.0) || cfg.h > cfg.t_end) {
        throw std::invalid_argument("need 0 < h <= t_end");
    }
    if (!(start.y > cfg.y_min)) {
        throw TrajectoryDomainError(0.0, start);
    }
    const Stepper stepper(potential, cfg);
    const auto steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.h));

    Trajectory traj;
    traj.reserve(steps + 1);
    traj.push_back({0.0, start});
    PhasePoint state = start;
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) * cfg.h;
        stepper.step(state, t, cfg.h);
        traj.push_back({static_cast<double>(i + 1) * cfg.h, state});
    }
    return traj;
}

DriftReport drift_report(const Trajectory& traj, const std::vector<catalog::CatalogEntry>& invariants, double k1,
                         double k2, double k3)
{
    DriftReport report;
    report.samples = traj.size();
    for (const auto& inv : invariants) {
        const CompiledPoly f(inv.poly(), k1, k2, k3);
        InvariantDrift d{inv.name, 0.0, 0.0};
        if (!traj.empty()) {
            d.initial = f(traj.front().point);
            const double scale = std::max(std::abs(d.initial), 1.0);
            for (const auto& s : traj) {
                d.max_drift = std::max(d.max_drift, std::abs(f(s.point) - d.initial) / scale);
            }
        }
        report.invariants.push_back(std::move(d));
    }
    return report;
}

ConvergenceResult convergence_order(const catalog::CatalogEntry& potential, const PhasePoint& start,
                                    const catalog::CatalogEntry& invariant, const std::vector<double>& h_list,
                                    const SimConfig& cfg)
{
    if (h_list.size() < 3) {
        throw std::invalid_argument("convergence study needs at least three step sizes");
    }
    for (std::size_t i = 1; i < h_list.size(); ++i) {
        if (std::abs(h_list[i] * 2.0 - h_list[i - 1]) > 1e-9 * h_list[i - 1]) {
            throw std::invalid_argument("step sizes must halve successively");
        }
    }

    const PhasePoly v = potential_of(potential);
    ConvergenceResult result;
    result.h = h_list;
    for (double h : h_list) {
        SimConfig run = cfg;
        run.h = h;
        const Trajectory traj = integrate(v, start, run);
        result.drift.push_back(drift_report(traj, {invariant}, cfg.k1, cfg.k2, cfg.k3).invariants.front().max_drift);
    }

    std::size_t zeros = 0;
    for (double d : result.drift) {
        zeros += d == 0.0 ? 1 : 0;
    }
    if (zeros == result.drift.size()) {
        result.exact = true;
        return result;
    }
    if (zeros != 0) {
        throw std::domain_error("degenerate convergence fit: zero drift at some but not all step sizes");
    }

    // Least-squares slope of log(drift) against log(h).
    const auto n = static_cast<double>(h_list.size());
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < h_list.size(); ++i) {
        const double lx = std::log(h_list[i]);
        const double ly = std::log(result.drift[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    result.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return result;
}

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

void write_table(std::ostream& out, const Trajectory& traj, const std::vector<catalog::CatalogEntry>& invariants,
                 double k1, double k2, double k3)
{
    std::vector<CompiledPoly> compiled;
    out << "t\tx\ty\tpx\tpy";
    for (const auto& inv : invariants) {
        out << '\t' << inv.name;
        compiled.emplace_back(inv.poly(), k1, k2, k3);
    }
    out << '\n';
    for (const auto& s : traj) {
        out << format_double(s.t) << '\t' << format_double(s.point.x) << '\t' << format_double(s.point.y) << '\t'
            << format_double(s.point.px) << '\t' << format_double(s.point.py);
        for (const auto& f : compiled) {
            out << '\t' << format_double(f(s.point));
        }
        out << '\n';
    }
}

} // namespace holt::dynamics
