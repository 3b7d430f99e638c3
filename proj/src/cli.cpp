#include "holt/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "holt/catalog.hpp"
#include "holt/dynamics.hpp"
#include "holt/verify.hpp"

namespace holt::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_catalog_name(const std::string& name)
{
    const auto& names = catalog::names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

PhasePoly resolve_expression(const std::string& arg)
{
    if (is_catalog_name(arg)) {
        const catalog::CatalogEntry e = catalog::build(arg);
        if (e.kind == catalog::Kind::vectorfield) {
            throw UsageError("'" + arg + "' is a vector field, not a phase-space function");
        }
        return e.poly();
    }
    try {
        return parse(arg);
    } catch (const ParseError& ex) {
        throw UsageError("'" + arg + "' is neither a catalog name nor a valid expression (" + ex.what() + ")");
    }
}

std::optional<Rational> parse_param(const std::string& text)
{
    if (text.empty()) {
        return std::nullopt;
    }
    try {
        return Rational::parse(text);
    } catch (const std::exception& ex) {
        throw UsageError(std::string("bad parameter value: ") + ex.what());
    }
}

PhasePoint parse_point(const std::string& text)
{
    std::array<double, 4> v{};
    std::stringstream ss(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 4) {
            throw UsageError("start point needs exactly four comma-separated values x,y,px,py");
        }
        try {
            std::size_t used = 0;
            v[i] = std::stod(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw UsageError("bad number '" + item + "' in start point");
        }
        ++i;
    }
    if (i != 4) {
        throw UsageError("start point needs exactly four comma-separated values x,y,px,py");
    }
    return {v[0], v[1], v[2], v[3]};
}

std::vector<std::string> split_names(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::unique_ptr<std::ofstream> open_output(const std::string& path)
{
    auto file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file) {
        throw UsageError("cannot write '" + path + "'");
    }
    return file;
}

int cmd_verify(const std::string& suite, const std::string& out_path, const std::vector<std::string>& flips,
               bool timings, std::ostream& out)
{
    verify::SuiteInputs inputs = verify::SuiteInputs::from_catalog();
    for (const auto& flip : flips) {
        const auto colon = flip.find(':');
        if (colon == std::string::npos) {
            throw UsageError("--flip-sign expects NAME:INDEX");
        }
        const std::string name = flip.substr(0, colon);
        auto it = inputs.polys.find(name);
        if (it == inputs.polys.end()) {
            throw UsageError("--flip-sign: unknown expression '" + name + "'");
        }
        std::size_t index = 0;
        try {
            index = std::stoul(flip.substr(colon + 1));
            it->second = verify::flip_term_sign(it->second, index);
        } catch (const std::exception& ex) {
            throw UsageError(std::string("--flip-sign: ") + ex.what());
        }
    }

    verify::VerificationReport report;
    try {
        report = verify::run_suite(suite, inputs);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }

    if (!out_path.empty()) {
        *open_output(out_path) << verify::to_json(report, timings);
    }
    std::size_t passed = 0;
    for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.description << '\n';
        if (!c.passed) {
            out << "     residual: " << c.residual_rendered << '\n';
        }
        passed += c.passed ? 1 : 0;
    }
    out << passed << '/' << report.checks.size() << " checks passed\n";
    return report.all_passed ? kOk : kVerificationFailed;
}

int cmd_bracket(const std::string& lhs, const std::string& rhs, const std::string& k1, const std::string& k2,
                const std::string& k3, std::ostream& out)
{
    const PhasePoly f = resolve_expression(lhs);
    const PhasePoly g = resolve_expression(rhs);
    const auto r1 = parse_param(k1);
    const auto r2 = parse_param(k2);
    const auto r3 = parse_param(k3);
    const PhasePoly b = poisson_bracket(f, g).substitute({r1 ? &*r1 : nullptr, r2 ? &*r2 : nullptr, r3 ? &*r3 : nullptr});
    out << render(b) << '\n';
    return kOk;
}

int cmd_catalog_list(std::ostream& out)
{
    for (const auto& name : catalog::names()) {
        const catalog::CatalogEntry e = catalog::build(name);
        out << e.name << '\t' << catalog::to_string(e.kind) << '\t' << e.momentum_order << '\t' << e.source << '\n';
    }
    return kOk;
}

int cmd_catalog_show(const std::string& name, std::ostream& out)
{
    if (!is_catalog_name(name)) {
        throw UsageError("unknown catalog entry '" + name + "'");
    }
    const catalog::CatalogEntry e = catalog::build(name);
    if (e.kind == catalog::Kind::vectorfield) {
        const VectorField& v = e.field();
        out << "x: " << render(v.cx) << '\n'
            << "y: " << render(v.cy) << '\n'
            << "px: " << render(v.cpx) << '\n'
            << "py: " << render(v.cpy) << '\n';
    } else {
        out << render(e.poly()) << '\n';
    }
    return kOk;
}

struct SimulateArgs {
    std::string potential = "U";
    double k1 = 0.0;
    double k2 = 1.0;
    double k3 = 0.0;
    std::string start = "0,1,0.5,0.5";
    double h = 1e-3;
    double t_end = 10.0;
    std::string integrator = "leapfrog2";
    double y_min = 1e-6;
    std::string out_path;
    std::string track;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err)
{
    if (!is_catalog_name(a.potential)) {
        throw UsageError("unknown potential '" + a.potential + "'");
    }
    const catalog::CatalogEntry pot = catalog::build(a.potential);
    if (pot.kind != catalog::Kind::potential && pot.kind != catalog::Kind::hamiltonian) {
        throw UsageError("'" + a.potential + "' is not a potential");
    }

    dynamics::SimConfig cfg;
    try {
        cfg.integrator = dynamics::parse_integrator(a.integrator);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    cfg.h = a.h;
    cfg.t_end = a.t_end;
    cfg.y_min = a.y_min;
    cfg.k1 = a.k1;
    cfg.k2 = a.k2;
    cfg.k3 = a.k3;
    if (!(cfg.h > 0.0) || !(cfg.t_end > 0.0) || cfg.h > cfg.t_end || !(cfg.y_min > 0.0)) {
        throw UsageError("need 0 < h <= t-end and y-min > 0");
    }
    const PhasePoint start = parse_point(a.start);

    std::vector<std::string> tracked = a.track.empty() ? catalog::invariants_for(a.potential) : split_names(a.track);
    std::vector<catalog::CatalogEntry> invariants;
    for (const auto& name : tracked) {
        if (!is_catalog_name(name)) {
            throw UsageError("unknown invariant '" + name + "'");
        }
        invariants.push_back(catalog::build(name));
        if (invariants.back().kind == catalog::Kind::vectorfield) {
            throw UsageError("'" + name + "' is a vector field");
        }
    }

    std::unique_ptr<std::ofstream> table;
    if (!a.out_path.empty()) {
        table = open_output(a.out_path);
    }

    dynamics::Trajectory traj;
    try {
        traj = dynamics::integrate(pot, start, cfg);
    } catch (const dynamics::TrajectoryDomainError& ex) {
        err << "domain abort: " << ex.what() << '\n';
        return kDomainAbort;
    }
    if (table) {
        dynamics::write_table(*table, traj, invariants, cfg.k1, cfg.k2, cfg.k3);
    }
    const dynamics::DriftReport report = dynamics::drift_report(traj, invariants, cfg.k1, cfg.k2, cfg.k3);
    out << "potential " << a.potential << "  integrator " << dynamics::to_string(cfg.integrator) << "  h "
        << dynamics::format_double(cfg.h) << "  t_end " << dynamics::format_double(cfg.t_end) << "  samples "
        << report.samples << '\n';
    for (const auto& d : report.invariants) {
        out << d.name << "\tinitial " << dynamics::format_double(d.initial) << "\tmax_drift "
            << dynamics::format_double(d.max_drift) << '\n';
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of Holt-type superintegrable systems", "holt"};
    app.require_subcommand(1);

    std::string suite = "full";
    std::string report_path;
    std::vector<std::string> flips;
    bool no_timings = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the exact identity suite");
    verify_cmd->add_option("--suite", suite, "full|conservation|limits|relations|brackets|commutators|closure|jacobi");
    verify_cmd->add_option("--out", report_path, "write the JSON report here");
    verify_cmd->add_option("--flip-sign", flips, "fault injection: negate term INDEX of NAME (NAME:INDEX)");
    verify_cmd->add_flag("--no-timings", no_timings, "write 0 for every timing in the report");

    std::string lhs;
    std::string rhs;
    std::string bk1;
    std::string bk2;
    std::string bk3;
    auto* bracket_cmd = app.add_subcommand("bracket", "print the exact Poisson bracket {A, B}");
    bracket_cmd->add_option("A", lhs, "catalog name or expression")->required();
    bracket_cmd->add_option("B", rhs, "catalog name or expression")->required();
    bracket_cmd->add_option("--k1", bk1, "substitute a rational value for k1");
    bracket_cmd->add_option("--k2", bk2, "substitute a rational value for k2");
    bracket_cmd->add_option("--k3", bk3, "substitute a rational value for k3");

    std::string show_name;
    auto* catalog_cmd = app.add_subcommand("catalog", "inspect the catalog");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "list all entries");
    auto* show_cmd = catalog_cmd->add_subcommand("show", "print one entry");
    show_cmd->add_option("NAME", show_name)->required();

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "integrate a trajectory and report invariant drift");
    sim_cmd->set_help_flag("--help", "print this help message and exit");
    sim_cmd->add_option("--potential", sim.potential, "catalog potential or Hamiltonian")->capture_default_str();
    sim_cmd->add_option("--k1", sim.k1)->capture_default_str();
    sim_cmd->add_option("--k2", sim.k2)->capture_default_str();
    sim_cmd->add_option("--k3", sim.k3)->capture_default_str();
    sim_cmd->add_option("--start", sim.start, "x,y,px,py")->capture_default_str();
    sim_cmd->add_option("--h", sim.h, "step size")->capture_default_str();
    sim_cmd->add_option("--t-end", sim.t_end)->capture_default_str();
    sim_cmd->add_option("--integrator", sim.integrator, "leapfrog2|composed4")->capture_default_str();
    sim_cmd->add_option("--y-min", sim.y_min)->capture_default_str();
    sim_cmd->add_option("--out", sim.out_path, "write the trajectory table here");
    sim_cmd->add_option("--track", sim.track, "comma-separated invariants (default: those of the potential)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (verify_cmd->parsed()) {
            return cmd_verify(suite, report_path, flips, !no_timings, out);
        }
        if (bracket_cmd->parsed()) {
            return cmd_bracket(lhs, rhs, bk1, bk2, bk3, out);
        }
        if (list_cmd->parsed()) {
            return cmd_catalog_list(out);
        }
        if (show_cmd->parsed()) {
            return cmd_catalog_show(show_name, out);
        }
        if (sim_cmd->parsed()) {
            return cmd_simulate(sim, out, err);
        }
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << "\n\n" << app.help();
        return kUsage;
    }
    err << app.help();
    return kUsage;
}

} // namespace holt::cli
