#ifndef HOLT_PHASEPOLY_HPP
#define HOLT_PHASEPOLY_HPP

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "holt/ring.hpp"

namespace holt {

// Phase space is (x, y, px, py) with y > 0. Every fractional power of y that
// the Holt family needs is an integer power of the generator u = y^(1/3), so
// the polynomials below live in Q[k1,k2,k3][x, u, 1/u, px, py].

/// x^ex * u^eu * px^epx * py^epy. Only eu may be negative.
struct Monomial {
    int ex = 0;
    int eu = 0;
    int epx = 0;
    int epy = 0;

    [[nodiscard]] int momentum_degree() const { return epx + epy; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Descending lexicographic on (epx, epy, ex, eu): momentum-leading terms first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.epx != b.epx) return a.epx > b.epx;
        if (a.epy != b.epy) return a.epy > b.epy;
        if (a.ex != b.ex) return a.ex > b.ex;
        return a.eu > b.eu;
    }
};

enum class Direction { x, u, y, px, py };

/// Numeric phase-space state. The potentials are singular on y = 0.
struct PhasePoint {
    double x = 0.0;
    double y = 1.0;
    double px = 0.0;
    double py = 0.0;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A single coefficient-times-monomial term with the parameter part split out,
/// i.e. one summand of the canonical rendering.
struct FlatTerm {
    Rational coeff;
    ParamExponents params{};
    Monomial mono;
};

class PhasePoly {
public:
    using TermMap = std::map<Monomial, ParamPoly, MonomialOrder>;

    PhasePoly() = default;
    PhasePoly(ParamPoly c); // NOLINT(google-explicit-constructor)
    PhasePoly(Rational c) : PhasePoly(ParamPoly(std::move(c))) {} // NOLINT(google-explicit-constructor)
    PhasePoly(long c) : PhasePoly(ParamPoly(c)) {} // NOLINT(google-explicit-constructor)
    PhasePoly(int c) : PhasePoly(ParamPoly(static_cast<long>(c))) {} // NOLINT(google-explicit-constructor)

    static PhasePoly monomial(const Monomial& m, ParamPoly coeff = ParamPoly(1));
    static PhasePoly x() { return monomial({1, 0, 0, 0}); }
    static PhasePoly u(int power = 1) { return monomial({0, power, 0, 0}); }
    static PhasePoly y() { return u(3); }
    static PhasePoly px() { return monomial({0, 0, 1, 0}); }
    static PhasePoly py() { return monomial({0, 0, 0, 1}); }
    static PhasePoly k(int index) { return PhasePoly(ParamPoly::k(index)); }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    /// Coefficient of a monomial, zero if absent.
    [[nodiscard]] ParamPoly coeff(const Monomial& m) const;

    /// Maximum epx + epy over the terms; -1 for the zero polynomial.
    [[nodiscard]] int momentum_order() const;
    [[nodiscard]] bool momentum_free() const { return momentum_order() <= 0; }

    /// Substitutes the engaged parameter slots exactly.
    [[nodiscard]] PhasePoly substitute(const std::array<const Rational*, 3>& values) const;

    [[nodiscard]] std::vector<FlatTerm> flatten() const;
    static PhasePoly from_flat(const std::vector<FlatTerm>& terms);

    PhasePoly& operator+=(const PhasePoly& o);
    PhasePoly& operator-=(const PhasePoly& o);
    PhasePoly& operator*=(const PhasePoly& o);
    PhasePoly& operator*=(const ParamPoly& c);

    friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
    friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
    friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);
    friend PhasePoly operator-(PhasePoly a);

    friend bool operator==(const PhasePoly& a, const PhasePoly& b) { return a.terms_ == b.terms_; }

private:
    void accumulate(const Monomial& m, const ParamPoly& c);

    TermMap terms_;
};

/// Non-negative integer power; negative exponents throw std::invalid_argument.
PhasePoly pow(const PhasePoly& base, int exponent);

/// Term-wise partial derivative. Direction::y applies d/dy = (1/3) u^-2 d/du.
PhasePoly partial(const PhasePoly& f, Direction dir);

/// {f, g} = f_x g_px + f_y g_py - f_px g_x - f_py g_y.
PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g);

/// First-order differential operator on phase space, components along
/// (x, y, px, py).
struct VectorField {
    PhasePoly cx;
    PhasePoly cy;
    PhasePoly cpx;
    PhasePoly cpy;

    [[nodiscard]] bool is_zero() const { return cx.is_zero() && cy.is_zero() && cpx.is_zero() && cpy.is_zero(); }

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const PhasePoly& s, const VectorField& v);
    friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// X_f = (f_px, f_py, -f_x, -f_y), so that apply(X_f, g) == {g, f}.
VectorField hamiltonian_vf(const PhasePoly& f);

/// Derivative of g along the field.
PhasePoly apply(const VectorField& field, const PhasePoly& g);

/// Lie bracket [X, Y]_i = X(Y_i) - Y(X_i).
VectorField vf_commutator(const VectorField& a, const VectorField& b);

/// Double-precision evaluation with u = cbrt(y). Throws DomainError for y <= 0.
double eval_numeric(const PhasePoly& f, const PhasePoint& pt, double k1, double k2, double k3);

/// A PhasePoly with the parameters substituted, flattened for fast repeated
/// numeric evaluation.
class CompiledPoly {
public:
    CompiledPoly() = default;
    CompiledPoly(const PhasePoly& f, double k1, double k2, double k3);

    /// Throws DomainError for y <= 0.
    [[nodiscard]] double operator()(const PhasePoint& pt) const;
    [[nodiscard]] bool empty() const { return terms_.empty(); }

private:
    struct Term {
        double coeff;
        Monomial mono;
    };
    std::vector<Term> terms_;
};

// Canonical text form. Grammar: terms joined by '+'/'-'; a term is an optional
// rational coefficient and '*'-separated factors among x, u, y, px, py, k1, k2,
// k3, each with an optional '^' integer exponent. Negative exponents are only
// allowed on u; y is read as u^3.

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& reason);
    [[nodiscard]] std::size_t position() const { return position_; }
    [[nodiscard]] const std::string& reason() const { return reason_; }

private:
    std::size_t position_;
    std::string reason_;
};

std::string render(const PhasePoly& f);
std::string render(const FlatTerm& t, bool leading);
PhasePoly parse(std::string_view text);

} // namespace holt

#endif // HOLT_PHASEPOLY_HPP
