#include "holt/phasepoly.hpp"

#include <cmath>

namespace holt {

PhasePoly::PhasePoly(ParamPoly c)
{
    if (!c.is_zero()) {
        terms_.emplace(Monomial{}, std::move(c));
    }
}

PhasePoly PhasePoly::monomial(const Monomial& m, ParamPoly coeff)
{
    if (m.ex < 0 || m.epx < 0 || m.epy < 0) {
        throw std::invalid_argument("only the u exponent may be negative");
    }
    PhasePoly p;
    if (!coeff.is_zero()) {
        p.terms_.emplace(m, std::move(coeff));
    }
    return p;
}

ParamPoly PhasePoly::coeff(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? ParamPoly() : it->second;
}

int PhasePoly::momentum_order() const
{
    int order = -1;
    for (const auto& [m, c] : terms_) {
        order = std::max(order, m.momentum_degree());
    }
    return order;
}

PhasePoly PhasePoly::substitute(const std::array<const Rational*, 3>& values) const
{
    PhasePoly out;
    for (const auto& [m, c] : terms_) {
        out.accumulate(m, c.substitute(values));
    }
    return out;
}

std::vector<FlatTerm> PhasePoly::flatten() const
{
    std::vector<FlatTerm> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [e, r] : c.terms()) {
            out.push_back({r, e, m});
        }
    }
    return out;
}

PhasePoly PhasePoly::from_flat(const std::vector<FlatTerm>& terms)
{
    PhasePoly out;
    for (const auto& t : terms) {
        out.accumulate(t.mono, ParamPoly::term(t.coeff, t.params));
    }
    return out;
}

void PhasePoly::accumulate(const Monomial& m, const ParamPoly& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o)
{
    if (&o == this) {
        return *this *= ParamPoly(2);
    }
    for (const auto& [m, c] : o.terms_) {
        accumulate(m, c);
    }
    return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o)
{
    if (&o == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& [m, c] : o.terms_) {
        accumulate(m, -c);
    }
    return *this;
}

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b)
{
    PhasePoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            const Monomial m{ma.ex + mb.ex, ma.eu + mb.eu, ma.epx + mb.epx, ma.epy + mb.epy};
            out.accumulate(m, ca * cb);
        }
    }
    return out;
}

PhasePoly& PhasePoly::operator*=(const PhasePoly& o)
{
    *this = *this * o;
    return *this;
}

PhasePoly& PhasePoly::operator*=(const ParamPoly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    TermMap scaled;
    for (const auto& [m, v] : terms_) {
        ParamPoly p = v * c;
        if (!p.is_zero()) {
            scaled.emplace(m, std::move(p));
        }
    }
    terms_ = std::move(scaled);
    return *this;
}

PhasePoly operator-(PhasePoly a)
{
    for (auto& [m, c] : a.terms_) {
        c = -c;
    }
    return a;
}

PhasePoly pow(const PhasePoly& base, int exponent)
{
    if (exponent < 0) {
        throw std::invalid_argument("negative power of a phase-space polynomial");
    }
    PhasePoly result(1);
    PhasePoly factor = base;
    auto e = static_cast<unsigned>(exponent);
    while (e != 0) {
        if ((e & 1U) != 0) {
            result *= factor;
        }
        e >>= 1U;
        if (e != 0) {
            factor *= factor;
        }
    }
    return result;
}

PhasePoly partial(const PhasePoly& f, Direction dir)
{
    PhasePoly out;
    for (const auto& [m, c] : f.terms()) {
        Monomial d = m;
        Rational factor;
        switch (dir) {
        case Direction::x:
            factor = m.ex;
            d.ex -= 1;
            break;
        case Direction::u:
            factor = m.eu;
            d.eu -= 1;
            break;
        case Direction::y:
            // d/dy u^n = (n/3) u^(n-3)
            factor = Rational(m.eu, 3);
            d.eu -= 3;
            break;
        case Direction::px:
            factor = m.epx;
            d.epx -= 1;
            break;
        case Direction::py:
            factor = m.epy;
            d.epy -= 1;
            break;
        }
        if (factor.is_zero()) {
            continue;
        }
        ParamPoly coeff = c;
        coeff *= factor;
        out += PhasePoly::monomial(d, std::move(coeff));
    }
    return out;
}

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g)
{
    PhasePoly out = partial(f, Direction::x) * partial(g, Direction::px);
    out += partial(f, Direction::y) * partial(g, Direction::py);
    out -= partial(f, Direction::px) * partial(g, Direction::x);
    out -= partial(f, Direction::py) * partial(g, Direction::y);
    return out;
}

VectorField& VectorField::operator+=(const VectorField& o)
{
    cx += o.cx;
    cy += o.cy;
    cpx += o.cpx;
    cpy += o.cpy;
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o)
{
    cx -= o.cx;
    cy -= o.cy;
    cpx -= o.cpx;
    cpy -= o.cpy;
    return *this;
}

VectorField operator*(const PhasePoly& s, const VectorField& v)
{
    return {s * v.cx, s * v.cy, s * v.cpx, s * v.cpy};
}

VectorField hamiltonian_vf(const PhasePoly& f)
{
    return {partial(f, Direction::px), partial(f, Direction::py), -partial(f, Direction::x), -partial(f, Direction::y)};
}

PhasePoly apply(const VectorField& field, const PhasePoly& g)
{
    PhasePoly out = field.cx * partial(g, Direction::x);
    out += field.cy * partial(g, Direction::y);
    out += field.cpx * partial(g, Direction::px);
    out += field.cpy * partial(g, Direction::py);
    return out;
}

VectorField vf_commutator(const VectorField& a, const VectorField& b)
{
    return {
        apply(a, b.cx) - apply(b, a.cx),
        apply(a, b.cy) - apply(b, a.cy),
        apply(a, b.cpx) - apply(b, a.cpx),
        apply(a, b.cpy) - apply(b, a.cpy),
    };
}

namespace {

double ipow(double base, int exponent)
{
    double result = 1.0;
    const bool invert = exponent < 0;
    unsigned e = invert ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
    while (e != 0) {
        if ((e & 1U) != 0) {
            result *= base;
        }
        base *= base;
        e >>= 1U;
    }
    return invert ? 1.0 / result : result;
}

void require_domain(const PhasePoint& pt)
{
    if (!(pt.y > 0.0)) {
        throw DomainError("phase-space point with y <= 0 (y = " + std::to_string(pt.y) + ")");
    }
}

} // namespace

CompiledPoly::CompiledPoly(const PhasePoly& f, double k1, double k2, double k3)
{
    for (const auto& [m, c] : f.terms()) {
        const double v = c.eval(k1, k2, k3);
        if (v != 0.0) {
            terms_.push_back({v, m});
        }
    }
}

double CompiledPoly::operator()(const PhasePoint& pt) const
{
    require_domain(pt);
    const double u = std::cbrt(pt.y);
    double sum = 0.0;
    for (const auto& t : terms_) {
        sum += t.coeff * ipow(pt.x, t.mono.ex) * ipow(u, t.mono.eu) * ipow(pt.px, t.mono.epx) * ipow(pt.py, t.mono.epy);
    }
    return sum;
}

double eval_numeric(const PhasePoly& f, const PhasePoint& pt, double k1, double k2, double k3)
{
    require_domain(pt);
    return CompiledPoly(f, k1, k2, k3)(pt);
}

} // namespace holt
