#ifndef HOLT_TESTS_GENERATORS_HPP
#define HOLT_TESTS_GENERATORS_HPP

#include <random>

#include "holt/phasepoly.hpp"

namespace holt::testing {

// Small random elements of the coefficient and phase-space rings.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    Rational rational()
    {
        const int num = uniform(-9, 9);
        const int den = uniform(1, 4);
        return Rational(num, den);
    }

    ParamPoly param_poly(int max_terms = 3, int max_exp = 2)
    {
        ParamPoly p;
        const int n = uniform(0, max_terms);
        for (int i = 0; i < n; ++i) {
            ParamExponents e{static_cast<std::uint16_t>(uniform(0, max_exp)), static_cast<std::uint16_t>(uniform(0, max_exp)),
                             static_cast<std::uint16_t>(uniform(0, max_exp))};
            p += ParamPoly::term(rational(), e);
        }
        return p;
    }

    Monomial monomial()
    {
        return {uniform(0, 2), uniform(-3, 3), uniform(0, 2), uniform(0, 2)};
    }

    PhasePoly phase_poly(int max_terms = 4)
    {
        PhasePoly p;
        const int n = uniform(1, max_terms);
        for (int i = 0; i < n; ++i) {
            p += PhasePoly::monomial(monomial(), param_poly(2, 1) + ParamPoly(rational()));
        }
        return p;
    }

    VectorField vector_field()
    {
        return {phase_poly(2), phase_poly(2), phase_poly(2), phase_poly(2)};
    }

    PhasePoint point()
    {
        return {real(-1.5, 1.5), real(0.3, 2.0), real(-1.5, 1.5), real(-1.5, 1.5)};
    }

private:
    std::mt19937 rng_;
};

} // namespace holt::testing

#endif // HOLT_TESTS_GENERATORS_HPP
