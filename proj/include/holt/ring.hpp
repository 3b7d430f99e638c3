#ifndef HOLT_RING_HPP
#define HOLT_RING_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace holt {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "n" or "n/d" with an optional leading sign.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_one() const { return q_ == 1; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return q_.get_d(); }
    [[nodiscard]] std::string numerator() const { return q_.get_num().get_str(); }
    [[nodiscard]] std::string denominator() const { return q_.get_den().get_str(); }
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

private:
    mpq_class q_{0};
};

/// Integer power; negative exponents invert (throws on zero base).
Rational pow(const Rational& base, int exponent);

/// Exponents of (k1, k2, k3).
using ParamExponents = std::array<std::uint16_t, 3>;

/// Sparse polynomial in the parameters k1, k2, k3 with rational coefficients.
/// No zero coefficient is ever stored, so structural equality is mathematical
/// equality.
class ParamPoly {
public:
    using TermMap = std::map<ParamExponents, Rational, std::greater<>>;

    ParamPoly() = default;
    ParamPoly(Rational c); // NOLINT(google-explicit-constructor)
    ParamPoly(long c) : ParamPoly(Rational(c)) {} // NOLINT(google-explicit-constructor)

    /// The generator k_index (index in 1..3).
    static ParamPoly k(int index);
    static ParamPoly term(const Rational& coeff, ParamExponents exps);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// Exact substitution of all three parameters.
    [[nodiscard]] Rational eval(const Rational& k1, const Rational& k2, const Rational& k3) const;
    [[nodiscard]] double eval(double k1, double k2, double k3) const;

    /// Substitutes the parameters whose slot is engaged; the others stay symbolic.
    [[nodiscard]] ParamPoly substitute(const std::array<const Rational*, 3>& values) const;

    /// Canonical text, e.g. "3*k1^2*k2 - 1/2*k3 + 7". Zero renders as "0".
    [[nodiscard]] std::string to_string() const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& c);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(ParamPoly a);

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

private:
    void accumulate(const ParamExponents& e, const Rational& c);

    TermMap terms_;
};

/// Non-negative integer power; negative exponents throw std::invalid_argument.
ParamPoly pow(const ParamPoly& base, int exponent);

/// Renders one k-monomial as "k1^2*k3"; empty for the constant monomial.
std::string render_param_monomial(const ParamExponents& e);

} // namespace holt

#endif // HOLT_RING_HPP
