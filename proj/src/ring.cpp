#include "holt/ring.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace holt {

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto digits = [](std::string_view s) {
        if (s.empty()) {
            return false;
        }
        for (char ch : s) {
            if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
                return false;
            }
        }
        return true;
    };

    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (negative) {
        n = -n;
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational pow(const Rational& base, int exponent)
{
    Rational result(1);
    for (int i = 0; i < std::abs(exponent); ++i) {
        result *= base;
    }
    return exponent < 0 ? Rational(1) / result : result;
}

ParamPoly::ParamPoly(Rational c)
{
    if (!c.is_zero()) {
        terms_.emplace(ParamExponents{0, 0, 0}, std::move(c));
    }
}

ParamPoly ParamPoly::k(int index)
{
    if (index < 1 || index > 3) {
        throw std::out_of_range("parameter index must be 1, 2 or 3");
    }
    ParamExponents e{0, 0, 0};
    e[static_cast<std::size_t>(index - 1)] = 1;
    return term(Rational(1), e);
}

ParamPoly ParamPoly::term(const Rational& coeff, ParamExponents exps)
{
    ParamPoly p;
    if (!coeff.is_zero()) {
        p.terms_.emplace(exps, coeff);
    }
    return p;
}

bool ParamPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamExponents{0, 0, 0});
}

void ParamPoly::accumulate(const ParamExponents& e, const Rational& c)
{
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o)
{
    if (&o == this) {
        return *this *= Rational(2);
    }
    for (const auto& [e, c] : o.terms_) {
        accumulate(e, c);
    }
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o)
{
    if (&o == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& [e, c] : o.terms_) {
        accumulate(e, -c);
    }
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b)
{
    ParamPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ParamExponents e{};
            for (std::size_t i = 0; i < 3; ++i) {
                e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            }
            out.accumulate(e, ca * cb);
        }
    }
    return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o)
{
    *this = *this * o;
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

ParamPoly operator-(ParamPoly a)
{
    for (auto& [e, c] : a.terms_) {
        c = -c;
    }
    return a;
}

ParamPoly pow(const ParamPoly& base, int exponent)
{
    if (exponent < 0) {
        throw std::invalid_argument("negative power of a parameter polynomial");
    }
    ParamPoly result(1);
    for (int i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

Rational ParamPoly::eval(const Rational& k1, const Rational& k2, const Rational& k3) const
{
    const std::array<const Rational*, 3> ks{&k1, &k2, &k3};
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < 3; ++i) {
            t *= pow(*ks[i], static_cast<int>(e[i]));
        }
        sum += t;
    }
    return sum;
}

double ParamPoly::eval(double k1, double k2, double k3) const
{
    const std::array<double, 3> ks{k1, k2, k3};
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (std::size_t i = 0; i < 3; ++i) {
            for (unsigned j = 0; j < e[i]; ++j) {
                t *= ks[i];
            }
        }
        sum += t;
    }
    return sum;
}

ParamPoly ParamPoly::substitute(const std::array<const Rational*, 3>& values) const
{
    ParamPoly out;
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        ParamExponents kept = e;
        for (std::size_t i = 0; i < 3; ++i) {
            if (values[i] != nullptr) {
                coeff *= pow(*values[i], static_cast<int>(e[i]));
                kept[i] = 0;
            }
        }
        if (!coeff.is_zero()) {
            out.accumulate(kept, coeff);
        }
    }
    return out;
}

std::string render_param_monomial(const ParamExponents& e)
{
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += 'k';
        out += static_cast<char>('1' + i);
        if (e[i] != 1) {
            out += '^' + std::to_string(e[i]);
        }
    }
    return out;
}

std::string ParamPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        const std::string mono = render_param_monomial(e);
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

} // namespace holt
