#include <cctype>
#include <charconv>
#include <string>

#include "holt/phasepoly.hpp"

namespace holt {

ParseError::ParseError(std::size_t position, const std::string& reason)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + reason),
      position_(position),
      reason_(reason)
{
}

namespace {

void append_factor(std::string& out, std::string_view name, int exponent)
{
    if (exponent == 0) {
        return;
    }
    if (!out.empty()) {
        out += '*';
    }
    out += name;
    if (exponent != 1) {
        out += '^' + std::to_string(exponent);
    }
}

} // namespace

std::string render(const FlatTerm& t, bool leading)
{
    std::string out;
    const bool negative = t.coeff.sign() < 0;
    if (leading) {
        out += negative ? "-" : "";
    } else {
        out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? -t.coeff : t.coeff;
    const std::string kpart = render_param_monomial(t.params);
    const Monomial& m = t.mono;
    const bool has_factors = !kpart.empty() || m.ex != 0 || m.eu != 0 || m.epx != 0 || m.epy != 0;

    std::string body;
    if (!mag.is_one() || !has_factors) {
        body += mag.to_string();
    }
    if (!kpart.empty()) {
        if (!body.empty()) {
            body += '*';
        }
        body += kpart;
    }
    append_factor(body, "x", m.ex);
    append_factor(body, "u", m.eu);
    append_factor(body, "px", m.epx);
    append_factor(body, "py", m.epy);
    return out + body;
}

std::string render(const PhasePoly& f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    bool leading = true;
    for (const auto& t : f.flatten()) {
        out += render(t, leading);
        leading = false;
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    PhasePoly parse()
    {
        skip_ws();
        if (at_end()) {
            fail("empty expression");
        }
        PhasePoly result;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
            skip_ws();
        }
        for (;;) {
            PhasePoly t = term();
            result += negative ? -t : t;
            skip_ws();
            if (at_end()) {
                break;
            }
            if (peek() != '+' && peek() != '-') {
                fail(std::string("expected '+', '-' or '*' but found '") + peek() + "'");
            }
            negative = peek() == '-';
            ++pos_;
            skip_ws();
        }
        return result;
    }

private:
    PhasePoly term()
    {
        Rational coeff(1);
        ParamExponents ks{0, 0, 0};
        Monomial m;
        for (;;) {
            skip_ws();
            factor(coeff, ks, m);
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        return PhasePoly::monomial(m, ParamPoly::term(coeff, ks));
    }

    void factor(Rational& coeff, ParamExponents& ks, Monomial& m)
    {
        if (at_end()) {
            fail("expected a factor");
        }
        const std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            std::string number = digits();
            if (!at_end() && peek() == '/') {
                ++pos_;
                if (at_end() || std::isdigit(static_cast<unsigned char>(peek())) == 0) {
                    fail("expected denominator after '/'");
                }
                const std::size_t den_pos = pos_;
                const std::string den = digits();
                if (den.find_first_not_of('0') == std::string::npos) {
                    fail_at(den_pos, "zero denominator");
                }
                number += "/" + den;
            }
            coeff *= Rational::parse(number);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(peek())) == 0) {
            fail(std::string("unexpected character '") + peek() + "'");
        }
        std::string name;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek())) != 0) {
            name += peek();
            ++pos_;
        }
        int exponent = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            exponent = integer(name == "u");
        }
        if (name == "x") {
            m.ex += exponent;
        } else if (name == "u") {
            m.eu += exponent;
        } else if (name == "y") {
            m.eu += 3 * exponent;
        } else if (name == "px") {
            m.epx += exponent;
        } else if (name == "py") {
            m.epy += exponent;
        } else if (name == "k1" || name == "k2" || name == "k3") {
            ks[static_cast<std::size_t>(name[1] - '1')] += static_cast<std::uint16_t>(exponent);
        } else {
            fail_at(start, "unknown symbol '" + name + "'");
        }
    }

    int integer(bool allow_negative)
    {
        const std::size_t start = pos_;
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            negative = peek() == '-';
            ++pos_;
        }
        if (negative && !allow_negative) {
            fail_at(start, "negative exponent is only allowed on u");
        }
        if (at_end() || std::isdigit(static_cast<unsigned char>(peek())) == 0) {
            fail("expected integer exponent");
        }
        const std::string d = digits();
        int value = 0;
        const auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
        if (ec != std::errc() || value > 10000) {
            fail_at(start, "exponent out of range");
        }
        return negative ? -value : value;
    }

    std::string digits()
    {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            out += peek();
            ++pos_;
        }
        return out;
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) {
            ++pos_;
        }
    }

    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& reason) const { fail_at(pos_, reason); }
    [[noreturn]] static void fail_at(std::size_t pos, const std::string& reason) { throw ParseError(pos, reason); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

PhasePoly parse(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace holt
