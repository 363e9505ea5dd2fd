#include "qfi/quadratic_field.hpp"

#include <charconv>
#include <ostream>

namespace qfi {

QuadraticField::QuadraticField(Int D)
    : radicand_(D)
    , delta_(mod(D, 4) == 1 ? 2 : 1)
{
    if (D == 0 || D == 1)
        throw DomainError("field radicand must differ from 0 and 1");
    if (!is_squarefree(D))
        throw DomainError("field radicand must be squarefree");
    // keeps 4D and the squared numerators of small elements representable
    if (D > (Int(1) << 60) || D < -(Int(1) << 60))
        throw DomainError("field radicand too large");
}

QuadraticField make_field(Int D)
{
    return QuadraticField(D);
}

QuadraticInteger::QuadraticInteger(QuadraticField const & field, Int u, Int v)
    : field_(field)
    , u_(u)
    , v_(v)
{
    if (field.delta() == 2 && mod(u, 2) != mod(v, 2))
        throw DomainError("numerators of an integer over delta = 2 must share parity");
}

QuadraticInteger QuadraticInteger::rational(QuadraticField const & field, Int n)
{
    return {field, checked_mul(n, field.delta()), 0};
}

Int QuadraticInteger::norm() const
{
    Int const D = field_.radicand();
    Wide num = Wide(u_) * u_ - Wide(v_) * v_ * D;
    Wide den = field_.delta() * field_.delta();
    if (num % den != 0)
        throw InvariantViolation("norm is not integral");
    return narrow(num / den);
}

QuadraticInteger QuadraticInteger::conj() const
{
    return {field_, u_, checked_sub(0, v_)};
}

namespace {

void require_same_field(QuadraticInteger const & x, QuadraticInteger const & y)
{
    if (!(x.field() == y.field()))
        throw DomainError("elements belong to different fields");
}

} // namespace

QuadraticInteger add(QuadraticInteger const & x, QuadraticInteger const & y)
{
    require_same_field(x, y);
    return {x.field(), checked_add(x.u(), y.u()), checked_add(x.v(), y.v())};
}

QuadraticInteger sub(QuadraticInteger const & x, QuadraticInteger const & y)
{
    require_same_field(x, y);
    return {x.field(), checked_sub(x.u(), y.u()), checked_sub(x.v(), y.v())};
}

QuadraticInteger mul(QuadraticInteger const & x, QuadraticInteger const & y)
{
    require_same_field(x, y);
    Int const D = x.field().radicand();
    int const delta = x.field().delta();
    Wide u = Wide(x.u()) * y.u() + Wide(x.v()) * y.v() * D;
    Wide v = Wide(x.u()) * y.v() + Wide(x.v()) * y.u();
    if (u % delta != 0 || v % delta != 0)
        throw InvariantViolation("product left the ring of integers");
    return {x.field(), narrow(u / delta), narrow(v / delta)};
}

std::string QuadraticInteger::to_string() const
{
    std::string const root = "√" + std::to_string(field_.radicand());
    std::string num;
    auto coefficient = [](Int c) -> std::string {
        if (c == 1)
            return "";
        if (c == -1)
            return "-";
        return std::to_string(c);
    };
    if (v_ == 0) {
        num = std::to_string(u_);
    } else if (u_ == 0) {
        num = coefficient(v_) + root;
    } else {
        num = std::to_string(u_) + (v_ < 0 ? "-" : "+") + coefficient(v_ < 0 ? -v_ : v_) + root;
    }
    if (field_.delta() == 2)
        return "(" + num + ")/2";
    return num;
}

namespace {

std::string normalise(std::string_view text)
{
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t')
            continue;
        // U+2212 MINUS SIGN
        if (text.substr(i, 3) == "\xE2\x88\x92") {
            out += '-';
            i += 2;
            continue;
        }
        // U+221A SQUARE ROOT becomes an ASCII marker
        if (text.substr(i, 3) == "\xE2\x88\x9A") {
            out += '#';
            i += 2;
            continue;
        }
        if (text.substr(i, 4) == "sqrt") {
            out += '#';
            i += 3;
            continue;
        }
        out += ch;
    }
    return out;
}

Int parse_int(std::string_view s, std::string_view what)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw DomainError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    return value;
}

} // namespace

QuadraticInteger QuadraticInteger::parse(std::string_view text, QuadraticField const & field)
{
    std::string s = normalise(text);
    int denominator = 1;
    if (s.size() >= 4 && s.front() == '(' && s.ends_with(")/2")) {
        denominator = 2;
        s = s.substr(1, s.size() - 4);
    }
    Int u = 0, v = 0;
    auto root = s.find('#');
    if (root == std::string::npos) {
        u = parse_int(s, "integer");
    } else {
        std::string radicand = s.substr(root + 1);
        if (radicand.size() >= 2 && radicand.front() == '(' && radicand.back() == ')')
            radicand = radicand.substr(1, radicand.size() - 2);
        if (parse_int(radicand, "radicand") != field.radicand())
            throw DomainError("radicand does not match the field");
        std::string prefix = s.substr(0, root);
        auto split = prefix.find_last_of("+-");
        std::string coeff = prefix;
        if (split != std::string::npos && split > 0) {
            u = parse_int(prefix.substr(0, split), "rational part");
            coeff = prefix.substr(split);
        }
        if (coeff.empty() || coeff == "+")
            v = 1;
        else if (coeff == "-")
            v = -1;
        else
            v = parse_int(coeff, "coefficient");
    }
    if (denominator == 2 && field.delta() != 2)
        throw DomainError("denominator 2 only occurs when D = 1 (mod 4)");
    if (denominator == 1 && field.delta() == 2)
        return {field, checked_mul(u, 2), checked_mul(v, 2)};
    return {field, u, v};
}

std::ostream & operator<<(std::ostream & os, QuadraticInteger const & x)
{
    return os << x.to_string();
}

} // namespace qfi
