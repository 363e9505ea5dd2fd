#include "qfi/principality.hpp"

#include <algorithm>

namespace qfi {

namespace {

void require_odd_prime(Int q)
{
    if (q == 2)
        throw DomainError("q = 2 is not covered; q must be an odd prime");
    if (!is_prime(q))
        throw DomainError("q must be an odd prime");
}

} // namespace

SplittingType split_type(QuadraticField const & field, Int q)
{
    require_odd_prime(q);
    if (mod(field.radicand(), q) == 0)
        return Ramified{};
    if (auto n = sqrt_mod(field.radicand(), q))
        return Split{*n};
    return Inert{};
}

SplitPrimeIdeal::SplitPrimeIdeal(QuadraticField const & field, Int q, Int n)
    : field_(field)
    , q_(q)
    , n_(n)
    , l_(0)
{
    require_odd_prime(q);
    if (mod(field.radicand(), q) == 0)
        throw DomainError("q ramifies (q divides D)");
    if (n <= 0 || n >= q)
        throw DomainError("root n must satisfy 0 < n < q");
    Wide const diff = Wide(n) * n - field.radicand();
    if (diff % q != 0)
        throw DomainError("n^2 is not congruent to D modulo q");
    l_ = narrow(diff / q);
}

SplitPrimeIdeal SplitPrimeIdeal::canonical(QuadraticField const & field, Int q)
{
    auto type = split_type(field, q);
    if (std::holds_alternative<Ramified>(type))
        throw DomainError("q ramifies in this field");
    if (std::holds_alternative<Inert>(type))
        throw DomainError("q is inert in this field");
    return {field, q, std::get<Split>(type).n};
}

SplitPrimeIdeal SplitPrimeIdeal::conjugate() const
{
    return {field_, q_, q_ - n_};
}

std::string SplitPrimeIdeal::to_string() const
{
    return "(" + std::to_string(q_) + ", " + std::to_string(n_) + "+√" + std::to_string(field_.radicand()) + ")";
}

bool in_ideal(QuadraticInteger const & x, SplitPrimeIdeal const & P)
{
    if (!(x.field() == P.field()))
        throw DomainError("element and ideal belong to different fields");
    return mod(x.u(), P.q()) == mul_mod(P.n(), x.v(), P.q());
}

BinaryForm associated_form(SplitPrimeIdeal const & P)
{
    BinaryForm f{P.l(), P.n(), P.q()};
    if (f.determinant() != P.field().radicand())
        throw InvariantViolation("associated form determinant differs from D");
    return f;
}

GeneratorAudit construct_generator_with(SplitPrimeIdeal const & P, Representation const & rep, int sign,
                                        Int c)
{
    if (sign != 1 && sign != -1)
        throw DomainError("sign must be +1 or -1");
    int const delta = P.field().delta();
    Int const D = P.field().radicand();
    Int const q = P.q(), n = P.n(), l = P.l();
    Int const k = rep.x, v = rep.y;
    if (evaluate(associated_form(P), k, v) != sign * delta * delta)
        throw DomainError("representation does not give sign * delta^2");

    Int const residue = mul_mod(inv_mod(n, q), checked_sub(k, c), q);
    Int const d = delta == 2 ? crt_q2(residue, q, static_cast<int>(mod(c, 2))) : residue;

    Wide const b_num = Wide(k) - (Wide(c) + Wide(n) * d);
    if (b_num % q != 0)
        throw InvariantViolation("b is not integral");
    Int const b = narrow(b_num / q);
    Int const a = narrow(Wide(n) * b + v + Wide(d) * l);

    if (delta == 2 && (mod(a, 2) != mod(b, 2) || mod(c, 2) != mod(d, 2)))
        throw InvariantViolation("parity of (a, b) or (c, d) broken for delta = 2");

    Int const u = narrow(Wide(q) * a + Wide(n) * c + Wide(d) * D);
    Int const w = narrow(Wide(q) * b + c + Wide(n) * d);
    QuadraticInteger gamma(P.field(), u, w);

    if (gamma.norm() != sign * q)
        throw InvariantViolation("generator norm differs from sign * q");
    if (!in_ideal(gamma, P))
        throw InvariantViolation("generator lies outside the ideal");
    return {c, d, a, b, gamma};
}

GeneratorAudit construct_generator_audited(SplitPrimeIdeal const & P, Representation const & rep, int sign)
{
    auto size = [](GeneratorAudit const & g) {
        auto abs = [](Int x) { return x < 0 ? -x : x; };
        return std::max(abs(g.generator.u()), abs(g.generator.v()));
    };
    GeneratorAudit with_zero = construct_generator_with(P, rep, sign, 0);
    GeneratorAudit with_one = construct_generator_with(P, rep, sign, 1);
    return size(with_one) < size(with_zero) ? with_one : with_zero;
}

QuadraticInteger construct_generator(SplitPrimeIdeal const & P, Representation const & rep, int sign)
{
    return construct_generator_audited(P, rep, sign).generator;
}

Derivation derive_intermediates(SplitPrimeIdeal const & P, Representation const & rep, int sign,
                                GeneratorAudit const & audit)
{
    BigInt const q = P.q(), n = P.n(), D = P.field().radicand();
    BigInt const k = rep.x, v = rep.y;
    BigInt const a = audit.a, b = audit.b, c = audit.c, d = audit.d;
    BigInt const delta = P.field().delta();

    Derivation out;
    out.w = q * q * D * a + q * D * (n * c + d * D);
    out.z = q * q * D * b + q * D * (c + n * d);
    out.r = (k * n + v * q) * q * D;
    out.s = k * q * D;
    if (out.w != out.r || out.z != out.s)
        throw InvariantViolation("substituted unknowns disagree with the constructed solution");
    BigInt const lhs = q * out.r * out.r - q * D * out.s * out.s;
    BigInt const rhs = BigInt(sign) * delta * delta * q * q * q * q * D * D;
    if (lhs != rhs)
        throw InvariantViolation("constructed (r, s) does not solve the transformed equation");
    return out;
}

bool verify_generator(SplitPrimeIdeal const & P, QuadraticInteger const & g)
{
    if (!(g.field() == P.field()))
        throw DomainError("element and ideal belong to different fields");
    Int const nm = g.norm();
    return (nm == P.q() || nm == -P.q()) && in_ideal(g, P);
}

PrincipalityResult is_principal(SplitPrimeIdeal const & P, IndefiniteOptions const & opts)
{
    BinaryForm const f = associated_form(P);
    int const delta = P.field().delta();
    int const signs_real[] = {1, -1};
    int const signs_imaginary[] = {1};
    std::span<int const> signs = P.field().imaginary() ? std::span<int const>(signs_imaginary)
                                                       : std::span<int const>(signs_real);
    for (int sign : signs) {
        Int const target = sign * delta * delta;
        auto rep = represents(f, {target}, opts);
        if (!rep)
            continue;
        GeneratorAudit audit = construct_generator_audited(P, *rep, sign);
        if (!verify_generator(P, audit.generator))
            throw InvariantViolation("constructed generator failed verification");
        PrincipalityResult result;
        result.verdict = true;
        result.representation = rep;
        result.generator = audit.generator;
        result.sign = sign;
        result.audit = audit;
        return result;
    }
    return {};
}

} // namespace qfi
