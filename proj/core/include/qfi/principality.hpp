#ifndef QFI_PRINCIPALITY_HPP
#define QFI_PRINCIPALITY_HPP

#include <optional>
#include <variant>

#include "qfi/binary_form.hpp"
#include "qfi/quadratic_field.hpp"

namespace qfi {

struct Split
{
    Int n;
    bool operator==(Split const &) const = default;
};
struct Inert
{
    bool operator==(Inert const &) const = default;
};
struct Ramified
{
    bool operator==(Ramified const &) const = default;
};

using SplittingType = std::variant<Split, Inert, Ramified>;

/* How the odd prime q factors in O_K; Split carries the smaller root. */
SplittingType split_type(QuadraticField const & field, Int q);

/*
 * The prime ideal (q, n + sqrt D) over a split odd prime q, with
 * n^2 - D = l q. Any root 0 < n < q is accepted; canonical() picks the
 * smaller one.
 */
class SplitPrimeIdeal
{
    QuadraticField field_;
    Int q_;
    Int n_;
    Int l_;

    public:
    SplitPrimeIdeal(QuadraticField const & field, Int q, Int n);

    /* Throws DomainError unless q splits. */
    static SplitPrimeIdeal canonical(QuadraticField const & field, Int q);

    QuadraticField const & field() const { return field_; }
    Int q() const { return q_; }
    Int n() const { return n_; }
    Int l() const { return l_; }
    bool is_canonical() const { return 2 * n_ < q_; }

    /* (q, n - sqrt D) written as (q, (q - n) + sqrt D). */
    SplitPrimeIdeal conjugate() const;

    std::string to_string() const;
};

/* x in (q, n + sqrt D) iff u = n v (mod q), writing x = (u + v sqrt D)/delta. */
bool in_ideal(QuadraticInteger const & x, SplitPrimeIdeal const & P);

/* l x^2 + 2n xy + q y^2; its determinant is D. */
BinaryForm associated_form(SplitPrimeIdeal const & P);

/* The (c, d, a, b) used to build a generator, and the value it produced. */
struct GeneratorAudit
{
    Int c;
    Int d;
    Int a;
    Int b;
    QuadraticInteger generator;
};

/* Substitution intermediates; w = r and z = s once (a, b) is plugged in. */
struct Derivation
{
    BigInt w;
    BigInt z;
    BigInt r;
    BigInt s;
};

/*
 * Builds gamma from f_P(k, v) = sign * delta^2 with a fixed choice of c;
 * d is the least nonnegative solution of n d = k - c (mod q), lifted
 * mod 2q to d = c (mod 2) when delta = 2. Every postcondition is checked.
 */
GeneratorAudit construct_generator_with(SplitPrimeIdeal const & P, Representation const & rep, int sign,
                                        Int c);

/* Tries c = 0 and c = 1 and keeps the smaller generator (ties keep c = 0). */
GeneratorAudit construct_generator_audited(SplitPrimeIdeal const & P, Representation const & rep, int sign);

QuadraticInteger construct_generator(SplitPrimeIdeal const & P, Representation const & rep, int sign);

Derivation derive_intermediates(SplitPrimeIdeal const & P, Representation const & rep, int sign,
                                GeneratorAudit const & audit);

/* |N(g)| = q and g in P, which together force (g) = P. */
bool verify_generator(SplitPrimeIdeal const & P, QuadraticInteger const & g);

struct PrincipalityResult
{
    bool verdict = false;
    std::optional<Representation> representation;
    std::optional<QuadraticInteger> generator;
    std::optional<int> sign;
    std::optional<GeneratorAudit> audit;
};

/*
 * D < 0: principal iff f_P represents delta^2.
 * D > 0: principal iff f_P represents +delta^2 or -delta^2 (tried in that
 * order). A true verdict always carries a verified generator.
 */
PrincipalityResult is_principal(SplitPrimeIdeal const & P, IndefiniteOptions const & opts = {});

} // namespace qfi

#endif
