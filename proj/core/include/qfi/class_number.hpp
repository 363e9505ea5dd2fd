#ifndef QFI_CLASS_NUMBER_HPP
#define QFI_CLASS_NUMBER_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qfi/binary_form.hpp"
#include "qfi/integer.hpp"

namespace qfi {

struct RabinowitschRow
{
    Int x;
    Int value;
    bool prime;
    bool operator==(RabinowitschRow const &) const = default;
};

/* F_d(x) = x^2 - x + (1 - d)/4 prime for every 1 <= x < (1 - d)/4. */
struct RabinowitschTable
{
    std::vector<RabinowitschRow> rows;
    bool operator==(RabinowitschTable const &) const = default;
};

/* F_d(x) = value with 1 < factor < value dividing it. */
struct RabinowitschComposite
{
    Int x;
    Int value;
    Int factor;
    bool operator==(RabinowitschComposite const &) const = default;
};

/* A split prime ideal (q, n + sqrt D) whose form does not represent delta^2. */
struct NonPrincipalIdeal
{
    Int q;
    Int n;
    BinaryForm form;
    std::string route;
    bool operator==(NonPrincipalIdeal const &) const = default;
};

/* Discriminant -3, -4 or -8, where the polynomial criterion does not apply. */
struct SpecialDiscriminant
{
    Int discriminant;
    bool operator==(SpecialDiscriminant const &) const = default;
};

/* D = 2, 3 (mod 4) with |D| > 2: the discriminant is not 1 mod 4. */
struct NotOneMod4
{
    bool operator==(NotOneMod4 const &) const = default;
};

/* D = 1 (mod 4) with composite |D| (genus-theory shortcut). */
struct CompositeAbsD
{
    Int factor;
    bool operator==(CompositeAbsD const &) const = default;
};

using Evidence = std::variant<RabinowitschTable, RabinowitschComposite, NonPrincipalIdeal, SpecialDiscriminant,
                              NotOneMod4, CompositeAbsD>;

std::string evidence_kind(Evidence const & e);

/* Verdict for "does Q(sqrt D) have class number 1?", D < 0. */
struct H1Certificate
{
    Int D = 0;
    bool verdict = false;
    Evidence evidence;
    /* independent second route, when one was computed */
    std::optional<Evidence> cross_check;
    std::string route;
};

/* d < 0, d = 1 (mod 4); d = -3 short-circuits to a special discriminant. */
H1Certificate rabinowitsch(Int d);

/*
 * Builds an explicit reason for h > 1 following the split-prime
 * constructions, or returns nothing when none exists (an h = 1 candidate).
 * Every ideal witness is re-checked with is_principal before it is returned.
 */
std::optional<H1Certificate> nonprincipality_certificate(Int D);

struct NecessaryConditions
{
    bool holds = false;
    Int p = 0;
    std::string reason;
};

/* |D| = 4p - 1, p >= 5 prime, 4p - 1 and 4p + 3 prime, p = 5 or p = 1, 7 (mod 10). */
NecessaryConditions necessary_conditions_64(Int D);

/* Odd primes q < p with (q / 4p - 1) = +1, ascending; at most `limit` of them. */
std::vector<Int> residue_witnesses(Int p, std::size_t limit = SIZE_MAX);

/* Smallest n in [1, q) with n^2 - n + p = 0 (mod q); q | F(n) and F(n) > q. */
RabinowitschComposite composite_from_witness(Int p, Int q);

/* Smallest n = 0 (mod 6), n <= (p - 1)/4, with 4n - 1 and p - n distinct primes. */
Int lemma613_find_n(Int p);

/*
 * The same search restricted to the residue-class sieve: n = 6k where k avoids
 * 1/24 and p/6 modulo every prime 5 <= p_i < sqrt(p). Returns the smallest
 * such n, which makes 4n - 1 and p - n prime.
 */
std::optional<Int> lemma613_sieved(Int p, PrimeSieve const & sieve);

H1Certificate classify_h1(Int D);

/* All squarefree D < 0 with min_abs <= |D| <= max_abs, ascending |D|. */
std::vector<H1Certificate> scan_h1(Int min_abs, Int max_abs, unsigned jobs = 1);

/* Re-checks a certificate from scratch; false if any claim fails. */
bool validate_certificate(H1Certificate const & cert);

} // namespace qfi

#endif
