#include "qfi/class_number.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "qfi/principality.hpp"
#include "qfi/quadratic_field.hpp"

namespace qfi {

std::string evidence_kind(Evidence const & e)
{
    struct
    {
        std::string operator()(RabinowitschTable const &) const { return "rabinowitsch_table"; }
        std::string operator()(RabinowitschComposite const &) const { return "rabinowitsch_composite"; }
        std::string operator()(NonPrincipalIdeal const &) const { return "nonprincipal_ideal"; }
        std::string operator()(SpecialDiscriminant const &) const { return "special_discriminant"; }
        std::string operator()(NotOneMod4 const &) const { return "not_one_mod_4"; }
        std::string operator()(CompositeAbsD const &) const { return "composite_abs_d"; }
    } visitor;
    return std::visit(visitor, e);
}

namespace {

Int rabinowitsch_constant(Int d)
{
    return (1 - d) / 4;
}

Int rabinowitsch_value(Int c0, Int x)
{
    return narrow(Wide(x) * x - x + c0);
}

void require_imaginary_squarefree(Int D)
{
    if (D >= 0)
        throw DomainError("D must be negative");
    if (!is_squarefree(D))
        throw DomainError("D must be squarefree");
}

} // namespace

H1Certificate rabinowitsch(Int d)
{
    if (d >= 0 || mod(d, 4) != 1)
        throw DomainError("rabinowitsch: discriminant must be negative and 1 mod 4");
    H1Certificate cert;
    cert.D = d;
    if (d == -3) {
        cert.verdict = true;
        cert.evidence = SpecialDiscriminant{-3};
        cert.route = "special discriminant -3";
        return cert;
    }
    Int const c0 = rabinowitsch_constant(d);
    RabinowitschTable table;
    for (Int x = 1; x < c0; ++x) {
        Int const value = rabinowitsch_value(c0, x);
        if (!is_prime(value)) {
            cert.verdict = false;
            cert.evidence = RabinowitschComposite{x, value, smallest_prime_factor(value)};
            cert.route = "x^2 - x + " + std::to_string(c0) + " composite at x = " + std::to_string(x);
            return cert;
        }
        table.rows.push_back({x, value, true});
    }
    cert.verdict = true;
    cert.evidence = std::move(table);
    cert.route = "x^2 - x + " + std::to_string(c0) + " prime for 1 <= x < " + std::to_string(c0);
    return cert;
}

namespace {

Int abs_of(Int D)
{
    return D < 0 ? -D : D;
}

H1Certificate ideal_witness(Int D, Int q, Int n, std::string route)
{
    QuadraticField const field(D);
    SplitPrimeIdeal const P(field, q, n);
    if (is_principal(P).verdict)
        throw InvariantViolation("witness ideal " + P.to_string() + " is principal");
    H1Certificate cert;
    cert.D = D;
    cert.verdict = false;
    cert.evidence = NonPrincipalIdeal{q, n, associated_form(P), route};
    cert.route = std::move(route);
    return cert;
}

H1Certificate composite_abs_d(Int D, std::string route)
{
    H1Certificate cert;
    cert.D = D;
    cert.verdict = false;
    cert.evidence = CompositeAbsD{smallest_prime_factor(D)};
    cert.route = std::move(route);
    return cert;
}

/* Used when a size inequality the constructions rely on fails. */
std::optional<H1Certificate> fallback(Int D)
{
    if (mod(D, 4) != 1) {
        H1Certificate cert;
        cert.D = D;
        cert.verdict = false;
        cert.evidence = NotOneMod4{};
        cert.route = "fallback: discriminant not 1 mod 4";
        return cert;
    }
    H1Certificate rab = rabinowitsch(D);
    if (rab.verdict)
        return std::nullopt;
    rab.route = "fallback: " + rab.route;
    return rab;
}

/* 4 + |D| or 1 + |D| = l q with q the largest odd prime factor. */
std::optional<H1Certificate> even_case(Int D, Int n)
{
    Int const absD = abs_of(D);
    Int const N = n * n + absD;
    Int const q = largest_odd_prime_factor(N);
    Int const l = N / q;
    if (q == 0 || !(1 < l && l < absD))
        return fallback(D);
    return ideal_witness(D, q, n,
                         std::to_string(n * n) + "+|D| = " + std::to_string(l) + "*" + std::to_string(q)
                             + ", f cannot represent 1");
}

std::optional<H1Certificate> one_mod_four_case(Int D)
{
    Int const absD = abs_of(D);
    if (absD <= 16) {
        if (!is_prime(absD))
            return composite_abs_d(D, "|D| composite");
        return std::nullopt;
    }

    Int const N = 4 + absD;
    Int const q = largest_odd_prime_factor(N);
    Int const l = N / q;
    std::string const split = "4+|D| = " + std::to_string(l) + "*" + std::to_string(q);

    if (q % 4 == 1) {
        if (!(4 * l < absD) || is_square(l))
            return fallback(D);
        return ideal_witness(D, q, 2, split + ", q = 1 mod 4, l not a square");
    }
    if (q < absD) {
        if (!(l >= 5 && 4 * q < absD))
            return fallback(D);
        return ideal_witness(D, q, 2, split + ", q = 3 mod 4, q < |D|");
    }
    if (l != 1)
        return fallback(D);

    Int const M = 1 + absD;
    if ((M & (M - 1)) == 0) {
        if (!is_prime(absD))
            return composite_abs_d(D, "1+|D| a power of two and |D| composite");
        Int const N9 = 9 + absD;
        Int const p = largest_odd_prime_factor(N9);
        Int const cofactor = N9 / p;
        if (p == 0 || cofactor % 8 != 0 || !(4 * p < absD) || p == 3)
            return fallback(D);
        return ideal_witness(D, p, 3,
                             "9+|D| = " + std::to_string(cofactor) + "*" + std::to_string(p)
                                 + ", 1+|D| a power of two");
    }

    Int const p = largest_odd_prime_factor(M);
    Int const cofactor = M / p;
    if (cofactor % 4 != 0)
        return fallback(D);
    std::string const msplit = "1+|D| = " + std::to_string(cofactor) + "*" + std::to_string(p);
    if (cofactor >= 8) {
        if (!(4 * p < absD))
            return fallback(D);
        return ideal_witness(D, p, 1, msplit + ", cofactor >= 8");
    }

    // |D| = 4p - 1
    if (!is_prime(absD))
        return composite_abs_d(D, msplit + ", 4p-1 composite");
    auto witnesses = residue_witnesses(p, 1);
    if (witnesses.empty())
        return std::nullopt;
    H1Certificate cert;
    cert.D = D;
    cert.verdict = false;
    cert.evidence = composite_from_witness(p, witnesses.front());
    cert.route = msplit + ", (" + std::to_string(witnesses.front()) + " / " + std::to_string(absD) + ") = 1";
    return cert;
}

} // namespace

std::optional<H1Certificate> nonprincipality_certificate(Int D)
{
    require_imaginary_squarefree(D);
    if (abs_of(D) <= 2)
        throw DomainError("nonprincipality_certificate: |D| must exceed 2");
    switch (mod(D, 4)) {
    case 2:
        return even_case(D, 2);
    case 3:
        return even_case(D, 1);
    default:
        return one_mod_four_case(D);
    }
}

NecessaryConditions necessary_conditions_64(Int D)
{
    require_imaginary_squarefree(D);
    if (mod(D, 4) != 1)
        throw DomainError("necessary_conditions_64: D must be 1 mod 4");
    Int const absD = abs_of(D);
    if (absD <= 16)
        throw DomainError("necessary_conditions_64: |D| must exceed 16");
    NecessaryConditions out;
    out.p = (absD + 1) / 4;
    Int const p = out.p;
    if (!is_prime(p)) {
        out.reason = "(|D|+1)/4 = " + std::to_string(p) + " is not prime";
    } else if (!is_prime(absD)) {
        out.reason = "4p-1 = " + std::to_string(absD) + " is not prime";
    } else if (!is_prime(4 * p + 3)) {
        out.reason = "4p+3 = " + std::to_string(4 * p + 3) + " is not prime";
    } else if (!(p == 5 || p % 10 == 1 || p % 10 == 7)) {
        out.reason = "p = " + std::to_string(p) + " is not 1 or 7 mod 10";
    } else {
        out.holds = true;
        out.reason = "p = " + std::to_string(p) + " passes all conditions";
    }
    return out;
}

std::vector<Int> residue_witnesses(Int p, std::size_t limit)
{
    if (p < 5 || !is_prime(p) || !is_prime(4 * p - 1))
        throw DomainError("residue_witnesses: need p >= 5 prime with 4p-1 prime");
    std::vector<Int> out;
    for (Int q = 3; q < p && out.size() < limit; q += 2)
        if (is_prime(q) && legendre(q, 4 * p - 1) == 1)
            out.push_back(q);
    return out;
}

RabinowitschComposite composite_from_witness(Int p, Int q)
{
    if (q == 2 || !is_prime(q) || q >= p)
        throw DomainError("composite_from_witness: q must be an odd prime below p");
    // x^2 - x + p = 0 (mod q): x = (1 +- sqrt(1 - 4p)) / 2
    auto root = sqrt_mod(1 - 4 * p, q);
    if (!root)
        throw DomainError("composite_from_witness: 1-4p is not a square mod q");
    Int const half = inv_mod(2, q);
    Int const r1 = mul_mod(1 + *root, half, q);
    Int const r2 = mul_mod(1 - *root, half, q);
    Int n = std::min(r1 == 0 ? q : r1, r2 == 0 ? q : r2);
    Int const value = rabinowitsch_value(p, n);
    if (n <= 0 || n >= q || value % q != 0 || value <= q)
        throw InvariantViolation("residue witness did not yield a composite value");
    return {n, value, q};
}

Int lemma613_find_n(Int p)
{
    if (p <= 619 || !is_prime(p) || !is_prime(4 * p - 1))
        throw DomainError("lemma613_find_n: need prime p > 619 with 4p-1 prime");
    for (Int n = 6; 4 * n <= p - 1; n += 6)
        if (is_prime(4 * n - 1) && is_prime(p - n) && 4 * n - 1 != p - n)
            return n;
    throw InvariantViolation("no n found below (p-1)/4 for p = " + std::to_string(p));
}

std::optional<Int> lemma613_sieved(Int p, PrimeSieve const & sieve)
{
    if (p <= 619 || !is_prime(p) || !is_prime(4 * p - 1))
        throw DomainError("lemma613_sieved: need prime p > 619 with 4p-1 prime");
    Int const root = isqrt(p);
    if (sieve.limit() < root)
        throw DomainError("lemma613_sieved: sieve too small");
    struct Excluded
    {
        Int prime, r, s;
    };
    std::vector<Excluded> excluded;
    for (Int pi : sieve.primes()) {
        if (pi > root)
            break;
        if (pi < 5)
            continue;
        excluded.push_back({pi, inv_mod(24, pi), mul_mod(p, inv_mod(6, pi), pi)});
    }
    Int const kmax = (p - 1) / 24;
    for (Int k = 1; k <= kmax; ++k) {
        bool ok = true;
        for (auto const & e : excluded) {
            Int const res = k % e.prime;
            if (res == e.r || res == e.s) {
                ok = false;
                break;
            }
        }
        if (ok) {
            Int const n = 6 * k;
            if (!is_prime(4 * n - 1) || !is_prime(p - n))
                throw InvariantViolation("sieved n does not give primes");
            return n;
        }
    }
    return std::nullopt;
}

H1Certificate classify_h1(Int D)
{
    require_imaginary_squarefree(D);
    if (D == -1 || D == -2 || D == -3) {
        H1Certificate cert;
        cert.D = D;
        cert.verdict = true;
        cert.evidence = SpecialDiscriminant{QuadraticField(D).discriminant()};
        cert.route = "special discriminant " + std::to_string(QuadraticField(D).discriminant());
        return cert;
    }
    if (mod(D, 4) != 1) {
        auto cert = nonprincipality_certificate(D);
        if (!cert)
            throw InvariantViolation("no witness for D = 2, 3 mod 4");
        return *cert;
    }
    H1Certificate primary = rabinowitsch(D);
    auto witness = nonprincipality_certificate(D);
    if (witness.has_value() == primary.verdict)
        throw InvariantViolation("polynomial criterion and witness construction disagree for D = "
                                 + std::to_string(D));
    if (witness) {
        primary.cross_check = witness->evidence;
        primary.route += "; " + witness->route;
    }
    return primary;
}

std::vector<H1Certificate> scan_h1(Int min_abs, Int max_abs, unsigned jobs)
{
    if (min_abs < 1 || max_abs < min_abs)
        throw DomainError("scan_h1: need 1 <= min <= max");
    std::vector<Int> fields;
    for (Int a = min_abs; a <= max_abs; ++a)
        if (is_squarefree(a))
            fields.push_back(-a);

    std::vector<std::optional<H1Certificate>> slots(fields.size());
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < fields.size(); ++i)
            slots[i] = classify_h1(fields[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        constexpr std::size_t block = 64;
        auto worker = [&] {
            for (;;) {
                std::size_t const start = next.fetch_add(block);
                if (start >= fields.size())
                    return;
                std::size_t const stop = std::min(fields.size(), start + block);
                try {
                    for (std::size_t i = start; i < stop; ++i)
                        slots[i] = classify_h1(fields[i]);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto & th : pool)
            th.join();
        if (error)
            std::rethrow_exception(error);
    }
    std::vector<H1Certificate> out;
    out.reserve(slots.size());
    for (auto & s : slots)
        out.push_back(std::move(*s));
    return out;
}

namespace {

bool check_evidence(Int D, bool verdict, Evidence const & e)
{
    Int const absD = abs_of(D);
    struct
    {
        Int D, absD;
        bool verdict;

        bool operator()(RabinowitschTable const & t) const
        {
            if (!verdict || mod(D, 4) != 1 || D == -3)
                return false;
            Int const c0 = rabinowitsch_constant(D);
            if (static_cast<Int>(t.rows.size()) != c0 - 1)
                return false;
            for (std::size_t i = 0; i < t.rows.size(); ++i) {
                auto const & row = t.rows[i];
                Int const x = static_cast<Int>(i) + 1;
                if (row.x != x || row.value != rabinowitsch_value(c0, x) || !row.prime || !is_prime(row.value))
                    return false;
            }
            return true;
        }
        bool operator()(RabinowitschComposite const & c) const
        {
            if (verdict || mod(D, 4) != 1)
                return false;
            Int const c0 = rabinowitsch_constant(D);
            return c.x >= 1 && c.x < c0 && c.value == rabinowitsch_value(c0, c.x) && c.factor > 1
                && c.factor < c.value && c.value % c.factor == 0;
        }
        bool operator()(NonPrincipalIdeal const & w) const
        {
            if (verdict)
                return false;
            try {
                SplitPrimeIdeal const P(QuadraticField(D), w.q, w.n);
                return associated_form(P) == w.form && !is_principal(P).verdict;
            } catch (DomainError const &) {
                return false;
            }
        }
        bool operator()(SpecialDiscriminant const & s) const
        {
            return verdict && (D == -1 || D == -2 || D == -3) && QuadraticField(D).discriminant() == s.discriminant;
        }
        bool operator()(NotOneMod4 const &) const
        {
            return !verdict && mod(D, 4) != 1 && absD > 2;
        }
        bool operator()(CompositeAbsD const & c) const
        {
            return !verdict && mod(D, 4) == 1 && c.factor > 1 && c.factor < absD && absD % c.factor == 0;
        }
    } visitor{D, absD, verdict};
    return std::visit(visitor, e);
}

} // namespace

bool validate_certificate(H1Certificate const & cert)
{
    if (cert.D >= 0 || !is_squarefree(cert.D))
        return false;
    if (!check_evidence(cert.D, cert.verdict, cert.evidence))
        return false;
    if (cert.cross_check && !check_evidence(cert.D, cert.verdict, *cert.cross_check))
        return false;
    return true;
}

} // namespace qfi
