#include "qfi/binary_form.hpp"

#include <charconv>
#include <cmath>
#include <vector>

namespace qfi {

Int BinaryForm::determinant() const
{
    return narrow(Wide(b) * b - Wide(a) * c);
}

std::string BinaryForm::to_string() const
{
    auto term = [](Int coeff, char const * monomial) {
        return std::string(coeff < 0 ? " - " : " + ") + std::to_string(coeff < 0 ? -coeff : coeff) + monomial;
    };
    return std::to_string(a) + "x^2" + term(middle(), "xy") + term(c, "y^2") + " (det="
        + std::to_string(determinant()) + ")";
}

BinaryForm BinaryForm::parse(std::string_view text)
{
    Int coeffs[3];
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        auto end = i < 2 ? text.find(',', pos) : text.size();
        if (end == std::string_view::npos)
            throw DomainError("form must be written a,2b,c");
        auto field = text.substr(pos, end - pos);
        while (!field.empty() && field.front() == ' ')
            field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ')
            field.remove_suffix(1);
        if (!field.empty() && field.front() == '+')
            field.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), coeffs[i]);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw DomainError("malformed form coefficient: '" + std::string(field) + "'");
        pos = end + 1;
    }
    if (coeffs[1] % 2 != 0)
        throw DomainError("middle coefficient must be even (form a x^2 + 2b xy + c y^2)");
    return {coeffs[0], coeffs[1] / 2, coeffs[2]};
}

Int evaluate(BinaryForm const & f, Int x, Int y)
{
    Wide v = Wide(f.a) * x * x + Wide(2) * f.b * x * y + Wide(f.c) * y * y;
    return narrow(v);
}

namespace {

Int isqrt_wide(Wide m)
{
    auto r = static_cast<Wide>(std::sqrt(static_cast<long double>(m)));
    while (r > 0 && r * r > m)
        --r;
    while ((r + 1) * (r + 1) <= m)
        ++r;
    return narrow(r);
}

void require_positive_definite(BinaryForm const & f)
{
    if (f.a <= 0 || f.determinant() >= 0)
        throw DomainError("form must be positive definite (a > 0, determinant < 0)");
}

/*
 * Smallest |y| first; for equal |y| prefer smaller |x|, then y >= 0, then
 * x >= 0. Solves a x^2 + 2b y x + c y^2 - m = 0 exactly for each y.
 */
std::optional<Representation> scan_rows(BinaryForm const & f, Int target, Int y_max)
{
    Wide const det = f.determinant();
    Wide const am = Wide(f.a) * target;
    for (Int ay = 0; ay <= y_max; ++ay) {
        std::optional<Representation> best;
        auto better = [](Representation const & r, Representation const & s) {
            auto key = [](Representation const & t) {
                return std::tuple(t.x < 0 ? -t.x : t.x, t.y < 0, t.x < 0);
            };
            return key(r) < key(s);
        };
        Int const ys[2] = {ay, -ay};
        for (int k = 0; k < (ay == 0 ? 1 : 2); ++k) {
            Int const y = ys[k];
            Wide const disc = det * y * y + am;
            if (disc < 0)
                continue;
            Int const s = isqrt_wide(disc);
            if (Wide(s) * s != disc)
                continue;
            for (Wide root : {Wide(s), -Wide(s)}) {
                Wide const num = -Wide(f.b) * y + root;
                if (num % f.a != 0)
                    continue;
                Representation r{narrow(num / f.a), y, target};
                if (!best || better(r, *best))
                    best = r;
            }
        }
        if (best) {
            if (evaluate(f, best->x, best->y) != target)
                throw InvariantViolation("representation failed re-evaluation");
            return best;
        }
    }
    return std::nullopt;
}

} // namespace

Int y_bound(BinaryForm const & f, Int M)
{
    require_positive_definite(f);
    if (M <= 0)
        throw DomainError("y_bound: M must be positive");
    Wide const q = Wide(M) * f.a / -Wide(f.determinant());
    return isqrt_wide(q);
}

std::optional<Representation> represents_definite(BinaryForm const & f, Int target)
{
    require_positive_definite(f);
    if (target <= 0)
        throw DomainError("a positive definite form only represents positive targets");
    return scan_rows(f, target, y_bound(f, target));
}

PellSolution pell_fundamental(Int D)
{
    if (D <= 0 || is_square(D))
        throw DomainError("pell_fundamental: D must be positive and not a square");
    Int const a0 = isqrt(D);
    Int m = 0, den = 1, a = a0;
    BigInt p_prev = 1, p = a0;
    BigInt q_prev = 0, q = 1;
    while (p * p - BigInt(D) * q * q != 1) {
        m = den * a - m;
        den = (D - m * m) / den;
        a = (a0 + m) / den;
        BigInt p_next = BigInt(a) * p + p_prev;
        BigInt q_next = BigInt(a) * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    return {p, q};
}

namespace {

void require_indefinite(BinaryForm const & f)
{
    Int const d = f.determinant();
    if (d < 0)
        throw DomainError("form must be indefinite (determinant > 0)");
    if (is_square(d))
        throw DomainError("form determinant is a perfect square");
    if (f.a == 0)
        throw DomainError("degenerate form with a = 0");
}

} // namespace

BigInt indefinite_window(BinaryForm const & f, Int target, IndefiniteOptions const & opts)
{
    require_indefinite(f);
    if (target == 0)
        throw DomainError("target must be nonzero");
    if (opts.window_scale < 1)
        throw DomainError("window scale must be at least 1");
    Int const d = f.determinant();
    PellSolution const pell = pell_fundamental(d);
    BigInt n = BigInt(f.a) * target;
    if (n < 0)
        n = -n;
    BigInt bound = n * (pell.T + 1) * opts.window_scale / (2 * BigInt(d));
    return boost::multiprecision::sqrt(bound);
}

std::optional<Representation> represents_indefinite(BinaryForm const & f, Int target,
                                                    IndefiniteOptions const & opts)
{
    BigInt const window = indefinite_window(f, target, opts);
    if (window > opts.max_window)
        throw SearchBudgetExceeded("indefinite search window " + window.str() + " exceeds budget "
                                   + std::to_string(opts.max_window));
    return scan_rows(f, target, static_cast<Int>(window));
}

std::optional<Representation> represents(BinaryForm const & f, std::span<Int const> targets,
                                         IndefiniteOptions const & opts)
{
    Int const d = f.determinant();
    for (Int t : targets) {
        if (t == 0)
            throw DomainError("target must be nonzero");
        std::optional<Representation> r;
        if (d < 0) {
            // definite forms take one sign only
            bool const negative = f.a < 0;
            BinaryForm const g = negative ? BinaryForm{-f.a, -f.b, -f.c} : f;
            Int const gt = negative ? -t : t;
            if (gt > 0) {
                r = represents_definite(g, gt);
                if (r)
                    r->value = t;
            }
        } else {
            r = represents_indefinite(f, t, opts);
        }
        if (r)
            return r;
    }
    return std::nullopt;
}

std::string decision_method(BinaryForm const & f)
{
    return f.determinant() < 0 ? "definite-enumeration" : "indefinite-window";
}

} // namespace qfi
