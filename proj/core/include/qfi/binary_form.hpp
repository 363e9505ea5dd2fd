#ifndef QFI_BINARY_FORM_HPP
#define QFI_BINARY_FORM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "qfi/integer.hpp"

namespace qfi {

using BigInt = boost::multiprecision::cpp_int;

/*
 * a x^2 + 2b xy + c y^2, stored with the half middle coefficient b.
 * The determinant is b^2 - ac (one quarter of the usual discriminant).
 */
struct BinaryForm
{
    Int a = 0;
    Int b = 0;
    Int c = 0;

    Int determinant() const;
    Int middle() const { return checked_mul(2, b); }
    bool definite() const { return determinant() < 0; }

    bool operator==(BinaryForm const &) const = default;

    /* "20x^2 + 90xy + 101y^2 (det=5)" */
    std::string to_string() const;

    /* "a,2b,c"; an odd middle coefficient is a domain error. */
    static BinaryForm parse(std::string_view text);
};

struct Representation
{
    Int x = 0;
    Int y = 0;
    Int value = 0;

    bool operator==(Representation const &) const = default;
};

/* Fundamental solution of T^2 - D U^2 = 1. */
struct PellSolution
{
    BigInt T;
    BigInt U;
};

Int evaluate(BinaryForm const & f, Int x, Int y);

/* Largest |s| allowed for f(r, s) <= M when f is positive definite. */
Int y_bound(BinaryForm const & f, Int M);

std::optional<Representation> represents_definite(BinaryForm const & f, Int target);

PellSolution pell_fundamental(Int D);

struct IndefiniteOptions
{
    /* multiplies the |y| window; 1 is the proven bound */
    Int window_scale = 1;
    /* maximum number of |y| values examined before giving up */
    Int max_window = 50'000'000;
};

/*
 * Decides f(x, y) = target for indefinite f via a f = (ax + by)^2 - d y^2:
 * every class of solutions of t^2 - d y^2 = a*target has a member with
 * y^2 <= |a*target| (T + 1) / (2d), and the congruence t = b y (mod a) is
 * stable under the Pell automorphs.
 */
std::optional<Representation> represents_indefinite(BinaryForm const & f, Int target,
                                                    IndefiniteOptions const & opts = {});

/* The |y| window represents_indefinite scans. */
BigInt indefinite_window(BinaryForm const & f, Int target, IndefiniteOptions const & opts = {});

/* First target, in order, that f represents. */
std::optional<Representation> represents(BinaryForm const & f, std::span<Int const> targets,
                                         IndefiniteOptions const & opts = {});

inline std::optional<Representation> represents(BinaryForm const & f, std::initializer_list<Int> targets,
                                                IndefiniteOptions const & opts = {})
{
    return represents(f, std::span<Int const>(targets.begin(), targets.size()), opts);
}

std::string decision_method(BinaryForm const & f);

} // namespace qfi

#endif
