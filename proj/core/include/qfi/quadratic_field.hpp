#ifndef QFI_QUADRATIC_FIELD_HPP
#define QFI_QUADRATIC_FIELD_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "qfi/integer.hpp"

namespace qfi {

/*
 * Q(sqrt D) for squarefree D != 0, 1. The ring of integers is
 * {(u + v sqrt D)/delta} with delta = 2 exactly when D = 1 (mod 4), in
 * which case u and v must have the same parity.
 */
class QuadraticField
{
    Int radicand_;
    int delta_;

    public:
    explicit QuadraticField(Int D);

    Int radicand() const { return radicand_; }
    int delta() const { return delta_; }
    Int discriminant() const { return delta_ == 2 ? radicand_ : 4 * radicand_; }
    bool imaginary() const { return radicand_ < 0; }

    bool operator==(QuadraticField const &) const = default;
};

QuadraticField make_field(Int D);

/* The element (u + v sqrt D)/delta of O_K. */
class QuadraticInteger
{
    QuadraticField field_;
    Int u_;
    Int v_;

    public:
    /* Numerators over the field's delta; rejects a parity mismatch. */
    QuadraticInteger(QuadraticField const & field, Int u, Int v);

    static QuadraticInteger rational(QuadraticField const & field, Int n);

    QuadraticField const & field() const { return field_; }
    Int u() const { return u_; }
    Int v() const { return v_; }

    Int norm() const;
    QuadraticInteger conj() const;

    bool operator==(QuadraticInteger const &) const = default;

    /* "(u+v√D)/2" or "u+v√D"; parse() accepts the same text (and "sqrt"
     * for "√"). */
    std::string to_string() const;
    static QuadraticInteger parse(std::string_view text, QuadraticField const & field);
};

QuadraticInteger add(QuadraticInteger const & x, QuadraticInteger const & y);
QuadraticInteger sub(QuadraticInteger const & x, QuadraticInteger const & y);
QuadraticInteger mul(QuadraticInteger const & x, QuadraticInteger const & y);
inline QuadraticInteger conj(QuadraticInteger const & x) { return x.conj(); }
inline Int norm(QuadraticInteger const & x) { return x.norm(); }

inline QuadraticInteger operator+(QuadraticInteger const & x, QuadraticInteger const & y) { return add(x, y); }
inline QuadraticInteger operator-(QuadraticInteger const & x, QuadraticInteger const & y) { return sub(x, y); }
inline QuadraticInteger operator*(QuadraticInteger const & x, QuadraticInteger const & y) { return mul(x, y); }

std::ostream & operator<<(std::ostream & os, QuadraticInteger const & x);

} // namespace qfi

#endif
