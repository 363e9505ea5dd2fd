#include "doctest.h"

#include <random>
#include <sstream>

#include "qfi/quadratic_field.hpp"

using namespace qfi;

TEST_CASE("field construction and delta")
{
    CHECK(QuadraticField(5).delta() == 2);
    CHECK(QuadraticField(10).delta() == 1);
    CHECK(QuadraticField(-23).delta() == 2);
    CHECK(QuadraticField(-5).delta() == 1);
    CHECK(QuadraticField(-1).delta() == 1);
    CHECK(QuadraticField(-3).discriminant() == -3);
    CHECK(QuadraticField(-1).discriminant() == -4);
    CHECK(QuadraticField(-2).discriminant() == -8);
    CHECK(QuadraticField(-7).imaginary());
    CHECK_FALSE(QuadraticField(2).imaginary());
    CHECK_THROWS_AS(QuadraticField(12), DomainError);
    CHECK_THROWS_AS(QuadraticField(0), DomainError);
    CHECK_THROWS_AS(QuadraticField(1), DomainError);
    CHECK_THROWS_AS(QuadraticField(-4), DomainError);
    CHECK_THROWS_AS(make_field(-27), DomainError);
}

TEST_CASE("norms of the worked generators")
{
    QuadraticField const k5(5);
    QuadraticInteger g(k5, 22, -4);
    CHECK(g.norm() == 101);
    CHECK(g.to_string() == "(22-4√5)/2");

    QuadraticField const k10(10);
    QuadraticInteger h(k10, 9, 1);
    CHECK(h.norm() == 71);
    CHECK(h.to_string() == "9+√10");
}

TEST_CASE("parity is enforced when delta = 2")
{
    QuadraticField const k(5);
    CHECK_THROWS_AS(QuadraticInteger(k, 1, 2), DomainError);
    CHECK_NOTHROW(QuadraticInteger(k, 1, 3));
    CHECK(QuadraticInteger::rational(k, 3) == QuadraticInteger(k, 6, 0));
    QuadraticField const k2(-5);
    CHECK_NOTHROW(QuadraticInteger(k2, 1, 2));
}

TEST_CASE("parse accepts printed forms")
{
    QuadraticField const k5(5);
    CHECK(QuadraticInteger::parse("(22-4√5)/2", k5) == QuadraticInteger(k5, 22, -4));
    CHECK(QuadraticInteger::parse("(22-4sqrt5)/2", k5) == QuadraticInteger(k5, 22, -4));
    CHECK(QuadraticInteger::parse("11-2√5", k5) == QuadraticInteger(k5, 22, -4));
    QuadraticField const k10(10);
    CHECK(QuadraticInteger::parse("9+√10", k10) == QuadraticInteger(k10, 9, 1));
    CHECK(QuadraticInteger::parse("-√10", k10) == QuadraticInteger(k10, 0, -1));
    CHECK(QuadraticInteger::parse("7", k10) == QuadraticInteger(k10, 7, 0));
    QuadraticField const km(-23);
    QuadraticInteger x(km, 1, 1);
    CHECK(QuadraticInteger::parse(x.to_string(), km) == x);
    CHECK_THROWS_AS(QuadraticInteger::parse("9+√11", k10), DomainError);
    CHECK_THROWS_AS(QuadraticInteger::parse("banana", k10), DomainError);
    CHECK_THROWS_AS(QuadraticInteger::parse("(1+2√5)/2", k5), DomainError);
}

TEST_CASE("round trip through to_string")
{
    std::mt19937_64 rng(3);
    for (Int D : {-23, -5, -1, 2, 5, 13, 10}) {
        QuadraticField const k(D);
        for (int i = 0; i < 200; ++i) {
            Int u = static_cast<Int>(rng() % 2001) - 1000;
            Int v = static_cast<Int>(rng() % 2001) - 1000;
            if (k.delta() == 2 && (u - v) % 2 != 0)
                ++v;
            QuadraticInteger x(k, u, v);
            REQUIRE(QuadraticInteger::parse(x.to_string(), k) == x);
            std::ostringstream os;
            os << x;
            REQUIRE(os.str() == x.to_string());
        }
    }
}

TEST_CASE("norm is multiplicative and conj is an involution")
{
    std::mt19937_64 rng(11);
    Int const radicands[] = {-23, -19, -5, -3, -2, -1, 2, 3, 5, 13, 17, 29, 10};
    for (int trial = 0; trial < 10000; ++trial) {
        QuadraticField const k(radicands[rng() % std::size(radicands)]);
        auto pick = [&] {
            Int u = static_cast<Int>(rng() % 401) - 200;
            Int v = static_cast<Int>(rng() % 401) - 200;
            if (k.delta() == 2 && (u - v) % 2 != 0)
                ++u;
            return QuadraticInteger(k, u, v);
        };
        QuadraticInteger x = pick(), y = pick();
        REQUIRE(norm(x * y) == norm(x) * norm(y));
        REQUIRE(conj(conj(x)) == x);
        REQUIRE(norm(conj(x)) == norm(x));
        REQUIRE(conj(x * y) == conj(x) * conj(y));
        REQUIRE((x + y) - y == x);
    }
}

TEST_CASE("mixing fields is rejected")
{
    QuadraticInteger x(QuadraticField(2), 1, 1);
    QuadraticInteger y(QuadraticField(3), 1, 1);
    CHECK_THROWS_AS(x + y, DomainError);
    CHECK_THROWS_AS(x * y, DomainError);
}
