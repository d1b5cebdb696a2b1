#include <doctest.h>

#include <random>

#include "qtwist/qcomb.hpp"
#include "qtwist/rational.hpp"

using namespace qtwist;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

// independent oracle: (n)_q as a geometric sum
Rational q_int_oracle(long n, const Rational& q) {
    Rational acc(0);
    for (long k = 0; k < n; ++k) acc += q.pow(k);
    return acc;
}

Rational random_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    while (true) {
        Rational q(num(rng), den(rng));
        if (!q.is_zero() && !q.is_one() && !q.is_minus_one()) return q;
    }
}

} // namespace

TEST_SUITE("rational") {

TEST_CASE("canonical form and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK((Rational(1, 6) + Rational(1, 3)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK(Rational(5).pow(-2) == Rational(1, 25));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("string round trip") {
    CHECK(R("1/24").str() == "1/24");
    CHECK(R("-7").str() == "-7");
    CHECK(R("2/4").str() == "1/2");
    CHECK(R("4/3") == Rational(4, 3));
    for (const char* bad : {"0.25", "1/2/3", "", "-", "a", "1/-2", "+3", " 1"}) {
        CHECK_THROWS_AS(Rational::parse(bad), Error);
    }
}

TEST_CASE("order over the rationals") {
    CHECK(Rational(1).order() == 1);
    CHECK(Rational(-1).order() == 2);
    CHECK(Rational(2).order() == 0);
    CHECK(Rational(-1, 3).order() == 0);
}

TEST_CASE("radical table validates entries") {
    RadicalTable t;
    t.insert(Rational(4), Rational(2));
    t.insert(Rational(9, 4), Rational(3, 2));
    CHECK(t.sqrt_of(Rational(4)) == Rational(2));
    CHECK(t.sqrt_of(Rational(9, 4)) == Rational(3, 2));
    CHECK_THROWS_WITH_AS(t.sqrt_of(Rational(5)), doctest::Contains("MissingRadical"), Error);
    CHECK_THROWS_AS(t.insert(Rational(5), Rational(2)), Error);
}

TEST_CASE("q_int against the geometric-sum oracle") {
    CHECK(q_int(0, Rational(5, 2)).is_zero());
    CHECK(q_int(3, Rational(2)) == Rational(7));
    CHECK(q_int(2, Rational(4)) == Rational(5));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Rational q = random_q(rng);
        for (long n = 0; n <= 6; ++n) CHECK(q_int(n, q) == q_int_oracle(n, q));
    }
    CHECK_THROWS_WITH_AS(q_int(2, Rational(1)), doctest::Contains("QEqualsOne"), Error);
}

TEST_CASE("q_binom examples") {
    CHECK(q_binom(5, 0, Rational(3)) == Rational(1));
    CHECK(q_binom(4, 2, Rational(2)) == Rational(35));
    CHECK(q_binom(3, 1, Rational(4)) == Rational(21));
    CHECK_THROWS_WITH_AS(q_binom(3, 1, Rational(1)), doctest::Contains("QEqualsOne"), Error);
    // over Q a vanishing q-factorial only happens at q = -1
    CHECK_THROWS_WITH_AS(q_binom(4, 2, Rational(-1)), doctest::Contains("DegenerateQ"), Error);
}

TEST_CASE("Pascal identities and symmetry") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Rational q = random_q(rng);
        for (long n = 1; n <= 8; ++n)
            for (long k = 1; k <= n; ++k) {
                Rational lhs = q_binom(n, k, q);
                if (k <= n - 1) {
                    CHECK(lhs == q.pow(k) * q_binom(n - 1, k, q) + q_binom(n - 1, k - 1, q));
                    CHECK(lhs == q_binom(n - 1, k, q) + q.pow(n - k) * q_binom(n - 1, k - 1, q));
                } else {
                    CHECK(lhs == q_binom(n - 1, k - 1, q)); // k = n edge
                }
                CHECK(lhs == q_binom(n, n - k, q));
            }
    }
}

} // TEST_SUITE
