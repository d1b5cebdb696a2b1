#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "qtwist/error.hpp"

namespace qtwist {

/**
 * Arbitrary-precision rational scalar. Always canonical: denominator > 0,
 * gcd(num, den) = 1. Backed by GMP; nothing in the kernel ever touches
 * floating point.
 *
 * The string form "n" / "-n" / "p/q" (q > 0, reduced) is the wire format
 * used by every JSON interface. parse() accepts exactly that grammar plus
 * unreduced "p/q" (which it canonicalizes); anything else is a ParseError.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) fail("ZeroDenominator", "rational with denominator 0");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_minus_one() const { return v_ == -1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational inverse() const {
        if (is_zero()) fail("DivisionByZero", "inverse of 0");
        return Rational(mpq_class(1 / v_));
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) fail("DivisionByZero", "division by 0");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& b) { v_ += b.v_; v_.canonicalize(); return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; v_.canonicalize(); return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; v_.canonicalize(); return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // q^e for any integer e; e < 0 requires q != 0.
    Rational pow(long e) const;

    // Multiplicative order over the rationals: 1 for q = 1, 2 for q = -1,
    // 0 meaning infinite for everything else (q = 0 rejected).
    int order() const;

    // Residue num * den^-1 modulo a prime that fits in 64 bits.
    // Fails with NonInvertibleModP if the denominator vanishes mod p.
    std::uint64_t mod(std::uint64_t p) const;

    std::string str() const;
    const mpq_class& raw() const { return v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

/**
 * User-supplied table of validated square roots: every entry (q, r)
 * satisfies r^2 = q exactly. This is the only channel through which
 * irrational-looking data (half-root cocycle entries q^{1/2}) enter the
 * kernel while staying inside the rational field.
 */
class RadicalTable {
public:
    RadicalTable() = default;

    // Rejects the pair unless r*r == q.
    void insert(const Rational& q, const Rational& r);

    // Returns r with r^2 = q, or fails with MissingRadical.
    Rational sqrt_of(const Rational& q) const;

    bool contains(const Rational& q) const { return entries_.count(q) != 0; }
    bool empty() const { return entries_.empty(); }
    const std::map<Rational, Rational>& entries() const { return entries_; }

private:
    std::map<Rational, Rational> entries_;
};

} // namespace qtwist
