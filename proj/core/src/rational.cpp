#include "qtwist/rational.hpp"

#include <cctype>
#include <ostream>

namespace qtwist {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& s) {
    // Grammar: -?digits ( '/' digits )?   -- no decimals, no spaces, no '+'.
    auto bad = [&]() { fail("ParseError", "not a rational literal: \"" + s + "\""); };
    size_t start = 0;
    if (!s.empty() && s[0] == '-') start = 1;
    size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!all_digits(s, start, s.size())) bad();
        return Rational(mpq_class(s));
    }
    if (!all_digits(s, start, slash)) bad();
    if (!all_digits(s, slash + 1, s.size())) bad();
    mpq_class v(s);
    if (v.get_den() == 0) fail("ZeroDenominator", "rational with denominator 0: \"" + s + "\"");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && is_zero()) fail("DivisionByZero", "0 raised to a negative power");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    mpq_class r(num, den);
    r.canonicalize();
    Rational out(r);
    return inv ? out.inverse() : out;
}

int Rational::order() const {
    if (is_zero()) fail("ZeroEntry", "multiplicative order of 0");
    if (is_one()) return 1;
    if (is_minus_one()) return 2;
    return 0;
}

std::uint64_t Rational::mod(std::uint64_t p) const {
    mpz_class num = v_.get_num() % mpz_class(p);
    mpz_class den = v_.get_den() % mpz_class(p);
    if (num < 0) num += mpz_class(p);
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    if (d == 0) fail("NonInvertibleModP", "denominator divisible by prescreen prime");
    // d^(p-2) mod p
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    };
    std::uint64_t inv = 1, base = d, e = p - 2;
    while (e) {
        if (e & 1) inv = mulmod(inv, base);
        base = mulmod(base, base);
        e >>= 1;
    }
    return mulmod(n, inv);
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

void RadicalTable::insert(const Rational& q, const Rational& r) {
    if (r * r != q)
        fail("BadRadical", "claimed root " + r.str() + " does not square to " + q.str());
    entries_[q] = r;
}

Rational RadicalTable::sqrt_of(const Rational& q) const {
    auto it = entries_.find(q);
    if (it == entries_.end())
        fail("MissingRadical", "no square root on file for " + q.str());
    return it->second;
}

} // namespace qtwist
