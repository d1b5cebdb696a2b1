#pragma once

#include "qtwist/rational.hpp"

namespace qtwist {

// (n)_q = 1 + q + ... + q^{n-1} = (q^n - 1)/(q - 1). Empty sum for n = 0.
// Fails with QEqualsOne when q = 1.
Rational q_int(long n, const Rational& q);

// (n)_q! with (0)_q! = 1.
Rational q_factorial(long n, const Rational& q);

// Gaussian binomial (n)_q! / ((k)_q! (n-k)_q!). Over the rationals a zero
// q-factorial can only occur at q = -1; that case fails with DegenerateQ.
Rational q_binom(long n, long k, const Rational& q);

} // namespace qtwist
