#include "qtwist/qcomb.hpp"

namespace qtwist {

Rational q_int(long n, const Rational& q) {
    if (n < 0) fail("IndexError", "q_int of negative n");
    if (q.is_one()) fail("QEqualsOne", "(n)_q undefined at q = 1");
    return (q.pow(n) - Rational(1)) / (q - Rational(1));
}

Rational q_factorial(long n, const Rational& q) {
    Rational acc(1);
    for (long m = 2; m <= n; ++m) acc *= q_int(m, q);
    return acc;
}

Rational q_binom(long n, long k, const Rational& q) {
    if (k < 0 || k > n) fail("IndexError", "q_binom needs 0 <= k <= n");
    if (q.is_one()) fail("QEqualsOne", "q-binomial undefined at q = 1");
    for (long m = 1; m <= n; ++m)
        if (q_int(m, q).is_zero())
            fail("DegenerateQ", "(" + std::to_string(m) + ")_q = 0 at q = " + q.str());
    return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q));
}

} // namespace qtwist
