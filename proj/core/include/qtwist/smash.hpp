#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtwist/yd.hpp"

namespace qtwist {

/**
 * Normal-form monomial of the bosonization T(V)#kG: a word in the module
 * generators with the group element written to the right ("r # g" order).
 */
struct SmashMonomial {
    std::vector<int> word;
    GroupElement group;

    bool operator==(const SmashMonomial& o) const = default;
    bool operator<(const SmashMonomial& o) const {
        if (word != o.word) return word < o.word;
        return group < o.group;
    }
};

/**
 * Finite linear combination of smash monomials; only nonzero coefficients
 * are stored, so equality is structural.
 */
struct SmashElement {
    std::map<SmashMonomial, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const SmashMonomial& m, const Rational& c);
    // max word length over terms (0 for the zero element)
    int word_degree() const;

    SmashElement operator+(const SmashElement& o) const;
    SmashElement operator-(const SmashElement& o) const;
    SmashElement operator-() const;
    SmashElement scaled(const Rational& c) const;
    bool operator==(const SmashElement& o) const { return terms == o.terms; }
};

SmashElement sm_zero();
SmashElement sm_one(const MonomialYD& V);
SmashElement sm_generator(const MonomialYD& V, int i);
SmashElement sm_group(const GroupElement& g);
SmashElement sm_monomial(const SmashMonomial& m, const Rational& c = Rational(1));

// Smash product: (r # g)(s # h) straightens g through s with the monomial
// action and lands in normal form.
SmashElement multiply(const MonomialYD& V, const SmashElement& a, const SmashElement& b);
SmashElement multiply(const MonomialYD& V, const std::vector<SmashElement>& factors);

// epsilon: kills every monomial with a nonempty word.
Rational counit(const SmashElement& a);

// Antipode, extended anti-multiplicatively from S(1#g) = 1#g^{-1} and
// S(x#1) = -(1 # deg(x)^{-1})(x # 1).
SmashElement antipode(const MonomialYD& V, const SmashElement& a);

// Left coaction degree of a monomial: deg(x_{i_1}) ... deg(x_{i_k}) * g.
GroupElement coaction_degree(const MonomialYD& V, const SmashMonomial& m);

// ad_c(x)(y) = x y - (x_{(-1)} . y) x_{(0)} for x homogeneous; the action
// of the degree group-like is realized by conjugation. Errors:
// NotHomogeneous.
SmashElement braided_adjoint(const MonomialYD& V, const SmashElement& x, const SmashElement& y);

// Conjugation action h . a = (1#h) a (1#h^{-1}).
SmashElement group_conjugate(const MonomialYD& V, const GroupElement& h, const SmashElement& a);

struct BiDegree {
    GroupElement left, right;
    bool operator==(const BiDegree& o) const = default;
};

// Gamma x Gamma weight: deg(1#g) = (g,g), deg(x#1) = (deg x, e),
// multiplied over the monomial. Errors: NotHomogeneous.
BiDegree weight(const MonomialYD& V, const SmashElement& a);

// k-fold coproduct as a map from k-slot monomial tuples to coefficients;
// exact for polynomial elements, degree_bound only guards work.
using TensorMonomial = std::vector<SmashMonomial>;
using TensorElement = std::map<TensorMonomial, Rational>;
TensorElement coproduct_power(const MonomialYD& V, const SmashElement& a, int k,
                              int degree_bound);

// Public 2-fold coproduct, pairs merged by like left factors.
std::vector<std::pair<SmashElement, SmashElement>> coproduct(const MonomialYD& V,
                                                             const SmashElement& a,
                                                             int degree_bound);

std::string to_string(const MonomialYD& V, const SmashElement& a);

} // namespace qtwist
