#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qtwist/smash.hpp"

namespace qtwist {

/**
 * Presentation: a model together with a relation list and a default
 * filtration bound. Relations are stored in normal form; the group-action
 * relations of the algebras built here are structural in the smash model
 * and never appear in the list.
 */
struct Presentation {
    std::shared_ptr<const MonomialYD> model;
    std::vector<SmashElement> relations;
    int bound = 4;
};

struct CombinationTerm {
    SmashMonomial left;
    int relation = 0;
    SmashMonomial right;
    Rational coefficient;
};

/**
 * Outcome of a filtered membership query. A true decision carries a
 * combination that re-sums exactly to the queried element; a false
 * decision is only meaningful relative to the bound.
 */
struct MembershipCertificate {
    bool decision = false;
    int bound = 0;
    std::vector<CombinationTerm> combination;
};

// Decides membership of elem in the two-sided ideal generated by
// P.relations within filtration degree D. Spanning products are
// u * r * (v # g) with u, v words and g drawn from a finite candidate set
// derived from the group parts of the query and the relations; for
// abelian groups the left group part folds into g, for finite permutation
// groups left multipliers run over the whole group. Errors:
// DegreeBudgetExceeded.
MembershipCertificate ideal_member(const SmashElement& elem, const Presentation& P, int D);

// Evaluates the recorded combination; used to audit certificates.
SmashElement certificate_resum(const Presentation& P, const MembershipCertificate& cert);

bool equal_mod(const SmashElement& a, const SmashElement& b, const Presentation& P, int D);

// Dimension of the degree-d component of the word-algebra quotient
// (group parts must be trivial; relations must be word-homogeneous).
// Errors: InhomogeneousRelations.
long graded_dimension(const Presentation& P, int d);

// Shared span machinery: degree-d dimension of T(V)/ <rels> where each
// relation is a homogeneous list of (word, coefficient) pairs.
long graded_dimension_words(int N, const std::vector<std::vector<std::pair<std::vector<int>, Rational>>>& rels,
                            int d);

} // namespace qtwist
