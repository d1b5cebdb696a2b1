#include <doctest.h>

#include "qtwist/ideals.hpp"
#include "qtwist/qgroups.hpp"
#include "qtwist/racks.hpp"

using namespace qtwist;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

ReducedDatum a2_datum() {
    return validate_reduced_datum(validate_cartan({{2, -1}, {-1, 2}}),
                                  QMatrix::validate({{R("4"), R("6")}, {R("1/24"), R("4")}}));
}

ReducedDatum sl2_datum() {
    return validate_reduced_datum(validate_cartan({{2}}), QMatrix::validate({{R("4")}}));
}

// q-plane: free model on x1, x2 with the single relation x1x2 - 6 x2x1
Presentation qplane() {
    QMatrix q = QMatrix::validate({{R("4"), R("6")}, {R("1/24"), R("4")}});
    auto V = MonomialYD::diagonal_from_qmatrix(q);
    Presentation P;
    P.model = V;
    SmashElement rel = multiply(*V, sm_generator(*V, 0), sm_generator(*V, 1)) -
                       multiply(*V, sm_generator(*V, 1), sm_generator(*V, 0)).scaled(R("6"));
    P.relations.push_back(rel);
    return P;
}

} // namespace

TEST_SUITE("ideals") {

TEST_CASE("a relation is a member with a singleton combination") {
    Presentation P = qplane();
    auto cert = ideal_member(P.relations[0], P, 3);
    CHECK(cert.decision);
    CHECK(cert.combination.size() == 1);
    CHECK(certificate_resum(P, cert) == P.relations[0]);
}

TEST_CASE("x1^2 x2 - 36 x2 x1^2 is in the q-plane ideal") {
    Presentation P = qplane();
    const MonomialYD& V = *P.model;
    SmashElement query = sm_monomial(SmashMonomial{{0, 0, 1}, V.group_identity()}) -
                         sm_monomial(SmashMonomial{{1, 0, 0}, V.group_identity()}, R("36"));
    auto cert = ideal_member(query, P, 3);
    CHECK(cert.decision);
    CHECK(certificate_resum(P, cert) == query);
}

TEST_CASE("x1^2 x2 - x2 x1^2 is not in the q-plane ideal") {
    Presentation P = qplane();
    const MonomialYD& V = *P.model;
    SmashElement query = sm_monomial(SmashMonomial{{0, 0, 1}, V.group_identity()}) -
                         sm_monomial(SmashMonomial{{1, 0, 0}, V.group_identity()});
    for (int D : {3, 4, 5}) CHECK_FALSE(ideal_member(query, P, D).decision);
}

TEST_CASE("degree budget is enforced") {
    Presentation P = qplane();
    const MonomialYD& V = *P.model;
    SmashElement big = sm_monomial(SmashMonomial{{0, 1, 0, 1}, V.group_identity()});
    CHECK_THROWS_WITH_AS(ideal_member(big, P, 3), doctest::Contains("DegreeBudgetExceeded"),
                         Error);
}

TEST_CASE("monotonicity: membership at D persists at D + 1") {
    Presentation P = qplane();
    const MonomialYD& V = *P.model;
    SmashElement query = sm_monomial(SmashMonomial{{0, 0, 1}, V.group_identity()}) -
                         sm_monomial(SmashMonomial{{1, 0, 0}, V.group_identity()}, R("36"));
    CHECK(ideal_member(query, P, 3).decision);
    CHECK(ideal_member(query, P, 4).decision);
}

TEST_CASE("equal_mod: linking relation of U~(sl2)") {
    ReducedDatum d = sl2_datum();
    Presentation P = build_ured(d);
    const MonomialYD& V = *P.model;
    // x1 y1 vs q_11^{-1} y1 x1 + l_1 (K1 L1 - 1), l_1 = 4/3
    SmashElement lhs = multiply(V, sm_generator(V, 0), sm_generator(V, 1));
    SmashElement rhs = multiply(V, sm_generator(V, 1), sm_generator(V, 0)).scaled(R("1/4")) +
                       (sm_group(d.K(0) * d.L(0)) - sm_one(V)).scaled(R("4/3"));
    CHECK(equal_mod(lhs, rhs, P, 4));
    CHECK(equal_mod(lhs, lhs, P, 2));
    // free model: x1x2 vs x2x1 differ
    Presentation Pfree = qplane();
    Pfree.relations.clear();
    const MonomialYD& W = *Pfree.model;
    CHECK_FALSE(equal_mod(multiply(W, sm_generator(W, 0), sm_generator(W, 1)),
                          multiply(W, sm_generator(W, 1), sm_generator(W, 0)), Pfree, 3));
}

TEST_CASE("certificates re-sum for group-mixed relations") {
    ReducedDatum d = a2_datum();
    Presentation P = build_ured(d);
    const MonomialYD& V = *P.model;
    // conjugated, rescaled relation: (linking_11) * (1 # L1^{-1}) shape
    SmashElement q = multiply(V, P.relations[4], sm_group(d.L(0, -1)));
    auto cert = ideal_member(q, P, 4);
    CHECK(cert.decision);
    CHECK(certificate_resum(P, cert) == q);
}

TEST_CASE("graded dimension of small quotients") {
    Presentation Pfree = qplane();
    Pfree.relations.clear();
    CHECK(graded_dimension(Pfree, 3) == 8); // free on two letters
    Presentation P = qplane();
    CHECK(graded_dimension(P, 2) == 3); // 4 - 1
    Presentation fk3 = fk_relations(3, FKCocycle::MinusOne);
    CHECK(graded_dimension(fk3, 2) == 4); // 9 - 5
}

TEST_CASE("inhomogeneous relations are rejected by the graded count") {
    ReducedDatum d = sl2_datum();
    Presentation P = build_ured(d); // linking relation mixes degree 2 and 0
    CHECK_THROWS_WITH_AS(graded_dimension(P, 2), doctest::Contains("InhomogeneousRelations"),
                         Error);
}

TEST_CASE("FK(3) graded dimensions terminate by degree 4") {
    for (auto kind : {FKCocycle::MinusOne, FKCocycle::Chi}) {
        Presentation P = fk_relations(3, kind);
        std::vector<long> dims;
        for (int deg = 0; deg <= 5; ++deg) dims.push_back(graded_dimension(P, deg));
        CHECK(dims == std::vector<long>{1, 3, 4, 3, 1, 0});
    }
}

TEST_CASE("weight-restricted membership agrees with the unrestricted answer") {
    // the pruned solver must agree with a brute-force span over all columns
    ReducedDatum d = a2_datum();
    Presentation P = build_ured(d);
    const MonomialYD& V = *P.model;
    SmashElement member = multiply(V, sm_generator(V, 0), P.relations[0]);
    SmashElement nonmember = member + sm_generator(V, 0);
    CHECK(ideal_member(member, P, 4).decision);
    CHECK_FALSE(ideal_member(nonmember, P, 4).decision);
}

} // TEST_SUITE
