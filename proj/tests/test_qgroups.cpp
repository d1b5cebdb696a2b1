#include <doctest.h>

#include "qtwist/qgroups.hpp"

using namespace qtwist;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

ReducedDatum sl2_datum() {
    return validate_reduced_datum(validate_cartan({{2}}), QMatrix::validate({{R("4")}}));
}

ReducedDatum a2_datum() {
    return validate_reduced_datum(validate_cartan({{2, -1}, {-1, 2}}),
                                  QMatrix::validate({{R("4"), R("6")}, {R("1/24"), R("4")}}));
}

ReducedDatum b2_datum() {
    return validate_reduced_datum(validate_cartan({{2, -1}, {-2, 2}}),
                                  QMatrix::validate({{R("16"), R("6")}, {R("1/96"), R("4")}}));
}

ReducedDatum g2_datum() {
    // q_11 = 64, q_12 q_21 = 64^{-1} = 4^{-3}
    return validate_reduced_datum(validate_cartan({{2, -1}, {-3, 2}}),
                                  QMatrix::validate({{R("64"), R("2")}, {R("1/128"), R("4")}}));
}

} // namespace

TEST_SUITE("qgroups") {

TEST_CASE("build_ured: sl2 relations") {
    ReducedDatum d = sl2_datum();
    Presentation P = build_ured(d);
    REQUIRE(P.relations.size() == 1);
    const MonomialYD& V = *P.model;
    SmashElement expect = multiply(V, sm_generator(V, 0), sm_generator(V, 1)) -
                          multiply(V, sm_generator(V, 1), sm_generator(V, 0)).scaled(R("1/4")) -
                          (sm_group(d.K(0) * d.L(0)) - sm_one(V)).scaled(R("4/3"));
    CHECK(P.relations[0] == expect);
}

TEST_CASE("build_ured: A2 has 8 relations, zero linking drops the group terms") {
    CHECK(build_ured(a2_datum()).relations.size() == 8);
    ReducedDatum d0 = validate_reduced_datum(validate_cartan({{2, -1}, {-1, 2}}),
                                             QMatrix::validate({{R("4"), R("6")}, {R("1/24"), R("4")}}),
                                             std::vector<Rational>{R("0"), R("0")});
    Presentation P = build_ured(d0);
    const MonomialYD& V = *P.model;
    for (const auto& rel : P.relations)
        for (const auto& [m, c] : rel.terms) CHECK(m.word.size() == rel.word_degree());
    (void)V;
}

TEST_CASE("build_hpr: sl2 R5 and A2 counts") {
    ReducedDatum d = sl2_datum();
    Presentation P = build_hpr(d);
    REQUIRE(P.relations.size() == 1);
    const MonomialYD& V = *P.model;
    HprGenerators gen = hpr_generators(d, P.model);
    SmashElement expect = multiply(V, gen.e(0), gen.f(0)) - multiply(V, gen.f(0), gen.e(0)) -
                          (gen.omega(0) - gen.omega_prime(0)).scaled(R("4/3"));
    CHECK(P.relations[0] == expect);
    CHECK(build_hpr(a2_datum()).relations.size() == 8);
}

TEST_CASE("R6 coefficients for A2 are 1, -30, 144") {
    ReducedDatum d = a2_datum();
    auto model = MonomialYD::diagonal(d);
    SmashElement z = serre_expand(d, *model, SerreKind::X, 0, 1, 2);
    const GroupElement e = model->group_identity();
    CHECK(z.terms.at(SmashMonomial{{0, 0, 1}, e}) == R("1"));
    CHECK(z.terms.at(SmashMonomial{{0, 1, 0}, e}) == R("-30"));
    CHECK(z.terms.at(SmashMonomial{{1, 0, 0}, e}) == R("144"));
}

TEST_CASE("serre_expand n = 1 cases") {
    ReducedDatum d = a2_datum();
    auto model = MonomialYD::diagonal(d);
    const MonomialYD& V = *model;
    CHECK(serre_expand(d, V, SerreKind::X, 0, 1, 1) ==
          braided_adjoint(V, sm_generator(V, 0), sm_generator(V, 1)));
    // (y,1,2,1): y1y2 - 24 y2y1
    SmashElement y = serre_expand(d, V, SerreKind::Y, 0, 1, 1);
    SmashElement expect = multiply(V, sm_generator(V, 2), sm_generator(V, 3)) -
                          multiply(V, sm_generator(V, 3), sm_generator(V, 2)).scaled(R("24"));
    CHECK(y == expect);
}

TEST_CASE("serre_expand equals the iterated braided adjoint for all rank-2 data") {
    for (const ReducedDatum& d : {a2_datum(), b2_datum(), g2_datum()}) {
        auto model = MonomialYD::diagonal(d);
        const MonomialYD& V = *model;
        int theta = d.theta();
        for (int i = 0; i < theta; ++i)
            for (int j = 0; j < theta; ++j) {
                if (i == j) continue;
                SmashElement zx = sm_generator(V, j);
                SmashElement zy = sm_generator(V, theta + j);
                for (int n = 1; n <= 4; ++n) {
                    zx = braided_adjoint(V, sm_generator(V, i), zx);
                    zy = braided_adjoint(V, sm_generator(V, theta + i), zy);
                    CHECK(serre_expand(d, V, SerreKind::X, i, j, n) == zx);
                    CHECK(serre_expand(d, V, SerreKind::Y, i, j, n) == zy);
                }
            }
    }
}

TEST_CASE("generator maps and their composites") {
    ReducedDatum d = a2_datum();
    auto model = MonomialYD::diagonal(d);
    const MonomialYD& V = *model;
    auto [phi, psi] = generator_maps(d, model);
    // phi(f_1) = y_1 L_1^{-1}
    CHECK(phi.images.at("f1") == sm_monomial(SmashMonomial{{2}, d.L(0, -1)}));
    // psi(y_1) = f_1 omega'_1^{-1} realizes as y_1
    CHECK(psi.images.at("y1") == sm_generator(V, 2));
    // composite on y_1: phi(f_1) phi(omega'_1)^{-1} = y_1
    CHECK(multiply(V, phi.images.at("f1"), sm_group(d.L(0))) == sm_generator(V, 2));
}

TEST_CASE("verify_isomorphism passes for sl2 and A2") {
    VerifyReport sl2 = verify_isomorphism(sl2_datum(), 4);
    CHECK(sl2.pass);
    VerifyReport a2 = verify_isomorphism(a2_datum(), 4);
    for (const auto& c : a2.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
    CHECK(a2.pass);
}

TEST_CASE("verify_isomorphism fails on the mutated-R5 negative control") {
    VerifyReport rep = verify_isomorphism(a2_datum(), 4, Rational(1));
    CHECK_FALSE(rep.pass);
    bool r5_failed = false;
    for (const auto& c : rep.checks)
        if (c.name.find("R5") != std::string::npos && !c.pass) r5_failed = true;
    CHECK(r5_failed);
}

TEST_CASE("quotient_dj identifies L_i with K_i and collapses the linking relation") {
    ReducedDatum d = sl2_datum();
    DJDatum dj = build_dj_datum(d, {R("2")});
    Presentation P = quotient_dj(build_ured(dj.base));
    const MonomialYD& V = *P.model;
    CHECK(P.relations.size() == 2);
    CHECK(equal_mod(sm_group(d.K(0)), sm_group(d.L(0)), P, 4));
    // collapsed linking: x1y1 - (1/4) y1x1 - (4/3)(K1^2 - 1), the
    // one-parameter commutation shape
    SmashElement collapsed =
        multiply(V, sm_generator(V, 0), sm_generator(V, 1)) -
        multiply(V, sm_generator(V, 1), sm_generator(V, 0)).scaled(R("1/4")) -
        (sm_group(d.K(0, 2)) - sm_one(V)).scaled(R("4/3"));
    CHECK(ideal_member(collapsed, P, 4).decision);
    // the wrong identification (L_i = K_i^{-1}) would kill [e, f]
    CHECK_FALSE(equal_mod(sm_group(d.K(0)), sm_group(d.L(0, -1)), P, 4));
}

TEST_CASE("twist_to_dj: A2 with q_I = 2 passes and reports sigma(K1,K2) = 1/12") {
    ReducedDatum d = a2_datum();
    TwistToDJResult res = twist_to_dj(d, {R("2")}, 4);
    for (const auto& c : res.report.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
    CHECK(res.report.pass);
    CHECK(res.sigma_bichar(d.K(0), d.K(1)) == R("1/12"));
}

TEST_CASE("twist_to_dj: B2 with q_I = 2 passes") {
    TwistToDJResult res = twist_to_dj(b2_datum(), {R("2")}, 5);
    CHECK(res.report.pass);
}

TEST_CASE("twist_to_dj on an already-DJ datum is the identity deformation") {
    ReducedDatum d = a2_datum();
    DJDatum dj = build_dj_datum(d, {R("2")});
    TwistToDJResult res = twist_to_dj(dj.base, {R("2")}, 4);
    CHECK(res.report.pass);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            GroupElement gr = GroupElement::abelian_generator(4, r);
            GroupElement gc = GroupElement::abelian_generator(4, c);
            CHECK(res.sigma_bichar(gr, gc) == R("1"));
        }
}

TEST_CASE("twist_to_dj rejects non-positive diagonals") {
    ReducedDatum d = validate_reduced_datum(
        validate_cartan({{2, -1}, {-1, 2}}),
        QMatrix::validate({{R("-4"), R("6")}, {R("-1/24"), R("-4")}}));
    CHECK_THROWS_WITH_AS(twist_to_dj(d, {R("2")}, 4), doctest::Contains("NotPositive"), Error);
}

TEST_CASE("half-root cocycle on sl2") {
    ReducedDatum d = sl2_datum();
    RadicalTable t;
    t.insert(R("4"), R("2"));
    HopfCocycle sigma = hpr_halfroot_cocycle(d, t);
    auto model = MonomialYD::diagonal(d);
    const MonomialYD& V = *model;
    // sigma(w_1, w_1) = 2 (w_1 = K_1)
    CHECK(sigma.eval(V, sm_group(d.K(0)), sm_group(d.K(0))) == R("2"));
    // sigma(w'_1, w_1) = 2 as well (w'_1 = L_1^{-1})
    CHECK(sigma.eval(V, sm_group(d.L(0, -1)), sm_group(d.K(0))) == R("2"));
    // vanishes off group-likes
    CHECK(sigma.eval(V, sm_generator(V, 0), sm_group(d.K(0))).is_zero());
    // missing radical is reported
    RadicalTable empty;
    CHECK_THROWS_WITH_AS(hpr_halfroot_cocycle(d, empty), doctest::Contains("MissingRadical"),
                         Error);
}

TEST_CASE("half-root deformation preserves the defining products on generator pairs") {
    ReducedDatum d = sl2_datum();
    RadicalTable t;
    t.insert(R("4"), R("2"));
    HopfCocycle sigma = hpr_halfroot_cocycle(d, t);
    DJDatum dj = build_dj_datum(d, {R("2")});
    Presentation P = build_ured(dj.base);
    auto model = P.model;
    const MonomialYD& V = *model;
    HprGenerators gen = hpr_generators(d, model);
    // e_i ._sigma f_j = e_i f_j and f_j ._sigma e_i = f_j e_i
    CHECK(deform_product(V, sigma, gen.e(0), gen.f(0), 6) ==
          multiply(V, gen.e(0), gen.f(0)));
    CHECK(deform_product(V, sigma, gen.f(0), gen.e(0), 6) ==
          multiply(V, gen.f(0), gen.e(0)));
    // R5 with deformed products still lies in the U~(D_q) ideal
    SmashElement r5 = deform_product(V, sigma, gen.e(0), gen.f(0), 6) -
                      deform_product(V, sigma, gen.f(0), gen.e(0), 6) -
                      (gen.omega(0) - gen.omega_prime(0)).scaled(R("4/3"));
    CHECK(ideal_member(r5, P, 4).decision);
    // twisted action on generator pairs reproduces the braiding
    CHECK(twisted_action(V, sigma, d.K(0), sm_generator(V, 0)) ==
          sm_generator(V, 0).scaled(R("4")));
}

} // TEST_SUITE
