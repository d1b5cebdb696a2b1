#include <doctest.h>

#include "qtwist/racks.hpp"
#include "qtwist/yd.hpp"

using namespace qtwist;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

ReducedDatum a2_datum() {
    return validate_reduced_datum(validate_cartan({{2, -1}, {-1, 2}}),
                                  QMatrix::validate({{R("4"), R("6")}, {R("1/24"), R("4")}}));
}

} // namespace

TEST_SUITE("yd") {

TEST_CASE("diagonal braiding scalars come from the q-matrix") {
    auto V = MonomialYD::diagonal(a2_datum());
    // generators: x1 x2 y1 y2
    auto r = V->braid(0, 1);
    CHECK(r.scalar == R("6")); // q_12
    CHECK(r.left == 1);
    CHECK(r.right == 0);
    CHECK(V->braid(0, 0).scalar == R("4"));
    CHECK(V->braid(2, 3).scalar == R("24"));    // c(y1 (x) y2) = q_21^{-1}
    CHECK(V->braid(0, 3).scalar == R("1/6"));   // c(x1 (x) y2) = q_12^{-1}
    CHECK(V->braid(2, 1).scalar == R("1/24"));  // c(y1 (x) x2) = chi_2(L_1) = q_21
    V->verify_braid_equation();
}

TEST_CASE("rack braiding on the transposition rack") {
    auto V = fk_model(3, FKCocycle::MinusOne);
    // elements ordered (12), (13), (23)
    auto r = V->braid(0, 2); // c(x_(12) (x) x_(23)) = -x_(13) (x) x_(12)
    CHECK(r.scalar == R("-1"));
    CHECK(r.left == 1);
    CHECK(r.right == 0);
    auto fixed = V->braid(0, 0);
    CHECK(fixed.scalar == R("-1"));
    CHECK(fixed.left == 0);
    V->verify_braid_equation();
    fk_model(3, FKCocycle::Chi)->verify_braid_equation();
    fk_model(4, FKCocycle::MinusOne)->verify_braid_equation();
    fk_model(4, FKCocycle::Chi)->verify_braid_equation();
}

TEST_CASE("rack action extends multiplicatively to S_n") {
    auto V = fk_model(3, FKCocycle::MinusOne);
    // -1 model: any h acts by its sign
    GroupElement threecycle = parse_perm("(123)", 3);
    auto [s, t] = V->act(threecycle, 0);
    CHECK(s == R("1")); // even permutation
    CHECK(t == 2);      // (123) |> (12) = (h(1) h(2)) = (23)
    auto [s2, t2] = V->act(parse_perm("(12)", 3), 2);
    CHECK(s2 == R("-1"));
}

TEST_CASE("symmetrizer at n = 1 is the identity") {
    auto V = MonomialYD::diagonal(a2_datum());
    SparseEndo Q = quantum_symmetrizer(*V, 1);
    CHECK(Q.dim == 4);
    for (long b = 0; b < Q.dim; ++b) {
        REQUIRE(Q.columns[b].size() == 1);
        CHECK(Q.columns[b][0].first == b);
        CHECK(Q.columns[b][0].second == R("1"));
    }
}

TEST_CASE("rank-1 diagonal: Q_2(x (x) x) = (2)_q x (x) x") {
    QMatrix q = QMatrix::validate({{R("4")}});
    auto V = MonomialYD::diagonal_from_qmatrix(q);
    SparseEndo Q = quantum_symmetrizer(*V, 2);
    REQUIRE(Q.dim == 1);
    REQUIRE(Q.columns[0].size() == 1);
    CHECK(Q.columns[0][0].second == R("5"));
}

TEST_CASE("FK(3) degree-2 kernel has dimension 5") {
    for (auto kind : {FKCocycle::MinusOne, FKCocycle::Chi}) {
        auto V = fk_model(3, kind);
        SparseEndo Q = quantum_symmetrizer(*V, 2);
        CHECK(Q.dim == 9);
        CHECK(kernel_basis(Q).size() == 5);
    }
}

TEST_CASE("Matsumoto: two reduced-word strategies give the same symmetrizer") {
    auto V = fk_model(3, FKCocycle::Chi);
    for (int n : {2, 3}) {
        SparseEndo a = quantum_symmetrizer(*V, n, 2000000, false);
        SparseEndo b = quantum_symmetrizer(*V, n, 2000000, true);
        REQUIRE(a.dim == b.dim);
        for (long c = 0; c < a.dim; ++c) CHECK(a.columns[c] == b.columns[c]);
    }
    auto W = MonomialYD::diagonal(a2_datum());
    SparseEndo a = quantum_symmetrizer(*W, 3, 2000000, false);
    SparseEndo b = quantum_symmetrizer(*W, 3, 2000000, true);
    for (long c = 0; c < a.dim; ++c) CHECK(a.columns[c] == b.columns[c]);
}

TEST_CASE("braid rep satisfies the braid relations on basis vectors") {
    auto V = fk_model(3, FKCocycle::MinusOne);
    BraidRep rep = braid_rep(*V, 3);
    REQUIRE(rep.gens.size() == 2);
    // sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2 on every basis word
    auto apply = [&](int k, std::pair<Rational, long> in) {
        auto [s, b] = rep.gens[k][in.second];
        return std::make_pair(in.first * s, b);
    };
    for (long b = 0; b < rep.dim; ++b) {
        auto lhs = apply(0, apply(1, apply(0, {R("1"), b})));
        auto rhs = apply(1, apply(0, apply(1, {R("1"), b})));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("size budget is enforced") {
    auto V = fk_model(4, FKCocycle::MinusOne);
    CHECK_THROWS_WITH_AS(quantum_symmetrizer(*V, 9, 2000000),
                         doctest::Contains("SizeBudgetExceeded"), Error);
}

} // TEST_SUITE
