#include <doctest.h>

#include <fstream>
#include <random>

#include "qtwist/json_io.hpp"
#include "qtwist/racks.hpp"

using namespace qtwist;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

GroupCocycleTable load_phi(int n) {
    std::ifstream in(std::string(QTWIST_TEST_DATA_DIR) + "/s4_phi.json");
    REQUIRE(in.good());
    Json j = Json::parse(in);
    return parse_group_cocycle(j, n);
}

} // namespace

TEST_SUITE("racks") {

TEST_CASE("transposition racks validate") {
    for (int n : {3, 4}) {
        TranspositionRack T = transposition_rack(n);
        CHECK(T.rack.size() == n * (n - 1) / 2);
    }
    TranspositionRack T = transposition_rack(3);
    // (12) |> (23) = (13): indices 0 |> 2 = 1
    CHECK(T.rack.tri(0, 2) == 1);
    // chi_(13)((12)): i = (13), j = (12): j(1)=2 < j(3)=3 => +1;
    // table entry q[(12)][(13)] with (12)=0, (13)=1
    CHECK(T.chi.at(0, 1) == R("1"));
    // chi on the diagonal is -1 (squares)
    for (int t = 0; t < 3; ++t) CHECK(T.chi.at(t, t) == R("-1"));
}

TEST_CASE("bad racks are rejected") {
    CHECK_THROWS_WITH_AS(validate_rack({"a", "b"}, {{0, 0}, {0, 1}}),
                         doctest::Contains("NotBijective"), Error);
    // bijective rows but self-distributivity broken:
    // 0|>(1|>1) = 0|>0 = 1, (0|>1)|>(0|>1) = 0|>0 = 1 ... construct a
    // genuine violation on three elements
    std::vector<std::vector<int>> op{{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    CHECK_THROWS_WITH_AS(validate_rack({"a", "b", "c"}, op),
                         doctest::Contains("NotSelfDistributive"), Error);
}

TEST_CASE("rack cocycle validation with witness") {
    TranspositionRack T = transposition_rack(3);
    auto bad = T.minus_one.val;
    bad[0][1] = R("1"); // breaks exactly one family of triples
    CHECK_THROWS_WITH_AS(validate_rack_cocycle(T.rack, bad), doctest::Contains("CocycleViolation"),
                         Error);
}

TEST_CASE("twist by the identity table is the identity") {
    TranspositionRack T = transposition_rack(3);
    std::vector<std::vector<Rational>> one(3, std::vector<Rational>(3, R("1")));
    auto res = twist_rack_cocycle(T.rack, T.minus_one, one);
    CHECK(res.valid);
    CHECK(res.q_phi == T.minus_one.val);
}

TEST_CASE("restriction of a genuine group cocycle is a valid twist") {
    GroupCocycleTable phi = load_phi(4);
    TranspositionRack T = transposition_rack(4);
    int N = T.rack.size();
    std::vector<std::vector<Rational>> phit(N, std::vector<Rational>(N, R("1")));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) phit[i][j] = phi(T.elements[i], T.elements[j]);
    auto res = twist_rack_cocycle(T.rack, T.chi, phit);
    CHECK(res.valid);
    // the twisted cocycle is the constant -1
    CHECK(res.q_phi == transposition_rack(4).minus_one.val);
}

TEST_CASE("twist validity iff the twisted table is a rack cocycle (100 random tables)") {
    TranspositionRack T = transposition_rack(3);
    std::mt19937_64 rng(2024);
    int valid_seen = 0, invalid_seen = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<Rational>> phi(3, std::vector<Rational>(3, R("1")));
        for (auto& row : phi)
            for (auto& v : row) v = (rng() & 1) ? R("1") : R("-1");
        auto res = twist_rack_cocycle(T.rack, T.minus_one, phi);
        bool is_cocycle = !rack_cocycle_violation(T.rack, res.q_phi).has_value();
        CHECK(res.valid == is_cocycle);
        (res.valid ? valid_seen : invalid_seen)++;
    }
    CHECK(valid_seen > 0);
    CHECK(invalid_seen > 0);
}

TEST_CASE("searcher finds twist-compatible tables for n = 3") {
    auto t = search_twist_tables(3, FKCocycle::MinusOne, 5, 1000);
    REQUIRE(t.has_value());
    TranspositionRack T = transposition_rack(3);
    CHECK(twist_rack_cocycle(T.rack, T.minus_one, *t).valid);
}

TEST_CASE("fk relation counts and members") {
    Presentation fk3 = fk_relations(3, FKCocycle::MinusOne);
    CHECK(fk3.relations.size() == 5); // 3 squares + 2 cyclic sums
    Presentation fk4 = fk_relations(4, FKCocycle::MinusOne);
    CHECK(fk4.relations.size() == 6 + 3 + 8);
    // n = 4 contains x_(12) x_(34) + x_(34) x_(12): indices (12)=0, (34)=5
    const MonomialYD& V = *fk4.model;
    SmashElement anti = sm_monomial(SmashMonomial{{0, 5}, V.group_identity()}) +
                        sm_monomial(SmashMonomial{{5, 0}, V.group_identity()});
    bool found = false;
    for (const auto& r : fk4.relations) found = found || r == anti;
    CHECK(found);
    // chi case includes x_(12)x_(23) - x_(23)x_(13) - x_(13)x_(12):
    // n = 3 indices (12)=0, (13)=1, (23)=2
    Presentation chi3 = fk_relations(3, FKCocycle::Chi);
    const MonomialYD& W = *chi3.model;
    SmashElement rel = sm_monomial(SmashMonomial{{0, 2}, W.group_identity()}) -
                       sm_monomial(SmashMonomial{{2, 1}, W.group_identity()}) -
                       sm_monomial(SmashMonomial{{1, 0}, W.group_identity()});
    bool found2 = false;
    for (const auto& r : chi3.relations) found2 = found2 || r == rel;
    CHECK(found2);
}

TEST_CASE("fk relations span ker Q_2 exactly") {
    for (int n : {3, 4})
        for (auto kind : {FKCocycle::MinusOne, FKCocycle::Chi}) {
            auto model = fk_model(n, kind);
            SparseEndo Q2 = quantum_symmetrizer(*model, 2);
            auto kernel = kernel_basis(Q2);
            Presentation fk = fk_relations(n, kind);
            REQUIRE(fk.relations.size() == kernel.size());
            LinearSpan kspan(false), rspan(false);
            int id = 0;
            for (auto& k : kernel) kspan.insert(SparseVec(k), id++);
            int N = model->size();
            for (const auto& r : fk.relations) {
                SparseVec v;
                for (const auto& [m, c] : r.terms)
                    v.emplace_back(static_cast<int>(word_index(m.word, N)), c);
                std::sort(v.begin(), v.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                CHECK(kspan.contains(v)); // relation inside the kernel
                rspan.insert(std::move(v), id++);
            }
            CHECK(rspan.rank() == static_cast<int>(kernel.size()));
            for (auto& k : kernel) CHECK(rspan.contains(k)); // kernel inside the span
        }
}

TEST_CASE("nichols hilbert series") {
    auto minus = nichols_hilbert(3, FKCocycle::MinusOne, 4);
    CHECK(minus == std::vector<long>{1, 3, 4, 3, 1});
    auto chi = nichols_hilbert(3, FKCocycle::Chi, 4);
    CHECK(chi == minus);
    CHECK(nichols_hilbert(4, FKCocycle::MinusOne, 1) == std::vector<long>{1, 6});
}

TEST_CASE("build_hq relations") {
    Presentation hq0 = build_hq(4, R("0"), R("0"));
    Presentation fk4 = fk_relations(4, FKCocycle::MinusOne);
    // at t = 0 the relation set is the undeformed FK set (possibly with
    // redundant conjugates); check mutual span in degree 2
    const MonomialYD& V = *hq0.model;
    int N = V.size();
    LinearSpan a(false), b(false);
    int id = 0;
    auto flatten = [&](const SmashElement& r) {
        SparseVec v;
        for (const auto& [m, c] : r.terms)
            v.emplace_back(static_cast<int>(word_index(m.word, N)), c);
        std::sort(v.begin(), v.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return v;
    };
    for (const auto& r : hq0.relations) a.insert(flatten(r), id++);
    for (const auto& r : fk4.relations) b.insert(flatten(r), id++);
    CHECK(a.rank() == b.rank());
    for (const auto& r : fk4.relations) CHECK(a.contains(flatten(r)));
    // t = (2, 3): right sides carry the group terms
    Presentation hq = build_hq(4, R("2"), R("3"));
    bool found = false;
    TranspositionRack T = transposition_rack(4);
    SmashElement expect = sm_monomial(SmashMonomial{{0, 5}, V.group_identity()}) +
                          sm_monomial(SmashMonomial{{5, 0}, V.group_identity()}) -
                          (sm_one(V) - sm_group(T.elements[0] * T.elements[5])).scaled(R("2"));
    for (const auto& r : hq.relations) found = found || r == expect;
    CHECK(found);
    // the group-action relation is structural: h_(12) a_(34) = -a_(34) h_(12)
    SmashElement lhs = multiply(V, sm_group(T.elements[0]), sm_generator(V, 5));
    SmashElement rhs = multiply(V, sm_generator(V, 5), sm_group(T.elements[0])).scaled(R("-1"));
    CHECK(lhs == rhs);
}

TEST_CASE("exponential deformation: lambda = 0 and rational lambdas") {
    VerifyReport zero = verify_exp_deformation(4, R("0"));
    CHECK(zero.pass);
    VerifyReport one = verify_exp_deformation(4, R("1"));
    for (const auto& c : one.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
    CHECK(one.pass);
    CHECK(verify_exp_deformation(4, R("5/3")).pass);
}

TEST_CASE("sigma_lambda eta is S_n invariant by construction") {
    CHECK_NOTHROW(fk_exp_cocycle(4, R("7/5")));
}

TEST_CASE("composite twist with the shipped phi table") {
    GroupCocycleTable phi = load_phi(4);
    VerifyReport zero = compose_with_group_twist(4, phi, R("0"));
    for (const auto& c : zero.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
    CHECK(zero.pass);
    VerifyReport one = compose_with_group_twist(4, phi, R("1"));
    CHECK(one.pass);
}

TEST_CASE("trivial phi fails the twist identity with a witness pair") {
    GroupCocycleTable trivial(4, {});
    CHECK_THROWS_WITH_AS(compose_with_group_twist(4, trivial, R("1")),
                         doctest::Contains("BadTwistTable"), Error);
}

TEST_CASE("corrupted group tables are rejected") {
    std::map<std::pair<GroupElement, GroupElement>, Rational> vals;
    GroupElement a = parse_perm("(12)", 4), b = parse_perm("(34)", 4);
    vals[{a, b}] = R("-1"); // a single -1 entry is not a 2-cocycle
    CHECK_THROWS_WITH_AS(GroupCocycleTable(4, std::move(vals)),
                         doctest::Contains("CocycleViolation"), Error);
}

} // TEST_SUITE
