#include <benchmark/benchmark.h>

#include "qtwist/qgroups.hpp"

using namespace qtwist;

namespace {

ReducedDatum a2_datum() {
    return validate_reduced_datum(
        validate_cartan({{2, -1}, {-1, 2}}),
        QMatrix::validate({{Rational::parse("4"), Rational::parse("6")},
                           {Rational::parse("1/24"), Rational::parse("4")}}));
}

} // namespace

// one full membership query: the R5[1,1] image inside the U~ ideal
static void BM_IdealMember(benchmark::State& state) {
    ReducedDatum d = a2_datum();
    Presentation ured = build_ured(d);
    Presentation hpr = build_hpr(d);
    for (auto _ : state) {
        auto cert = ideal_member(hpr.relations[0], ured, 4);
        benchmark::DoNotOptimize(cert.decision);
    }
}
BENCHMARK(BM_IdealMember);

static void BM_VerifyIsomorphismA2(benchmark::State& state) {
    ReducedDatum d = a2_datum();
    for (auto _ : state) {
        VerifyReport rep = verify_isomorphism(d, 4);
        benchmark::DoNotOptimize(rep.pass);
    }
}
BENCHMARK(BM_VerifyIsomorphismA2);
