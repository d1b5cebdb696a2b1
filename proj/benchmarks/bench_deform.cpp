#include <benchmark/benchmark.h>

#include "qtwist/racks.hpp"

using namespace qtwist;

static void BM_ExpDeformation(benchmark::State& state) {
    for (auto _ : state) {
        VerifyReport rep = verify_exp_deformation(4, Rational(1));
        benchmark::DoNotOptimize(rep.pass);
    }
}
BENCHMARK(BM_ExpDeformation);

static void BM_TwistToDJ(benchmark::State& state) {
    ReducedDatum d = validate_reduced_datum(
        validate_cartan({{2, -1}, {-1, 2}}),
        QMatrix::validate({{Rational::parse("4"), Rational::parse("6")},
                           {Rational::parse("1/24"), Rational::parse("4")}}));
    for (auto _ : state) {
        auto res = twist_to_dj(d, {Rational(2)}, 4);
        benchmark::DoNotOptimize(res.report.pass);
    }
}
BENCHMARK(BM_TwistToDJ);
