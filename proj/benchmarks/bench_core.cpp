#include <benchmark/benchmark.h>

#include <random>

#include "fibercalc/certificates.hpp"
#include "fibercalc/family.hpp"
#include "fibercalc/homology.hpp"
#include "fibercalc/ledger.hpp"

using namespace fibercalc;

namespace {

HomologyClass random_primitive(std::mt19937_64& rng, std::size_t genus) {
    std::uniform_int_distribution<int> d(-6, 6);
    for (;;) {
        IntVector v(2 * genus);
        for (auto& x : v) x = d(rng);
        HomologyClass c(std::move(v));
        if (c.is_primitive()) return c;
    }
}

void BM_FeasibleStabilizations(benchmark::State& state) {
    const FiberState s(-3, 4);
    const auto budget = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(feasible_stabilizations(s, budget));
}
BENCHMARK(BM_FeasibleStabilizations)->Arg(10)->Arg(40)->Arg(160);

void BM_FamilyTable(benchmark::State& state) {
    const FiberedFamily fam = six_three_family();
    for (auto _ : state) benchmark::DoNotOptimize(family_table(fam, -10, 10));
}
BENCHMARK(BM_FamilyTable);

void BM_EvaluateTwistedWord(benchmark::State& state) {
    const FiberedFamily fam = six_three_family();
    const FamilyMember m = family_member(fam, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_word(m.word, fam.scene));
}
BENCHMARK(BM_EvaluateTwistedWord)->Arg(1)->Arg(1000)->Arg(1000000);

void BM_Transporter(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto g = static_cast<std::size_t>(state.range(0));
    const HomologyClass v1 = random_primitive(rng, g), v2 = random_primitive(rng, g);
    for (auto _ : state) benchmark::DoNotOptimize(symplectic_transporter(v1, v2));
}
BENCHMARK(BM_Transporter)->Arg(2)->Arg(4)->Arg(16);

void BM_Alexander(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto g = static_cast<std::size_t>(state.range(0));
    SymplecticMatrix m = SymplecticMatrix::identity(g);
    for (int i = 0; i < 8; ++i) m = m * transvection(random_primitive(rng, g));
    for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(m));
}
BENCHMARK(BM_Alexander)->Arg(2)->Arg(4)->Arg(8);

void BM_CommutatorCertificate(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const HomologyClass c1 = random_primitive(rng, 3), c2 = random_primitive(rng, 3);
    for (auto _ : state) benchmark::DoNotOptimize(commutator_certificate(c1, c2, 10));
}
BENCHMARK(BM_CommutatorCertificate);

}  // namespace

BENCHMARK_MAIN();
