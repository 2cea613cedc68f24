#include <benchmark/benchmark.h>

#include <vector>

#include <combprob/measure.hpp>
#include <combprob/oracle.hpp>

namespace {

using namespace combprob;

space six_space() { return space({"a", "b", "c", "d", "e", "f"}); }

combined_measure six_measure() {
    return make_digitalized(six_space(),
                            {rational(1, 6), rational(-1, 6), rational(1, 6),
                             rational(-1, 6), rational(1, 6), rational(-1, 6)});
}

combined_measure five_measure() {
    return make_digitalized(space({"w", "v", "u", "a", "b"}),
                            {rational(1, 5), rational(1, 5), rational(-1, 5),
                             rational(1, 5), rational(1, 5)});
}

// Reduction of every event of a six-atom universe (4096 masks).
void BM_reduce(benchmark::State& state) {
    const std::vector<event> events = all_events(six_space());
    for (auto _ : state) {
        for (const event& e : events) benchmark::DoNotOptimize(reduce(e));
    }
    state.SetItemsProcessed((long long)state.iterations() *
                            (long long)events.size());
}
BENCHMARK(BM_reduce);

// Full axiom validation of a digitalized six-atom measure (4096 members).
void BM_validate_digitalized(benchmark::State& state) {
    const combined_measure m = six_measure();
    for (auto _ : state) {
        validation_report r = validate_axioms(m);
        benchmark::DoNotOptimize(r.ok);
    }
}
BENCHMARK(BM_validate_digitalized);

// Catalog run on the five-atom signed example.
void BM_catalog_example(benchmark::State& state) {
    const combined_measure m = five_measure();
    for (auto _ : state) {
        auto results = check_catalog(m);
        benchmark::DoNotOptimize(results.size());
    }
}
BENCHMARK(BM_catalog_example);

// Exhaustive two-atom sweep over the coarse grid, catalog included.
void BM_sweep_small(benchmark::State& state) {
    const std::vector<rational> grid = {rational(-1, 2), rational(0),
                                        rational(1, 2)};
    for (auto _ : state) {
        sweep_summary sum = sweep_measures(2, grid);
        benchmark::DoNotOptimize(sum.measures);
    }
}
BENCHMARK(BM_sweep_small);

}  // namespace

BENCHMARK_MAIN();
