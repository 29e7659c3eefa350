#include <random>
#include <sstream>

#include <benchmark/benchmark.h>

#include "vcr/indices.hpp"
#include "vcr/ingest.hpp"
#include "vcr/student_t.hpp"
#include "vcr/trend.hpp"
#include "vcr/validation.hpp"

namespace {

// A panel shaped like the real workload: ~300 disciplines, 24 years,
// one focal entity against the baseline.
vcr::Panel workload_panel(int disciplines, int years) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<vcr::Count> focal(1, 500);
    std::uniform_int_distribution<vcr::Count> extra(100, 50000);

    vcr::Taxonomy tax;
    tax.add({"big:B", "B", vcr::TaxonomyLevel::BigArea, ""});
    tax.add({"area:A", "A", vcr::TaxonomyLevel::Area, "big:B"});
    std::vector<std::string> ids;
    for (int d = 0; d < disciplines; ++d) {
        std::string name = "D" + std::to_string(d);
        std::string id =
            vcr::Taxonomy::make_id(vcr::TaxonomyLevel::Discipline, name);
        tax.add({id, name, vcr::TaxonomyLevel::Discipline, "area:A"});
        ids.push_back(id);
    }
    vcr::PanelBuilder builder("World");
    builder.set_taxonomy(std::move(tax));
    for (vcr::Year y = 1996; y < 1996 + years; ++y) {
        vcr::Count ftd = 0, ftc = 0, btd = 0, btc = 0;
        for (const auto& id : ids) {
            vcr::Count fd = focal(rng), fc = focal(rng);
            vcr::Count bd = fd + extra(rng), bc = fc + extra(rng);
            builder.add({"Uruguay", id, y, fd, fd, fc});
            builder.add({"World", id, y, bd, bd, bc});
            ftd += fd;
            ftc += fc;
            btd += bd;
            btc += bc;
        }
        builder.add({"Uruguay", std::string(vcr::kAllNodeId), y, ftd, ftd,
                     ftc});
        builder.add({"World", std::string(vcr::kAllNodeId), y, btd, btd, btc});
    }
    return builder.build();
}

void BM_VcrSeries(benchmark::State& state) {
    vcr::Panel panel = workload_panel(int(state.range(0)), 24);
    std::string node = vcr::Taxonomy::make_id(vcr::TaxonomyLevel::Discipline,
                                              "D0");
    for (auto _ : state) {
        auto series = vcr::vcr_series(panel, "Uruguay", node,
                                      vcr::Measure::Documents);
        benchmark::DoNotOptimize(series);
    }
}
BENCHMARK(BM_VcrSeries)->Arg(32)->Arg(307);

void BM_FitLinear(benchmark::State& state) {
    vcr::SyntheticSpec spec;
    spec.n_periods = int(state.range(0));
    spec.noise_sd = 0.1;
    vcr::VcrSeries series = vcr::generate_series(spec, 0);
    for (auto _ : state) {
        auto fit = vcr::fit_linear(series, 2019);
        benchmark::DoNotOptimize(fit);
    }
}
BENCHMARK(BM_FitLinear)->Arg(24)->Arg(100);

void BM_StudentTQuantile(benchmark::State& state) {
    int df = int(state.range(0));
    double p = 0.975;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vcr::student_t_quantile(p, df));
    }
}
BENCHMARK(BM_StudentTQuantile)->Arg(1)->Arg(22)->Arg(200);

void BM_ParseCanonical(benchmark::State& state) {
    vcr::Panel panel = workload_panel(int(state.range(0)), 24);
    std::ostringstream buffer;
    vcr::write_panel(panel, buffer);
    std::string text = buffer.str();
    for (auto _ : state) {
        std::istringstream in(text);
        auto parsed = vcr::parse_canonical(in);
        benchmark::DoNotOptimize(parsed);
    }
}
BENCHMARK(BM_ParseCanonical)->Arg(32)->Arg(307);

void BM_CoverageExperiment(benchmark::State& state) {
    vcr::SyntheticSpec spec;
    spec.replications = int(state.range(0));
    spec.noise_sd = 0.1;
    for (auto _ : state) {
        auto result = vcr::coverage_experiment(spec, 0.05, 1);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_CoverageExperiment)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
