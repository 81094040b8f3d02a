// Microbenchmarks for the hot paths, sized like the promoter experiment:
// 228 one-hot inputs, 23 hidden units, 1 output.

#include <cstdint>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "iann/dataset.hpp"
#include "iann/fri.hpp"
#include "iann/importance.hpp"
#include "iann/init.hpp"
#include "iann/network.hpp"
#include "iann/rng.hpp"
#include "iann/train.hpp"

namespace {

constexpr int kInputs = 228;
constexpr int kPositions = 57;
constexpr int kHidden = 23;
constexpr iann::Topology kTopology{kInputs, kHidden, 1};

std::vector<double> random_input(iann::Rng& rng) {
    std::vector<double> x(kInputs, 0.0);
    for (int p = 0; p < kPositions; ++p) {
        x[static_cast<std::size_t>(4 * p + static_cast<int>(rng.uniform_int(0, 3)))] = 1.0;
    }
    return x;
}

iann::FriVector bench_fri() {
    std::vector<double> values(kInputs, 0.3);
    for (int i = 40; i < 100; ++i) values[static_cast<std::size_t>(i)] = 0.9;
    return iann::FriVector::validated(values);
}

iann::Dataset bench_dataset(int n_instances) {
    iann::Rng rng(7);
    iann::Dataset ds;
    ds.positions = kPositions;
    ds.encoding = "raw";
    ds.class_names = {"+", "-"};
    for (int i = 0; i < n_instances; ++i) {
        ds.instances.push_back({random_input(rng), static_cast<int>(rng.uniform_int(0, 1))});
    }
    ds.validate();
    return ds;
}

void BM_Forward(benchmark::State& state) {
    const iann::Network net = iann::init_standard(kTopology, 11);
    iann::Rng rng(12);
    const std::vector<double> x = random_input(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(iann::forward(net, x));
    }
}
BENCHMARK(BM_Forward);

void BM_CompositeUpdate(benchmark::State& state) {
    iann::Network net = iann::init_standard(kTopology, 13);
    iann::Rng rng(14);
    const std::vector<double> x = random_input(rng);
    const std::vector<double> target = {1.0};
    const iann::FriVector fri = bench_fri();
    for (auto _ : state) {
        const iann::Activations acts = iann::forward(net, x);
        const iann::Deltas deltas = iann::backprop_deltas(net, acts, target);
        iann::apply_iann_update(net, deltas, acts, 0.1, fri);
        benchmark::DoNotOptimize(net.w_in.flat().data());
    }
}
BENCHMARK(BM_CompositeUpdate);

void BM_TrainEpoch(benchmark::State& state) {
    const iann::Dataset ds = bench_dataset(200);
    const iann::FriVector fri = bench_fri();
    const iann::Network start = iann::init_iann(kTopology, fri, 15);
    iann::TrainConfig config;
    config.epochs = 1;
    config.seed = 16;
    for (auto _ : state) {
        benchmark::DoNotOptimize(iann::train(start, ds, config, fri));
    }
}
BENCHMARK(BM_TrainEpoch)->Unit(benchmark::kMillisecond);

void BM_InitIann(benchmark::State& state) {
    const iann::FriVector fri = bench_fri();
    for (auto _ : state) {
        benchmark::DoNotOptimize(iann::init_iann(kTopology, fri, 17));
    }
}
BENCHMARK(BM_InitIann);

void BM_DependencyGradient(benchmark::State& state) {
    const iann::Network net = iann::init_standard(kTopology, 18);
    iann::Rng rng(19);
    const std::vector<double> x = random_input(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(iann::dependency_gradient(net, x));
    }
}
BENCHMARK(BM_DependencyGradient);

}  // namespace

BENCHMARK_MAIN();
