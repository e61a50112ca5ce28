#include <benchmark/benchmark.h>

#include <cstdint>

#include "swipt/channels.hpp"
#include "swipt/model.hpp"
#include "swipt/p1.hpp"
#include "swipt/p2.hpp"
#include "swipt/sdr.hpp"
#include "swipt/suboptimal.hpp"

namespace {

swipt::SystemModel rayleigh(int M, int K, double e_bar, double r_bar0) {
  swipt::ChannelConfig cfg;
  cfg.rho_h_sq_db = -70.0;
  cfg.rho_g_sq_db = {-30.0};
  cfg.seed = 7;
  const swipt::ChannelDraw d = swipt::generate_channels(cfg, M, K);
  swipt::SystemSpec s;
  s.h = d.h;
  s.g = d.g;
  s.sigma0_sq = swipt::dbm_to_watts(-50.0);
  s.p_bar = 1.0;
  s.zeta = 0.5;
  s.e_bar = std::vector<double>(static_cast<size_t>(K), e_bar);
  s.r_bar0 = r_bar0;
  return swipt::SystemModel(s);
}

void BM_P11SdrEqv(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const swipt::SystemModel m = rayleigh(M, M - 1, 1e-4, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(swipt::solve_p11_sdr_eqv(m, 0.5).objective);
}
BENCHMARK(BM_P11SdrEqv)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_P21Sdr(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const swipt::SystemModel m = rayleigh(M, M - 1, 0.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(swipt::solve_p21_sdr(m, 4.0).objective);
}
BENCHMARK(BM_P21Sdr)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SolveP1(benchmark::State& state) {
  const swipt::SystemModel m = rayleigh(4, 3, 5e-4, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(swipt::solve_p1(m).rate);
}
BENCHMARK(BM_SolveP1)->Unit(benchmark::kMillisecond);

void BM_P1Sub2(benchmark::State& state) {
  const swipt::SystemModel m = rayleigh(4, 3, 5e-4, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(swipt::p1_sub2(m).value);
}
BENCHMARK(BM_P1Sub2)->Unit(benchmark::kMillisecond);

void BM_ReconstructRankOne(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  swipt::Rng rng(1);
  swipt::CMatrix a(M, M);
  swipt::CVector h(M);
  for (int i = 0; i < M; ++i) {
    h(i) = rng.cscg(1.0);
    for (int j = 0; j < M; ++j) a(i, j) = rng.cscg(1.0);
  }
  const swipt::HermitianMatrix S(swipt::CMatrix(a * a.adjoint()));
  const swipt::HermitianMatrix Q = swipt::HermitianMatrix::Zero(M);
  for (auto _ : state) benchmark::DoNotOptimize(swipt::reconstruct_rank_one(S, Q, h).S.trace());
}
BENCHMARK(BM_ReconstructRankOne)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
