#include <benchmark/benchmark.h>

#include "aln/abduction.hpp"
#include "aln/contraction.hpp"
#include "aln/matchmaker.hpp"
#include "aln/normal_form.hpp"
#include "aln/reasoner.hpp"
#include "fixtures.hpp"
#include "generator.hpp"

using namespace aln;

namespace {

struct Pairs {
  TBox t;
  std::vector<Concept> cs;
  std::vector<NormalConcept> ns;
};

Pairs make(int n, int depth, std::uint64_t seed) {
  testing::GenConfig cfg;
  cfg.depth = depth;
  testing::Generator g(seed, cfg);
  Pairs p;
  p.t = g.tbox();
  while (static_cast<int>(p.cs.size()) < n) {
    auto c = g.concept_for(p.t);
    auto nc = cnf(c, p.t);
    if (nc.unsat) continue;
    p.cs.push_back(c);
    p.ns.push_back(nc);
  }
  return p;
}

void BM_Cnf(benchmark::State& st) {
  auto p = make(256, static_cast<int>(st.range(0)), 1);
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(cnf(p.cs[i++ % p.cs.size()], p.t));
}
BENCHMARK(BM_Cnf)->Arg(1)->Arg(2)->Arg(3);

void BM_Subsumes(benchmark::State& st) {
  auto p = make(256, 2, 2);
  std::size_t i = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(subsumes(p.ns[i % 256], p.ns[(i * 7 + 3) % 256]));
    ++i;
  }
}
BENCHMARK(BM_Subsumes);

void BM_FindIrred(benchmark::State& st) {
  auto p = make(256, static_cast<int>(st.range(0)), 3);
  std::size_t i = 0;
  for (auto _ : st) {
    const auto& c = p.ns[i % 256];
    const auto& d = p.ns[(i * 5 + 1) % 256];
    ++i;
    if (conjoin(c, d).unsat) continue;
    benchmark::DoNotOptimize(find_irred(c, d));
  }
}
BENCHMARK(BM_FindIrred)->Arg(1)->Arg(2)->Arg(3);

void BM_FindContract(benchmark::State& st) {
  auto p = make(256, 2, 4);
  std::size_t i = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(find_contract(p.ns[i % 256], p.ns[(i * 11 + 5) % 256]));
    ++i;
  }
}
BENCHMARK(BM_FindContract);

void BM_RankOffers(benchmark::State& st) {
  auto p = make(static_cast<int>(st.range(0)) + 1, 2, 5);
  std::vector<Offer> offers;
  for (std::size_t i = 1; i < p.cs.size(); ++i)
    offers.emplace_back("o" + std::to_string(i), p.cs[i]);
  for (auto _ : st)
    benchmark::DoNotOptimize(rank_offers(p.cs[0], offers, p.t,
                                         static_cast<unsigned>(st.range(1))));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_RankOffers)->Args({1000, 1})->Args({1000, 0})->Unit(benchmark::kMillisecond);

void BM_VsmRank(benchmark::State& st) {
  auto p = make(1001, 2, 6);
  std::vector<Offer> offers;
  for (std::size_t i = 1; i < p.cs.size(); ++i)
    offers.emplace_back("o" + std::to_string(i), p.cs[i]);
  for (auto _ : st) benchmark::DoNotOptimize(vsm_rank(p.cs[0], offers, p.t));
}
BENCHMARK(BM_VsmRank)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
