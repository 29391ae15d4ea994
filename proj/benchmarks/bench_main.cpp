#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "sonet/imaging.hpp"
#include "synthetic.hpp"

using namespace sonet;

namespace {

synth::Corpus corpus(std::size_t docs) {
  std::mt19937_64 rng(42);
  return synth::random_corpus(rng, docs, 30);
}

void BM_Ingest(benchmark::State& state) {
  const auto c = corpus(static_cast<std::size_t>(state.range(0)));
  const auto text = synth::jsonl(c);
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(ingest_corpus(in, CorpusFormat::Jsonl));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Ingest)->Arg(1000)->Arg(10000);

void BM_SingletonEvent(benchmark::State& state) {
  const auto c = corpus(static_cast<std::size_t>(state.range(0)));
  const auto index = synth::build(c);
  const Term term(c.terms.front());
  for (auto _ : state) benchmark::DoNotOptimize(singleton_event(index, term));
}
BENCHMARK(BM_SingletonEvent)->Arg(1000)->Arg(10000);

void BM_DoubletonEvent(benchmark::State& state) {
  const auto c = corpus(static_cast<std::size_t>(state.range(0)));
  const auto index = synth::build(c);
  const Term a(c.terms[0]);
  const Term b(c.terms[1]);
  for (auto _ : state) benchmark::DoNotOptimize(doubleton_event(index, a, b, 1));
}
BENCHMARK(BM_DoubletonEvent)->Arg(1000)->Arg(10000);

void BM_ExtractNetwork(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto c = corpus(5000);
  const auto index = synth::build(c);
  const auto actors = synth::random_actors(rng, c, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_network(index, actors, 0.0, 0));
}
BENCHMARK(BM_ExtractNetwork)->Arg(5)->Arg(20);

void BM_Rank(benchmark::State& state) {
  std::mt19937_64 rng(9);
  const auto c = corpus(5000);
  const auto index = synth::build(c);
  const auto actors = synth::random_actors(rng, c, 20);
  const auto space = relation_prior(extract_network(index, actors, 0.0, 0));
  const auto q = Query::parse(std::vector<std::string>{actors[0].term.raw(), actors[1].term.raw()});
  for (auto _ : state) benchmark::DoNotOptimize(rank(index, space, q, true));
}
BENCHMARK(BM_Rank);

}  // namespace
BENCHMARK_MAIN();
