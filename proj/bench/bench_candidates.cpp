// Serial vs OpenMP candidate search over a synthetic store.
//
//   cgedit_bench [media] [inserts-per-media] [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cgedit/interval_store.hpp"
#include "cgedit/notation.hpp"
#include "support/generators.hpp"

using namespace cgedit;

namespace {

template <typename F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int media_count = argc > 1 ? std::atoi(argv[1]) : 8;
  const int inserts = argc > 2 ? std::atoi(argv[2]) : 2000;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 5;

  testing::Rng rng(42);
  const auto types = testing::type_vocabulary(12);
  std::vector<MediaId> media;
  for (int i = 0; i < media_count; ++i) media.emplace_back("media" + std::to_string(i));

  Store store;
  for (const auto& m : media)
    for (int i = 0; i < inserts; ++i) {
      std::uniform_int_distribution<Frame> start(0, 100'000);
      std::uniform_int_distribution<Frame> length(1, 400);
      const Frame s = start(rng);
      store.insert({m, s, s + length(rng), testing::random_graph(rng, types, {3, 3, 0.0})});
    }

  Ontology ont;
  for (std::size_t i = 1; i < types.size(); ++i) ont.add_subtype(types[i], types[(i - 1) / 2]);
  const auto query = parse_graph("[t1]->(AGNT)->[t2]");

  std::vector<CandidateInterval> serial, parallel;
  const double serial_ms = best_of(repeats, [&] { serial = find_candidates_serial(store, query, ont); });
  const double parallel_ms = best_of(repeats, [&] { parallel = find_candidates(store, query, ont); });

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "segments " << store.segment_count() << ", candidates " << serial.size() << '\n'
            << "serial   " << serial_ms << " ms\n"
            << "openmp   " << parallel_ms << " ms (" << threads << " threads)\n"
            << "speedup  " << serial_ms / parallel_ms << "x\n";
  if (serial != parallel) {
    std::cerr << "result mismatch\n";
    return 1;
  }
  return 0;
}
