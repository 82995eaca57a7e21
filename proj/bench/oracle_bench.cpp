// Serial vs parallel exhaustive model search. Each workload scans the whole
// space (no witness exists), so both variants do identical work.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "epistemic/oracle.hpp"
#include "epistemic/parser.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace epi;

namespace {

double seconds(const std::function<bool()>& run, bool& found) {
  auto t0 = std::chrono::steady_clock::now();
  found = run();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, const std::function<bool()>& serial,
            const std::function<bool()>& parallel) {
  bool fs = false, fp = false;
  double ts = seconds(serial, fs);
  double tp = seconds(parallel, fp);
  std::printf("%-28s serial %8.3f s  parallel %8.3f s  speedup %5.2fx%s\n", name, ts, tp,
              tp > 0 ? ts / tp : 0.0, fs == fp ? "" : "  MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int worlds = argc > 1 ? std::stoi(argv[1]) : 5;
#ifdef _OPENMP
  std::printf("threads: %d, worlds <= %d\n", omp_get_max_threads(), worlds);
#else
  std::printf("threads: 1 (built without OpenMP), worlds <= %d\n", worlds);
#endif
  SearchBounds b{{"p", "q", "r"}, worlds};

  // Axiom 5 instance: valid, so the whole space is scanned.
  Formula five = parse("<>(p & q | r) -> []<>(p & q | r)");
  report("validity (axiom 5)",
         [&] { return validity_search_serial(five, SemanticsMode::Yalcin, b).has_value(); },
         [&] { return validity_search(five, SemanticsMode::Yalcin, b).has_value(); });

  // The readings coincide on nonmodal antecedents.
  Formula c = parse("(p | q) => (r -> <>q)");
  report("disagreement (Yalcin/KM)",
         [&] {
           return disagreement_search_serial(c, SemanticsMode::Yalcin, c, SemanticsMode::KM, b)
               .has_value();
         },
         [&] {
           return disagreement_search(c, SemanticsMode::Yalcin, c, SemanticsMode::KM, b)
               .has_value();
         });
}
