#include <doctest.h>

#include <cstdio>

#include "../common/fixtures.hpp"
#include "pps/pinn.hpp"

using namespace pps;

TEST_SUITE("training-oracle") {
  TEST_CASE("per-epoch loss is nonincreasing for most seeds") {
    const auto ds = fixtures::synthetic_fixture();
    int monotone = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto run = train_pinn(ds, seed);
      bool ok = !run.failure && run.trace.size() == 100;
      double worst = 0.0;
      for (std::size_t n = 1; ok && n < run.trace.size(); ++n)
        worst = std::max(worst, run.trace[n].loss.total - run.trace[n - 1].loss.total);
      ok = ok && worst <= 0.0;
      std::printf("seed %2llu: %s%s worst increase %.3g\n", static_cast<unsigned long long>(seed),
                  ok ? "monotone" : "not monotone", run.failure ? " (failed)" : "", worst);
      if (ok) ++monotone;
    }
    std::printf("monotone traces: %d / 20\n", monotone);
    CHECK(monotone >= 18);
  }
}
