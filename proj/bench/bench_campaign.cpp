#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "heinzlab/io.hpp"

// Times the campaign trial loop with the OpenMP schedule against the serial
// reference and checks that both produce the same report bytes.

int main(int argc, char** argv) {
  using namespace heinzlab;
  CampaignConfig cfg;
  cfg.trials = argc > 1 ? std::atoi(argv[1]) : 400;
  cfg.seed = 42;
  cfg.suites = {"S1.young.Y1",  "S2.rahma1.psi",      "S2.cor.rahma2",
                "S4.heinz.O1",  "S5.det.deter1.proof", "S5.norm.unnorm"};

  const auto timed = [&](bool parallel, CampaignReport& out) {
    cfg.parallel = parallel;
    const auto t0 = std::chrono::steady_clock::now();
    out = run_campaign(cfg);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  CampaignReport serial_rep, parallel_rep;
  const double serial_s = timed(false, serial_rep);
  const double parallel_s = timed(true, parallel_rep);

  std::printf("trials per suite: %d\n", cfg.trials);
  std::printf("serial:   %8.3f s\n", serial_s);
  std::printf("parallel: %8.3f s\n", parallel_s);
  std::printf("speedup:  %8.2fx\n", serial_s / parallel_s);

  const bool same = report_to_json(serial_rep).dump() == report_to_json(parallel_rep).dump();
  std::printf("reports byte-identical: %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
