#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "uqcm/rng.hpp"
#include "uqcm/verify.hpp"

namespace uqcm {

std::vector<BlochPoint> bloch_samples(int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("bloch_samples: n must be >= 1");
  UniformStream rng(seed);
  std::vector<BlochPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double u = rng.next();
    const double v = rng.next();
    out.push_back({std::acos(1 - 2 * u), 2 * std::numbers::pi * v});
  }
  return out;
}

SummaryStats summarize(const std::vector<double>& values) {
  SummaryStats s;
  if (values.empty()) return s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.variance = sq / static_cast<double>(values.size());
  return s;
}

CloneReport clone_once(const InputQubit& q, const Couplings& cfg, int fock_cutoff, double timing_jitter,
                       std::uint64_t jitter_seed) {
  RunOptions opts;
  opts.fock_cutoff = fock_cutoff;
  opts.timing_jitter = timing_jitter;
  opts.jitter_seed = jitter_seed;
  return clone_fidelities(run_uqcm(q, cfg, opts).final_state, q);
}

SweepReport universality_sweep(int n, std::uint64_t seed, const Couplings& cfg, const SweepOptions& options) {
  cfg.validate();
  if (options.jobs < 1) throw DomainError("universality_sweep: jobs must be >= 1");
  const std::vector<BlochPoint> points = bloch_samples(n, seed);

  SweepReport report;
  report.n = n;
  report.seed = seed;
  report.samples.resize(points.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < points.size(); k = next++) {
      try {
        const InputQubit q = InputQubit::from_bloch(points[k].theta, points[k].phi);
        report.samples[k] = {static_cast<int>(k), points[k],
                             clone_once(q, cfg, options.fock_cutoff, options.timing_jitter, mix_seed(seed, k))};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(options.jobs, n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<double> f2, f3, ov;
  for (const SweepSample& s : report.samples) {
    f2.push_back(s.report.fidelity_squid2);
    f3.push_back(s.report.fidelity_squid3);
    ov.push_back(s.report.target_overlap);
  }
  report.f2 = summarize(f2);
  report.f3 = summarize(f3);
  report.target_overlap = summarize(ov);
  return report;
}

}  // namespace uqcm
