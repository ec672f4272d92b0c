#include "numasched/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace numasched {

namespace {

void require_workload(const Workload& workload, const Topology& topo) {
  if (workload.quanta.empty())
    throw std::invalid_argument("simulator: empty workload");
  for (const AccessMatrix& m : workload.quanta)
    if (!m.matches(topo))
      throw std::invalid_argument("simulator: workload/topology mismatch");
}

// savings for one (algorithm, latency) cell of one replication
struct CellIndex {
  std::size_t algo;
  std::size_t lat;
};

// Per-replication evaluation with the greedy schedule sequences shared
// across the latency sweep.
std::vector<std::vector<double>> evaluate_workload(
    const Workload& workload, const std::vector<Algorithm>& algorithms,
    const std::vector<LatencyModel>& latencies, const Topology& topo) {
  const Schedule baseline = Schedule::block(topo);

  // baseline totals per latency
  std::vector<std::uint64_t> baseline_total(latencies.size(), 0);
  for (std::size_t li = 0; li < latencies.size(); ++li)
    for (const AccessMatrix& m : workload.quanta)
      baseline_total[li] += schedule_cost(m, baseline, latencies[li]).total_cycles;

  std::vector<std::vector<double>> savings(
      algorithms.size(), std::vector<double>(latencies.size(), 0.0));

  for (std::size_t ai = 0; ai < algorithms.size(); ++ai) {
    const Algorithm algo = algorithms[ai];
    if (algo != Algorithm::hungarian) {
      // latency-independent: one schedule sequence, re-costed per latency
      const auto schedules =
          schedule_sequence(workload, algo, latencies.front(), topo);
      for (std::size_t li = 0; li < latencies.size(); ++li) {
        std::uint64_t total = 0;
        for (int q = 0; q < workload.size(); ++q)
          total +=
              schedule_cost(workload.quanta[q], schedules[q], latencies[li])
                  .total_cycles;
        savings[ai][li] = savings_percent(baseline_total[li], total);
      }
    } else {
      for (std::size_t li = 0; li < latencies.size(); ++li) {
        const auto schedules =
            schedule_sequence(workload, algo, latencies[li], topo);
        std::uint64_t total = 0;
        for (int q = 0; q < workload.size(); ++q)
          total +=
              schedule_cost(workload.quanta[q], schedules[q], latencies[li])
                  .total_cycles;
        savings[ai][li] = savings_percent(baseline_total[li], total);
      }
    }
  }
  return savings;
}

}  // namespace

std::vector<Schedule> schedule_sequence(const Workload& workload,
                                        Algorithm algorithm,
                                        const LatencyModel& lat,
                                        const Topology& topo) {
  require_workload(workload, topo);
  std::vector<Schedule> schedules;
  schedules.reserve(workload.size());
  schedules.push_back(Schedule::block(topo));
  for (int q = 0; q + 1 < workload.size(); ++q)
    schedules.push_back(
        run_algorithm(algorithm, workload.quanta[q], topo, lat));
  return schedules;
}

SimulationReport run_simulation(const Workload& workload, Algorithm algorithm,
                                const LatencyModel& lat,
                                const Topology& topo) {
  require_workload(workload, topo);
  const Schedule baseline = Schedule::block(topo);
  const auto schedules = schedule_sequence(workload, algorithm, lat, topo);

  SimulationReport report{algorithm, {}, 0, 0, 0, 0, 0.0};
  for (int q = 0; q < workload.size(); ++q) {
    QuantumResult result =
        schedule_cost(workload.quanta[q], schedules[q], lat);
    result.quantum_index = q + 1;
    report.total_cycles += result.total_cycles;
    report.remote_accesses += result.remote_accesses;

    const QuantumResult base =
        schedule_cost(workload.quanta[q], baseline, lat);
    report.baseline_total_cycles += base.total_cycles;
    report.baseline_remote_accesses += base.remote_accesses;

    report.per_quantum.push_back(std::move(result));
  }
  report.savings =
      savings_percent(report.baseline_total_cycles, report.total_cycles);
  return report;
}

std::vector<AggregateCell> run_replicated(const ExperimentSpec& spec,
                                          const Topology& topo) {
  if (spec.replications < 1)
    throw std::invalid_argument("experiment: replications must be >= 1");
  if (spec.latencies.empty())
    throw std::invalid_argument("experiment: latency list must be non-empty");
  if (spec.algorithms.empty())
    throw std::invalid_argument("experiment: algorithm list must be non-empty");
  if (spec.synth.empty() && !spec.trace_path)
    throw std::invalid_argument("experiment: no workload source");

  struct Source {
    std::string label;
    std::optional<SynthSpec> synth;      // seed overridden per replication
    std::optional<Workload> fixed;       // trace data, shared by all reps
  };
  std::vector<Source> sources;
  for (const SynthSpec& s : spec.synth)
    sources.push_back({workload_kind_name(s.kind), s, std::nullopt});
  if (spec.trace_path) {
    Workload w = parse_trace_file(*spec.trace_path);
    require_workload(w, topo);
    sources.push_back({"trace", std::nullopt, std::move(w)});
  }

  const int R = spec.replications;
  // per source, per replication: savings[algo][lat]
  std::vector<std::vector<std::vector<std::vector<double>>>> all(
      sources.size(),
      std::vector<std::vector<std::vector<double>>>(R));

  auto run_rep = [&](std::size_t si, int r) {
    const Source& src = sources[si];
    if (src.fixed) {
      all[si][r] =
          evaluate_workload(*src.fixed, spec.algorithms, spec.latencies, topo);
    } else {
      SynthSpec s = *src.synth;
      s.seed = spec.base_seed + static_cast<std::uint64_t>(r);
      const Workload w = gen_synth(s);
      all[si][r] =
          evaluate_workload(w, spec.algorithms, spec.latencies, topo);
    }
  };

  const unsigned workers =
      std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || static_cast<std::size_t>(R) * sources.size() < 4) {
    for (std::size_t si = 0; si < sources.size(); ++si)
      for (int r = 0; r < R; ++r) run_rep(si, r);
  } else {
    std::vector<std::future<void>> futures;
    for (unsigned wkr = 0; wkr < workers; ++wkr) {
      futures.push_back(std::async(std::launch::async, [&, wkr] {
        for (std::size_t si = 0; si < sources.size(); ++si)
          for (int r = static_cast<int>(wkr); r < R;
               r += static_cast<int>(workers))
            run_rep(si, r);
      }));
    }
    for (auto& f : futures) f.get();
  }

  std::vector<AggregateCell> cells;
  for (std::size_t si = 0; si < sources.size(); ++si) {
    for (std::size_t ai = 0; ai < spec.algorithms.size(); ++ai) {
      for (std::size_t li = 0; li < spec.latencies.size(); ++li) {
        double sum = 0.0;
        for (int r = 0; r < R; ++r) sum += all[si][r][ai][li];
        const double mean = sum / R;
        double var = 0.0;
        if (R > 1) {
          for (int r = 0; r < R; ++r) {
            const double d = all[si][r][ai][li] - mean;
            var += d * d;
          }
          var /= (R - 1);
        }
        cells.push_back({sources[si].label, spec.algorithms[ai],
                         spec.latencies[li], R, mean, std::sqrt(var)});
      }
    }
  }
  return cells;
}

std::vector<AggregateCell> sensitivity_sweep(const ExperimentSpec& spec,
                                             const Topology& topo) {
  return run_replicated(spec, topo);
}

}  // namespace numasched
