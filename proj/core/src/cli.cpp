#include "numasched/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "numasched/assignment.hpp"
#include "numasched/rng.hpp"

namespace numasched {

namespace {

std::vector<std::uint64_t> parse_latency_list(const std::string& value) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CliError("empty entry in --remote-latency list");
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw CliError("invalid remote latency '" + item + "'");
    }
  }
  if (out.empty()) throw CliError("empty --remote-latency list");
  return out;
}

// Random small instances: the Hungarian path must match the exhaustive
// oracle exactly. Aborts the run on any mismatch.
void oracle_self_check(std::ostream& err) {
  SplitMix64 rng(12345);
  const Topology topos[] = {{2, 2, 4}, {3, 2, 6}, {2, 3, 5}};
  const LatencyModel lat(100, 150);
  for (const Topology& topo : topos) {
    for (int i = 0; i < 100; ++i) {
      AccessMatrix m(topo.threads, topo.nodes);
      for (int t = 0; t < topo.threads; ++t)
        for (int n = 0; n < topo.nodes; ++n)
          m.at(t, n) = rng.uniform_inclusive(10000);
      const auto oracle = brute_force_optimal(m, topo, lat);
      const Schedule via_hungarian = algo4_hungarian(m, topo, lat);
      const auto cost = schedule_cost(m, via_hungarian, lat).total_cycles;
      if (cost != oracle.total_cycles)
        throw std::runtime_error(
            "verify: Hungarian cost " + std::to_string(cost) +
            " != oracle optimum " + std::to_string(oracle.total_cycles));
    }
  }
  err << "verify: Hungarian matches the exhaustive oracle on 300 random instances\n";
}

}  // namespace

CliConfig parse_cli(const std::vector<std::string>& args) {
  CLI::App app{"NUMA thread-placement scheduling simulator"};

  std::string workload = "all";
  std::string algo = "all";
  int nodes = 4, cores_per_node = 4, threads = 16, quanta = 16;
  std::uint64_t local_latency = 100;
  std::string remote_latency = "150";
  std::uint64_t seed = 0;
  int replications = 1;
  std::uint64_t count_max = 10000;
  double dominance = 0.01;
  bool balanced_planting = true;
  bool redraw_per_quantum = false;
  std::string format = "table";
  std::string out_path;
  bool verify = false;

  app.add_option("--workload", workload,
                 "synth1|synth2|synth3|all|trace:<path>");
  app.add_option("--algo", algo, "1|2|3|4|all");
  app.add_option("--nodes", nodes, "NUMA node count");
  app.add_option("--cores-per-node", cores_per_node, "threads per node");
  app.add_option("--threads", threads, "application thread count");
  auto* opt_quanta = app.add_option("--quanta", quanta, "scheduling quanta");
  app.add_option("--local-latency", local_latency, "local DRAM cycles");
  app.add_option("--remote-latency", remote_latency,
                 "remote DRAM cycles, comma list for a sweep");
  app.add_option("--seed", seed, "base RNG seed");
  app.add_option("--replications", replications, "replications per cell");
  auto* opt_count_max = app.add_option("--count-max", count_max,
                                       "max per-cell access count");
  auto* opt_dominance =
      app.add_option("--dominance", dominance, "off-node count fraction");
  auto* opt_balanced = app.add_flag("--balanced-planting,!--no-balanced-planting",
                                    balanced_planting,
                                    "plant exactly K threads per node");
  auto* opt_redraw = app.add_flag("--redraw-per-quantum", redraw_per_quantum,
                                  "redraw counts each quantum within a phase");
  app.add_option("--format", format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", out_path, "write report to file");
  app.add_flag("--verify", verify,
               "cross-check Hungarian against the exhaustive oracle first");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    if (e.get_exit_code() == 0) {
      // --help
      msg << app.help();
      throw CliError(msg.str(), false);
    }
    msg << e.what() << "\nRun with --help for usage.";
    throw CliError(msg.str());
  }

  CliConfig cfg;
  try {
    cfg.topology = Topology(nodes, cores_per_node, threads);
  } catch (const std::invalid_argument& e) {
    throw CliError(e.what());
  }
  cfg.format = parse_output_format(format);
  cfg.out_path = out_path;
  cfg.verify = verify;

  auto& exp = cfg.experiment;
  exp.replications = replications;
  exp.base_seed = seed;
  if (replications < 1) throw CliError("--replications must be >= 1");

  for (std::uint64_t remote : parse_latency_list(remote_latency)) {
    try {
      exp.latencies.emplace_back(local_latency, remote);
    } catch (const std::invalid_argument& e) {
      throw CliError(e.what());
    }
  }

  if (algo == "all") {
    exp.algorithms = {Algorithm::sorted_pairs, Algorithm::per_node,
                      Algorithm::group_enumeration, Algorithm::hungarian};
  } else if (algo == "1" || algo == "2" || algo == "3" || algo == "4") {
    exp.algorithms = {static_cast<Algorithm>(algo[0] - '0')};
  } else {
    throw CliError("invalid --algo '" + algo + "' (expected 1|2|3|4|all)");
  }

  auto make_synth = [&](WorkloadKind kind) {
    SynthSpec s;
    s.kind = kind;
    s.topology = cfg.topology;
    s.quanta = quanta;
    s.seed = seed;
    s.count_max = count_max;
    s.dominance = dominance;
    s.balanced_planting = balanced_planting;
    s.redraw_per_quantum = redraw_per_quantum;
    return s;
  };

  if (workload.rfind("trace:", 0) == 0) {
    if (opt_quanta->count() || opt_count_max->count() ||
        opt_dominance->count() || opt_balanced->count() ||
        opt_redraw->count())
      throw CliError(
          "generator flags (--quanta/--count-max/--dominance/"
          "--balanced-planting/--redraw-per-quantum) conflict with a trace "
          "workload");
    exp.trace_path = workload.substr(6);
    if (exp.trace_path->empty()) throw CliError("empty trace path");
  } else if (workload == "all") {
    exp.synth = {make_synth(WorkloadKind::synth1),
                 make_synth(WorkloadKind::synth2),
                 make_synth(WorkloadKind::synth3)};
  } else if (workload == "synth1") {
    exp.synth = {make_synth(WorkloadKind::synth1)};
  } else if (workload == "synth2") {
    exp.synth = {make_synth(WorkloadKind::synth2)};
  } else if (workload == "synth3") {
    exp.synth = {make_synth(WorkloadKind::synth3)};
  } else {
    throw CliError("invalid --workload '" + workload + "'");
  }

  return cfg;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliConfig cfg;
  try {
    cfg = parse_cli(args);
  } catch (const CliError& e) {
    if (!e.usage_error) {
      err << e.what();  // --help text
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (cfg.verify) oracle_self_check(err);
    const auto cells = sensitivity_sweep(cfg.experiment, cfg.topology);
    const std::string report =
        render_report(cells, cfg.format, cfg.experiment, cfg.topology);
    if (cfg.out_path.empty()) {
      out << report;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open '" << cfg.out_path << "' for writing\n";
        return 1;
      }
      file << report;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace numasched
