#include "numasched/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace numasched {

namespace {

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

std::string display_workload(const std::string& kind) {
  if (kind == "trace") return "Trace";
  std::string s = kind;
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;  // synth1 -> Synth1
}

std::string display_algorithm(Algorithm a) {
  return "Algo " + std::to_string(static_cast<int>(a));
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

std::string render_table(const std::vector<AggregateCell>& cells) {
  if (cells.empty()) throw std::invalid_argument("render_table: no results");

  std::vector<std::uint64_t> latencies;
  std::vector<std::string> workloads;
  std::vector<Algorithm> algorithms;
  for (const auto& c : cells) {
    if (std::find(latencies.begin(), latencies.end(),
                  c.latency.remote_cycles) == latencies.end())
      latencies.push_back(c.latency.remote_cycles);
    if (std::find(workloads.begin(), workloads.end(), c.workload) ==
        workloads.end())
      workloads.push_back(c.workload);
    if (std::find(algorithms.begin(), algorithms.end(), c.algorithm) ==
        algorithms.end())
      algorithms.push_back(c.algorithm);
  }

  auto find_cell = [&](const std::string& w, Algorithm a,
                       std::uint64_t remote) -> const AggregateCell* {
    for (const auto& c : cells)
      if (c.workload == w && c.algorithm == a &&
          c.latency.remote_cycles == remote)
        return &c;
    return nullptr;
  };

  const int wcol = 10;
  const int ccol = 16;
  std::ostringstream out;
  for (std::size_t li = 0; li < latencies.size(); ++li) {
    if (li > 0) out << '\n';
    out << "Remote DRAM latency " << latencies[li] << " cycles (% DRAM cycles saved)\n";
    out << std::left;
    out.width(wcol);
    out << "Workload";
    for (Algorithm a : algorithms) {
      out.width(ccol);
      out << display_algorithm(a);
    }
    out << '\n';
    for (const auto& w : workloads) {
      out.width(wcol);
      out << display_workload(w);
      for (Algorithm a : algorithms) {
        const AggregateCell* c = find_cell(w, a, latencies[li]);
        std::string cell = "-";
        if (c) {
          cell = fmt("%.1f", c->mean_savings);
          if (c->replications > 1)
            cell += " ± " + fmt("%.1f", c->stddev_savings);
        }
        out.width(ccol);
        out << cell;
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string render_csv(const std::vector<AggregateCell>& cells) {
  if (cells.empty()) throw std::invalid_argument("render_csv: no results");
  std::ostringstream out;
  out << "workload,algorithm,remote_latency,replications,"
         "mean_savings_pct,stddev_savings_pct\n";
  for (const auto& c : cells) {
    out << c.workload << ',' << algorithm_name(c.algorithm) << ','
        << c.latency.remote_cycles << ',' << c.replications << ','
        << fmt("%.10g", c.mean_savings) << ','
        << fmt("%.10g", c.stddev_savings) << '\n';
  }
  return out.str();
}

std::string render_json(const std::vector<AggregateCell>& cells,
                        const ExperimentSpec& spec, const Topology& topo) {
  if (cells.empty()) throw std::invalid_argument("render_json: no results");
  nlohmann::json j;
  j["config"] = {
      {"nodes", topo.nodes},
      {"cores_per_node", topo.cores_per_node},
      {"threads", topo.threads},
      {"replications", spec.replications},
      {"base_seed", spec.base_seed},
  };
  if (!spec.synth.empty()) {
    const SynthSpec& s = spec.synth.front();
    j["config"]["quanta"] = s.quanta;
    j["config"]["count_max"] = s.count_max;
    j["config"]["dominance"] = s.dominance;
    j["config"]["balanced_planting"] = s.balanced_planting;
    j["config"]["redraw_per_quantum"] = s.redraw_per_quantum;
  }
  if (spec.trace_path) j["config"]["trace"] = *spec.trace_path;
  j["config"]["local_latency"] =
      spec.latencies.empty() ? 0 : spec.latencies.front().local_cycles;

  j["results"] = nlohmann::json::array();
  for (const auto& c : cells) {
    j["results"].push_back({
        {"workload", c.workload},
        {"algorithm", algorithm_name(c.algorithm)},
        {"remote_latency", c.latency.remote_cycles},
        {"replications", c.replications},
        {"mean_savings_pct", c.mean_savings},
        {"stddev_savings_pct", c.stddev_savings},
    });
  }
  return j.dump(2) + "\n";
}

std::string render_report(const std::vector<AggregateCell>& cells,
                          OutputFormat format, const ExperimentSpec& spec,
                          const Topology& topo) {
  switch (format) {
    case OutputFormat::table: return render_table(cells);
    case OutputFormat::csv: return render_csv(cells);
    case OutputFormat::json: return render_json(cells, spec, topo);
  }
  throw std::invalid_argument("unknown output format");
}

}  // namespace numasched
