#ifndef NUMASCHED_REPORT_HPP
#define NUMASCHED_REPORT_HPP

#include <string>
#include <vector>

#include "numasched/simulator.hpp"

namespace numasched {

enum class OutputFormat { table, csv, json };

OutputFormat parse_output_format(const std::string& name);

// Aligned text tables mirroring the workload x algorithm layout, one
// table per remote latency; cells at 1 decimal, "± stddev" appended when
// replications > 1.
std::string render_table(const std::vector<AggregateCell>& cells);

// Header: workload,algorithm,remote_latency,replications,
//         mean_savings_pct,stddev_savings_pct
std::string render_csv(const std::vector<AggregateCell>& cells);

// Full-precision cells plus an echo of the experiment configuration.
std::string render_json(const std::vector<AggregateCell>& cells,
                        const ExperimentSpec& spec, const Topology& topo);

std::string render_report(const std::vector<AggregateCell>& cells,
                          OutputFormat format, const ExperimentSpec& spec,
                          const Topology& topo);

}  // namespace numasched

#endif  // NUMASCHED_REPORT_HPP
