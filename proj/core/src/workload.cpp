#include "numasched/workload.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "numasched/rng.hpp"

namespace numasched {

namespace {

[[noreturn]] void trace_error(int line, const std::string& what) {
  throw std::runtime_error("trace line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_u64(const std::string& field, int line,
                        const char* what) {
  if (field.empty() || field[0] == '-' || field[0] == '+')
    trace_error(line, std::string("invalid ") + what + " '" + field + "'");
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    trace_error(line, std::string("invalid ") + what + " '" + field + "'");
  return value;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

AccessMatrix draw_phase_matrix(SplitMix64& rng,
                               const std::vector<int>& preferred,
                               const SynthSpec& spec) {
  const auto& topo = spec.topology;
  const std::uint64_t off_max = static_cast<std::uint64_t>(
      spec.dominance * static_cast<double>(spec.count_max));
  AccessMatrix m(topo.threads, topo.nodes);
  for (int t = 0; t < topo.threads; ++t)
    for (int n = 0; n < topo.nodes; ++n)
      m.at(t, n) = (n == preferred[t])
                       ? rng.uniform_inclusive(spec.count_max)
                       : rng.uniform_inclusive(off_max);
  return m;
}

std::vector<int> draw_planting(SplitMix64& rng, const SynthSpec& spec) {
  const auto& topo = spec.topology;
  std::vector<int> preferred(topo.threads);
  if (spec.balanced_planting) {
    std::vector<int> slots;
    slots.reserve(topo.total_slots());
    for (int n = 0; n < topo.nodes; ++n)
      for (int k = 0; k < topo.cores_per_node; ++k) slots.push_back(n);
    rng.shuffle(slots);
    for (int t = 0; t < topo.threads; ++t) preferred[t] = slots[t];
  } else {
    for (int t = 0; t < topo.threads; ++t)
      preferred[t] = static_cast<int>(rng.bounded(topo.nodes));
  }
  return preferred;
}

}  // namespace

std::string workload_kind_name(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::synth1: return "synth1";
    case WorkloadKind::synth2: return "synth2";
    case WorkloadKind::synth3: return "synth3";
    case WorkloadKind::trace: return "trace";
  }
  throw std::invalid_argument("unknown workload kind");
}

int phase_count(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::synth1: return 1;
    case WorkloadKind::synth2: return 2;
    case WorkloadKind::synth3: return 4;
    case WorkloadKind::trace:
      throw std::invalid_argument("trace workloads have no phase structure");
  }
  throw std::invalid_argument("unknown workload kind");
}

Workload gen_synth(const SynthSpec& spec) {
  if (spec.kind == WorkloadKind::trace)
    throw std::invalid_argument("gen_synth: kind must be synth1/2/3");
  const int P = phase_count(spec.kind);
  if (spec.quanta < P + 1)
    throw std::invalid_argument(
        "gen_synth: need at least " + std::to_string(P + 1) +
        " quanta for " + workload_kind_name(spec.kind));
  if (spec.count_max == 0)
    throw std::invalid_argument("gen_synth: count_max must be positive");
  if (spec.dominance <= 0.0 || spec.dominance > 1.0)
    throw std::invalid_argument("gen_synth: dominance must be in (0, 1]");

  const auto& topo = spec.topology;
  SplitMix64 rng(spec.seed);

  Workload w;
  w.meta = {spec.kind, spec.seed, {}};
  w.quanta.reserve(spec.quanta);

  // quantum 1: fully random, no planted structure
  {
    AccessMatrix m(topo.threads, topo.nodes);
    for (int t = 0; t < topo.threads; ++t)
      for (int n = 0; n < topo.nodes; ++n)
        m.at(t, n) = rng.uniform_inclusive(spec.count_max);
    w.quanta.push_back(std::move(m));
  }

  // split the remaining Q-1 quanta into P phases, earlier phases take the
  // ceiling share (15 -> 4,4,4,3)
  int remaining = spec.quanta - 1;
  int next_quantum = 2;  // 1-based
  const AccessMatrix* prev_phase = nullptr;
  std::vector<AccessMatrix> kept;  // keeps prev_phase pointers stable
  kept.reserve(P);

  for (int p = 0; p < P; ++p) {
    const int len = (remaining + (P - p) - 1) / (P - p);
    remaining -= len;
    w.meta.phase_boundaries.push_back(next_quantum);

    std::vector<int> preferred = draw_planting(rng, spec);
    AccessMatrix phase_matrix = draw_phase_matrix(rng, preferred, spec);
    // adjacent phases must actually differ; redraw on (rare) collision
    for (int attempt = 0; attempt < 16; ++attempt) {
      if (prev_phase == nullptr || !(phase_matrix == *prev_phase)) break;
      preferred = draw_planting(rng, spec);
      phase_matrix = draw_phase_matrix(rng, preferred, spec);
    }

    for (int q = 0; q < len; ++q) {
      if (spec.redraw_per_quantum && q > 0)
        w.quanta.push_back(draw_phase_matrix(rng, preferred, spec));
      else
        w.quanta.push_back(phase_matrix);
    }
    kept.push_back(phase_matrix);
    prev_phase = &kept.back();
    next_quantum += len;
  }
  return w;
}

void write_trace(const Workload& workload, std::ostream& out) {
  if (workload.quanta.empty())
    throw std::invalid_argument("write_trace: empty workload");
  const int threads = workload.quanta.front().threads();
  const int nodes = workload.quanta.front().nodes();
  out << "numasched-trace,v1," << threads << ',' << nodes << ','
      << workload.size() << '\n';
  for (int q = 0; q < workload.size(); ++q) {
    const AccessMatrix& m = workload.quanta[q];
    for (int t = 0; t < threads; ++t)
      for (int n = 0; n < nodes; ++n)
        if (m.at(t, n) != 0)
          out << (q + 1) << ',' << t << ',' << n << ',' << m.at(t, n)
              << '\n';
  }
  if (!out) throw std::runtime_error("write_trace: stream write failed");
}

void write_trace_file(const Workload& workload, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: LF endings always
  if (!out)
    throw std::runtime_error("write_trace: cannot open '" + path + "'");
  write_trace(workload, out);
}

Workload parse_trace(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("trace: empty input");
  auto header = split_csv(line);
  if (header.size() != 5 || header[0] != "numasched-trace" ||
      header[1] != "v1")
    trace_error(1, "bad header, expected numasched-trace,v1,<threads>,<nodes>,<quanta>");
  const int threads = static_cast<int>(parse_u64(header[2], 1, "thread count"));
  const int nodes = static_cast<int>(parse_u64(header[3], 1, "node count"));
  const int quanta = static_cast<int>(parse_u64(header[4], 1, "quantum count"));
  if (threads < 1 || nodes < 1)
    trace_error(1, "thread and node counts must be >= 1");
  if (quanta < 1) trace_error(1, "no quanta");

  Workload w;
  w.meta = {WorkloadKind::trace, 0, {}};
  w.quanta.assign(quanta, AccessMatrix(threads, nodes));

  std::map<std::tuple<int, int, int>, int> seen;  // key -> line number
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    if (fields.size() != 4)
      trace_error(lineno, "expected <quantum>,<thread>,<node>,<count>");
    const std::uint64_t q = parse_u64(fields[0], lineno, "quantum");
    const std::uint64_t t = parse_u64(fields[1], lineno, "thread");
    const std::uint64_t n = parse_u64(fields[2], lineno, "node");
    const std::uint64_t count = parse_u64(fields[3], lineno, "count");
    if (q < 1 || q > static_cast<std::uint64_t>(quanta))
      trace_error(lineno, "quantum " + std::to_string(q) +
                              " out of range 1.." + std::to_string(quanta));
    if (t >= static_cast<std::uint64_t>(threads))
      trace_error(lineno, "thread " + std::to_string(t) + " out of range");
    if (n >= static_cast<std::uint64_t>(nodes))
      trace_error(lineno, "node " + std::to_string(n) + " out of range");
    auto key = std::make_tuple(static_cast<int>(q), static_cast<int>(t),
                               static_cast<int>(n));
    auto [it, inserted] = seen.emplace(key, lineno);
    if (!inserted)
      trace_error(lineno, "duplicate cell (" + std::to_string(q) + "," +
                              std::to_string(t) + "," + std::to_string(n) +
                              "), first seen on line " +
                              std::to_string(it->second));
    w.quanta[q - 1].at(static_cast<int>(t), static_cast<int>(n)) = count;
  }
  return w;
}

Workload parse_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("parse_trace: cannot open '" + path + "'");
  return parse_trace(in);
}

}  // namespace numasched
