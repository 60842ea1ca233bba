// Copyright 2026 The qbatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qbatch/qbatch.h"

namespace qbatch::cli {

namespace {

struct RunConfig {
  std::string circuit_path;
  int grid = 0;
  int depth = 0;
  std::optional<std::uint64_t> seed;
  std::string bits;
  std::string batch;
  std::string heuristic = "min_fill";
  std::string out_path;
  bool oracle = false;

  // cost / order
  std::string graph_path;
  std::string order;
  std::string restrict_list;
  bool csv = false;
  bool steps = false;

  // report
  std::string grid_range = "2,3";
  std::string depth_range = "4..8";
  std::string batch_sizes = "0";
  std::string seed_list;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::uint64_t default_seed() {
  const char* env = std::getenv("QSIM_SEED");
  if (env == nullptr || *env == '\0') {
    return 0;
  }
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0') {
    throw Error("QSIM_SEED must be a non-negative integer");
  }
  return v;
}

std::uint64_t seed_of(const RunConfig& cfg) { return cfg.seed ? *cfg.seed : default_seed(); }

std::string grid_name(int k, int d, std::uint64_t seed) {
  return "grid_k" + std::to_string(k) + "_d" + std::to_string(d) + "_s" + std::to_string(seed);
}

struct LoadedCircuit {
  Circuit circuit;
  std::string name;
  bool generated;
};

LoadedCircuit load_circuit(const RunConfig& cfg) {
  if (!cfg.circuit_path.empty()) {
    return {parse_circuit(read_file(cfg.circuit_path)),
            std::filesystem::path(cfg.circuit_path).filename().string(), false};
  }
  if (cfg.grid == 0) {
    throw Error("no circuit given: use --circuit or --grid/--depth");
  }
  std::uint64_t seed = seed_of(cfg);
  return {generate_random_circuit(cfg.grid, cfg.depth, seed), grid_name(cfg.grid, cfg.depth, seed),
          true};
}

std::vector<int> qubit_list(const std::string& text, int n_qubits) {
  std::vector<int> qs = parse_int_list(text);
  std::sort(qs.begin(), qs.end());
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
    throw Error("qubit listed twice in '" + text + "'");
  }
  for (int q : qs) {
    if (q < 0 || q >= n_qubits) {
      throw Error("qubit " + std::to_string(q) + " out of range [0, " + std::to_string(n_qubits) + ")");
    }
  }
  return qs;
}

std::ostream& output_stream(const RunConfig& cfg, std::ostream& out, std::ofstream& file) {
  if (cfg.out_path.empty()) {
    return out;
  }
  file.open(cfg.out_path, std::ios::binary);
  if (!file) {
    throw Error("cannot write '" + cfg.out_path + "'");
  }
  return file;
}

void print_amplitude(std::ostream& out, Complex a) {
  out << format_double(a.real()) << ' ' << format_double(a.imag()) << ' '
      << format_probability(std::norm(a)) << '\n';
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  LoadedCircuit lc = load_circuit(cfg);
  parse_bitstring(cfg.bits, lc.circuit.n_qubits());
  SimulationOptions options{heuristic_from_name(cfg.heuristic)};
  Complex amp = simulate_amplitude(lc.circuit, cfg.bits, options);
  print_amplitude(out, amp);
  if (!cfg.oracle) {
    return kExitOk;
  }
  Complex expected = amplitude_of(evolve(lc.circuit), cfg.bits);
  double delta = std::abs(amp - expected);
  out << "oracle ";
  print_amplitude(out, expected);
  out << "delta " << format_double(delta) << '\n';
  if (delta > kOracleTolerance) {
    err << "error: oracle mismatch " << format_double(delta) << '\n';
    return kExitOracleMismatch;
  }
  return kExitOk;
}

int cmd_batch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  LoadedCircuit lc = load_circuit(cfg);
  const int n = lc.circuit.n_qubits();
  std::vector<int> batch = qubit_list(cfg.batch, n);
  if (batch.empty()) {
    throw Error("--batch needs at least one qubit");
  }
  std::string bits = cfg.bits.empty() ? std::string(n, '0') : cfg.bits;
  if (static_cast<int>(bits.size()) != n) {
    throw Error("bitstring has " + std::to_string(bits.size()) + " bits, circuit has " +
                std::to_string(n) + " qubits");
  }
  std::map<int, int> fixed;
  for (int q = 0; q < n; ++q) {
    bool in_batch = std::binary_search(batch.begin(), batch.end(), q);
    char c = bits[q];
    if (c == '*' && in_batch) {
      continue;
    }
    if (c != '0' && c != '1') {
      throw Error("bitstring may contain only '0', '1' and '*' (at batch positions)");
    }
    if (!in_batch) {
      fixed[q] = c - '0';
    }
  }

  SimulationOptions options{heuristic_from_name(cfg.heuristic)};
  DenseTensor result = simulate_batch(lc.circuit, batch, fixed, options);
  std::optional<StateVector> state;
  if (cfg.oracle) {
    state = evolve(lc.circuit);
  }

  std::ofstream file;
  std::ostream& csv = output_stream(cfg, out, file);
  csv << "bitstring,re,im,prob\n";
  const int c = static_cast<int>(batch.size());
  double worst = 0.0;
  for (std::size_t idx = 0; idx < result.size(); ++idx) {
    std::string full = bits;
    for (int b = 0; b < c; ++b) {
      full[batch[b]] = ((idx >> (c - 1 - b)) & 1) ? '1' : '0';
    }
    Complex a = result.data()[idx];
    csv << full << ',' << format_double(a.real()) << ',' << format_double(a.imag()) << ','
        << format_probability(std::norm(a)) << '\n';
    if (state) {
      worst = std::max(worst, std::abs(a - amplitude_of(*state, full)));
    }
  }
  if (state) {
    err << "oracle max delta " << format_double(worst) << '\n';
    if (worst > kOracleTolerance) {
      err << "error: oracle mismatch\n";
      return kExitOracleMismatch;
    }
  }
  return kExitOk;
}

struct CostInput {
  std::string name;
  std::optional<int> k, d;
  std::optional<std::uint64_t> seed;
  CostReport report;
};

CostInput cost_from_config(const RunConfig& cfg) {
  Heuristic h = heuristic_from_name(cfg.heuristic);
  if (!cfg.graph_path.empty()) {
    EdgeList file = parse_edge_list(read_file(cfg.graph_path));
    std::vector<int> tail = cfg.restrict_list.empty() ? std::vector<int>{}
                                                      : parse_int_list(cfg.restrict_list);
    EliminationOrder order = cfg.order.empty()
                                 ? restricted_order_pipeline(file.graph, tail, h).order
                                 : parse_order(cfg.order);
    if (order.size() != file.graph.num_vertices()) {
      throw Error("order does not cover every vertex of the graph");
    }
    CostReport report = file.scopes.empty() ? estimate(file.graph, order, tail)
                                            : estimate(file.scopes, order, tail);
    return {std::filesystem::path(cfg.graph_path).filename().string(), {}, {}, {}, report};
  }
  LoadedCircuit lc = load_circuit(cfg);
  std::vector<int> batch = qubit_list(cfg.batch, lc.circuit.n_qubits());
  std::map<int, int> fixed;
  for (int q = 0; q < lc.circuit.n_qubits(); ++q) {
    if (!std::binary_search(batch.begin(), batch.end(), q)) {
      fixed[q] = 0;
    }
  }
  GraphicalModel model = build_model(lc.circuit, batch, fixed);
  EliminationOrder order = cfg.order.empty()
                               ? restricted_order_pipeline(model.graph(), model.free_vars(), h).order
                               : parse_order(cfg.order);
  CostInput input{lc.name, {}, {}, {}, estimate(model, order)};
  if (lc.generated) {
    input.k = cfg.grid;
    input.d = cfg.depth;
    input.seed = seed_of(cfg);
  }
  return input;
}

constexpr const char* kReportHeader = "circuit,k,d,seed,C_size,treewidth,flops,peak_mem,flops_per_mem";

template <typename T>
std::string opt_str(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

int cmd_cost(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  CostInput input = cost_from_config(cfg);
  const CostReport& r = input.report;
  std::string ratio = r.per_step.empty() ? "nan" : format_double(flops_per_memory(r).aggregate());
  if (cfg.csv) {
    int c_size = 0;
    for (std::uint64_t e = r.result_elems; e > 1; e /= kIndexDim) {
      ++c_size;
    }
    out << kReportHeader << '\n'
        << input.name << ',' << opt_str(input.k) << ',' << opt_str(input.d) << ','
        << opt_str(input.seed) << ',' << c_size << ',' << r.treewidth << ',' << r.total_flops << ','
        << r.peak_memory_elems << ',' << ratio << '\n';
    return kExitOk;
  }
  std::uint64_t max_storage = 0;
  for (const CostStep& s : r.per_step) {
    max_storage = std::max(max_storage, s.storage_elems());
  }
  out << "treewidth " << r.treewidth << '\n'
      << "flops " << r.total_flops << '\n'
      << "peak_memory " << r.peak_memory_elems << '\n'
      << "max_step_storage " << max_storage << '\n'
      << "flops_per_mem " << ratio << '\n';
  if (cfg.steps) {
    out << "rank,vertex,clique_size,flops,input_elems,output_elems\n";
    for (const CostStep& s : r.per_step) {
      out << s.rank << ',' << s.vertex << ',' << s.clique_size << ',' << s.flops << ','
          << s.input_elems << ',' << s.output_elems << '\n';
    }
  }
  return kExitOk;
}

int cmd_order(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Heuristic h = heuristic_from_name(cfg.heuristic);
  RestrictedOrder plan = [&] {
    if (!cfg.graph_path.empty()) {
      EdgeList file = parse_edge_list(read_file(cfg.graph_path));
      std::vector<int> tail = cfg.restrict_list.empty() ? std::vector<int>{}
                                                        : parse_int_list(cfg.restrict_list);
      return restricted_order_pipeline(file.graph, tail, h);
    }
    LoadedCircuit lc = load_circuit(cfg);
    std::vector<int> batch = qubit_list(cfg.restrict_list, lc.circuit.n_qubits());
    std::map<int, int> fixed;
    for (int q = 0; q < lc.circuit.n_qubits(); ++q) {
      if (!std::binary_search(batch.begin(), batch.end(), q)) {
        fixed[q] = 0;
      }
    }
    GraphicalModel model = build_model(lc.circuit, batch, fixed);
    return restricted_order_pipeline(model.graph(), model.free_vars(), h);
  }();
  out << "order " << format_order(plan.order) << '\n' << "treewidth " << plan.treewidth << '\n';
  return kExitOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Circuit c = generate_random_circuit(cfg.grid, cfg.depth, seed_of(cfg));
  std::ofstream file;
  output_stream(cfg, out, file) << render_circuit(c);
  return kExitOk;
}

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  struct Cell {
    int k, d;
    std::uint64_t seed;
  };
  Heuristic h = heuristic_from_name(cfg.heuristic);
  std::vector<int> grids = parse_int_list(cfg.grid_range);
  std::vector<int> depths = parse_int_list(cfg.depth_range);
  std::vector<int> sizes = parse_int_list(cfg.batch_sizes);
  std::vector<std::uint64_t> seeds;
  if (cfg.seed_list.empty()) {
    std::uint64_t base = seed_of(cfg);
    seeds = {base, base + 1};
  } else {
    for (int s : parse_int_list(cfg.seed_list)) {
      if (s < 0) {
        throw Error("seeds must be non-negative");
      }
      seeds.push_back(static_cast<std::uint64_t>(s));
    }
  }
  std::vector<Cell> cells;
  for (int k : grids) {
    if (k < 2) {
      throw Error("grid side must be >= 2");
    }
    for (int s : sizes) {
      if (s < 0 || s > k * k) {
        throw Error("batch size " + std::to_string(s) + " does not fit a " + std::to_string(k) +
                    "x" + std::to_string(k) + " grid");
      }
    }
    for (int d : depths) {
      if (d < 2) {
        throw Error("depth must be >= 2");
      }
      for (std::uint64_t s : seeds) {
        cells.push_back({k, d, s});
      }
    }
  }

  // Cells are independent; workers fill a slot per cell so the output order
  // does not depend on scheduling.
  std::vector<std::vector<TradeoffRow>> results(cells.size());
  std::vector<std::string> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        const Cell& c = cells[i];
        results[i] = batch_tradeoff_table(generate_random_circuit(c.k, c.d, c.seed), sizes, h);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned n_threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                       static_cast<unsigned>(cells.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
  }
  for (const std::string& e : errors) {
    if (!e.empty()) {
      throw Error(e);
    }
  }

  std::ofstream file;
  std::ostream& csv = output_stream(cfg, out, file);
  csv << kReportHeader << '\n';
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    for (const TradeoffRow& row : results[i]) {
      csv << grid_name(c.k, c.d, c.seed) << ',' << c.k << ',' << c.d << ',' << c.seed << ','
          << row.batch_size << ',' << row.treewidth << ',' << row.flops << ',' << row.peak_memory
          << ',' << format_double(row.flops_per_mem) << '\n';
    }
  }
  return kExitOk;
}

void add_circuit_source(CLI::App* sub, RunConfig& cfg, bool allow_graph) {
  auto* circuit = sub->add_option("--circuit", cfg.circuit_path, "Circuit text file");
  auto* grid = sub->add_option("--grid", cfg.grid, "Generate a k x k grid circuit")
                   ->check(CLI::Range(2, 64));
  auto* depth = sub->add_option("--depth", cfg.depth, "Depth of the generated circuit")
                    ->check(CLI::Range(2, 100000));
  sub->add_option("--seed", cfg.seed, "Generator seed (default: $QSIM_SEED or 0)");
  grid->needs(depth);
  depth->needs(grid);
  circuit->excludes(grid);
  circuit->excludes(depth);
  if (allow_graph) {
    auto* graph = sub->add_option("--graph", cfg.graph_path, "Edge-list graph file");
    graph->excludes(circuit);
    graph->excludes(grid);
  }
  sub->add_option("--heuristic", cfg.heuristic, "min_fill or min_degree")
      ->check(CLI::IsMember({"min_fill", "min_degree", "min-fill", "min-degree"}));
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".eEni") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string format_probability(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return format_double(std::strtod(buf, nullptr));
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  auto to_int = [&](std::string_view t) {
    std::string token(t);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) {
      throw Error("bad integer '" + token + "' in list '" + std::string(text) + "'");
    }
    return v;
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) {
      comma = text.size();
    }
    std::string_view item = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) {
      if (comma == text.size() && out.empty() && text.empty()) {
        break;
      }
      throw Error("empty item in list '" + std::string(text) + "'");
    }
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      int lo = to_int(item.substr(0, dots));
      int hi = to_int(item.substr(dots + 2));
      if (hi < lo || hi - lo > 100000) {
        throw Error("bad range '" + std::string(item) + "'");
      }
      for (int v = lo; v <= hi; ++v) {
        out.push_back(v);
      }
    } else {
      out.push_back(to_int(item));
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Batch amplitude simulator for quantum circuits", "qbatch"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* simulate = app.add_subcommand("simulate", "Evaluate one amplitude");
  add_circuit_source(simulate, cfg, false);
  simulate->add_option("--bits", cfg.bits, "Output bitstring, qubit 0 first")->required();
  simulate->add_flag("--oracle", cfg.oracle, "Cross-check against the state-vector simulator");

  auto* batch = app.add_subcommand("batch", "Evaluate all amplitudes over a set of qubits");
  add_circuit_source(batch, cfg, false);
  batch->add_option("--batch", cfg.batch, "Comma-separated batch qubits, e.g. 0,1 or 0..3")
      ->required();
  batch->add_option("--bits", cfg.bits, "Fixed output bits (batch positions may be '*')");
  batch->add_option("--out", cfg.out_path, "CSV output file (default stdout)");
  batch->add_flag("--oracle", cfg.oracle, "Cross-check against the state-vector simulator");

  auto* cost = app.add_subcommand("cost", "Estimate flops and memory without contracting");
  add_circuit_source(cost, cfg, true);
  cost->add_option("--batch", cfg.batch, "Batch qubits (circuit input)");
  cost->add_option("--restrict", cfg.restrict_list, "Tail vertices (graph input)");
  cost->add_option("--order", cfg.order, "Explicit elimination order, space separated");
  cost->add_flag("--csv", cfg.csv, "Emit one CSV report row");
  cost->add_flag("--steps", cfg.steps, "Print the per-step table");

  auto* order = app.add_subcommand("order", "Print a restricted elimination order");
  add_circuit_source(order, cfg, true);
  order->add_option("--restrict", cfg.restrict_list,
                    "Qubits (circuit input) or vertices (graph input) to place last");

  auto* generate = app.add_subcommand("generate", "Write a random grid circuit");
  generate->add_option("--grid", cfg.grid, "Grid side k")->required()->check(CLI::Range(2, 64));
  generate->add_option("--depth", cfg.depth, "Depth d")->required()->check(CLI::Range(2, 100000));
  generate->add_option("--seed", cfg.seed, "Generator seed (default: $QSIM_SEED or 0)");
  generate->add_option("--out", cfg.out_path, "Output file (default stdout)");

  auto* report = app.add_subcommand("report", "Treewidth / flops / memory sweep as CSV");
  report->add_option("--grid", cfg.grid_range, "Grid sides, e.g. 2,3 or 2..4");
  report->add_option("--depth", cfg.depth_range, "Depths, e.g. 4..8");
  report->add_option("--batch-sizes", cfg.batch_sizes, "Batch sizes |C|, e.g. 0..3");
  report->add_option("--seeds", cfg.seed_list, "Seeds (default: base seed and base + 1)");
  report->add_option("--seed", cfg.seed, "Base seed (default: $QSIM_SEED or 0)");
  report->add_option("--heuristic", cfg.heuristic, "min_fill or min_degree")
      ->check(CLI::IsMember({"min_fill", "min_degree", "min-fill", "min-degree"}));
  report->add_option("--out", cfg.out_path, "CSV output file (default stdout)");

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(cfg, out, err);
    if (*batch) return cmd_batch(cfg, out, err);
    if (*cost) return cmd_cost(cfg, out, err);
    if (*order) return cmd_order(cfg, out, err);
    if (*generate) return cmd_generate(cfg, out, err);
    if (*report) return cmd_report(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qbatch::cli
