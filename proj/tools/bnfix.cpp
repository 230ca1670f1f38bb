#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bnfix/cycles.hpp"
#include "bnfix/error.hpp"
#include "bnfix/io.hpp"
#include "bnfix/netgen.hpp"
#include "bnfix/oracle.hpp"
#include "bnfix/pfvs.hpp"
#include "bnfix/solver.hpp"

namespace {

using namespace bnfix;

enum Exit { Ok = 0, BadInput = 1, BadSet = 2, Resource = 3 };

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0')
    return fallback;
  try {
    return static_cast<std::size_t>(std::stoull(raw));
  } catch (const std::exception&) {
    throw Error(std::string("bad value for ") + name + ": " + raw);
  }
}

struct Guards {
  std::size_t indegree = env_size("BNFIX_MAX_INDEGREE", BooleanNetwork::default_indegree_cap);
  std::size_t cycles = env_size("BNFIX_CYCLE_CAP", default_cycle_cap);
  std::size_t pfvs = env_size("BNFIX_MAX_PFVS", 30);
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

// Names, or all-digit tokens as 1-based indices.
std::vector<std::size_t> parse_vertices(const BooleanNetwork& net, const std::string& list) {
  std::vector<std::size_t> out;
  for (const auto& tok : split(list)) {
    if (auto v = net.index_of(tok)) {
      out.push_back(*v);
      continue;
    }
    if (tok.find_first_not_of("0123456789") == std::string::npos) {
      const auto i = std::stoull(tok);
      if (i >= 1 && i <= net.size()) {
        out.push_back(i - 1);
        continue;
      }
    }
    throw InvalidSetError("unknown vertex '" + tok + "'");
  }
  return out;
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

void apply_order(const BooleanNetwork& net, const std::string& order, SolveConfig& config) {
  if (order == "min")
    config.order_mode = OrderMode::Min;
  else if (order == "rand")
    config.order_mode = OrderMode::Random;
  else if (order == "file")
    config.order_mode = OrderMode::File;
  else {
    config.order_mode = OrderMode::Explicit;
    config.order = parse_vertices(net, order);
  }
}

PfvsOutput run_pfvs(const SignedDigraph& g, const SolveConfig& config) {
  switch (config.order_mode) {
  case OrderMode::Min:
    return pfvs_algorithm(g, min_order(g));
  case OrderMode::Random:
    return pfvs_best_of_random(g, std::max<std::size_t>(1, (g.size() + 1) / 2), config.seed);
  case OrderMode::File: {
    std::vector<std::size_t> id(g.size());
    for (std::size_t v = 0; v < id.size(); ++v)
      id[v] = v;
    return pfvs_algorithm(g, id);
  }
  case OrderMode::Explicit:
    break;
  }
  return pfvs_algorithm(g, config.order);
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> out;
  for (const auto& tok : split(list))
    out.push_back(static_cast<std::size_t>(std::stoull(tok)));
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed points of Boolean networks through a positive feedback vertex set"};
  app.require_subcommand(1);

  std::string file, strategy = "auto", pfvs_list, fvs_list, order = "min", output, csv;
  std::uint64_t seed = 0;
  bool verify = false, json = false, timings = false, candidates = false, trace = false;
  unsigned threads = 1;

  auto* solve_cmd = app.add_subcommand("solve", "Enumerate all fixed points");
  solve_cmd->add_option("file", file, "Network file")->required();
  solve_cmd->add_option("--strategy", strategy, "basic, scheduled or auto")
      ->check(CLI::IsMember({"basic", "scheduled", "auto"}));
  solve_cmd->add_option("--pfvs", pfvs_list, "Comma-separated P (names or 1-based indices)");
  solve_cmd->add_option("--fvs", fvs_list, "Comma-separated F containing P");
  solve_cmd->add_option("--order", order, "min, rand, file or a comma-separated vertex order");
  solve_cmd->add_option("--seed", seed, "Seed for --order rand");
  solve_cmd->add_option("--threads", threads, "Candidate workers (0: all cores)");
  solve_cmd->add_flag("--verify", verify, "Check that P is a PFVS first");
  solve_cmd->add_flag("--json", json, "JSON report");
  solve_cmd->add_flag("--timings", timings, "Include timings in the JSON report");
  solve_cmd->add_flag("--candidates", candidates, "List every candidate");

  auto* pfvs_cmd = app.add_subcommand("pfvs", "Run the PFVS algorithm");
  pfvs_cmd->add_option("file", file, "Network file")->required();
  pfvs_cmd->add_option("--order", order, "min, rand, file or a comma-separated vertex order");
  pfvs_cmd->add_option("--seed", seed, "Seed for --order rand");
  pfvs_cmd->add_flag("--trace", trace, "Print every classification step");
  pfvs_cmd->add_flag("--verify", verify, "Check P is a PFVS and F a minimal FVS");
  pfvs_cmd->add_flag("--json", json, "JSON output");

  auto* graph_cmd = app.add_subcommand("graph", "Print the signed interaction graph as an arc list");
  graph_cmd->add_option("file", file, "Network file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Fixed points by exhaustive search");
  oracle_cmd->add_option("file", file, "Network file")->required();
  oracle_cmd->add_flag("--json", json, "JSON output");

  GenSpec spec;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a network with planted FVS and PFVS");
  gen_cmd->add_option("--n", spec.n, "Components")->required();
  gen_cmd->add_option("--tau", spec.tau, "Planted FVS size")->required();
  gen_cmd->add_option("--tau-plus", spec.tau_plus, "Planted PFVS size")->required();
  gen_cmd->add_option("--fanin", spec.max_fanin, "Maximum fan-in");
  gen_cmd->add_option("--seed", spec.seed, "Generator seed");
  gen_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  std::string sizes = "100,300,500", taus = "15", tau_pluses = "5,10";
  std::size_t reps = 5;
  auto* bench_cmd = app.add_subcommand("bench", "Time the solver on generated networks");
  bench_cmd->add_option("--sizes", sizes, "Comma-separated n values");
  bench_cmd->add_option("--tau", taus, "Comma-separated planted FVS sizes");
  bench_cmd->add_option("--tau-plus", tau_pluses, "Comma-separated planted PFVS sizes");
  bench_cmd->add_option("--reps", reps, "Repetitions per cell");
  bench_cmd->add_option("--fanin", spec.max_fanin, "Maximum fan-in");
  bench_cmd->add_option("--seed", seed, "Base seed");
  bench_cmd->add_option("--strategy", strategy, "basic, scheduled or auto")
      ->check(CLI::IsMember({"basic", "scheduled", "auto"}));
  bench_cmd->add_option("--csv", csv, "Output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : BadInput;
  }

  try {
    const Guards guards;
    const auto to_strategy = [](const std::string& s) {
      return s == "basic" ? Strategy::Basic : s == "scheduled" ? Strategy::Scheduled : Strategy::Auto;
    };

    if (solve_cmd->parsed()) {
      const auto net = load_network(file, guards.indegree);
      SolveConfig config;
      config.strategy = to_strategy(strategy);
      config.seed = seed;
      config.options.verify = verify;
      config.options.keep_candidates = candidates;
      config.options.threads = threads;
      config.options.max_pfvs = guards.pfvs;
      config.options.cycle_cap = guards.cycles;
      if (!pfvs_list.empty() || solve_cmd->count("--pfvs") > 0)
        config.pfvs = parse_vertices(net, pfvs_list);
      if (!fvs_list.empty())
        config.fvs = parse_vertices(net, fvs_list);
      apply_order(net, order, config);
      const auto report = solve(net, config);
      if (json)
        std::cout << report_json(net, report, stem(file), timings).dump(2) << "\n";
      else
        std::cout << report_text(net, report, stem(file));
    } else if (pfvs_cmd->parsed()) {
      const auto net = load_network(file, guards.indegree);
      const auto g = derive(net);
      SolveConfig config;
      config.seed = seed;
      apply_order(net, order, config);
      const auto out = run_pfvs(g, config);
      if (json) {
        auto doc = pfvs_json(net, out, trace);
        if (verify) {
          doc["is_pfvs"] = is_pfvs(g, out.pfvs, guards.cycles);
          doc["is_minimal_fvs"] = is_minimal_fvs(g, out.fvs);
        }
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << pfvs_text(net, out, trace);
        if (verify)
          std::cout << "is_pfvs: " << (is_pfvs(g, out.pfvs, guards.cycles) ? "yes" : "no") << "\n"
                    << "is_minimal_fvs: " << (is_minimal_fvs(g, out.fvs) ? "yes" : "no") << "\n";
      }
    } else if (graph_cmd->parsed()) {
      const auto net = load_network(file, guards.indegree);
      std::cout << format_arcs(net, derive(net));
    } else if (oracle_cmd->parsed()) {
      const auto net = load_network(file, guards.indegree);
      const auto fps = oracle::brute_fixed_points(net);
      if (json) {
        nlohmann::ordered_json doc;
        doc["network"] = stem(file);
        doc["n"] = net.size();
        auto list = nlohmann::ordered_json::array();
        for (const auto& x : fps)
          list.push_back(x.to_string());
        doc["fixed_points"] = std::move(list);
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "fixed points: " << fps.size() << "\n";
        for (const auto& x : fps)
          std::cout << "  " << x.to_string() << "\n";
      }
    } else if (gen_cmd->parsed()) {
      const auto gen = generate(spec);
      std::ostringstream doc;
      doc << "# generated: n=" << spec.n << " tau=" << spec.tau << " tau_plus=" << spec.tau_plus
          << " fanin=" << spec.max_fanin << " seed=" << spec.seed << "\n";
      auto list = [&](const std::vector<std::size_t>& vs) {
        std::string s;
        for (const auto& name : vertex_names(gen.net, vs))
          s += (s.empty() ? "" : ",") + name;
        return s;
      };
      doc << "# planted F: " << list(gen.fvs) << "\n# planted P: " << list(gen.pfvs) << "\n";
      doc << format_network(gen.net);
      if (output.empty()) {
        std::cout << doc.str();
      } else {
        std::ofstream out(output);
        if (!(out << doc.str()))
          throw Error("cannot write " + output);
      }
    } else if (bench_cmd->parsed()) {
      std::ofstream file_out;
      if (!csv.empty()) {
        file_out.open(csv);
        if (!file_out)
          throw Error("cannot write " + csv);
      }
      std::ostream& out = csv.empty() ? std::cout : file_out;
      out << "n,tau,tau_plus,strategy,rep,ms\n";
      SolveConfig config;
      config.strategy = to_strategy(strategy);
      config.options.max_pfvs = guards.pfvs;
      for (auto n : parse_sizes(sizes))
        for (auto tau : parse_sizes(taus))
          for (auto tau_plus : parse_sizes(tau_pluses))
            for (std::size_t rep = 0; rep < reps; ++rep) {
              GenSpec cell{n, tau, tau_plus, spec.max_fanin, seed + rep};
              const auto gen = generate(cell);
              const auto report = solve(gen.net, config);
              out << n << "," << tau << "," << tau_plus << "," << strategy << "," << rep << ","
                  << report.elapsed_ms << "\n";
            }
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Resource;
  } catch (const InvalidSetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadSet;
  } catch (const InvalidScheduleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadSet;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  }
  return Ok;
}
