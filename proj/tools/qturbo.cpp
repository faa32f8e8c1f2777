// Command-line front end: seed validation, state diagrams, spectra, code search and
// Monte Carlo simulation of turbo codes.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qturbo/errors.hpp"
#include "qturbo/montecarlo.hpp"
#include "qturbo/seed.hpp"
#include "qturbo/spectrum.hpp"
#include "qturbo/state_graph.hpp"
#include "qturbo/turbo.hpp"

namespace {

using namespace qturbo;

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDecode = 4;

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot write " + path);
  }
  out << text;
}

int cmd_validate(const std::string& file) {
  const auto seed = load_seed_file(file);
  const StateDiagram d(seed);
  std::cout << "seed: " << file << "\n"
            << "n = " << seed.n() << ", k = " << seed.k() << ", m = " << seed.m() << "\n"
            << "symplectic: yes\n"
            << "non-catastrophic: " << yes_no(is_non_catastrophic(d)) << "\n"
            << "completely non-catastrophic: " << yes_no(is_completely_non_catastrophic(d)) << "\n"
            << "recursive: " << yes_no(is_recursive(d)) << "\n"
            << "quasi-recursive: " << yes_no(is_quasi_recursive(seed)) << "\n";
  if (const auto c = catastrophic_cycle(d)) {
    std::cout << "catastrophic cycle:";
    for (auto v : c->vertices) {
      std::cout << " " << d.vertex_label(v);
    }
    std::cout << " (logical weight " << c->logical_weight << ")\n";
  }
  return 0;
}

int cmd_diagram(const std::string& file, const std::string& dot, bool zero_only, bool kernel) {
  const auto seed = load_seed_file(file);
  const StateDiagram d(seed);
  const auto cycles = zero_weight_cycles(d);
  std::cout << "vertices: " << d.num_vertices() << "\n"
            << "edges: " << d.edges().size() << " (out-degree " << d.out_degree() << ")\n"
            << "zero-physical-weight cycles: " << cycles.size() << "\n";
  for (const auto& c : cycles) {
    std::cout << " ";
    for (auto v : c.vertices) {
      std::cout << " " << d.vertex_label(v);
    }
    std::cout << "  logical weight " << c.logical_weight << "\n";
  }
  if (!dot.empty()) {
    write_text(dot, kernel ? to_dot(d, kernel_graph(seed, d)) : to_dot(d, zero_only));
    std::cout << "wrote " << dot << "\n";
  }
  return 0;
}

int cmd_spectrum(const std::string& file, std::size_t wmax, const std::string& out) {
  const auto s = compute_spectrum(load_seed_file(file), wmax);
  if (out.empty()) {
    std::cout << s.to_csv();
  } else {
    write_text(out, s.to_csv());
  }
  auto show = [](const std::optional<std::size_t>& d) {
    return d ? std::to_string(*d) : std::string("none");
  };
  std::cerr << "d_free = " << show(s.d_free()) << ", d1 = " << show(s.d1()) << "\n";
  return 0;
}

int cmd_search(const SearchOptions& opts, const std::string& out_dir) {
  const auto result = search_codes(opts);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
  }
  std::cout << "index,attempt,complete,recursive,d_free,d1,file\n";
  for (std::size_t i = 0; i < result.seeds.size(); ++i) {
    const auto& c = result.seeds[i];
    std::string path;
    if (!out_dir.empty()) {
      char name[64];
      std::snprintf(name, sizeof name, "seed_%04zu.json", i);
      path = (std::filesystem::path(out_dir) / name).string();
      write_text(path, store_seed(c.seed) + "\n");
    }
    auto dist = [&](const std::optional<std::size_t>& d) {
      return d ? std::to_string(*d) : std::string();
    };
    std::cout << i << "," << c.attempt << "," << c.completely_non_catastrophic << ","
              << c.recursive << "," << (c.spectrum ? dist(c.spectrum->d_free()) : "") << ","
              << (c.spectrum ? dist(c.spectrum->d1()) : "") << "," << path << "\n";
  }
  std::cerr << "attempts " << result.attempts << ", rejected as catastrophic "
            << result.rejected << "\n";
  return 0;
}

struct SimulateArgs {
  std::string spec;
  std::vector<double> p_list;
  std::vector<std::size_t> k_list;
  std::size_t trials = 1000;
  std::size_t iterations = 0;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string messages;
  std::string out;
  bool strict = false;
};

int cmd_simulate(const SimulateArgs& a) {
  const auto spec = load_turbo_spec_file(a.spec);
  SimulationOptions opts;
  opts.trials = a.trials;
  opts.master_seed = a.seed;
  opts.threads = a.threads;
  opts.decoder = spec.decoder;
  if (a.iterations > 0) {
    opts.decoder.max_iterations = a.iterations;
  }
  if (a.messages == "extrinsic") {
    opts.decoder.messages = MessageMode::Extrinsic;
  } else if (a.messages == "posterior") {
    opts.decoder.messages = MessageMode::Posterior;
  }
  std::vector<std::size_t> ks = a.k_list;
  if (ks.empty()) {
    ks.push_back(spec.outer_seed.k() * spec.outer_duration);
  }

  std::ostringstream csv;
  csv << "p,K,trials,wer,ci_low,ci_high,qer,iterations_mean\n";
  for (double p : a.p_list) {
    const auto channel = PauliChannel::depolarizing(p);
    for (std::size_t k : ks) {
      if (k % spec.outer_seed.k() != 0) {
        throw ValidationError("K = " + std::to_string(k) + " is not a multiple of outer k");
      }
      const auto code = spec.make_code(k / spec.outer_seed.k());
      const auto r = run_wer(code, channel, opts);
      if (a.strict && r.decode_failures > 0) {
        throw DecodeFailure(std::to_string(r.decode_failures) + " decode failures at p = " +
                                fmt(p) + ", K = " + std::to_string(k),
                            0);
      }
      csv << fmt(p) << "," << k << "," << r.trials << "," << fmt(r.wer, 8) << ","
          << fmt(r.ci_low, 8) << "," << fmt(r.ci_high, 8) << "," << fmt(r.qer, 8) << ","
          << fmt(r.iterations_mean(), 6) << "\n";
      if (!a.out.empty()) {
        std::cerr << "p=" << fmt(p) << " K=" << k << " wer=" << fmt(r.wer) << "\n";
      }
    }
  }
  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    write_text(a.out, csv.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum serial turbo codes: analysis and simulation"};
  app.require_subcommand(1);

  std::string seed_file;
  auto* validate = app.add_subcommand("validate", "Check a seed file and classify its encoder");
  validate->add_option("seed", seed_file, "Seed file")->required();

  std::string dot;
  bool zero_only = false;
  bool kernel = false;
  auto* diagram = app.add_subcommand("diagram", "State-diagram statistics and DOT export");
  diagram->add_option("seed", seed_file, "Seed file")->required();
  diagram->add_option("--dot", dot, "Write a Graphviz file");
  diagram->add_flag("--zero-only", zero_only, "Only draw zero-physical-weight edges");
  diagram->add_flag("--kernel", kernel, "Draw the kernel graph instead");

  std::size_t wmax = 12;
  std::string spectrum_out;
  auto* spectrum = app.add_subcommand("spectrum", "Distance spectra F(w) and F1(w) as CSV");
  spectrum->add_option("seed", seed_file, "Seed file")->required();
  spectrum->add_option("--wmax", wmax, "Largest physical weight")->check(CLI::Range(0, 64));
  spectrum->add_option("--out", spectrum_out, "Write the CSV here instead of stdout");

  SearchOptions search_opts;
  std::string out_dir;
  std::size_t sieve = 0;
  std::size_t keep = 0;
  std::string role = "outer";
  auto* search = app.add_subcommand("search", "Random search for non-catastrophic seeds");
  search->add_option("--n", search_opts.n, "Physical qubits per slice")->required();
  search->add_option("--k", search_opts.k, "Logical qubits per slice")->required();
  search->add_option("--m", search_opts.m, "Memory qubits")->required();
  search->add_option("--count", search_opts.count, "Seeds to find")->required();
  search->add_option("--seed", search_opts.seed, "RNG seed");
  search->add_option("--max-attempts", search_opts.max_attempts, "Give up after this many draws");
  search->add_option("--sieve-wmax", sieve, "Rank by distance spectrum up to this weight");
  search->add_option("--keep", keep, "Keep the best this many after ranking");
  search->add_option("--role", role, "Ranking role")->check(CLI::IsMember({"outer", "inner"}));
  search->add_option("--out-dir", out_dir, "Write seed files here");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo WER of a turbo code");
  simulate->add_option("spec", sim.spec, "Turbo-code spec file")->required();
  simulate->add_option("--p-list", sim.p_list, "Depolarizing probabilities")->required();
  simulate->add_option("--K-list", sim.k_list, "Logical qubit counts");
  simulate->add_option("--trials", sim.trials, "Trials per point")->check(CLI::PositiveNumber);
  simulate->add_option("--iters", sim.iterations, "Turbo iteration cap");
  simulate->add_option("--seed", sim.seed, "Master seed");
  simulate->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");
  simulate->add_option("--messages", sim.messages, "posterior or extrinsic")
      ->check(CLI::IsMember({"posterior", "extrinsic"}));
  simulate->add_option("--out", sim.out, "Write the CSV here instead of stdout");
  simulate->add_flag("--strict", sim.strict, "Exit with status 4 on any decode failure");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      return cmd_validate(seed_file);
    }
    if (*diagram) {
      return cmd_diagram(seed_file, dot, zero_only, kernel);
    }
    if (*spectrum) {
      return cmd_spectrum(seed_file, wmax, spectrum_out);
    }
    if (*search) {
      if (sieve > 0) {
        search_opts.sieve_wmax = sieve;
      }
      if (keep > 0) {
        search_opts.keep = keep;
      }
      search_opts.role = role == "inner" ? SeedRole::Inner : SeedRole::Outer;
      return cmd_search(search_opts, out_dir);
    }
    if (*simulate) {
      return cmd_simulate(sim);
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DecodeFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDecode;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
