// ttc: build a timed transitive closure from a contact file and query it.
//
//   ttc [--delta N] CONTACTS can-reach a d 2 5
//   ttc [--delta N] CONTACTS --script queries.txt
//   ttc [--delta N] CONTACTS --verify [--seed N] [--cap N]
//   ttc bench --kind complete --n 8 --tau 32 > scaling.csv

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ttc/contact_io.hpp"
#include "ttc/generators.hpp"
#include "ttc/oracle.hpp"
#include "ttc/query.hpp"
#include "ttc/scaling.hpp"
#include "ttc/verify.hpp"

namespace {

using namespace ttc;

struct Options {
  std::string contacts;
  std::vector<std::string> query;
  Timestamp delta = 1;
  std::string script;
  bool verify = false;
  io::VerifyOptions verify_options;
};

struct BenchOptions {
  std::string kind = "complete";
  std::size_t n = 8;
  Timestamp tau = 32;
  double density = 0.3;
  std::uint64_t seed = 42;
  Timestamp delta = 1;
  std::size_t checkpoints = 20;
  std::string output;
};

int run_bench(const BenchOptions& opts) {
  bench::GeneratorSpec spec;
  spec.kind = opts.kind == "random" ? bench::GeneratorKind::Random : bench::GeneratorKind::Complete;
  spec.n = opts.n;
  spec.tau = opts.tau;
  spec.density = opts.density;
  spec.seed = opts.seed;
  const auto samples = bench::measure_update_scaling(spec, opts.delta, opts.checkpoints);
  if (opts.output.empty()) {
    bench::write_scaling_csv(std::cout, samples);
  } else {
    std::ofstream out(opts.output);
    if (!out) {
      std::cerr << "ttc: cannot write `" << opts.output << "`\n";
      return io::kExitUsage;
    }
    bench::write_scaling_csv(out, samples);
  }
  return io::kExitOk;
}

int run_main(const Options& opts) {
  if (opts.contacts.empty()) {
    std::cerr << "ttc: a contact file is required (see --help)\n";
    return io::kExitUsage;
  }
  io::Workspace ws = io::Workspace::load(io::parse_contact_file(opts.contacts), opts.delta);

  int status = io::kExitOk;
  if (opts.verify) {
    if (!ws.closure) throw io::QueryError("no vertices: the contact file is empty");
    const oracle::ContactSet contacts(ws.closure->config(), ws.contacts);
    const auto report =
        io::verify_against_oracle(*ws.closure, contacts, opts.verify_options, &ws.labels);
    std::cout << report.summary() << '\n';
    if (!report.ok) status = io::kExitAssertionFailed;
  }

  if (!opts.script.empty()) {
    std::ifstream script(opts.script);
    if (!script) {
      std::cerr << "ttc: cannot open script `" << opts.script << "`\n";
      return io::kExitUsage;
    }
    const int script_status = io::run_script(ws, script, opts.script, std::cout, std::cerr);
    if (script_status == io::kExitUsage) return script_status;
    status = std::max(status, script_status);
  }

  if (!opts.query.empty()) {
    const auto result = io::run_query(ws, io::parse_query(opts.query));
    std::cout << result.output;
    if (result.assertion_failed) {
      std::cerr << "ttc: assertion failed\n";
      status = std::max(status, io::kExitAssertionFailed);
    }
  }

  if (!opts.verify && opts.script.empty() && opts.query.empty()) {
    const std::size_t entries = ws.closure ? ws.closure->entry_count() : 0;
    std::cout << ws.contacts.size() << " contacts, " << ws.labels.size() << " vertices, "
              << entries << " tuples\n";
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timed transitive closure: temporal reachability over unordered contacts"};
  app.require_subcommand(0, 1);

  Options opts;
  app.add_option("contacts", opts.contacts, "Contact file: one `FROM TO TIME` per line");
  app.add_option("query", opts.query,
                 "One-shot query: can-reach U V [T1 T2] | is-connected [T1 T2] | "
                 "reconstruct U V [T1 T2] | matrix [T1 T2] | tuples");
  app.add_option("--delta", opts.delta, "Latency of every contact")->capture_default_str();
  app.add_option("--script", opts.script, "Run one query per line from FILE");
  app.add_flag("--verify", opts.verify, "Cross-check the closure against the brute-force oracle");
  app.add_option("--seed", opts.verify_options.seed, "Sampling seed for --verify")
      ->capture_default_str();
  app.add_option("--cap", opts.verify_options.cap, "Largest vertex count --verify accepts")
      ->capture_default_str();
  app.add_option("--trials", opts.verify_options.trials, "Sampled windows when not exhaustive")
      ->capture_default_str();

  BenchOptions bench_opts;
  CLI::App* bench = app.add_subcommand("bench", "Measure add_contact scaling; writes CSV");
  bench->add_option("--kind", bench_opts.kind, "complete or random")
      ->check(CLI::IsMember({"complete", "random"}))
      ->capture_default_str();
  bench->add_option("--n", bench_opts.n, "Vertex count")->capture_default_str();
  bench->add_option("--tau", bench_opts.tau, "Number of timestamps")->capture_default_str();
  bench->add_option("--density", bench_opts.density, "Contact probability (random only)")
      ->capture_default_str();
  bench->add_option("--seed", bench_opts.seed, "Generator seed")->capture_default_str();
  bench->add_option("--delta", bench_opts.delta, "Latency")->capture_default_str();
  bench->add_option("--checkpoints", bench_opts.checkpoints, "CSV rows")->capture_default_str();
  bench->add_option("--output", bench_opts.output, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return io::kExitUsage;
  }

  try {
    if (*bench) return run_bench(bench_opts);
    return run_main(opts);
  } catch (const std::exception& e) {
    std::cerr << "ttc: " << e.what() << '\n';
    return io::kExitUsage;
  }
}
