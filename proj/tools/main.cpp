#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dnastream/cli.hpp"
#include "dnastream/simulate.hpp"

namespace {

using namespace dnastream;

int run_gen(const GenArgs& args) {
  const std::string genome = random_genome(args.length, args.seed);
  ShredSpec spec;
  spec.seed = args.seed;
  const std::vector<std::string> reads = shred(genome, spec);

  std::ofstream file;
  if (!args.out_file.empty()) {
    file.open(args.out_file);
    if (!file.is_open()) {
      std::cerr << "error: cannot write file: " << args.out_file << '\n';
      return 1;
    }
  }
  std::ostream& out = args.out_file.empty() ? std::cout : file;
  for (const std::string& read : reads) {
    out << read << '\n';
  }
  if (!out) {
    std::cerr << "error: write failed\n";
    return 1;
  }
  return 0;
}

int run_bench(const BenchArgs& args) {
  ShredSpec spec;
  spec.seed = args.seed;
  const std::vector<BenchRow> rows =
      bench(args.gene_counts, args.length, spec, KmerParams(), CodonConfig());
  for (const BenchRow& row : rows) {
    std::cout << bench_csv(row) << '\n';
  }
  return 0;
}

int run_assemble(const CliConfig& config) {
  try {
    std::unique_ptr<ReadSource> source = open_read_source(config.file);
    const CodonConfig codons =
        config.custom_codons ? prompt_codons(std::cin, std::cout) : CodonConfig();

    RunLimits limits;
    limits.max_genes = config.n_genes;
    limits.time_limit_ms = config.time_limit_ms;

    StreamOptions options;
    options.traversal_interval = config.traversal_interval;
    options.policy = config.conflict_policy;
    options.enforce_frame = config.enforce_frame;

    OstreamSink sink(std::cout);
    const RunStats stats =
        process_stream(*source, KmerParams(config.k), codons, limits, sink, options);
    if (config.verbose) {
      std::cerr << "reads=" << stats.reads_processed << " bases=" << stats.total_bases
                << " nodes=" << stats.nodes << " genes=" << stats.genes_found << '\n';
    }
    return 0;
  } catch (const SourceError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const std::string program = "dnastream";

  if (!args.empty() && args[0] == "gen") {
    const auto parsed = parse_gen_args({args.begin() + 1, args.end()}, program);
    if (const auto* usage = std::get_if<UsageError>(&parsed)) {
      std::cerr << usage->text;
      return 2;
    }
    return run_gen(std::get<GenArgs>(parsed));
  }
  if (!args.empty() && args[0] == "bench") {
    const auto parsed = parse_bench_args({args.begin() + 1, args.end()}, program);
    if (const auto* usage = std::get_if<UsageError>(&parsed)) {
      std::cerr << usage->text;
      return 2;
    }
    return run_bench(std::get<BenchArgs>(parsed));
  }

  const auto parsed = parse_args(args, program);
  if (const auto* usage = std::get_if<UsageError>(&parsed)) {
    std::cerr << usage->text;
    return 2;
  }
  return run_assemble(std::get<CliConfig>(parsed));
}
