#include "dnastream/simulate.hpp"

#include <cstdio>
#include <random>
#include <stdexcept>

namespace dnastream {

std::string random_genome(std::size_t length, std::uint64_t seed) {
  if (length == 0) {
    throw std::invalid_argument("random_genome: length must be >= 1");
  }
  static constexpr char kBases[] = {'A', 'C', 'G', 'T'};
  std::mt19937_64 rng(seed);
  std::string genome;
  genome.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    // The low two bits of the 64-bit output are exactly uniform, and this
    // stays byte-identical across platforms, unlike the distribution adaptors.
    genome.push_back(kBases[rng() & 3]);
  }
  return genome;
}

std::vector<std::string> shred(std::string_view genome, const ShredSpec& spec) {
  if (spec.read_length == 0 || spec.step == 0) {
    throw std::invalid_argument("shred: read_length and step must be >= 1");
  }
  std::vector<std::string> reads;
  if (genome.empty()) {
    return reads;
  }
  if (genome.size() <= spec.read_length) {
    reads.emplace_back(genome);
    return reads;
  }
  std::size_t last_end = 0;
  for (std::size_t offset = 0; offset + spec.read_length <= genome.size(); offset += spec.step) {
    reads.emplace_back(genome.substr(offset, spec.read_length));
    last_end = offset + spec.read_length;
  }
  if (last_end < genome.size()) {
    reads.emplace_back(genome.substr(genome.size() - spec.read_length, spec.read_length));
  }
  return reads;
}

namespace {

class DiscardSink : public RunSink {
 public:
  void on_gene(const Gene&) override {}
  void on_summary(const RunStats&) override {}
};

}  // namespace

std::vector<BenchRow> bench(const std::vector<std::size_t>& gene_counts, std::size_t genome_length,
                            const ShredSpec& spec, const KmerParams& params,
                            const CodonConfig& codons) {
  const std::string genome = random_genome(genome_length, spec.seed);
  const std::vector<std::string> reads = shred(genome, spec);

  std::vector<BenchRow> rows;
  rows.reserve(gene_counts.size());
  for (const std::size_t n_genes : gene_counts) {
    VectorReadSource source(reads);
    DiscardSink sink;
    RunLimits limits;
    limits.max_genes = n_genes;
    limits.time_limit_ms = RunLimits::kNoTimeLimit;
    const RunStats stats = process_stream(source, params, codons, limits, sink);
    rows.push_back(BenchRow{n_genes, stats.elapsed_ms, stats.nodes, stats.reads_processed});
  }
  return rows;
}

std::string bench_csv(const BenchRow& row) {
  char buffer[128];
  std::snprintf(buffer, sizeof(buffer), "%zu,%.1f,%zu,%zu", row.n_genes, row.elapsed_ms,
                row.node_count, row.reads_processed);
  return buffer;
}

}  // namespace dnastream
