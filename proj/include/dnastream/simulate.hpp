#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dnastream/assembler.hpp"

namespace dnastream {

// Genome shredding parameters. Every genome k-mer lands in some read
// exactly when step <= read_length - k + 1; the defaults leave slack 200
// under the default k of 201.
struct ShredSpec {
  std::size_t read_length = 400;
  std::size_t step = 150;
  std::uint64_t seed = 0;
};

// Uniform i.i.d. ACGT text from a seeded generator; same seed and length
// give the same text.
std::string random_genome(std::size_t length, std::uint64_t seed);

// Reads of read_length at offsets 0, step, 2*step, ... plus one final read
// ending at the genome end when the regular offsets stop short of it. A
// genome shorter than read_length yields the whole genome as a single read.
std::vector<std::string> shred(std::string_view genome, const ShredSpec& spec);

struct BenchRow {
  std::size_t n_genes = 0;
  double elapsed_ms = 0.0;
  std::size_t node_count = 0;
  std::size_t reads_processed = 0;
};

// One full streaming run over the shredded genome per requested gene count.
std::vector<BenchRow> bench(const std::vector<std::size_t>& gene_counts, std::size_t genome_length,
                            const ShredSpec& spec, const KmerParams& params,
                            const CodonConfig& codons);

// "n_genes,elapsed_ms,node_count,reads_processed" with one decimal of timing.
std::string bench_csv(const BenchRow& row);

}  // namespace dnastream
