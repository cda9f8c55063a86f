#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "dnastream/simulate.hpp"

using namespace dnastream;

namespace {

std::set<std::string> kmer_set(const std::string& text, std::size_t k) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + k <= text.size(); ++i) {
    out.insert(text.substr(i, k));
  }
  return out;
}

}  // namespace

TEST_CASE("random_genome is deterministic per seed") {
  CHECK(random_genome(10, 123) == random_genome(10, 123));
  CHECK(random_genome(2000, 1) != random_genome(2000, 2));
  CHECK(random_genome(16500, 7).size() == 16500);
  for (const char c : random_genome(500, 3)) {
    CHECK((c == 'A' || c == 'C' || c == 'G' || c == 'T'));
  }
}

TEST_CASE("random_genome base frequencies are roughly uniform") {
  const std::string genome = random_genome(100000, 17);
  for (const char base : {'A', 'C', 'G', 'T'}) {
    const auto count = static_cast<double>(std::count(genome.begin(), genome.end(), base));
    const double frequency = count / static_cast<double>(genome.size());
    CHECK(frequency > 0.25 * 0.6);
    CHECK(frequency < 0.25 * 1.4);
  }
}

TEST_CASE("shred lays reads at regular offsets plus a covering tail") {
  ShredSpec spec;
  spec.read_length = 6;
  spec.step = 2;
  SUBCASE("last regular read reaches the end") {
    const std::string genome = "AACCGGTTAC";  // length 10
    const auto reads = shred(genome, spec);
    REQUIRE(reads.size() == 3);
    CHECK(reads[0] == genome.substr(0, 6));
    CHECK(reads[1] == genome.substr(2, 6));
    CHECK(reads[2] == genome.substr(4, 6));
  }
  SUBCASE("a tail read covers the remainder") {
    spec.step = 4;
    const std::string genome = "AACCGGTTACG";  // length 11
    const auto reads = shred(genome, spec);
    REQUIRE(reads.size() == 3);
    CHECK(reads[0] == genome.substr(0, 6));
    CHECK(reads[1] == genome.substr(4, 6));
    CHECK(reads[2] == genome.substr(5, 6));  // ends exactly at the genome end
  }
  SUBCASE("genome shorter than the read length") {
    CHECK(shred("ACGT", spec) == std::vector<std::string>{"ACGT"});
  }
}

TEST_CASE("every genome position is covered by some read") {
  const std::string genome = random_genome(997, 5);
  ShredSpec spec;
  spec.read_length = 50;
  spec.step = 37;
  const auto reads = shred(genome, spec);
  std::vector<bool> covered(genome.size(), false);
  std::size_t offset = 0;
  for (const std::string& read : reads) {
    // reads appear in genome order; find each at or after the previous offset
    offset = genome.find(read, offset);
    REQUIRE(offset != std::string::npos);
    for (std::size_t i = 0; i < read.size(); ++i) {
      covered[offset + i] = true;
    }
  }
  for (const bool bit : covered) {
    CHECK(bit);
  }
}

TEST_CASE("shredding preserves the k-mer set when the step leaves overlap") {
  const std::size_t k = 9;
  const std::string genome = random_genome(2000, 21);
  ShredSpec spec;
  spec.read_length = 60;

  SUBCASE("step at the coverage bound") {
    spec.step = spec.read_length - k + 1;  // 52
    std::set<std::string> from_reads;
    for (const std::string& read : shred(genome, spec)) {
      const auto set = kmer_set(read, k);
      from_reads.insert(set.begin(), set.end());
    }
    CHECK(from_reads == kmer_set(genome, k));
  }
  SUBCASE("a step past the bound loses boundary k-mers") {
    spec.step = spec.read_length;  // consecutive reads share nothing
    std::set<std::string> from_reads;
    for (const std::string& read : shred(genome, spec)) {
      const auto set = kmer_set(read, k);
      from_reads.insert(set.begin(), set.end());
    }
    CHECK(from_reads.size() < kmer_set(genome, k).size());
  }
}

TEST_CASE("bench produces one row per requested gene count") {
  ShredSpec spec;
  spec.seed = 11;
  const std::vector<std::size_t> counts{2, 4, 6, 8};
  const auto rows = bench(counts, 4000, spec, KmerParams(201), CodonConfig());
  REQUIRE(rows.size() == 4);
  std::size_t previous_reads = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n_genes == counts[i]);
    CHECK(rows[i].elapsed_ms >= 0.0);
    CHECK(rows[i].node_count <= 4000);
    CHECK(rows[i].reads_processed >= previous_reads);  // larger budgets read at least as far
    previous_reads = rows[i].reads_processed;
  }
}

TEST_CASE("bench is deterministic up to the timing column") {
  ShredSpec spec;
  spec.seed = 23;
  const std::vector<std::size_t> counts{3, 6};
  const auto first = bench(counts, 3000, spec, KmerParams(31), CodonConfig());
  const auto second = bench(counts, 3000, spec, KmerParams(31), CodonConfig());
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].n_genes == second[i].n_genes);
    CHECK(first[i].node_count == second[i].node_count);
    CHECK(first[i].reads_processed == second[i].reads_processed);
  }
}

TEST_CASE("bench rows render as comma-separated values") {
  BenchRow row;
  row.n_genes = 15;
  row.elapsed_ms = 38.04;
  row.node_count = 1234;
  row.reads_processed = 107;
  CHECK(bench_csv(row) == "15,38.0,1234,107");
}
