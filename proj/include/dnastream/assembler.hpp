#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dnastream/genes.hpp"
#include "dnastream/graph.hpp"
#include "dnastream/sequence.hpp"

namespace dnastream {

// A contig spelled from a successor chain: the origin node's mer followed by
// one character per further node on the path.
struct Strand {
  std::string text;
  NodeIndex origin = 0;
};

// Gene-count and wall-clock budgets. Both are checked at read boundaries
// only, so a single read's pass may overshoot either budget.
struct RunLimits {
  static constexpr std::uint64_t kNoTimeLimit = std::numeric_limits<std::uint64_t>::max();

  std::size_t max_genes = 1;
  std::uint64_t time_limit_ms = kNoTimeLimit;
};

struct RunStats {
  std::size_t reads_processed = 0;
  std::size_t nodes = 0;
  std::size_t genes_found = 0;
  double elapsed_ms = 0.0;
  std::uint64_t total_bases = 0;
};

struct StreamOptions {
  std::size_t traversal_interval = 1;  // traverse every R reads
  ConflictPolicy policy = ConflictPolicy::KeepFirst;
  bool enforce_frame = false;
};

// Raised on read-source I/O failures (unreadable file, broken stream).
class SourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Pull-based source of raw read texts. next() yields the next text or
 *  nullopt at end of stream, and throws SourceError on I/O failure. */
class ReadSource {
 public:
  virtual ~ReadSource() = default;
  virtual std::optional<std::string> next() = 0;
};

class VectorReadSource : public ReadSource {
 public:
  explicit VectorReadSource(std::vector<std::string> reads) : reads_(std::move(reads)) {}

  std::optional<std::string> next() override {
    if (pos_ >= reads_.size()) {
      return std::nullopt;
    }
    return reads_[pos_++];
  }

 private:
  std::vector<std::string> reads_;
  std::size_t pos_ = 0;
};

/** Consumer of newly found genes and the end-of-run summary. */
class RunSink {
 public:
  virtual ~RunSink() = default;
  virtual void on_gene(const Gene& gene) = 0;
  virtual void on_summary(const RunStats& stats) = 0;
};

class CollectingSink : public RunSink {
 public:
  void on_gene(const Gene& gene) override { genes.push_back(gene); }
  void on_summary(const RunStats& stats) override { summary = stats; }

  std::vector<Gene> genes;
  RunStats summary;
};

// Interns both (k-1)-mers of every k-mer of the read and records the edges,
// in read order. Returns the number of k-mers applied: max(0, L - k + 1).
// Cost is linear in the read length.
std::size_t ingest_read(DeBruijnGraph& graph, const Read& read, const KmerParams& params);

// Walks from every initial node (ascending) and spells each path into a
// strand. Walks from distinct initials may share tails; shared nodes are
// re-spelled per walk rather than truncated.
std::vector<Strand> assemble_strands(const DeBruijnGraph& graph, const KmerParams& params);

/**
 * The on-line loop: per raw text, normalize and then per read ingest,
 * re-traverse into strands (every traversal_interval reads) and extract
 * genes, emitting each newly registered gene through the sink immediately.
 * Stops at end of stream or once a budget is met at a read boundary; all
 * genes found within one pass are emitted even if the budget is crossed
 * mid-pass. The summary is emitted through the sink in every case,
 * including when the source fails (the SourceError is then rethrown).
 */
RunStats process_stream(ReadSource& source, const KmerParams& params, const CodonConfig& codons,
                        const RunLimits& limits, RunSink& sink, const StreamOptions& options = {});

}  // namespace dnastream
