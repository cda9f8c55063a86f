#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dnastream/assembler.hpp"

namespace dnastream {

struct CliConfig {
  std::string file;  // path or "-" for standard input
  std::size_t n_genes = 1;
  std::uint64_t time_limit_ms = 0;
  bool custom_codons = false;
  std::size_t k = 201;
  std::size_t traversal_interval = 1;
  ConflictPolicy conflict_policy = ConflictPolicy::KeepFirst;
  bool enforce_frame = false;
  bool verbose = false;
};

// Carries the full usage text; printed on standard error with a nonzero exit.
struct UsageError {
  std::string text;
};

std::string usage_text(std::string_view program);

// Three mandatory positionals (file, nGenes, timeLimit), then optional
// flags. Any malformed, missing or unknown argument yields the usage text.
std::variant<CliConfig, UsageError> parse_args(const std::vector<std::string>& args,
                                               std::string_view program = "dnastream");

struct GenArgs {
  std::size_t length = 0;
  std::uint64_t seed = 0;
  std::string out_file;  // empty: standard output
};

struct BenchArgs {
  std::size_t length = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> gene_counts{15, 30, 45, 60};
};

std::variant<GenArgs, UsageError> parse_gen_args(const std::vector<std::string>& args,
                                                 std::string_view program = "dnastream");

std::variant<BenchArgs, UsageError> parse_bench_args(const std::vector<std::string>& args,
                                                     std::string_view program = "dnastream");

// Interactive start/stop codon entry. Tokens split on spaces and commas and
// are validated case-insensitively; an invalid token re-prompts with a
// message naming it, and an empty line keeps the defaults for that set.
CodonConfig prompt_codons(std::istream& in, std::ostream& out);

/**
 * Line-oriented read source with format autodetection. Lines before any
 * ">" header are plain reads, one per line; from the first header on, each
 * record's sequence lines are concatenated into one read. Yields lazily so
 * a pipe can be consumed while it is still being written.
 */
class LineRecordSource : public ReadSource {
 public:
  // Non-owning; the stream must outlive the source.
  explicit LineRecordSource(std::istream& in, std::string name = "<stream>");

  // Owning variant, used for files.
  LineRecordSource(std::unique_ptr<std::istream> in, std::string name);

  std::optional<std::string> next() override;

 private:
  std::unique_ptr<std::istream> owned_;
  std::istream* in_;
  std::string name_;
  std::string record_;
  bool in_record_ = false;
};

// Opens a file ("-" means standard input). Throws SourceError when the file
// cannot be read.
std::unique_ptr<ReadSource> open_read_source(const std::string& file);

// "Found {n} fragments in {t}ms", t with exactly one decimal digit.
std::string format_summary(const RunStats& stats);

/** Sink bound to an output stream: one lowercase line per gene, flushed
 *  immediately, then the summary line. */
class OstreamSink : public RunSink {
 public:
  explicit OstreamSink(std::ostream& out) : out_(out) {}

  void on_gene(const Gene& gene) override;
  void on_summary(const RunStats& stats) override;

 private:
  std::ostream& out_;
};

}  // namespace dnastream
