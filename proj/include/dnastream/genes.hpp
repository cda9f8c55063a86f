#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace dnastream {

// Ordered codon set with heterogeneous lookup.
using CodonSet = std::set<std::string, std::less<>>;

/** Start/stop codon sets. Codons are 3 ACGT letters; the two sets are
 *  disjoint. Defaults: start ATG, stops TGA, TAA, TAG. */
class CodonConfig {
 public:
  CodonConfig();

  // Tokens are uppercased before validation; throws std::invalid_argument
  // on a malformed codon or overlapping sets.
  CodonConfig(const std::vector<std::string>& starts, const std::vector<std::string>& stops);

  const CodonSet& starts() const noexcept { return starts_; }
  const CodonSet& stops() const noexcept { return stops_; }

  static const CodonSet& default_starts();
  static const CodonSet& default_stops();

 private:
  CodonSet starts_;
  CodonSet stops_;
};

// Validates and uppercases one codon token; throws std::invalid_argument.
std::string make_codon(std::string_view token);

// A gene: starts with a start codon, ends with a stop codon, length >= 6.
// `start` is its offset in the source strand.
struct Gene {
  std::string text;
  std::size_t start = 0;
};

/** Dedup set of already-emitted genes, keyed by uppercased text. */
class GeneRegistry {
 public:
  // True on first sighting; the registry grows only then.
  bool add(std::string_view gene_text);

  bool contains(std::string_view gene_text) const;

  std::size_t size() const noexcept { return seen_.size(); }

 private:
  std::unordered_set<std::string> seen_;
};

// All positions whose 3-character window is in the set, ascending.
// Overlapping occurrences are all reported.
std::vector<std::size_t> scan_codons(std::string_view text, const CodonSet& codons);

// Greedy gene extraction: repeatedly pair the earliest remaining start with
// the earliest stop at least 3 past it, emit the spanned text, and resume
// just after the stop. Start codons inside an emitted gene are consumed.
// With `enforce_frame`, only stops in the start's reading frame qualify.
std::vector<Gene> extract_genes(std::string_view text, const CodonConfig& config,
                                bool enforce_frame = false);

}  // namespace dnastream
