#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dnastream {

// True for the four uppercase nucleotide letters.
constexpr bool is_base(char c) noexcept {
  return c == 'A' || c == 'C' || c == 'G' || c == 'T';
}

/** A validated sequencer read: uppercase ACGT text, at least one base. */
class Read {
 public:
  explicit Read(std::string bases);  // throws std::invalid_argument on bad text

  const std::string& bases() const noexcept { return bases_; }
  std::size_t length() const noexcept { return bases_.size(); }

  bool operator==(const Read&) const = default;

 private:
  std::string bases_;
};

/** k-mer decomposition parameters. k >= 3 so that a (k-1)-mer is non-empty
 *  and a gene's two codons fit inside a spelled strand. */
class KmerParams {
 public:
  explicit KmerParams(std::size_t k = 201);  // throws std::invalid_argument if k < 3

  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t k_;
};

// Left/right (k-1)-mers of one k-mer; they overlap in k-2 characters.
struct KmerEdge {
  std::string left;
  std::string right;
};

// Uppercases the text and splits it at every character outside ACGT. Each
// maximal valid run becomes one read, in input order. Text with no valid
// run yields an empty list.
std::vector<Read> normalize(std::string_view raw_text);

// All substrings of length k in left-to-right order: max(0, L - k + 1) of them.
std::vector<std::string> kmers(const Read& read, const KmerParams& params);

// Prefix and suffix of length k-1. The k-mer must have length params.k().
KmerEdge kmer_to_edge(std::string_view kmer, const KmerParams& params);

}  // namespace dnastream
