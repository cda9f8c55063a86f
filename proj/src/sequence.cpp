#include "dnastream/sequence.hpp"

#include <cctype>
#include <stdexcept>

namespace dnastream {

namespace {

char upper(char c) noexcept {
  return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

}  // namespace

Read::Read(std::string bases) : bases_(std::move(bases)) {
  if (bases_.empty()) {
    throw std::invalid_argument("Read: empty sequence");
  }
  for (char c : bases_) {
    if (!is_base(c)) {
      throw std::invalid_argument(std::string("Read: invalid base '") + c + "'");
    }
  }
}

KmerParams::KmerParams(std::size_t k) : k_(k) {
  if (k < 3) {
    throw std::invalid_argument("KmerParams: k must be >= 3");
  }
}

std::vector<Read> normalize(std::string_view raw_text) {
  std::vector<Read> reads;
  std::string run;
  for (char raw : raw_text) {
    const char c = upper(raw);
    if (is_base(c)) {
      run.push_back(c);
    } else if (!run.empty()) {
      reads.emplace_back(std::move(run));
      run.clear();
    }
  }
  if (!run.empty()) {
    reads.emplace_back(std::move(run));
  }
  return reads;
}

std::vector<std::string> kmers(const Read& read, const KmerParams& params) {
  std::vector<std::string> out;
  const std::size_t k = params.k();
  if (read.length() < k) {
    return out;
  }
  out.reserve(read.length() - k + 1);
  for (std::size_t i = 0; i + k <= read.length(); ++i) {
    out.push_back(read.bases().substr(i, k));
  }
  return out;
}

KmerEdge kmer_to_edge(std::string_view kmer, const KmerParams& params) {
  if (kmer.size() != params.k()) {
    throw std::invalid_argument("kmer_to_edge: k-mer length does not match k");
  }
  const std::size_t m = kmer.size() - 1;
  return KmerEdge{std::string(kmer.substr(0, m)), std::string(kmer.substr(1, m))};
}

}  // namespace dnastream
