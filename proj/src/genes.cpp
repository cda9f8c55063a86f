#include "dnastream/genes.hpp"

#include <cctype>
#include <stdexcept>

#include "dnastream/sequence.hpp"

namespace dnastream {

std::string make_codon(std::string_view token) {
  if (token.size() != 3) {
    throw std::invalid_argument("codon '" + std::string(token) + "' must have exactly 3 bases");
  }
  std::string codon;
  for (char raw : token) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
    if (!is_base(c)) {
      throw std::invalid_argument("codon '" + std::string(token) + "' has a base outside ACGT");
    }
    codon.push_back(c);
  }
  return codon;
}

const CodonSet& CodonConfig::default_starts() {
  static const CodonSet starts{"ATG"};
  return starts;
}

const CodonSet& CodonConfig::default_stops() {
  static const CodonSet stops{"TGA", "TAA", "TAG"};
  return stops;
}

CodonConfig::CodonConfig() : starts_(default_starts()), stops_(default_stops()) {}

CodonConfig::CodonConfig(const std::vector<std::string>& starts,
                         const std::vector<std::string>& stops) {
  for (const auto& token : starts) {
    starts_.insert(make_codon(token));
  }
  for (const auto& token : stops) {
    stops_.insert(make_codon(token));
  }
  if (starts_.empty() || stops_.empty()) {
    throw std::invalid_argument("codon config needs at least one start and one stop codon");
  }
  for (const auto& codon : stops_) {
    if (starts_.count(codon) != 0) {
      throw std::invalid_argument("codon '" + codon + "' cannot be both start and stop");
    }
  }
}

bool GeneRegistry::add(std::string_view gene_text) {
  std::string key(gene_text);
  for (char& c : key) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return seen_.insert(std::move(key)).second;
}

bool GeneRegistry::contains(std::string_view gene_text) const {
  std::string key(gene_text);
  for (char& c : key) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return seen_.count(key) != 0;
}

std::vector<std::size_t> scan_codons(std::string_view text, const CodonSet& codons) {
  std::vector<std::size_t> positions;
  if (text.size() < 3) {
    return positions;
  }
  for (std::size_t pos = 0; pos + 3 <= text.size(); ++pos) {
    if (codons.find(text.substr(pos, 3)) != codons.end()) {
      positions.push_back(pos);
    }
  }
  return positions;
}

std::vector<Gene> extract_genes(std::string_view text, const CodonConfig& config,
                                bool enforce_frame) {
  const std::vector<std::size_t> starts = scan_codons(text, config.starts());
  const std::vector<std::size_t> stops = scan_codons(text, config.stops());

  std::vector<Gene> genes;
  std::size_t scan_pos = 0;
  std::size_t si = 0;  // next candidate start
  std::size_t ti = 0;  // first stop not yet ruled out
  while (si < starts.size()) {
    if (starts[si] < scan_pos) {
      ++si;
      continue;
    }
    const std::size_t i = starts[si];
    while (ti < stops.size() && stops[ti] < i + 3) {
      ++ti;
    }
    std::size_t tj = ti;
    if (enforce_frame) {
      while (tj < stops.size() && (stops[tj] - i) % 3 != 0) {
        ++tj;
      }
    }
    if (tj >= stops.size()) {
      if (!enforce_frame) {
        break;  // no stop at or past i+3 can serve any later start either
      }
      ++si;  // this start has no in-frame stop; a later start may still match
      continue;
    }
    const std::size_t j = stops[tj];
    genes.push_back(Gene{std::string(text.substr(i, j + 3 - i)), i});
    scan_pos = j + 3;
  }
  return genes;
}

}  // namespace dnastream
