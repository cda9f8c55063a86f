#include "dnastream/cli.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dnastream {

namespace {

// Strict non-negative integer: digits only, no sign, no trailing junk.
template <typename T>
std::optional<T> parse_unsigned(std::string_view token) {
  if (token.empty()) {
    return std::nullopt;
  }
  T value{};
  const char* const last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (ec != std::errc() || ptr != last) {
    return std::nullopt;
  }
  return value;
}

std::string lowercased(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (const char c : line) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) {
    tokens.push_back(std::move(current));
  }
  return tokens;
}

}  // namespace

std::string usage_text(std::string_view program) {
  std::ostringstream out;
  out << "Usage: " << program << " <file> <nGenes> <timeLimit> [ -c ]\n"
      << "<file>      name of the file that contains the readings\n"
      << "<nGenes>    number of genes to be found\n"
      << "<timeLimit> maximum milliseconds of computation time\n"
      << "-c          allows the user to insert manually the start and stop codons\n"
      << "\n"
      << "Extra options:\n"
      << "--k N        k-mer length (default 201, minimum 3)\n"
      << "--interval R traverse the graph every R reads (default 1)\n"
      << "--policy P   successor conflict policy: keep-first or overwrite-last\n"
      << "--frame      match stop codons only in the start codon's reading frame\n"
      << "--verbose    print read/node/gene counters on standard error\n"
      << "\n"
      << "Other commands:\n"
      << "  " << program << " gen <length> <seed> [--out FILE]\n"
      << "  " << program << " bench <length> <seed> [--genes 15,30,45,60]\n";
  return out.str();
}

std::variant<CliConfig, UsageError> parse_args(const std::vector<std::string>& args,
                                               std::string_view program) {
  const UsageError usage{usage_text(program)};
  CliConfig config;
  std::vector<std::string_view> positionals;

  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg == "-c") {
      config.custom_codons = true;
    } else if (arg == "--frame") {
      config.enforce_frame = true;
    } else if (arg == "--verbose") {
      config.verbose = true;
    } else if (arg == "--k" || arg == "--interval" || arg == "--policy") {
      if (++i >= args.size()) {
        return usage;
      }
      const std::string& value = args[i];
      if (arg == "--k") {
        const auto k = parse_unsigned<std::size_t>(value);
        if (!k || *k < 3) {
          return usage;
        }
        config.k = *k;
      } else if (arg == "--interval") {
        const auto interval = parse_unsigned<std::size_t>(value);
        if (!interval || *interval == 0) {
          return usage;
        }
        config.traversal_interval = *interval;
      } else {
        if (value == "keep-first") {
          config.conflict_policy = ConflictPolicy::KeepFirst;
        } else if (value == "overwrite-last") {
          config.conflict_policy = ConflictPolicy::OverwriteLast;
        } else {
          return usage;
        }
      }
    } else if (arg.size() > 1 && arg[0] == '-' && arg != "-") {
      return usage;  // unknown flag
    } else {
      positionals.push_back(arg);
    }
  }

  if (positionals.size() != 3) {
    return usage;
  }
  config.file = positionals[0];
  const auto n_genes = parse_unsigned<std::size_t>(positionals[1]);
  if (!n_genes || *n_genes == 0) {
    return usage;
  }
  config.n_genes = *n_genes;
  const auto time_limit = parse_unsigned<std::uint64_t>(positionals[2]);
  if (!time_limit) {
    return usage;
  }
  config.time_limit_ms = *time_limit;
  return config;
}

std::variant<GenArgs, UsageError> parse_gen_args(const std::vector<std::string>& args,
                                                 std::string_view program) {
  const UsageError usage{usage_text(program)};
  GenArgs gen;
  std::vector<std::string_view> positionals;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      if (++i >= args.size()) {
        return usage;
      }
      gen.out_file = args[i];
    } else if (args[i].size() > 1 && args[i][0] == '-') {
      return usage;
    } else {
      positionals.push_back(args[i]);
    }
  }
  if (positionals.size() != 2) {
    return usage;
  }
  const auto length = parse_unsigned<std::size_t>(positionals[0]);
  const auto seed = parse_unsigned<std::uint64_t>(positionals[1]);
  if (!length || *length == 0 || !seed) {
    return usage;
  }
  gen.length = *length;
  gen.seed = *seed;
  return gen;
}

std::variant<BenchArgs, UsageError> parse_bench_args(const std::vector<std::string>& args,
                                                     std::string_view program) {
  const UsageError usage{usage_text(program)};
  BenchArgs bench;
  std::vector<std::string_view> positionals;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--genes") {
      if (++i >= args.size()) {
        return usage;
      }
      bench.gene_counts.clear();
      for (const std::string& token : split_tokens(args[i])) {
        const auto count = parse_unsigned<std::size_t>(token);
        if (!count || *count == 0) {
          return usage;
        }
        bench.gene_counts.push_back(*count);
      }
      if (bench.gene_counts.empty()) {
        return usage;
      }
    } else if (args[i].size() > 1 && args[i][0] == '-') {
      return usage;
    } else {
      positionals.push_back(args[i]);
    }
  }
  if (positionals.size() != 2) {
    return usage;
  }
  const auto length = parse_unsigned<std::size_t>(positionals[0]);
  const auto seed = parse_unsigned<std::uint64_t>(positionals[1]);
  if (!length || *length == 0 || !seed) {
    return usage;
  }
  bench.length = *length;
  bench.seed = *seed;
  return bench;
}

namespace {

// One prompt round-trip: returns the validated set, or the defaults on an
// empty line (or end of input). Re-prompts until every token is valid and
// none collides with `reserved`. Defaults that collide with `reserved` are
// dropped so custom starts can never crash the stop fallback.
CodonSet prompt_one_set(std::istream& in, std::ostream& out, std::string_view prompt,
                        const CodonSet& defaults, const CodonSet* reserved) {
  const auto usable_defaults = [&]() {
    CodonSet filtered;
    for (const std::string& codon : defaults) {
      if (reserved == nullptr || reserved->count(codon) == 0) {
        filtered.insert(codon);
      }
    }
    return filtered;
  };
  for (;;) {
    out << prompt << '\n' << std::flush;
    std::string line;
    if (!std::getline(in, line)) {
      return usable_defaults();
    }
    const std::vector<std::string> tokens = split_tokens(line);
    if (tokens.empty()) {
      return usable_defaults();
    }
    CodonSet set;
    bool ok = true;
    for (const std::string& token : tokens) {
      try {
        std::string codon = make_codon(token);
        if (reserved != nullptr && reserved->count(codon) != 0) {
          out << "codon '" << token << "' is already a start codon, try again\n";
          ok = false;
          break;
        }
        set.insert(std::move(codon));
      } catch (const std::invalid_argument&) {
        out << "invalid codon '" << token << "', try again\n";
        ok = false;
        break;
      }
    }
    if (ok) {
      return set;
    }
  }
}

}  // namespace

CodonConfig prompt_codons(std::istream& in, std::ostream& out) {
  const CodonSet starts = prompt_one_set(in, out, "Enter the initial codons separated by spaces:",
                                         CodonConfig::default_starts(), nullptr);
  const CodonSet stops = prompt_one_set(in, out, "Enter the final codons separated by spaces:",
                                        CodonConfig::default_stops(), &starts);
  return CodonConfig(std::vector<std::string>(starts.begin(), starts.end()),
                     std::vector<std::string>(stops.begin(), stops.end()));
}

LineRecordSource::LineRecordSource(std::istream& in, std::string name)
    : in_(&in), name_(std::move(name)) {}

LineRecordSource::LineRecordSource(std::unique_ptr<std::istream> in, std::string name)
    : owned_(std::move(in)), in_(owned_.get()), name_(std::move(name)) {}

std::optional<std::string> LineRecordSource::next() {
  std::string line;
  for (;;) {
    if (!std::getline(*in_, line)) {
      if (in_->bad()) {
        throw SourceError("read error on " + name_);
      }
      if (!record_.empty()) {  // last record ends at end of input
        std::string out = std::move(record_);
        record_.clear();
        return out;
      }
      return std::nullopt;
    }
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    if (line.front() == '>') {
      in_record_ = true;
      if (!record_.empty()) {
        std::string out = std::move(record_);
        record_.clear();
        return out;
      }
      continue;
    }
    if (in_record_) {
      record_ += line;
      continue;
    }
    return line;  // plain line, including any preamble before a first header
  }
}

std::unique_ptr<ReadSource> open_read_source(const std::string& file) {
  if (file == "-") {
    return std::make_unique<LineRecordSource>(std::cin, "<stdin>");
  }
  auto stream = std::make_unique<std::ifstream>(file);
  if (!stream->is_open()) {
    throw SourceError("cannot open file: " + file);
  }
  return std::make_unique<LineRecordSource>(std::move(stream), file);
}

std::string format_summary(const RunStats& stats) {
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), "Found %zu fragments in %.1fms", stats.genes_found,
                stats.elapsed_ms);
  return buffer;
}

void OstreamSink::on_gene(const Gene& gene) {
  out_ << lowercased(gene.text) << '\n' << std::flush;
}

void OstreamSink::on_summary(const RunStats& stats) {
  out_ << format_summary(stats) << '\n' << std::flush;
}

}  // namespace dnastream
