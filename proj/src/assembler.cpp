#include "dnastream/assembler.hpp"

#include <chrono>

namespace dnastream {

std::size_t ingest_read(DeBruijnGraph& graph, const Read& read, const KmerParams& params) {
  const std::size_t k = params.k();
  if (read.length() < k) {
    return 0;
  }
  const std::string_view bases(read.bases());
  const std::size_t count = read.length() - k + 1;
  // Consecutive k-mers share a (k-1)-mer: the right mer of one window is the
  // left mer of the next, so one intern per window suffices.
  NodeIndex left = graph.intern(bases.substr(0, k - 1));
  for (std::size_t i = 0; i < count; ++i) {
    const NodeIndex right = graph.intern(bases.substr(i + 1, k - 1));
    graph.add_edge(left, right);
    left = right;
  }
  return count;
}

std::vector<Strand> assemble_strands(const DeBruijnGraph& graph, const KmerParams& params) {
  std::vector<Strand> strands;
  for (const NodeIndex initial : graph.initials()) {
    const std::vector<NodeIndex> path = graph.walk_from(initial);
    std::string text = graph.resolve(path.front());
    text.reserve(params.k() - 1 + path.size() - 1);
    for (std::size_t i = 1; i < path.size(); ++i) {
      text.push_back(graph.resolve(path[i]).back());
    }
    strands.push_back(Strand{std::move(text), initial});
  }
  return strands;
}

RunStats process_stream(ReadSource& source, const KmerParams& params, const CodonConfig& codons,
                        const RunLimits& limits, RunSink& sink, const StreamOptions& options) {
  if (options.traversal_interval == 0) {
    throw std::invalid_argument("process_stream: traversal interval must be >= 1");
  }

  DeBruijnGraph graph(options.policy);
  GeneRegistry registry;
  RunStats stats;

  const auto start_time = std::chrono::steady_clock::now();
  const auto elapsed_ms = [&start_time]() {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_time)
        .count();
  };
  const auto budget_met = [&]() {
    return registry.size() >= limits.max_genes ||
           elapsed_ms() >= static_cast<double>(limits.time_limit_ms);
  };
  const auto finalize = [&]() {
    stats.nodes = graph.node_count();
    stats.genes_found = registry.size();
    stats.elapsed_ms = elapsed_ms();
  };

  std::size_t reads_since_pass = 0;
  const auto run_pass = [&]() {
    for (const Strand& strand : assemble_strands(graph, params)) {
      for (const Gene& gene : extract_genes(strand.text, codons, options.enforce_frame)) {
        if (registry.add(gene.text)) {
          sink.on_gene(gene);
        }
      }
    }
    reads_since_pass = 0;
  };

  try {
    bool stopped = false;
    while (!stopped) {
      if (budget_met()) {
        stopped = true;
        break;
      }
      const std::optional<std::string> raw = source.next();
      if (!raw) {
        break;
      }
      for (const Read& read : normalize(*raw)) {
        ingest_read(graph, read, params);
        ++stats.reads_processed;
        stats.total_bases += read.length();
        if (++reads_since_pass >= options.traversal_interval) {
          run_pass();
        }
        if (budget_met()) {
          stopped = true;
          break;
        }
      }
    }
    // End of stream with reads not yet traversed (interval > 1): flush so
    // their genes are not lost.
    if (!stopped && reads_since_pass > 0) {
      run_pass();
    }
  } catch (const SourceError&) {
    finalize();
    sink.on_summary(stats);
    throw;
  }

  finalize();
  sink.on_summary(stats);
  return stats;
}

}  // namespace dnastream
