#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dnastream/assembler.hpp"
#include "dnastream/cli.hpp"
#include "dnastream/simulate.hpp"

namespace py = pybind11;
using namespace dnastream;

namespace {

CodonConfig make_config(const std::optional<std::vector<std::string>>& starts,
                        const std::optional<std::vector<std::string>>& stops) {
  if (!starts && !stops) {
    return CodonConfig();
  }
  const CodonSet& ds = CodonConfig::default_starts();
  const CodonSet& dt = CodonConfig::default_stops();
  return CodonConfig(starts ? *starts : std::vector<std::string>(ds.begin(), ds.end()),
                     stops ? *stops : std::vector<std::string>(dt.begin(), dt.end()));
}

ConflictPolicy policy_from_name(const std::string& name) {
  if (name == "keep-first") {
    return ConflictPolicy::KeepFirst;
  }
  if (name == "overwrite-last") {
    return ConflictPolicy::OverwriteLast;
  }
  throw py::value_error("policy must be 'keep-first' or 'overwrite-last'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Streaming de Bruijn read assembler with greedy gene extraction";

  m.def(
      "normalize",
      [](const std::string& raw) {
        std::vector<std::string> out;
        for (const Read& read : normalize(raw)) {
          out.push_back(read.bases());
        }
        return out;
      },
      py::arg("text"), "Uppercase and split raw text into valid ACGT reads.");

  m.def(
      "kmers",
      [](const std::string& read, std::size_t k) { return kmers(Read(read), KmerParams(k)); },
      py::arg("read"), py::arg("k"), "All k-length windows of the read, left to right.");

  m.def(
      "kmer_to_edge",
      [](const std::string& kmer) {
        const KmerEdge edge = kmer_to_edge(kmer, KmerParams(kmer.size()));
        return py::make_tuple(edge.left, edge.right);
      },
      py::arg("kmer"), "(prefix, suffix) pair of (k-1)-mers of one k-mer.");

  py::class_<DeBruijnGraph>(m, "DeBruijnGraph")
      .def(py::init([](const std::string& policy) {
             return DeBruijnGraph(policy_from_name(policy));
           }),
           py::arg("policy") = "keep-first")
      .def("intern", &DeBruijnGraph::intern, py::arg("mer"))
      .def("resolve", &DeBruijnGraph::resolve, py::arg("idx"))
      .def("add_edge", &DeBruijnGraph::add_edge, py::arg("left"), py::arg("right"))
      .def("successor",
           [](const DeBruijnGraph& graph, NodeIndex idx) -> std::optional<NodeIndex> {
             return graph.successor(idx);
           },
           py::arg("idx"))
      .def("is_initial", &DeBruijnGraph::is_initial, py::arg("idx"))
      .def("initials", &DeBruijnGraph::initials)
      .def("walk_from", &DeBruijnGraph::walk_from, py::arg("start"))
      .def("node_count", &DeBruijnGraph::node_count)
      .def("ingest_read",
           [](DeBruijnGraph& graph, const std::string& read, std::size_t k) {
             return ingest_read(graph, Read(read), KmerParams(k));
           },
           py::arg("read"), py::arg("k"),
           "Apply every k-mer of the read to the graph; returns the k-mer count.")
      .def("assemble_strands",
           [](const DeBruijnGraph& graph, std::size_t k) {
             std::vector<std::string> out;
             for (Strand& strand : assemble_strands(graph, KmerParams(k))) {
               out.push_back(std::move(strand.text));
             }
             return out;
           },
           py::arg("k"), "Spell one strand per initial node, in index order.");

  m.def(
      "scan_codons",
      [](const std::string& text, const std::vector<std::string>& codons) {
        CodonSet set;
        for (const std::string& token : codons) {
          set.insert(make_codon(token));
        }
        return scan_codons(text, set);
      },
      py::arg("text"), py::arg("codons"), "Ascending positions of all codon occurrences.");

  m.def(
      "extract_genes",
      [](const std::string& text, const std::optional<std::vector<std::string>>& starts,
         const std::optional<std::vector<std::string>>& stops, bool enforce_frame) {
        std::vector<std::string> out;
        for (Gene& gene : extract_genes(text, make_config(starts, stops), enforce_frame)) {
          out.push_back(std::move(gene.text));
        }
        return out;
      },
      py::arg("text"), py::arg("starts") = std::nullopt, py::arg("stops") = std::nullopt,
      py::arg("enforce_frame") = false,
      "Greedy start/stop matching over a strand; returns the gene texts in order.");

  py::class_<GeneRegistry>(m, "GeneRegistry")
      .def(py::init<>())
      .def("add", &GeneRegistry::add, py::arg("gene_text"),
           "True on first sighting of the (case-normalized) text.")
      .def("contains", &GeneRegistry::contains, py::arg("gene_text"))
      .def("size", &GeneRegistry::size);

  m.def("random_genome", &random_genome, py::arg("length"), py::arg("seed"),
        "Seeded uniform ACGT text.");

  m.def(
      "shred",
      [](const std::string& genome, std::size_t read_length, std::size_t step) {
        ShredSpec spec;
        spec.read_length = read_length;
        spec.step = step;
        return shred(genome, spec);
      },
      py::arg("genome"), py::arg("read_length") = 400, py::arg("step") = 150,
      "Overlapping reads covering the whole genome.");

  m.def(
      "run_reads",
      [](const std::vector<std::string>& reads, std::size_t k, std::size_t max_genes,
         std::uint64_t time_limit_ms, const std::optional<std::vector<std::string>>& starts,
         const std::optional<std::vector<std::string>>& stops, std::size_t traversal_interval,
         const std::string& policy, bool enforce_frame) {
        VectorReadSource source(reads);
        CollectingSink sink;
        RunLimits limits;
        limits.max_genes = max_genes;
        limits.time_limit_ms = time_limit_ms;
        StreamOptions options;
        options.traversal_interval = traversal_interval;
        options.policy = policy_from_name(policy);
        options.enforce_frame = enforce_frame;
        const RunStats stats = process_stream(source, KmerParams(k), make_config(starts, stops),
                                              limits, sink, options);
        std::vector<std::string> genes;
        for (Gene& gene : sink.genes) {
          genes.push_back(std::move(gene.text));
        }
        py::dict result;
        result["genes"] = std::move(genes);
        result["reads_processed"] = stats.reads_processed;
        result["nodes"] = stats.nodes;
        result["genes_found"] = stats.genes_found;
        result["elapsed_ms"] = stats.elapsed_ms;
        result["total_bases"] = stats.total_bases;
        return result;
      },
      py::arg("reads"), py::arg("k") = 201,
      py::arg("max_genes") = std::numeric_limits<std::size_t>::max(),
      py::arg("time_limit_ms") = RunLimits::kNoTimeLimit, py::arg("starts") = std::nullopt,
      py::arg("stops") = std::nullopt, py::arg("traversal_interval") = 1,
      py::arg("policy") = "keep-first", py::arg("enforce_frame") = false,
      "Full streaming run over an in-memory read list; returns genes plus counters.");

  m.def("format_summary",
        [](std::size_t genes_found, double elapsed_ms) {
          RunStats stats;
          stats.genes_found = genes_found;
          stats.elapsed_ms = elapsed_ms;
          return format_summary(stats);
        },
        py::arg("genes_found"), py::arg("elapsed_ms"),
        "The end-of-run summary line for the given counters.");
}
