"""Streaming de Bruijn read assembler with greedy gene extraction."""

from ._core import (
    DeBruijnGraph,
    GeneRegistry,
    extract_genes,
    format_summary,
    kmer_to_edge,
    kmers,
    normalize,
    random_genome,
    run_reads,
    scan_codons,
    shred,
)

__all__ = [
    "DeBruijnGraph",
    "GeneRegistry",
    "extract_genes",
    "format_summary",
    "kmer_to_edge",
    "kmers",
    "normalize",
    "random_genome",
    "run_reads",
    "scan_codons",
    "shred",
]

__version__ = "0.1.0"
