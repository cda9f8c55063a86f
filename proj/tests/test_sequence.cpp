#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dnastream/sequence.hpp"

using namespace dnastream;

namespace {

// Independent enumeration of all k-length windows, character by character.
std::vector<std::string> brute_force_windows(const std::string& text, std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i + k <= text.size(); ++i) {
    std::string window;
    for (std::size_t j = 0; j < k; ++j) {
      window.push_back(text[i + j]);
    }
    out.push_back(window);
  }
  return out;
}

std::string random_acgt(std::mt19937_64& rng, std::size_t length) {
  static constexpr char kBases[] = {'A', 'C', 'G', 'T'};
  std::string text;
  for (std::size_t i = 0; i < length; ++i) {
    text.push_back(kBases[rng() & 3]);
  }
  return text;
}

}  // namespace

TEST_CASE("Read validates its text") {
  CHECK(Read("ACGT").length() == 4);
  CHECK_THROWS_AS(Read(""), std::invalid_argument);
  CHECK_THROWS_AS(Read("ACGN"), std::invalid_argument);
  CHECK_THROWS_AS(Read("acgt"), std::invalid_argument);  // normalize() uppercases, Read does not
}

TEST_CASE("KmerParams enforces the minimum k") {
  CHECK(KmerParams().k() == 201);
  CHECK(KmerParams(3).k() == 3);
  CHECK_THROWS_AS(KmerParams(2), std::invalid_argument);
}

TEST_CASE("normalize uppercases and splits at invalid characters") {
  SUBCASE("case normalization only") {
    const auto reads = normalize("acgt");
    REQUIRE(reads.size() == 1);
    CHECK(reads[0].bases() == "ACGT");
  }
  SUBCASE("invalid characters split the read") {
    const auto reads = normalize("ACGNNTT");
    REQUIRE(reads.size() == 2);
    CHECK(reads[0].bases() == "ACG");
    CHECK(reads[1].bases() == "TT");
  }
  SUBCASE("no valid run") { CHECK(normalize("NN--").empty()); }
  SUBCASE("mixed separators and case") {
    const auto reads = normalize("aa>N t-Gc\n");
    REQUIRE(reads.size() == 3);
    CHECK(reads[0].bases() == "AA");
    CHECK(reads[1].bases() == "T");
    CHECK(reads[2].bases() == "GC");
  }
}

TEST_CASE("normalize is idempotent over its own output") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    std::string dirty;
    for (int i = 0; i < 80; ++i) {
      const char pool[] = "acgtACGTNnx- \t>";
      dirty.push_back(pool[rng() % (sizeof(pool) - 1)]);
    }
    const auto reads = normalize(dirty);
    std::string joined;
    for (const Read& read : reads) {
      joined += read.bases();
      joined += 'N';
    }
    const auto again = normalize(joined);
    REQUIRE(again.size() == reads.size());
    for (std::size_t i = 0; i < reads.size(); ++i) {
      CHECK(again[i] == reads[i]);
    }
  }
}

TEST_CASE("kmers enumerates every window in order") {
  SUBCASE("two windows") {
    const auto result = kmers(Read("ACGTA"), KmerParams(4));
    REQUIRE(result.size() == 2);
    CHECK(result[0] == "ACGT");
    CHECK(result[1] == "CGTA");
  }
  SUBCASE("read of length k yields exactly one k-mer") {
    std::mt19937_64 rng(3);
    const Read read(random_acgt(rng, 201));
    CHECK(kmers(read, KmerParams(201)).size() == 1);
  }
  SUBCASE("read shorter than k") { CHECK(kmers(Read("ACG"), KmerParams(4)).empty()); }
}

TEST_CASE("kmers matches the brute-force window enumerator") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 100; ++round) {
    const std::size_t length = 1 + rng() % 60;
    const std::size_t k = 3 + rng() % 8;
    const std::string text = random_acgt(rng, length);
    const auto expected = brute_force_windows(text, k);
    const auto actual = kmers(Read(text), KmerParams(k));
    REQUIRE(actual.size() == expected.size());
    CHECK(actual.size() == (length >= k ? length - k + 1 : 0));
    CHECK(actual == expected);
  }
}

TEST_CASE("kmer_to_edge splits into overlapping halves") {
  const KmerParams params(4);
  SUBCASE("prefix and suffix") {
    const KmerEdge edge = kmer_to_edge("ACGT", params);
    CHECK(edge.left == "ACG");
    CHECK(edge.right == "CGT");
  }
  SUBCASE("self-loop case") {
    const KmerEdge edge = kmer_to_edge("AAAA", params);
    CHECK(edge.left == edge.right);
    CHECK(edge.left == "AAA");
  }
  SUBCASE("length mismatch is rejected") {
    CHECK_THROWS_AS(kmer_to_edge("ACGTA", params), std::invalid_argument);
  }
}

TEST_CASE("kmer_to_edge halves recompose the k-mer") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 100; ++round) {
    const std::size_t k = 3 + rng() % 10;
    const std::string kmer = random_acgt(rng, k);
    const KmerEdge edge = kmer_to_edge(kmer, KmerParams(k));
    CHECK(edge.left + kmer.back() == kmer);
    CHECK(kmer.front() + edge.right == kmer);
  }
}
