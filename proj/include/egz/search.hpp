#pragma once

#include <string>
#include <vector>

#include "egz/products.hpp"

namespace egz {

struct SearchConfig {
  int length_ceiling = 64;
  long long budget_ms = 600'000;    // <= 0 disables the time budget
  int parallel_depth = 0;           // 0 = serial; > 0 splits the DFS at that depth
  bool symmetry_reduction = false;  // restrict the first branch to orbit minima
};

/// A sequence avoiding product-one subsequences of the forbidden length,
/// plus search metadata. When exhaustive, no longer such sequence exists.
struct WitnessReport {
  std::string group;
  int forbidden_length;
  Sequence witness;
  int witness_length;
  bool exhaustive;
  long long elapsed_ms;
  unsigned long long nodes;
};

/// Longest sequence with no product-one subsequence of the given length,
/// by pruned depth-first search over nondecreasing element indices.
WitnessReport max_witness_length(const Group& g, int forbidden_length,
                                 const SearchConfig& cfg = {});

struct ConstantReport {
  std::string invariant;
  int value;
  bool exhaustive;
  WitnessReport detail;
};

ConstantReport s_constant(const Group& g, const SearchConfig& cfg = {});
ConstantReport e_constant(const Group& g, const SearchConfig& cfg = {});

/// Search with the forbidden length set to the maximal element order. For
/// some groups witnesses of unbounded length exist; the configured ceiling
/// then truncates the search and the value is only a lower bound.
ConstantReport s_prime_lower_bound(const Group& g, const SearchConfig& cfg = {});

struct DavenportReport {
  std::string invariant;
  int value;
  bool exhaustive;
  Sequence witness;
  long long elapsed_ms;
  unsigned long long nodes;
};

/// Small Davenport constant: longest product-one-free sequence.
DavenportReport small_davenport(const Group& g, const SearchConfig& cfg = {});

/// Large Davenport constant: longest minimal product-one sequence.
DavenportReport large_davenport(const Group& g, const SearchConfig& cfg = {});

struct WitnessEnumeration {
  std::vector<Sequence> witnesses;
  bool exhaustive;
  long long elapsed_ms;
  unsigned long long nodes;
};

/// All sequences of the given length with no product-one subsequence of the
/// forbidden length, in lexicographic order of the sorted expansions.
/// Symmetry reduction is never applied here: the result is the literal set.
WitnessEnumeration enumerate_witnesses(const Group& g, int length, int forbidden_length,
                                       const SearchConfig& cfg = {});

}  // namespace egz
