#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "egz/extremal.hpp"

namespace egz {

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string_view check_status_name(CheckStatus s);

/// Outcome of one executable check. A failure always carries a
/// counterexample that product-set computations can refute independently.
struct CheckResult {
  std::string name;
  std::string group;
  std::string params;
  CheckStatus status = CheckStatus::Inconclusive;
  std::string detail;
  std::optional<std::string> counterexample;
  long long elapsed_ms = 0;
};

/// s(G) >= d(G) + exp(G) and E(G) >= d(G) + |G|, plus the padded witnesses
/// realizing both bounds.
CheckResult check_lemma_2_2(const Group& g, const SearchConfig& cfg = {});

/// Over C_n, every length n+r-2 sequence without a product-one subsequence
/// of length n has |Pi_{n-2}| = |Pi_r| >= r-1.
CheckResult check_lemma_2_3(int n, int r, const SearchConfig& cfg = {});

/// Over C_n, every length 2n-k sequence (k >= 2, 2(2n-k) >= 3n-1) without a
/// product-one subsequence of length n contains g^[u] h^[v] with
/// ord(g h^-1) = n, u, v >= n-2k+3 and u+v >= 2n-2k+2.
CheckResult check_lemma_2_4(int n, int k, const SearchConfig& cfg = {});

/// Over C_n, the length 3n-2 sequences without a product-one subsequence of
/// length 2n are exactly g^[2n-1] h^[n-1] with ord(g h^-1) = n.
CheckResult check_lemma_2_5(int n, const SearchConfig& cfg = {});

enum class StructureLemma {
  L31,    // dihedral even n:  length 2n-1 witnesses for n have |S_G0| = 1
  L32,    // dihedral n >= 3:  length 3n-1 witnesses for 2n have |S_G0| = 1
          //                   or the n = 3 identity-heavy special form
  L41_1,  // dicyclic even n >= 4: length 4n-1 witnesses for 2n have |S_G0| = 1
  L41_2,  // dicyclic n = 2:   length 7 witnesses for 4 match the three shapes
  L42_2,  // dicyclic n = 2:   length 11 witnesses for 8 match the tailed shapes
};

CheckResult check_structure_lemma(StructureLemma which, int n, const SearchConfig& cfg = {});

/// Computed s(G) against the closed form (2n-1 for cyclic groups).
CheckResult check_theorem_1_1(const Group& g, const SearchConfig& cfg = {});

/// Computed E(G) against the closed form d(G) + |G|.
CheckResult check_theorem_a(const Group& g, const SearchConfig& cfg = {});

/// Set equality between enumerated extremal sequences and the generated
/// families.
CheckResult check_inverse_theorem(const Group& g, ExtremalMode mode,
                                  const SearchConfig& cfg = {});

struct SuiteEntry {
  std::string name;
  std::string group;
  std::string params;
  std::function<CheckResult(const SearchConfig&)> run;
};

/// The desk-scale verification suite; stretch adds the larger groups and
/// the expensive dicyclic n = 4 structure check.
std::vector<SuiteEntry> verification_suite(bool stretch);

}  // namespace egz
