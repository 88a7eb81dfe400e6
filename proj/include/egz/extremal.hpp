#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egz/search.hpp"
#include "egz/sequence.hpp"

namespace egz {

/// Families of extremal sequences, named by the classification clause each
/// one instantiates.
enum class FormTag {
  T12_1b,    // dihedral, even n >= 4: (a^r1)^[n-1] (a^r2)^[n-1] a^r3 t
  T12_2b_1,  // dihedral, n >= 4:      (a^r1)^[2n-1] (a^r2)^[n-1] a^r3 t
  T12_2b_2,  // dihedral, n = 3:       1^[5] t at a2t  |  (a^t1)^[5] (a^t2)^[2] a^t3 t
  T13_1b_1,  // dicyclic, even n >= 4: (a^r1)^[2n-1] (a^r2)^[2n-1] a^r3 t
  T13_1b_2,  // dicyclic, n = 2: three shapes on (t1 even, t2 odd, t3 != t4 mod 2)
  T13_2b_1,  // dicyclic, n >= 3:      (a^r1)^[4n-1] (a^r2)^[2n-1] a^r3 t
  T13_2b_2,  // dicyclic, n = 2: the three shapes with a fourth-power tail
  L25_b,     // cyclic: g^[2n-1] h^[n-1] with ord(g h^-1) = n
};

std::string_view form_tag_name(FormTag tag);
std::optional<FormTag> form_tag_from_name(std::string_view name);

/// A witness that a sequence instantiates a classification clause: the
/// realizing generator pair plus the clause parameters.
struct ExtremalForm {
  FormTag tag;
  Elem gen_a = 0;              // alpha, or g for L25_b
  Elem gen_b = 0;              // tau, or h for L25_b
  std::vector<int> params;     // the r_i / t_i values of the clause
  int shape = 0;               // sub-shape index within the clause
  int tail = -1;               // tail selector for T13_2b_2 (0 or 1)

  bool uses_presentation() const { return tag != FormTag::L25_b; }
};

enum class ExtremalMode { SExtremal, EExtremal };

/// Closed-form values of the two constants for the supported group kinds.
int closed_form_s(const Group& g);
int closed_form_e(const Group& g);

/// Clauses that classify (mode)-extremal sequences over g; empty when the
/// classification does not cover the group/mode combination.
std::vector<FormTag> applicable_tags(const Group& g, ExtremalMode mode);

/// Every instantiation of the clause over every presentation and admissible
/// parameter tuple, deduplicated as multisets and sorted. Throws on a
/// tag/group mismatch.
std::vector<std::pair<Sequence, ExtremalForm>> generate_family(const Group& g, FormTag tag);

/// Matches s against any applicable clause under any presentation. Requires
/// |s| to equal the extremal length for the mode.
std::optional<ExtremalForm> classify(const Group& g, const Sequence& s, ExtremalMode mode);

/// Whether s matches the given clause under one fixed presentation.
std::optional<ExtremalForm> match_form(const Group& g, const Sequence& s, FormTag tag,
                                       const Presentation& pres);

/// Set equality between the enumerated extremal sequences and the generated
/// families. Inconclusive (not falsely positive) if the enumeration was cut
/// off.
struct InverseTheoremCheck {
  bool ok = false;
  bool exhaustive = false;
  size_t witness_count = 0;
  size_t family_count = 0;
  std::vector<Sequence> unexplained;  // enumerated but generated by no clause
  std::vector<Sequence> overclaimed;  // generated but not extremal
  long long elapsed_ms = 0;
};

InverseTheoremCheck verify_inverse_theorem(const Group& g, ExtremalMode mode,
                                           const SearchConfig& cfg = {});

}  // namespace egz
