#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "egz/group.hpp"

namespace egz {

/// An unordered sequence (multiset) of group elements, stored as a dense
/// multiplicity vector. Value type; all algebra returns new sequences.
class Sequence {
 public:
  explicit Sequence(const Group& g)
      : group_(g), mult_(static_cast<size_t>(g.order()), 0) {}

  /// Parses whitespace-separated terms `name` or `name^mult`.
  /// Throws std::invalid_argument on unknown names or malformed counts.
  static Sequence parse(const Group& g, std::string_view text);

  /// Canonical text form: elements in index order, `name^k` for k >= 2,
  /// zero multiplicities omitted. parse(str()) reproduces the sequence.
  std::string str() const;

  const Group& group() const { return group_; }
  int length() const { return length_; }
  bool empty() const { return length_ == 0; }
  int multiplicity(Elem g) const { return mult_[g]; }
  const std::vector<int>& multiplicities() const { return mult_; }

  Sequence& add(Elem g, int count = 1);

  /// Support, maximal multiplicity, elementwise inverse, restriction.
  ElemMask support_mask() const;
  int support_size() const;
  int max_multiplicity() const;
  Sequence inverse_terms() const;
  Sequence restricted(ElemMask mask) const;

  /// Sorted expansion a0 a0 a1 ... (index order).
  std::vector<Elem> to_elements() const;

  bool operator==(const Sequence& other) const {
    return group_ == other.group_ && mult_ == other.mult_;
  }

  /// Lexicographic order of the sorted expansions; the order in which
  /// nondecreasing search generates multisets.
  bool operator<(const Sequence& other) const;

 private:
  Group group_;
  std::vector<int> mult_;
  int length_ = 0;
};

/// Pointwise multiset operations. remove() requires divides(t, s).
Sequence combine(const Sequence& s, const Sequence& t);
Sequence remove(const Sequence& s, const Sequence& t);
bool divides(const Sequence& t, const Sequence& s);

}  // namespace egz
