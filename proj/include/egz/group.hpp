#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace egz {

/// Dense element index into a group's multiplication table.
using Elem = int;

/// Subset of group elements as a bit mask (group order is capped at 64).
using ElemMask = std::uint64_t;

enum class GroupKind { Cyclic, Dihedral, Dicyclic };

std::string_view kind_name(GroupKind kind);

/// A finite group given by an immutable multiplication table.
///
/// Supported constructions:
///   cyclic:n    order n,  elements a0..a{n-1}
///   dihedral:n  order 2n, rotations a0..a{n-1}, reflections a0t..a{n-1}t
///   dicyclic:n  order 4n, a0..a{2n-1} powers of the rotation generator,
///               a0t..a{2n-1}t the remaining coset
///
/// Element 0 is always the identity. The full table is validated eagerly
/// (associativity, identity, inverses, name round-trips).
///
/// Groups are values: copies share the immutable tables, so sequences and
/// reports can hold their group without lifetime concerns.
class Group {
 public:
  static Group make(GroupKind kind, int n);

  /// Parses "cyclic:5", "dihedral:4", "dicyclic:2".
  static Group from_descriptor(std::string_view descriptor);

  GroupKind kind() const { return kind_; }
  int parameter() const { return n_; }
  int order() const { return order_; }
  Elem identity() const { return 0; }

  Elem mul(Elem a, Elem b) const { return t_->mul[static_cast<size_t>(a) * order_ + b]; }
  Elem inverse(Elem a) const { return t_->inv[a]; }
  Elem power(Elem a, long long k) const;

  int element_order(Elem a) const { return t_->elem_order[a]; }
  int exponent() const { return exponent_; }
  int max_element_order() const { return max_order_; }
  bool is_abelian() const { return abelian_; }

  const std::string& name(Elem a) const { return t_->names[a]; }
  std::optional<Elem> find_element(std::string_view name) const;

  std::string descriptor() const;

  ElemMask all_mask() const {
    return order_ == 64 ? ~0ull : (1ull << order_) - 1;
  }

  bool operator==(const Group& other) const {
    return kind_ == other.kind_ && n_ == other.n_;
  }

 private:
  struct Tables {
    std::vector<Elem> mul;
    std::vector<Elem> inv;
    std::vector<int> elem_order;
    std::vector<std::string> names;
  };

  Group() = default;
  void build_names(Tables& t) const;
  void derive_and_validate(Tables& t);

  GroupKind kind_ = GroupKind::Cyclic;
  int n_ = 1;
  int order_ = 1;
  int exponent_ = 1;
  int max_order_ = 1;
  bool abelian_ = true;
  std::shared_ptr<const Tables> t_;
};

/// A subgroup (or other subset) of a parent group as bit masks.
struct SubgroupView {
  ElemMask members = 0;
  ElemMask complement = 0;
  int size = 0;

  bool contains(Elem g) const { return (members >> g) & 1; }
};

/// The cyclic subgroup H of index 2 (dihedral/dicyclic only) together with
/// its complement G_0 = G \ H. For dicyclic n = 2 the subgroup of order 4 is
/// not unique; the one generated by the canonical rotation is returned.
SubgroupView index2_cyclic_subgroup(const Group& g);

/// A generator pair (alpha, tau) satisfying the defining relations of the
/// group's kind and generating the whole group.
struct Presentation {
  Elem alpha = 0;
  Elem tau = 0;

  bool operator==(const Presentation&) const = default;
};

/// All presentations of a dihedral or dicyclic group, in lexicographic order
/// of (alpha, tau). Non-empty for every valid group of those kinds.
std::vector<Presentation> presentations_of(const Group& g);

/// Quotient of a dicyclic group by its center, with the projection map.
/// The quotient is dihedral of order 2n (the Klein four-group when n = 2).
struct CenterQuotient {
  Group quotient;
  std::vector<Elem> projection;  // element of g -> element of quotient
};

CenterQuotient quotient_by_center(const Group& g);

/// Smallest subgroup containing all commutators x y x^-1 y^-1.
SubgroupView commutator_subgroup(const Group& g);

/// Closure of a seed set under multiplication (always contains the identity).
ElemMask subgroup_closure(const Group& g, ElemMask seed);

/// Every automorphism of the group as an element permutation. For dihedral
/// and dicyclic groups these are induced by the presentations; for cyclic
/// groups by the coprime multiplier maps.
std::vector<std::vector<Elem>> automorphisms(const Group& g);

/// Mask of elements that are minimal in their orbit under automorphisms.
ElemMask automorphism_orbit_minima(const Group& g);

}  // namespace egz
