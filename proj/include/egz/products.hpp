#pragma once

#include <optional>
#include <string>
#include <vector>

#include "egz/sequence.hpp"

namespace egz {

/// A set of group elements, the value of product-set computations.
class ProductSet {
 public:
  ProductSet(const Group& g, ElemMask bits) : group_(g), bits_(bits) {}
  explicit ProductSet(const Group& g) : ProductSet(g, 0) {}

  const Group& group() const { return group_; }
  ElemMask bits() const { return bits_; }
  bool contains(Elem e) const { return (bits_ >> e) & 1; }
  bool contains_identity() const { return bits_ & 1; }
  int count() const;
  bool empty() const { return bits_ == 0; }

  std::vector<Elem> elements() const;
  std::string str() const;  // "{a1, a2}"

  bool operator==(const ProductSet& other) const {
    return group_ == other.group_ && bits_ == other.bits_;
  }

 private:
  Group group_;
  ElemMask bits_;
};

/// pi(S): products of all orderings of the full sequence. pi(empty) = {1}.
/// Dynamic programming over sub-multisets: pi(T) is the union over
/// g in supp(T) of pi(T - g) * g.
ProductSet full_products(const Sequence& s);

/// Pi_n(S): union of pi(T) over subsequences T of length n. Requires
/// 0 <= n <= |S|. Pi_0 = {1} by the empty-product convention.
ProductSet n_products(const Sequence& s, int n);

/// Pi(S): union of Pi_n(S) for n in 1..|S|. The empty subsequence is
/// excluded, so Pi(empty) is empty.
ProductSet all_products(const Sequence& s);

/// Whether 1_G lies in Pi_len(S). False when len exceeds |S|; len must be
/// positive.
bool has_product_one_subsequence(const Sequence& s, int len);

bool is_product_one(const Sequence& s);
bool is_product_one_free(const Sequence& s);

/// Product-one with no splitting into two non-empty product-one parts.
bool is_minimal_product_one(const Sequence& s);

/// Test oracle: pi(S) by explicit enumeration of the distinct permutations.
/// Guarded to |S| <= 9; throws std::length_error beyond that.
ProductSet oracle_products(const Sequence& s);

/// An ordering of S whose left-to-right product is the identity, if one
/// exists. Deterministic (lexicographically smallest suffix choices).
std::optional<std::vector<Elem>> product_one_ordering(const Sequence& s);

/// Incrementally maintained product layers of a growing sequence: layer(k)
/// holds the bits of Pi_k for the current sequence, for k up to max_layer.
/// push/pop append and remove one term; the layers observably equal a fresh
/// n_products computation at every step.
class ProductLayers {
 public:
  ProductLayers(const Group& g, int max_layer);

  void push(Elem e);
  void pop();

  int length() const { return static_cast<int>(stack_.size()); }
  const Group& group() const { return group_; }

  /// Bits of Pi_k of the current sequence (0 for k > length or k > max_layer).
  ElemMask layer(int k) const;

  Sequence current() const;

 private:
  void recompute();

  Group group_;
  int max_layer_;
  std::vector<int> counts_;
  std::vector<Elem> stack_;
  std::vector<std::vector<ElemMask>> saved_;

  // scratch reused across recomputes
  std::vector<ElemMask> dp_;
  std::vector<Elem> sup_;
  std::vector<int> caps_, digits_;
  std::vector<long long> strides_;
};

}  // namespace egz
