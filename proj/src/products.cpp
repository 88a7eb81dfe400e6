#include "egz/products.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace egz {

namespace {

// Dense DP over the sub-multisets of `counts`, mixed-radix keyed on the
// support. Digit i of a key is how many copies of support element i the
// sub-multiset takes (capped at size_cap). Keys grow when elements are
// added, so a single ascending pass sees pi of every smaller sub-multiset
// before it is needed.
struct SubmultisetDp {
  const Group* group = nullptr;
  std::vector<Elem> sup;
  std::vector<int> caps;
  std::vector<long long> strides;
  long long total = 0;
  std::vector<ElemMask> table;          // pi bits per key
  std::vector<ElemMask> layers;         // union of pi over keys of each size

  void run(const Group& g, const std::vector<int>& counts, int size_cap) {
    group = &g;
    sup.clear();
    caps.clear();
    for (Elem e = 0; e < g.order(); ++e) {
      if (counts[e] > 0) {
        sup.push_back(e);
        caps.push_back(std::min(counts[e], size_cap));
      }
    }
    const int m = static_cast<int>(sup.size());
    strides.assign(m + 1, 1);
    for (int i = 0; i < m; ++i) {
      strides[i + 1] = strides[i] * (caps[i] + 1);
      if (strides[i + 1] > (1ll << 26)) {
        throw std::length_error("sub-multiset product table too large");
      }
    }
    total = strides[m];

    table.assign(total, 0);
    layers.assign(size_cap + 1, 0);
    table[0] = 1ull;  // pi(empty) = {identity}
    layers[0] = 1ull;

    std::vector<int> digits(m, 0);
    int size = 0;
    for (long long key = 1; key < total; ++key) {
      // odometer increment
      for (int i = 0;; ++i) {
        if (digits[i] < caps[i]) {
          ++digits[i];
          ++size;
          break;
        }
        size -= digits[i];
        digits[i] = 0;
      }
      if (size > size_cap) continue;
      ElemMask acc = 0;
      for (int i = 0; i < m; ++i) {
        if (digits[i] == 0) continue;
        ElemMask prev = table[key - strides[i]];
        Elem e = sup[i];
        while (prev) {
          Elem x = std::countr_zero(prev);
          prev &= prev - 1;
          acc |= 1ull << g.mul(x, e);
        }
      }
      table[key] = acc;
      layers[size] |= acc;
    }
  }
};

SubmultisetDp& scratch_dp() {
  thread_local SubmultisetDp dp;
  return dp;
}

}  // namespace

int ProductSet::count() const { return std::popcount(bits_); }

std::vector<Elem> ProductSet::elements() const {
  std::vector<Elem> out;
  ElemMask m = bits_;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

std::string ProductSet::str() const {
  std::string out = "{";
  bool first = true;
  for (Elem e : elements()) {
    if (!first) out += ", ";
    first = false;
    out += group_.name(e);
  }
  return out + "}";
}

ProductSet full_products(const Sequence& s) {
  auto& dp = scratch_dp();
  dp.run(s.group(), s.multiplicities(), s.length());
  return ProductSet(s.group(), dp.layers[s.length()]);
}

ProductSet n_products(const Sequence& s, int n) {
  if (n < 0 || n > s.length()) {
    throw std::out_of_range("n-products of length " + std::to_string(n) +
                            " from a sequence of length " + std::to_string(s.length()));
  }
  auto& dp = scratch_dp();
  dp.run(s.group(), s.multiplicities(), n);
  return ProductSet(s.group(), dp.layers[n]);
}

ProductSet all_products(const Sequence& s) {
  auto& dp = scratch_dp();
  dp.run(s.group(), s.multiplicities(), s.length());
  ElemMask acc = 0;
  for (int k = 1; k <= s.length(); ++k) acc |= dp.layers[k];
  return ProductSet(s.group(), acc);
}

bool has_product_one_subsequence(const Sequence& s, int len) {
  if (len <= 0) throw std::invalid_argument("subsequence length must be positive");
  if (len > s.length()) return false;
  auto& dp = scratch_dp();
  dp.run(s.group(), s.multiplicities(), len);
  return dp.layers[len] & 1ull;
}

bool is_product_one(const Sequence& s) {
  return full_products(s).contains_identity();
}

bool is_product_one_free(const Sequence& s) {
  return !all_products(s).contains_identity();
}

bool is_minimal_product_one(const Sequence& s) {
  if (s.empty()) return false;  // the unit of the sequence monoid is not irreducible
  if (!is_product_one(s)) return false;
  if (s.length() == 1) return true;
  auto& dp = scratch_dp();
  dp.run(s.group(), s.multiplicities(), s.length());
  long long full = dp.total - 1;
  for (long long key = 1; key < full; ++key) {
    if ((dp.table[key] & 1ull) && (dp.table[full - key] & 1ull)) return false;
  }
  return true;
}

ProductSet oracle_products(const Sequence& s) {
  if (s.length() > 9) {
    throw std::length_error("oracle products limited to sequences of length 9");
  }
  const Group& g = s.group();
  if (s.empty()) return ProductSet(g, 1ull);
  std::vector<Elem> terms = s.to_elements();
  ElemMask bits = 0;
  do {
    Elem acc = g.identity();
    for (Elem e : terms) acc = g.mul(acc, e);
    bits |= 1ull << acc;
  } while (std::next_permutation(terms.begin(), terms.end()));
  return ProductSet(g, bits);
}

std::optional<std::vector<Elem>> product_one_ordering(const Sequence& s) {
  const Group& g = s.group();
  if (s.empty()) return std::vector<Elem>{};
  auto& dp = scratch_dp();
  dp.run(g, s.multiplicities(), s.length());
  long long key = dp.total - 1;
  if (!(dp.table[key] & 1ull)) return std::nullopt;

  std::vector<int> digits(dp.sup.size());
  for (size_t i = 0; i < dp.sup.size(); ++i) digits[i] = dp.caps[i];

  std::vector<Elem> ordering(s.length());
  Elem target = g.identity();
  for (int pos = s.length() - 1; pos >= 0; --pos) {
    bool advanced = false;
    for (size_t i = 0; i < dp.sup.size(); ++i) {
      if (digits[i] == 0) continue;
      Elem e = dp.sup[i];
      Elem prefix = g.mul(target, g.inverse(e));
      if (dp.table[key - dp.strides[i]] & (1ull << prefix)) {
        ordering[pos] = e;
        key -= dp.strides[i];
        --digits[i];
        target = prefix;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;  // unreachable for a product-one sequence
  }
  return ordering;
}

ProductLayers::ProductLayers(const Group& g, int max_layer)
    : group_(g), max_layer_(max_layer), counts_(g.order(), 0) {
  saved_.push_back(std::vector<ElemMask>(max_layer_ + 1, 0));
  saved_.back()[0] = 1ull;
}

ElemMask ProductLayers::layer(int k) const {
  if (k < 0 || k > max_layer_) return 0;
  return saved_.back()[k];
}

Sequence ProductLayers::current() const {
  Sequence s(group_);
  for (Elem e = 0; e < group_.order(); ++e)
    if (counts_[e] > 0) s.add(e, counts_[e]);
  return s;
}

void ProductLayers::push(Elem e) {
  ++counts_[e];
  stack_.push_back(e);
  recompute();
}

void ProductLayers::pop() {
  if (stack_.empty()) throw std::logic_error("pop on empty ProductLayers");
  --counts_[stack_.back()];
  stack_.pop_back();
  saved_.pop_back();
}

void ProductLayers::recompute() {
  const Group& g = group_;
  sup_.clear();
  caps_.clear();
  for (Elem e = 0; e < g.order(); ++e) {
    if (counts_[e] > 0) {
      sup_.push_back(e);
      caps_.push_back(std::min(counts_[e], max_layer_));
    }
  }
  const int m = static_cast<int>(sup_.size());
  strides_.assign(m + 1, 1);
  for (int i = 0; i < m; ++i) {
    strides_[i + 1] = strides_[i] * (caps_[i] + 1);
    if (strides_[i + 1] > (1ll << 26)) {
      throw std::length_error("sub-multiset product table too large");
    }
  }
  long long total = strides_[m];

  dp_.assign(total, 0);
  dp_[0] = 1ull;
  std::vector<ElemMask> layers(max_layer_ + 1, 0);
  layers[0] = 1ull;

  digits_.assign(m, 0);
  int size = 0;
  for (long long key = 1; key < total; ++key) {
    for (int i = 0;; ++i) {
      if (digits_[i] < caps_[i]) {
        ++digits_[i];
        ++size;
        break;
      }
      size -= digits_[i];
      digits_[i] = 0;
    }
    if (size > max_layer_) continue;
    ElemMask acc = 0;
    for (int i = 0; i < m; ++i) {
      if (digits_[i] == 0) continue;
      ElemMask prev = dp_[key - strides_[i]];
      Elem e = sup_[i];
      while (prev) {
        Elem x = std::countr_zero(prev);
        prev &= prev - 1;
        acc |= 1ull << g.mul(x, e);
      }
    }
    dp_[key] = acc;
    layers[size] |= acc;
  }
  saved_.push_back(std::move(layers));
}

}  // namespace egz
