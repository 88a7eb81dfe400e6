#include "egz/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace egz {

namespace {

int checked_parameter(GroupKind kind, int n) {
  int min_n = kind == GroupKind::Cyclic ? 1 : 2;
  if (n < min_n) {
    throw std::invalid_argument("group parameter " + std::to_string(n) +
                                " below minimum for kind");
  }
  int order = kind == GroupKind::Cyclic ? n : (kind == GroupKind::Dihedral ? 2 * n : 4 * n);
  if (order > 64) {
    throw std::invalid_argument("group order " + std::to_string(order) +
                                " exceeds supported maximum of 64");
  }
  return order;
}

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string_view kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::Cyclic: return "cyclic";
    case GroupKind::Dihedral: return "dihedral";
    case GroupKind::Dicyclic: return "dicyclic";
  }
  return "?";
}

Group Group::make(GroupKind kind, int n) {
  Group g;
  g.kind_ = kind;
  g.n_ = n;
  g.order_ = checked_parameter(kind, n);

  Tables t;
  t.mul.assign(static_cast<size_t>(g.order_) * g.order_, 0);

  // m is the order of the distinguished rotation generator; elements i < m
  // are its powers, elements m + i form the other coset.
  int m = kind == GroupKind::Dicyclic ? 2 * n : n;
  int half = kind == GroupKind::Dicyclic ? n : 0;  // tau^2 = alpha^half

  auto at = [&](Elem a, Elem b) -> Elem& {
    return t.mul[static_cast<size_t>(a) * g.order_ + b];
  };

  if (kind == GroupKind::Cyclic) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) at(i, j) = mod(i + j, n);
  } else {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        at(i, j) = mod(i + j, m);                    // a^i a^j
        at(i, m + j) = m + mod(i + j, m);            // a^i (a^j t)
        at(m + i, j) = m + mod(i - j, m);            // (a^i t) a^j
        at(m + i, m + j) = mod(i - j + half, m);     // (a^i t)(a^j t) = a^{i-j} t^2
      }
    }
  }

  g.build_names(t);
  g.derive_and_validate(t);
  g.t_ = std::make_shared<const Tables>(std::move(t));
  return g;
}

Group Group::from_descriptor(std::string_view descriptor) {
  auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("group descriptor must be kind:n");
  }
  std::string_view kind_str = descriptor.substr(0, colon);
  std::string_view n_str = descriptor.substr(colon + 1);
  GroupKind kind;
  if (kind_str == "cyclic") {
    kind = GroupKind::Cyclic;
  } else if (kind_str == "dihedral") {
    kind = GroupKind::Dihedral;
  } else if (kind_str == "dicyclic") {
    kind = GroupKind::Dicyclic;
  } else {
    throw std::invalid_argument("unknown group kind '" + std::string(kind_str) + "'");
  }
  if (n_str.empty() || n_str.size() > 3 ||
      n_str.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("bad group parameter '" + std::string(n_str) + "'");
  }
  return make(kind, std::stoi(std::string(n_str)));
}

std::string Group::descriptor() const {
  return std::string(kind_name(kind_)) + ":" + std::to_string(n_);
}

void Group::build_names(Tables& t) const {
  t.names.resize(order_);
  int m = kind_ == GroupKind::Dicyclic ? 2 * n_ : n_;
  for (int i = 0; i < order_; ++i) {
    if (i < m) {
      t.names[i] = "a" + std::to_string(i);
    } else {
      t.names[i] = "a" + std::to_string(i - m) + "t";
    }
  }
}

std::optional<Elem> Group::find_element(std::string_view name) const {
  if (name.size() < 2 || name[0] != 'a') return std::nullopt;
  std::string_view rest = name.substr(1);
  bool coset = !rest.empty() && rest.back() == 't';
  if (coset) rest.remove_suffix(1);
  if (rest.empty() || rest.size() > 2 ||
      rest.find_first_not_of("0123456789") != std::string_view::npos) {
    return std::nullopt;
  }
  if (rest.size() > 1 && rest[0] == '0') return std::nullopt;  // no leading zeros
  int i = std::stoi(std::string(rest));
  int m = kind_ == GroupKind::Dicyclic ? 2 * n_ : n_;
  if (i >= m) return std::nullopt;
  if (coset && kind_ == GroupKind::Cyclic) return std::nullopt;
  return coset ? m + i : i;
}

Elem Group::power(Elem a, long long k) const {
  int ord = element_order(a);
  k %= ord;
  if (k < 0) k += ord;
  Elem acc = identity();
  for (long long i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

void Group::derive_and_validate(Tables& t) {
  const int ord = order_;
  auto mul = [&](Elem a, Elem b) { return t.mul[static_cast<size_t>(a) * ord + b]; };
  // identity
  for (Elem a = 0; a < ord; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) {
      throw std::logic_error("table has no two-sided identity at element 0");
    }
  }
  // inverses
  t.inv.assign(ord, -1);
  for (Elem a = 0; a < ord; ++a) {
    for (Elem b = 0; b < ord; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        t.inv[a] = b;
        break;
      }
    }
    if (t.inv[a] < 0) throw std::logic_error("element without two-sided inverse");
  }
  // associativity, all triples
  for (Elem a = 0; a < ord; ++a)
    for (Elem b = 0; b < ord; ++b)
      for (Elem c = 0; c < ord; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::logic_error("multiplication table is not associative");

  // element orders, exponent
  t.elem_order.assign(ord, 0);
  exponent_ = 1;
  max_order_ = 1;
  for (Elem a = 0; a < ord; ++a) {
    Elem acc = a;
    int k = 1;
    while (acc != 0) {
      acc = mul(acc, a);
      ++k;
    }
    t.elem_order[a] = k;
    if (ord % k != 0) throw std::logic_error("element order does not divide group order");
    exponent_ = static_cast<int>(std::lcm(exponent_, k));
    max_order_ = std::max(max_order_, k);
  }

  abelian_ = true;
  for (Elem a = 0; a < ord && abelian_; ++a)
    for (Elem b = 0; b < ord; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }

  // names are unique and round-trip
  for (Elem a = 0; a < ord; ++a) {
    auto back = find_element(t.names[a]);
    if (!back || *back != a) throw std::logic_error("element name fails to round-trip");
  }
}

SubgroupView index2_cyclic_subgroup(const Group& g) {
  if (g.kind() == GroupKind::Cyclic) {
    throw std::invalid_argument("index-2 subgroup view is defined for dihedral/dicyclic only");
  }
  int m = g.order() / 2;
  ElemMask h = m == 64 ? ~0ull : (1ull << m) - 1;
  return SubgroupView{h, g.all_mask() & ~h, m};
}

std::vector<Presentation> presentations_of(const Group& g) {
  if (g.kind() == GroupKind::Cyclic) {
    throw std::invalid_argument("presentations are defined for dihedral/dicyclic only");
  }
  const int ord = g.order();
  const int n = g.parameter();
  const int m = g.kind() == GroupKind::Dicyclic ? 2 * n : n;
  std::vector<Presentation> out;
  for (Elem a = 0; a < ord; ++a) {
    if (g.power(a, m) != g.identity()) continue;
    for (Elem t = 0; t < ord; ++t) {
      Elem t2 = g.mul(t, t);
      Elem want = g.kind() == GroupKind::Dicyclic ? g.power(a, n) : g.identity();
      if (t2 != want) continue;
      if (g.mul(t, a) != g.mul(g.inverse(a), t)) continue;
      ElemMask gen = subgroup_closure(g, (1ull << a) | (1ull << t));
      if (gen != g.all_mask()) continue;
      out.push_back({a, t});
    }
  }
  if (out.empty()) throw std::logic_error("no presentation found for a valid group");
  return out;
}

CenterQuotient quotient_by_center(const Group& g) {
  if (g.kind() != GroupKind::Dicyclic) {
    throw std::invalid_argument("center quotient is provided for dicyclic groups only");
  }
  int n = g.parameter();
  int m = 2 * n;
  Group q = Group::make(GroupKind::Dihedral, n);
  std::vector<Elem> proj(g.order());
  for (Elem e = 0; e < g.order(); ++e) {
    proj[e] = e < m ? e % n : n + (e - m) % n;
  }
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (proj[g.mul(x, y)] != q.mul(proj[x], proj[y]))
        throw std::logic_error("center projection is not a homomorphism");
  return CenterQuotient{std::move(q), std::move(proj)};
}

ElemMask subgroup_closure(const Group& g, ElemMask seed) {
  ElemMask cur = seed | 1ull;  // identity
  for (;;) {
    ElemMask next = cur;
    for (ElemMask ma = cur; ma;) {
      Elem a = std::countr_zero(ma);
      ma &= ma - 1;
      for (ElemMask mb = cur; mb;) {
        Elem b = std::countr_zero(mb);
        mb &= mb - 1;
        next |= 1ull << g.mul(a, b);
      }
    }
    if (next == cur) return cur;
    cur = next;
  }
}

SubgroupView commutator_subgroup(const Group& g) {
  ElemMask seed = 1ull;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      seed |= 1ull << g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b)));
  ElemMask members = subgroup_closure(g, seed);
  return SubgroupView{members, g.all_mask() & ~members,
                      std::popcount(members)};
}

std::vector<std::vector<Elem>> automorphisms(const Group& g) {
  std::vector<std::vector<Elem>> out;
  const int ord = g.order();
  if (g.kind() == GroupKind::Cyclic) {
    for (int k = 1; k <= ord; ++k) {
      if (std::gcd(k, ord) != 1) continue;
      std::vector<Elem> phi(ord);
      for (Elem i = 0; i < ord; ++i) phi[i] = (i * k) % ord;
      out.push_back(std::move(phi));
    }
    return out;
  }
  int m = g.kind() == GroupKind::Dicyclic ? 2 * g.parameter() : g.parameter();
  for (const Presentation& p : presentations_of(g)) {
    std::vector<Elem> phi(ord);
    for (int i = 0; i < m; ++i) {
      phi[i] = g.power(p.alpha, i);
      phi[m + i] = g.mul(g.power(p.alpha, i), p.tau);
    }
    out.push_back(std::move(phi));
  }
  return out;
}

ElemMask automorphism_orbit_minima(const Group& g) {
  auto autos = automorphisms(g);
  ElemMask minima = 0;
  for (Elem e = 0; e < g.order(); ++e) {
    Elem lo = e;
    for (const auto& phi : autos) lo = std::min(lo, phi[e]);
    if (lo == e) minima |= 1ull << e;
  }
  return minima;
}

}  // namespace egz
