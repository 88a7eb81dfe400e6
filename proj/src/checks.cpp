#include "egz/checks.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace egz {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

CheckResult make_result(std::string name, std::string group, std::string params,
                        Clock::time_point start) {
  CheckResult r;
  r.name = std::move(name);
  r.group = std::move(group);
  r.params = std::move(params);
  r.elapsed_ms = ms_since(start);
  return r;
}

// Confirms the counterexample candidate really is a witness before blaming
// the asserted structure; a bogus enumeration then shows up as its own
// failure instead of a lemma failure.
bool revalidate_witness(const Sequence& s, int forbidden) {
  return !has_product_one_subsequence(s, forbidden);
}

}  // namespace

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

CheckResult check_lemma_2_2(const Group& g, const SearchConfig& cfg) {
  auto start = Clock::now();
  auto d = small_davenport(g, cfg);
  auto s = s_constant(g, cfg);
  auto e = e_constant(g, cfg);
  auto r = make_result("lemma_2_2", g.descriptor(), "", start);
  r.detail = "d=" + std::to_string(d.value) + " s=" + std::to_string(s.value) +
             " E=" + std::to_string(e.value) + " exp=" + std::to_string(g.exponent()) +
             " |G|=" + std::to_string(g.order());
  if (!d.exhaustive || !s.exhaustive || !e.exhaustive) {
    r.status = CheckStatus::Inconclusive;
    r.elapsed_ms = ms_since(start);
    return r;
  }
  bool ok = s.value >= d.value + g.exponent() && e.value >= d.value + g.order();
  // the padded product-one-free witness realizes both lower bounds
  Sequence padded_s = d.witness;
  padded_s.add(g.identity(), g.exponent() - 1);
  Sequence padded_e = d.witness;
  padded_e.add(g.identity(), g.order() - 1);
  ok = ok && !has_product_one_subsequence(padded_s, g.exponent()) &&
       !has_product_one_subsequence(padded_e, g.order());
  if (!ok) {
    r.status = CheckStatus::Fail;
    r.counterexample = d.witness.str();
  } else {
    r.status = CheckStatus::Pass;
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

CheckResult check_lemma_2_3(int n, int r_param, const SearchConfig& cfg) {
  if (n < 2 || r_param < 2 || r_param > n) {
    throw std::invalid_argument("lemma 2.3 parameters need n >= 2 and r in [2, n]");
  }
  auto start = Clock::now();
  Group g = Group::make(GroupKind::Cyclic, n);
  auto res = make_result("lemma_2_3", g.descriptor(), "r=" + std::to_string(r_param), start);
  auto enumeration = enumerate_witnesses(g, n + r_param - 2, n, cfg);
  if (!enumeration.exhaustive) {
    res.status = CheckStatus::Inconclusive;
    res.elapsed_ms = ms_since(start);
    return res;
  }
  res.status = CheckStatus::Pass;
  for (const Sequence& s : enumeration.witnesses) {
    int low = n_products(s, n - 2).count();
    int high = n_products(s, r_param).count();
    if (low != high || high < r_param - 1) {
      res.status = revalidate_witness(s, n) ? CheckStatus::Fail : CheckStatus::Inconclusive;
      res.counterexample = s.str();
      break;
    }
  }
  res.detail = "witnesses=" + std::to_string(enumeration.witnesses.size());
  res.elapsed_ms = ms_since(start);
  return res;
}

CheckResult check_lemma_2_4(int n, int k, const SearchConfig& cfg) {
  if (n < 3 || k < 2 || 2 * (2 * n - k) < 3 * n - 1) {
    throw std::invalid_argument("lemma 2.4 parameters need n >= 3, k >= 2, 2n-k >= (3n-1)/2");
  }
  auto start = Clock::now();
  Group g = Group::make(GroupKind::Cyclic, n);
  auto res = make_result("lemma_2_4", g.descriptor(), "k=" + std::to_string(k), start);
  auto enumeration = enumerate_witnesses(g, 2 * n - k, n, cfg);
  if (!enumeration.exhaustive) {
    res.status = CheckStatus::Inconclusive;
    res.elapsed_ms = ms_since(start);
    return res;
  }
  const int term_floor = n - 2 * k + 3;
  const int sum_floor = 2 * n - 2 * k + 2;
  res.status = CheckStatus::Pass;
  for (const Sequence& s : enumeration.witnesses) {
    bool found = false;
    for (Elem a = 0; a < n && !found; ++a) {
      if (s.multiplicity(a) < term_floor) continue;
      for (Elem b = 0; b < n && !found; ++b) {
        if (b == a || s.multiplicity(b) < term_floor) continue;
        if (g.element_order(g.mul(a, g.inverse(b))) != n) continue;
        found = s.multiplicity(a) + s.multiplicity(b) >= sum_floor;
      }
    }
    if (!found) {
      res.status = revalidate_witness(s, n) ? CheckStatus::Fail : CheckStatus::Inconclusive;
      res.counterexample = s.str();
      break;
    }
  }
  res.detail = "witnesses=" + std::to_string(enumeration.witnesses.size());
  res.elapsed_ms = ms_since(start);
  return res;
}

CheckResult check_lemma_2_5(int n, const SearchConfig& cfg) {
  if (n < 2) throw std::invalid_argument("lemma 2.5 needs n >= 2");
  auto start = Clock::now();
  Group g = Group::make(GroupKind::Cyclic, n);
  auto res = make_result("lemma_2_5", g.descriptor(), "", start);
  auto enumeration = enumerate_witnesses(g, 3 * n - 2, 2 * n, cfg);
  if (!enumeration.exhaustive) {
    res.status = CheckStatus::Inconclusive;
    res.elapsed_ms = ms_since(start);
    return res;
  }
  std::vector<Sequence> witnesses = enumeration.witnesses;
  std::sort(witnesses.begin(), witnesses.end());
  std::vector<Sequence> family;
  for (auto& [s, f] : generate_family(g, FormTag::L25_b)) family.push_back(s);
  std::sort(family.begin(), family.end());
  if (witnesses == family) {
    res.status = CheckStatus::Pass;
  } else {
    res.status = CheckStatus::Fail;
    std::vector<Sequence> diff;
    std::set_symmetric_difference(witnesses.begin(), witnesses.end(), family.begin(),
                                  family.end(), std::back_inserter(diff));
    if (!diff.empty()) res.counterexample = diff.front().str();
  }
  res.detail = "witnesses=" + std::to_string(witnesses.size()) +
               " family=" + std::to_string(family.size());
  res.elapsed_ms = ms_since(start);
  return res;
}

CheckResult check_structure_lemma(StructureLemma which, int n, const SearchConfig& cfg) {
  auto start = Clock::now();
  GroupKind kind = (which == StructureLemma::L31 || which == StructureLemma::L32)
                       ? GroupKind::Dihedral
                       : GroupKind::Dicyclic;
  int length = 0, forbidden = 0;
  std::string name;
  switch (which) {
    case StructureLemma::L31:
      if (n < 4 || n % 2) throw std::invalid_argument("lemma 3.1 needs even n >= 4");
      name = "lemma_3_1";
      length = 2 * n - 1;
      forbidden = n;
      break;
    case StructureLemma::L32:
      if (n < 3) throw std::invalid_argument("lemma 3.2 needs n >= 3");
      name = "lemma_3_2";
      length = 3 * n - 1;
      forbidden = 2 * n;
      break;
    case StructureLemma::L41_1:
      if (n < 4 || n % 2) throw std::invalid_argument("lemma 4.1(1) needs even n >= 4");
      name = "lemma_4_1_1";
      length = 4 * n - 1;
      forbidden = 2 * n;
      break;
    case StructureLemma::L41_2:
      if (n != 2) throw std::invalid_argument("lemma 4.1(2) is the n = 2 clause");
      name = "lemma_4_1_2";
      length = 7;
      forbidden = 4;
      break;
    case StructureLemma::L42_2:
      if (n != 2) throw std::invalid_argument("lemma 4.2(2) is the n = 2 clause");
      name = "lemma_4_2_2";
      length = 11;
      forbidden = 8;
      break;
  }

  Group g = Group::make(kind, n);
  auto res = make_result(std::move(name), g.descriptor(),
                         "length=" + std::to_string(length) + " L=" + std::to_string(forbidden),
                         start);
  auto enumeration = enumerate_witnesses(g, length, forbidden, cfg);
  if (!enumeration.exhaustive) {
    res.status = CheckStatus::Inconclusive;
    res.elapsed_ms = ms_since(start);
    return res;
  }

  SubgroupView h = index2_cyclic_subgroup(g);
  std::vector<Presentation> pres;
  if (which == StructureLemma::L41_2 || which == StructureLemma::L42_2) {
    pres = presentations_of(g);
  }

  res.status = CheckStatus::Pass;
  for (const Sequence& s : enumeration.witnesses) {
    bool ok = true;
    switch (which) {
      case StructureLemma::L31:
      case StructureLemma::L41_1:
        ok = s.restricted(h.complement).length() == 1;
        break;
      case StructureLemma::L32: {
        ok = s.restricted(h.complement).length() == 1;
        if (!ok && n == 3) {
          Sequence special(g);
          special.add(g.identity(), 5);
          for (Elem e = 0; e < g.order(); ++e)
            if ((h.complement >> e) & 1) special.add(e);
          ok = s == special;
        }
        break;
      }
      case StructureLemma::L41_2: {
        ok = s.support_size() == 3;
        for (const Presentation& p : pres) {
          if (!ok) break;
          ok = match_form(g, s, FormTag::T13_1b_2, p).has_value();
        }
        break;
      }
      case StructureLemma::L42_2: {
        for (const Presentation& p : pres) {
          if (!ok) break;
          ok = match_form(g, s, FormTag::T13_2b_2, p).has_value();
        }
        break;
      }
    }
    if (!ok) {
      res.status =
          revalidate_witness(s, forbidden) ? CheckStatus::Fail : CheckStatus::Inconclusive;
      res.counterexample = s.str();
      break;
    }
  }
  res.detail = "witnesses=" + std::to_string(enumeration.witnesses.size());
  res.elapsed_ms = ms_since(start);
  return res;
}

namespace {

CheckResult compare_constant(const char* name, const Group& g, const ConstantReport& computed,
                             int closed, Clock::time_point start) {
  auto res = make_result(name, g.descriptor(), "", start);
  res.detail = "computed=" + std::to_string(computed.value) + " expected=" + std::to_string(closed);
  if (!computed.exhaustive) {
    res.status = CheckStatus::Inconclusive;
  } else if (computed.value == closed) {
    res.status = CheckStatus::Pass;
  } else {
    res.status = CheckStatus::Fail;
    res.counterexample = computed.detail.witness.str();
  }
  res.elapsed_ms = ms_since(start);
  return res;
}

}  // namespace

CheckResult check_theorem_1_1(const Group& g, const SearchConfig& cfg) {
  auto start = Clock::now();
  return compare_constant("theorem_1_1", g, s_constant(g, cfg), closed_form_s(g), start);
}

CheckResult check_theorem_a(const Group& g, const SearchConfig& cfg) {
  auto start = Clock::now();
  return compare_constant("theorem_A", g, e_constant(g, cfg), closed_form_e(g), start);
}

CheckResult check_inverse_theorem(const Group& g, ExtremalMode mode, const SearchConfig& cfg) {
  auto start = Clock::now();
  auto check = verify_inverse_theorem(g, mode, cfg);
  auto res = make_result("inverse_theorem", g.descriptor(),
                         mode == ExtremalMode::SExtremal ? "mode=s" : "mode=E", start);
  res.detail = "witnesses=" + std::to_string(check.witness_count) +
               " family=" + std::to_string(check.family_count);
  if (!check.exhaustive) {
    res.status = CheckStatus::Inconclusive;
  } else if (check.ok) {
    res.status = CheckStatus::Pass;
  } else {
    res.status = CheckStatus::Fail;
    if (!check.unexplained.empty()) {
      res.counterexample = check.unexplained.front().str();
      res.detail += " unexplained=" + std::to_string(check.unexplained.size());
    }
    if (!check.overclaimed.empty()) {
      if (!res.counterexample) res.counterexample = check.overclaimed.front().str();
      res.detail += " overclaimed=" + std::to_string(check.overclaimed.size());
    }
  }
  res.elapsed_ms = ms_since(start);
  return res;
}

std::vector<SuiteEntry> verification_suite(bool stretch) {
  std::vector<SuiteEntry> suite;
  auto add = [&](std::string name, std::string group, std::string params,
                 std::function<CheckResult(const SearchConfig&)> run) {
    suite.push_back({std::move(name), std::move(group), std::move(params), std::move(run)});
  };

  struct NamedGroup {
    GroupKind kind;
    int n;
  };
  const NamedGroup small[] = {{GroupKind::Dihedral, 3},
                              {GroupKind::Dihedral, 4},
                              {GroupKind::Dicyclic, 2}};

  for (auto [kind, n] : small) {
    std::string desc = Group::make(kind, n).descriptor();
    add("lemma_2_2", desc, "", [kind, n = n](const SearchConfig& cfg) {
      Group g = Group::make(kind, n);
      return check_lemma_2_2(g, cfg);
    });
  }
  for (int n = 2; n <= 8; ++n)
    add("lemma_2_2", "cyclic:" + std::to_string(n), "", [n](const SearchConfig& cfg) {
      Group g = Group::make(GroupKind::Cyclic, n);
      return check_lemma_2_2(g, cfg);
    });
  for (int n = 2; n <= 6; ++n)
    for (int r = 2; r <= n; ++r)
      add("lemma_2_3", "cyclic:" + std::to_string(n), "r=" + std::to_string(r),
          [n, r](const SearchConfig& cfg) { return check_lemma_2_3(n, r, cfg); });
  for (int n = 4; n <= 7; ++n)
    for (int k = 2; 2 * (2 * n - k) >= 3 * n - 1; ++k)
      add("lemma_2_4", "cyclic:" + std::to_string(n), "k=" + std::to_string(k),
          [n, k](const SearchConfig& cfg) { return check_lemma_2_4(n, k, cfg); });
  for (int n = 2; n <= 5; ++n)
    add("lemma_2_5", "cyclic:" + std::to_string(n), "",
        [n](const SearchConfig& cfg) { return check_lemma_2_5(n, cfg); });
  for (int n : {4, 6})
    add("lemma_3_1", "dihedral:" + std::to_string(n), "",
        [n](const SearchConfig& cfg) { return check_structure_lemma(StructureLemma::L31, n, cfg); });
  for (int n : {3, 4})
    add("lemma_3_2", "dihedral:" + std::to_string(n), "",
        [n](const SearchConfig& cfg) { return check_structure_lemma(StructureLemma::L32, n, cfg); });
  add("lemma_4_1_2", "dicyclic:2", "",
      [](const SearchConfig& cfg) { return check_structure_lemma(StructureLemma::L41_2, 2, cfg); });
  add("lemma_4_2_2", "dicyclic:2", "",
      [](const SearchConfig& cfg) { return check_structure_lemma(StructureLemma::L42_2, 2, cfg); });

  for (auto [kind, n] : small) {
    std::string desc = Group::make(kind, n).descriptor();
    add("theorem_1_1", desc, "", [kind, n = n](const SearchConfig& cfg) {
      return check_theorem_1_1(Group::make(kind, n), cfg);
    });
    add("theorem_A", desc, "", [kind, n = n](const SearchConfig& cfg) {
      return check_theorem_a(Group::make(kind, n), cfg);
    });
  }
  for (int n = 2; n <= 8; ++n)
    add("theorem_1_1", "cyclic:" + std::to_string(n), "", [n](const SearchConfig& cfg) {
      return check_theorem_1_1(Group::make(GroupKind::Cyclic, n), cfg);
    });

  struct InverseCase {
    GroupKind kind;
    int n;
    ExtremalMode mode;
  };
  const InverseCase inverses[] = {{GroupKind::Dihedral, 4, ExtremalMode::SExtremal},
                                  {GroupKind::Dihedral, 4, ExtremalMode::EExtremal},
                                  {GroupKind::Dihedral, 3, ExtremalMode::EExtremal},
                                  {GroupKind::Dicyclic, 2, ExtremalMode::SExtremal},
                                  {GroupKind::Dicyclic, 2, ExtremalMode::EExtremal}};
  for (auto [kind, n, mode] : inverses) {
    std::string desc = Group::make(kind, n).descriptor();
    add("inverse_theorem", desc, mode == ExtremalMode::SExtremal ? "mode=s" : "mode=E",
        [kind, n = n, mode = mode](const SearchConfig& cfg) {
          return check_inverse_theorem(Group::make(kind, n), mode, cfg);
        });
  }

  if (stretch) {
    for (int n : {5, 6})
      add("theorem_1_1", "dihedral:" + std::to_string(n), "stretch",
          [n](const SearchConfig& cfg) {
            return check_theorem_1_1(Group::make(GroupKind::Dihedral, n), cfg);
          });
    add("theorem_1_1", "dicyclic:3", "stretch", [](const SearchConfig& cfg) {
      return check_theorem_1_1(Group::make(GroupKind::Dicyclic, 3), cfg);
    });
    add("lemma_4_1_1", "dicyclic:4", "stretch", [](const SearchConfig& cfg) {
      return check_structure_lemma(StructureLemma::L41_1, 4, cfg);
    });
  }
  return suite;
}

}  // namespace egz
