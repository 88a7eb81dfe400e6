#include "egz/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>

namespace egz {

namespace {

int gcd_abs(int a, int n) { return std::gcd(a < 0 ? -a : a, n); }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Emits every instantiation of the clause for one fixed generator pair.
template <typename Fn>
void emit_presentation_forms(const Group& g, FormTag tag, const Presentation& p, Fn&& emit) {
  const int n = g.parameter();
  auto rot = [&](int r) { return g.power(p.alpha, r); };
  auto refl = [&](int r) { return g.mul(g.power(p.alpha, r), p.tau); };

  switch (tag) {
    case FormTag::T12_1b: {
      for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = 0; r2 < n; ++r2) {
          if (gcd_abs(r1 - r2, n) != 1) continue;
          for (int r3 = 0; r3 < n; ++r3) {
            Sequence s(g);
            s.add(rot(r1), n - 1).add(rot(r2), n - 1).add(refl(r3));
            emit(std::move(s), ExtremalForm{tag, p.alpha, p.tau, {r1, r2, r3}, 0, -1});
          }
        }
      break;
    }
    case FormTag::T12_2b_1: {
      for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = 0; r2 < n; ++r2) {
          if (gcd_abs(r1 - r2, n) != 1) continue;
          for (int r3 = 0; r3 < n; ++r3) {
            Sequence s(g);
            s.add(rot(r1), 2 * n - 1).add(rot(r2), n - 1).add(refl(r3));
            emit(std::move(s), ExtremalForm{tag, p.alpha, p.tau, {r1, r2, r3}, 0, -1});
          }
        }
      break;
    }
    case FormTag::T12_2b_2: {
      // identity to the fifth against the full reflection coset
      Sequence s0(g);
      s0.add(g.identity(), 5).add(refl(0)).add(refl(1)).add(refl(2));
      emit(std::move(s0), ExtremalForm{tag, p.alpha, p.tau, {}, 0, -1});
      for (int t1 = 0; t1 < 3; ++t1)
        for (int t2 = 0; t2 < 3; ++t2) {
          if (gcd_abs(t1 - t2, 3) != 1) continue;
          for (int t3 = 0; t3 < 3; ++t3) {
            Sequence s(g);
            s.add(rot(t1), 5).add(rot(t2), 2).add(refl(t3));
            emit(std::move(s), ExtremalForm{tag, p.alpha, p.tau, {t1, t2, t3}, 1, -1});
          }
        }
      break;
    }
    case FormTag::T13_1b_1: {
      const int m = 2 * n;
      for (int r1 = 0; r1 < m; ++r1)
        for (int r2 = 0; r2 < m; ++r2) {
          if (gcd_abs(r1 - r2, m) != 1) continue;
          for (int r3 = 0; r3 < m; ++r3) {
            Sequence s(g);
            s.add(rot(r1), m - 1).add(rot(r2), m - 1).add(refl(r3));
            emit(std::move(s), ExtremalForm{tag, p.alpha, p.tau, {r1, r2, r3}, 0, -1});
          }
        }
      break;
    }
    case FormTag::T13_1b_2:
    case FormTag::T13_2b_2: {
      const bool with_tail = tag == FormTag::T13_2b_2;
      auto emit_tailed = [&](Sequence&& core, ExtremalForm form, Elem tail0, Elem tail1) {
        if (!with_tail) {
          emit(std::move(core), std::move(form));
          return;
        }
        for (int sel = 0; sel < 2; ++sel) {
          Sequence s = core;
          s.add(sel == 0 ? tail0 : tail1, 4);
          ExtremalForm f = form;
          f.tail = sel;
          emit(std::move(s), std::move(f));
        }
      };
      for (int t1 = 0; t1 < 4; t1 += 2) {
        for (int t3 = 0; t3 < 4; ++t3) {
          for (int t2 = 1; t2 < 4; t2 += 2) {
            Sequence a(g);
            a.add(rot(t1), 3).add(rot(t2), 3).add(refl(t3));
            emit_tailed(std::move(a), ExtremalForm{tag, p.alpha, p.tau, {t1, t2, t3}, 0, -1},
                        rot(t1), rot(t2));
            Sequence b(g);
            b.add(rot(t1), 3).add(refl(t3), 3).add(rot(t2));
            emit_tailed(std::move(b), ExtremalForm{tag, p.alpha, p.tau, {t1, t2, t3}, 1, -1},
                        rot(t1), refl(t3));
          }
          for (int t4 = 0; t4 < 4; ++t4) {
            if ((t3 & 1) == (t4 & 1)) continue;
            Sequence c(g);
            c.add(rot(t1), 3).add(refl(t3), 3).add(refl(t4));
            emit_tailed(std::move(c), ExtremalForm{tag, p.alpha, p.tau, {t1, t3, t4}, 2, -1},
                        rot(t1), refl(t3));
          }
        }
      }
      break;
    }
    case FormTag::T13_2b_1: {
      const int m = 2 * n;
      for (int r1 = 0; r1 < m; ++r1)
        for (int r2 = 0; r2 < m; ++r2) {
          if (gcd_abs(r1 - r2, m) != 1) continue;
          for (int r3 = 0; r3 < m; ++r3) {
            Sequence s(g);
            s.add(rot(r1), 4 * n - 1).add(rot(r2), m - 1).add(refl(r3));
            emit(std::move(s), ExtremalForm{tag, p.alpha, p.tau, {r1, r2, r3}, 0, -1});
          }
        }
      break;
    }
    case FormTag::L25_b:
      throw std::logic_error("L2.5b has no presentation-based emission");
  }
}

void check_tag_applies(const Group& g, FormTag tag) {
  const int n = g.parameter();
  switch (tag) {
    case FormTag::T12_1b:
      require(g.kind() == GroupKind::Dihedral && n >= 4 && n % 2 == 0,
              "clause requires a dihedral group with even n >= 4");
      break;
    case FormTag::T12_2b_1:
      require(g.kind() == GroupKind::Dihedral && n >= 4,
              "clause requires a dihedral group with n >= 4");
      break;
    case FormTag::T12_2b_2:
      require(g.kind() == GroupKind::Dihedral && n == 3,
              "clause requires the dihedral group with n = 3");
      break;
    case FormTag::T13_1b_1:
      require(g.kind() == GroupKind::Dicyclic && n >= 4 && n % 2 == 0,
              "clause requires a dicyclic group with even n >= 4");
      break;
    case FormTag::T13_1b_2:
      require(g.kind() == GroupKind::Dicyclic && n == 2,
              "clause requires the dicyclic group with n = 2");
      break;
    case FormTag::T13_2b_1:
      require(g.kind() == GroupKind::Dicyclic && n >= 3,
              "clause requires a dicyclic group with n >= 3");
      break;
    case FormTag::T13_2b_2:
      require(g.kind() == GroupKind::Dicyclic && n == 2,
              "clause requires the dicyclic group with n = 2");
      break;
    case FormTag::L25_b:
      require(g.kind() == GroupKind::Cyclic && g.order() >= 2,
              "clause requires a cyclic group of order >= 2");
      break;
  }
}

}  // namespace

std::string_view form_tag_name(FormTag tag) {
  switch (tag) {
    case FormTag::T12_1b: return "T1.2.1b";
    case FormTag::T12_2b_1: return "T1.2.2b.1";
    case FormTag::T12_2b_2: return "T1.2.2b.2";
    case FormTag::T13_1b_1: return "T1.3.1b.1";
    case FormTag::T13_1b_2: return "T1.3.1b.2";
    case FormTag::T13_2b_1: return "T1.3.2b.1";
    case FormTag::T13_2b_2: return "T1.3.2b.2";
    case FormTag::L25_b: return "L2.5b";
  }
  return "?";
}

std::optional<FormTag> form_tag_from_name(std::string_view name) {
  for (FormTag t : {FormTag::T12_1b, FormTag::T12_2b_1, FormTag::T12_2b_2, FormTag::T13_1b_1,
                    FormTag::T13_1b_2, FormTag::T13_2b_1, FormTag::T13_2b_2, FormTag::L25_b}) {
    if (form_tag_name(t) == name) return t;
  }
  return std::nullopt;
}

int closed_form_s(const Group& g) {
  const int n = g.parameter();
  switch (g.kind()) {
    case GroupKind::Cyclic: return 2 * g.order() - 1;
    case GroupKind::Dihedral:
      require(n >= 3, "no closed form for dihedral groups below n = 3");
      return n % 2 == 0 ? 2 * n : 3 * n;
    case GroupKind::Dicyclic: return n % 2 == 0 ? 4 * n : 6 * n;
  }
  throw std::logic_error("unreachable");
}

int closed_form_e(const Group& g) {
  const int n = g.parameter();
  switch (g.kind()) {
    case GroupKind::Cyclic: return 2 * g.order() - 1;
    case GroupKind::Dihedral:
      require(n >= 3, "no closed form for dihedral groups below n = 3");
      return 3 * n;
    case GroupKind::Dicyclic: return 6 * n;
  }
  throw std::logic_error("unreachable");
}

std::vector<FormTag> applicable_tags(const Group& g, ExtremalMode mode) {
  const int n = g.parameter();
  std::vector<FormTag> tags;
  if (g.kind() == GroupKind::Dihedral && n >= 3) {
    if (mode == ExtremalMode::SExtremal) {
      if (n >= 4 && n % 2 == 0) tags.push_back(FormTag::T12_1b);
    } else {
      if (n >= 4) tags.push_back(FormTag::T12_2b_1);
      if (n == 3) tags.push_back(FormTag::T12_2b_2);
    }
  } else if (g.kind() == GroupKind::Dicyclic) {
    if (mode == ExtremalMode::SExtremal) {
      if (n >= 4 && n % 2 == 0) tags.push_back(FormTag::T13_1b_1);
      if (n == 2) tags.push_back(FormTag::T13_1b_2);
    } else {
      if (n >= 3) tags.push_back(FormTag::T13_2b_1);
      if (n == 2) tags.push_back(FormTag::T13_2b_2);
    }
  }
  return tags;
}

std::vector<std::pair<Sequence, ExtremalForm>> generate_family(const Group& g, FormTag tag) {
  check_tag_applies(g, tag);
  std::map<Sequence, ExtremalForm> dedup;
  auto take = [&](Sequence&& s, ExtremalForm&& f) { dedup.emplace(std::move(s), std::move(f)); };

  if (tag == FormTag::L25_b) {
    const int n = g.order();
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (g.element_order(g.mul(a, g.inverse(b))) != n) continue;
        Sequence s(g);
        s.add(a, 2 * n - 1).add(b, n - 1);
        take(std::move(s), ExtremalForm{tag, a, b, {}, 0, -1});
      }
  } else {
    for (const Presentation& p : presentations_of(g)) {
      emit_presentation_forms(g, tag, p,
                              [&](Sequence&& s, ExtremalForm&& f) { take(std::move(s), std::move(f)); });
    }
  }

  std::vector<std::pair<Sequence, ExtremalForm>> out;
  out.reserve(dedup.size());
  for (auto& [s, f] : dedup) out.emplace_back(s, f);
  return out;
}

std::optional<ExtremalForm> match_form(const Group& g, const Sequence& s, FormTag tag,
                                       const Presentation& pres) {
  check_tag_applies(g, tag);
  std::optional<ExtremalForm> found;
  emit_presentation_forms(g, tag, pres, [&](Sequence&& cand, ExtremalForm&& f) {
    if (!found && cand == s) found = std::move(f);
  });
  return found;
}

std::optional<ExtremalForm> classify(const Group& g, const Sequence& s, ExtremalMode mode) {
  int want = (mode == ExtremalMode::SExtremal ? closed_form_s(g) : closed_form_e(g)) - 1;
  if (s.length() != want) {
    throw std::invalid_argument("classification requires a sequence of length " +
                                std::to_string(want) + ", got " + std::to_string(s.length()));
  }
  for (FormTag tag : applicable_tags(g, mode)) {
    for (const auto& [cand, form] : generate_family(g, tag)) {
      if (cand == s) return form;
    }
  }
  return std::nullopt;
}

InverseTheoremCheck verify_inverse_theorem(const Group& g, ExtremalMode mode,
                                           const SearchConfig& cfg) {
  auto tags = applicable_tags(g, mode);
  if (tags.empty()) {
    throw std::invalid_argument("no classification clauses apply to " + g.descriptor());
  }
  auto t0 = std::chrono::steady_clock::now();
  int length = (mode == ExtremalMode::SExtremal ? closed_form_s(g) : closed_form_e(g)) - 1;
  int forbidden = mode == ExtremalMode::SExtremal ? g.exponent() : g.order();

  auto enumeration = enumerate_witnesses(g, length, forbidden, cfg);
  std::vector<Sequence> witnesses = enumeration.witnesses;
  std::sort(witnesses.begin(), witnesses.end());
  std::vector<Sequence> family;
  for (FormTag tag : tags)
    for (auto& [s, f] : generate_family(g, tag)) family.push_back(s);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  InverseTheoremCheck out;
  out.exhaustive = enumeration.exhaustive;
  out.witness_count = witnesses.size();
  out.family_count = family.size();
  std::set_difference(witnesses.begin(), witnesses.end(), family.begin(), family.end(),
                      std::back_inserter(out.unexplained));
  std::set_difference(family.begin(), family.end(), witnesses.begin(), witnesses.end(),
                      std::back_inserter(out.overclaimed));
  out.ok = out.exhaustive && out.unexplained.empty() && out.overclaimed.empty();
  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return out;
}

}  // namespace egz
