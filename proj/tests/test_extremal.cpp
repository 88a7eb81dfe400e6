#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "egz/extremal.hpp"

using namespace egz;

namespace {

Sequence seq(const Group& g, const char* text) { return Sequence::parse(g, text); }

bool family_contains(const std::vector<std::pair<Sequence, ExtremalForm>>& family,
                     const Sequence& s) {
  return std::any_of(family.begin(), family.end(),
                     [&](const auto& p) { return p.first == s; });
}

}  // namespace

TEST_CASE("closed forms") {
  CHECK(closed_form_s(Group::make(GroupKind::Dihedral, 3)) == 9);
  CHECK(closed_form_s(Group::make(GroupKind::Dihedral, 4)) == 8);
  CHECK(closed_form_s(Group::make(GroupKind::Dihedral, 5)) == 15);
  CHECK(closed_form_s(Group::make(GroupKind::Dihedral, 6)) == 12);
  CHECK(closed_form_s(Group::make(GroupKind::Dicyclic, 2)) == 8);
  CHECK(closed_form_s(Group::make(GroupKind::Dicyclic, 3)) == 18);
  CHECK(closed_form_s(Group::make(GroupKind::Cyclic, 7)) == 13);
  CHECK(closed_form_e(Group::make(GroupKind::Dihedral, 3)) == 9);
  CHECK(closed_form_e(Group::make(GroupKind::Dihedral, 4)) == 12);
  CHECK(closed_form_e(Group::make(GroupKind::Dicyclic, 2)) == 12);
  CHECK(closed_form_e(Group::make(GroupKind::Cyclic, 7)) == 13);
  CHECK_THROWS_AS(closed_form_s(Group::make(GroupKind::Dihedral, 2)), std::invalid_argument);
}

TEST_CASE("applicable clauses") {
  using enum ExtremalMode;
  CHECK(applicable_tags(Group::make(GroupKind::Dihedral, 4), SExtremal) ==
        std::vector{FormTag::T12_1b});
  CHECK(applicable_tags(Group::make(GroupKind::Dihedral, 5), SExtremal).empty());
  CHECK(applicable_tags(Group::make(GroupKind::Dihedral, 3), EExtremal) ==
        std::vector{FormTag::T12_2b_2});
  CHECK(applicable_tags(Group::make(GroupKind::Dihedral, 6), EExtremal) ==
        std::vector{FormTag::T12_2b_1});
  CHECK(applicable_tags(Group::make(GroupKind::Dicyclic, 2), SExtremal) ==
        std::vector{FormTag::T13_1b_2});
  CHECK(applicable_tags(Group::make(GroupKind::Dicyclic, 2), EExtremal) ==
        std::vector{FormTag::T13_2b_2});
  CHECK(applicable_tags(Group::make(GroupKind::Dicyclic, 3), SExtremal).empty());
  CHECK(applicable_tags(Group::make(GroupKind::Cyclic, 5), SExtremal).empty());
}

TEST_CASE("tag names round trip") {
  for (FormTag t : {FormTag::T12_1b, FormTag::T12_2b_1, FormTag::T12_2b_2, FormTag::T13_1b_1,
                    FormTag::T13_1b_2, FormTag::T13_2b_1, FormTag::T13_2b_2, FormTag::L25_b}) {
    CHECK(form_tag_from_name(form_tag_name(t)) == t);
  }
  CHECK_FALSE(form_tag_from_name("bogus").has_value());
}

TEST_CASE("dihedral families") {
  Group d4 = Group::make(GroupKind::Dihedral, 4);
  auto fam = generate_family(d4, FormTag::T12_1b);
  CHECK(fam.size() == 16);
  CHECK(family_contains(fam, seq(d4, "a0^3 a1^3 a0t")));
  CHECK_FALSE(family_contains(fam, seq(d4, "a0^3 a2^3 a0t")));  // difference not coprime
  for (const auto& [s, f] : fam) {
    CHECK(s.length() == 7);
    CHECK_FALSE(has_product_one_subsequence(s, 4));  // generator soundness
  }

  Group d3 = Group::make(GroupKind::Dihedral, 3);
  auto fam3 = generate_family(d3, FormTag::T12_2b_2);
  CHECK(fam3.size() == 19);
  CHECK(family_contains(fam3, seq(d3, "a0^5 a0t a1t a2t")));
  for (const auto& [s, f] : fam3) {
    CHECK(s.length() == 8);
    CHECK_FALSE(has_product_one_subsequence(s, 6));
  }

  auto fam_e = generate_family(d4, FormTag::T12_2b_1);
  CHECK(fam_e.size() == 32);
  for (const auto& [s, f] : fam_e) {
    CHECK(s.length() == 11);
    CHECK_FALSE(has_product_one_subsequence(s, 8));
  }

  CHECK_THROWS_AS(generate_family(d3, FormTag::T12_1b), std::invalid_argument);
  CHECK_THROWS_AS(generate_family(d4, FormTag::T13_1b_2), std::invalid_argument);
}

TEST_CASE("dicyclic families") {
  Group q8 = Group::make(GroupKind::Dicyclic, 2);
  auto fam_s = generate_family(q8, FormTag::T13_1b_2);
  CHECK(family_contains(fam_s, seq(q8, "a0^3 a1^3 a0t")));
  for (const auto& [s, f] : fam_s) {
    CHECK(s.length() == 7);
    CHECK(s.support_size() == 3);
    CHECK_FALSE(has_product_one_subsequence(s, 4));
  }

  auto fam_e = generate_family(q8, FormTag::T13_2b_2);
  for (const auto& [s, f] : fam_e) {
    CHECK(s.length() == 11);
    CHECK_FALSE(has_product_one_subsequence(s, 8));
  }
  CHECK(family_contains(fam_e, seq(q8, "a0^7 a1^3 a0t")));
}

TEST_CASE("scaling structure of the even-n s-extremal family") {
  Group d4 = Group::make(GroupKind::Dihedral, 4);
  auto h = index2_cyclic_subgroup(d4);
  for (const auto& [s, f] : generate_family(d4, FormTag::T12_1b)) {
    Sequence sh = s.restricted(h.members);
    CHECK(sh.length() == 6);
    std::vector<Elem> support;
    for (Elem e = 0; e < d4.order(); ++e)
      if (sh.multiplicity(e) > 0) support.push_back(e);
    REQUIRE(support.size() == 2);
    CHECK(sh.multiplicity(support[0]) == 3);
    CHECK(sh.multiplicity(support[1]) == 3);
    CHECK(d4.element_order(d4.mul(support[0], d4.inverse(support[1]))) == 4);
  }
}

TEST_CASE("cyclic two-block family") {
  Group c4 = Group::make(GroupKind::Cyclic, 4);
  auto fam = generate_family(c4, FormTag::L25_b);
  CHECK(fam.size() == 8);
  for (const auto& [s, f] : fam) {
    CHECK(s.length() == 10);
    CHECK_FALSE(has_product_one_subsequence(s, 8));
    CHECK_FALSE(f.uses_presentation());
  }
}

TEST_CASE("classification of the worked examples") {
  Group d4 = Group::make(GroupKind::Dihedral, 4);
  auto form = classify(d4, seq(d4, "a0^3 a1^3 a0t"), ExtremalMode::SExtremal);
  REQUIRE(form.has_value());
  CHECK(form->tag == FormTag::T12_1b);
  CHECK(form->params == std::vector{0, 1, 0});

  CHECK_FALSE(classify(d4, seq(d4, "a0^3 a2^3 a0t"), ExtremalMode::SExtremal).has_value());
  CHECK(has_product_one_subsequence(seq(d4, "a0^3 a2^3 a0t"), 4));

  Group d3 = Group::make(GroupKind::Dihedral, 3);
  auto eform = classify(d3, seq(d3, "a0^5 a1^2 a0t"), ExtremalMode::EExtremal);
  REQUIRE(eform.has_value());
  CHECK(eform->tag == FormTag::T12_2b_2);
  CHECK(eform->shape == 1);
  CHECK(eform->params == std::vector{0, 1, 0});

  CHECK_THROWS_AS(classify(d4, seq(d4, "a0"), ExtremalMode::SExtremal), std::invalid_argument);
}

TEST_CASE("classify/generate round trip") {
  struct Case {
    GroupKind kind;
    int n;
    ExtremalMode mode;
  };
  for (auto [kind, n, mode] : {Case{GroupKind::Dihedral, 4, ExtremalMode::SExtremal},
                               Case{GroupKind::Dihedral, 3, ExtremalMode::EExtremal},
                               Case{GroupKind::Dicyclic, 2, ExtremalMode::SExtremal},
                               Case{GroupKind::Dicyclic, 2, ExtremalMode::EExtremal}}) {
    Group g = Group::make(kind, n);
    for (FormTag tag : applicable_tags(g, mode)) {
      for (const auto& [s, f] : generate_family(g, tag)) {
        auto back = classify(g, s, mode);
        REQUIRE(back.has_value());
      }
    }
  }
}

TEST_CASE("every member matches under some per-presentation search") {
  Group q8 = Group::make(GroupKind::Dicyclic, 2);
  auto pres = presentations_of(q8);
  for (const auto& [s, f] : generate_family(q8, FormTag::T13_1b_2)) {
    bool any = false;
    for (const auto& p : pres)
      if (match_form(q8, s, FormTag::T13_1b_2, p)) {
        any = true;
        break;
      }
    CHECK(any);
  }
}

TEST_CASE("maximal witnesses found by search classify successfully") {
  struct Case {
    GroupKind kind;
    int n;
    ExtremalMode mode;
  };
  for (auto [kind, n, mode] : {Case{GroupKind::Dihedral, 4, ExtremalMode::SExtremal},
                               Case{GroupKind::Dihedral, 4, ExtremalMode::EExtremal},
                               Case{GroupKind::Dicyclic, 2, ExtremalMode::EExtremal}}) {
    Group g = Group::make(kind, n);
    int forbidden = mode == ExtremalMode::SExtremal ? g.exponent() : g.order();
    auto report = max_witness_length(g, forbidden);
    REQUIRE(report.exhaustive);
    auto form = classify(g, report.witness, mode);
    CAPTURE(g.descriptor());
    CAPTURE(report.witness.str());
    CHECK(form.has_value());
  }
}

TEST_CASE("inverse verification on the cheap case") {
  Group d4 = Group::make(GroupKind::Dihedral, 4);
  auto check = verify_inverse_theorem(d4, ExtremalMode::SExtremal);
  CHECK(check.ok);
  CHECK(check.exhaustive);
  CHECK(check.witness_count == 16);
  CHECK(check.family_count == 16);
  CHECK(check.unexplained.empty());
  CHECK(check.overclaimed.empty());

  CHECK_THROWS_AS(verify_inverse_theorem(Group::make(GroupKind::Cyclic, 4),
                                         ExtremalMode::SExtremal, SearchConfig{}),
                  std::invalid_argument);
}
