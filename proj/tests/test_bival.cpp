#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lsx/bival.hpp"
#include "lsx/classify.hpp"
#include "lsx/propcheck.hpp"

using namespace lsx;

namespace {

LogicalStructure g5() {
  return structure_from_entries(3, {{0b001, 0b011}, {0b011, 0b011}}, DefaultRule::Full);
}

}  // namespace

TEST_CASE("extraction of the distinguished valuation families") {
  const LogicalStructure id2 = structure_from_rule(2, "identity");
  CHECK(extract(id2, ValuationFamily::SCS).valuations == std::vector<Mask>{0b01, 0b10});

  const LogicalStructure full3 = structure_from_rule(3, "full");
  CHECK(extract(full3, ValuationFamily::SCS).empty());

  // the only saturated set of the three-element structure is not strongly closed
  CHECK(extract(g5(), ValuationFamily::SCS).empty());
  CHECK(extract(g5(), ValuationFamily::SCS_STAR).empty());

  // every subset is closed under identity
  const auto suszko = extract(id2, ValuationFamily::SUSZKO_CLOSED);
  CHECK(suszko.valuations == std::vector<Mask>{0b00, 0b01, 0b10, 0b11});
}

TEST_CASE("scs-star buckets satisfy their defining predicates") {
  const LogicalStructure id3 = structure_from_rule(3, "identity");
  const auto star = extract(id3, ValuationFamily::SCS_STAR);
  CHECK(!star.empty());
  CHECK(!star.buckets.empty());
  for (const auto& bucket : star.buckets) {
    CHECK(id3.derives(element_bit(bucket.beta), bucket.alpha));
    for (Mask member : bucket.members) {
      CHECK(check_set(id3, SetProperty::alpha_saturated(bucket.beta), member).holds);
      CHECK(check_set(id3, SetProperty::strongly_closed(), member).holds);
      CHECK(!id3.derives(member, bucket.alpha));
    }
  }
  // SCS* sits inside SCS
  const auto scs = extract(id3, ValuationFamily::SCS);
  for (Mask v : star.valuations) {
    CHECK(std::find(scs.valuations.begin(), scs.valuations.end(), v) != scs.valuations.end());
  }
}

TEST_CASE("soundness and completeness comparisons") {
  const LogicalStructure id2 = structure_from_rule(2, "identity");
  const auto scs = extract(id2, ValuationFamily::SCS);
  const CompareReport adequate = compare_valuations(id2, scs.valuations);
  CHECK(adequate.sound);
  CHECK(adequate.complete);

  // a single all-ones valuation is sound but not complete for identity
  const CompareReport partial = compare(id2, make_bivaluation_set(2, {0b11}));
  CHECK(partial.sound);
  CHECK(!partial.complete);
  REQUIRE(partial.complete_gap.has_value());
  // the pair named in the expectations: {0} semantically yields 1
  CHECK(induced_consequences(2, {0b11}, 0b01) == 0b11);
  CHECK(!id2.derives(0b01, 1));

  const LogicalStructure full2 = structure_from_rule(2, "full");
  const CompareReport total = compare(full2, make_bivaluation_set(2, {0b11}));
  CHECK(total.sound);
  CHECK(total.complete);

  CHECK_THROWS_AS(compare(id2, BivaluationSet{2, {}}), Error);
}

TEST_CASE("empty families use the total-relation convention") {
  const CompareReport r = compare_valuations(g5(), {});
  CHECK(r.empty_family);
  CHECK(r.sound);      // everything is below the total relation
  CHECK(!r.complete);  // the three-element structure is not total
}

TEST_CASE("minimality probe on identity structures") {
  const LogicalStructure id2 = structure_from_rule(2, "identity");
  const MinimalityReport r2 = minimality_probe(id2);
  CHECK(r2.ok());
  CHECK(r2.deletions.size() == 2);
  for (const auto& d : r2.deletions) {
    CHECK(d.strict);
    CHECK(!d.remainder_empty);
    CHECK(d.gap.has_value());
  }
  // dropping chi_{0}: no remaining valuation satisfies {0}, so {0} yields 1
  CHECK(induced_consequences(2, {0b10}, 0b01) == 0b11);

  const MinimalityReport r3 = minimality_probe(structure_from_rule(3, "identity"));
  CHECK(r3.ok());
  CHECK(r3.deletions.size() == 3);

  // a TL-4 structure whose SCS is a single valuation: the deletion leaves the
  // empty family, and strictness comes from the total-relation convention
  const LogicalStructure id1 = structure_from_rule(1, "identity");
  CHECK(extract(id1, ValuationFamily::SCS).valuations == std::vector<Mask>{0});
  const MinimalityReport r1 = minimality_probe(id1);
  CHECK(r1.ok());
  REQUIRE(r1.deletions.size() == 1);
  CHECK(r1.deletions[0].remainder_empty);
  CHECK(r1.deletions[0].strict);
}

TEST_CASE("minimality probe preconditions") {
  CHECK_THROWS_AS(minimality_probe(g5()), Error);  // not TL-4
  CHECK_THROWS_AS(minimality_probe(structure_from_rule(3, "full")), Error);  // SCS empty
}

TEST_CASE("representation checks") {
  const RepresentationReport id2 = representation_check(structure_from_rule(2, "identity"));
  CHECK(id2.scs_star_adequate);
  CHECK(id2.suszko_adequate);
  CHECK(id2.ok());

  const RepresentationReport g = representation_check(g5());
  CHECK(!g.scs_star_adequate);  // SCS* is empty and the structure is not total
  CHECK(!g.tl4);
  CHECK(!g.suszko_adequate);
  CHECK(!g.tarski);
  CHECK(g.ok());

  const RepresentationReport full2 = representation_check(structure_from_rule(2, "full"));
  CHECK(full2.suszko_adequate);
  CHECK(full2.tarski);
  CHECK(full2.ok());
}

TEST_CASE("soundness for SCS is unconditional") {
  for (int index = 0; index < 120; ++index) {
    const GeneratorSpec spec{Strategy::Arbitrary, 2 + index % 4, 0xFACE, 120};
    const LogicalStructure s = generate(spec, index);
    const auto scs = extract(s, ValuationFamily::SCS);
    CHECK(compare_valuations(s, scs.valuations).sound);
  }
}

TEST_CASE("the closed-set candidate decides the Tarski property") {
  for (int index = 0; index < 120; ++index) {
    const Strategy strat = index % 2 == 0 ? Strategy::Arbitrary : Strategy::BivaluationInduced;
    const GeneratorSpec spec{strat, 2 + index % 3, 0x5EED, 120};
    const LogicalStructure s = generate(spec, index);
    CHECK(suszko_candidate_adequate(s) == classify(s).tarski);
  }
}

TEST_CASE("relmax equals scs on finite Tarski structures") {
  for (int index = 0; index < 80; ++index) {
    const GeneratorSpec spec{Strategy::BivaluationInduced, 3 + index % 3, 0x1DEA, 80};
    const LogicalStructure s = generate(spec, index);
    CHECK(extract(s, ValuationFamily::RELMAX).valuations ==
          extract(s, ValuationFamily::SCS).valuations);
  }
}
