#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsx/classify.hpp"
#include "lsx/propcheck.hpp"
#include "lsx/rng.hpp"

using namespace lsx;

namespace {

LogicalStructure g5() {
  return structure_from_entries(3, {{0b001, 0b011}, {0b011, 0b011}}, DefaultRule::Full);
}

}  // namespace

TEST_CASE("lim families") {
  const LogicalStructure s = g5();
  const LimSet pair = lim_pair(s, 0b001, 2);
  CHECK(pair.members == std::vector<Mask>{0b001, 0b011});
  CHECK(pair.maximal_elements == std::vector<Mask>{0b011});

  const LogicalStructure full2 = structure_from_rule(2, "full");
  const LimSet none = lim_nontrivial(full2, 0);
  CHECK(none.members.empty());
  CHECK(none.maximal_elements.empty());

  const LogicalStructure id2 = structure_from_rule(2, "identity");
  const LimSet avoid0 = lim_pair(id2, 0, 0);
  CHECK(avoid0.members == std::vector<Mask>{0b00, 0b10});
  CHECK(avoid0.maximal_elements == std::vector<Mask>{0b10});
}

TEST_CASE("classification of the three-element structure") {
  const ClassificationReport r = classify(g5());
  CHECK(!r.tarski);
  CHECK(r.reflexive);
  CHECK(!r.monotone);
  CHECK(r.lind1);
  CHECK(r.lind2);
  CHECK(r.lind3);
  CHECK(r.lind4);
  CHECK(!r.tl1);
  CHECK(!r.tl2);
  CHECK(!r.tl3);
  CHECK(!r.tl4);
  CHECK(r.witnesses.count("monotone") == 1);
  CHECK(r.witnesses.count("tarski") == 1);
}

TEST_CASE("classification of identity and constant structures") {
  const ClassificationReport id2 = classify(structure_from_rule(2, "identity"));
  for (const auto& name : ClassificationReport::verdict_order()) {
    CHECK(id2.verdict(name));
  }

  const ClassificationReport full3 = classify(structure_from_rule(3, "full"));
  CHECK(full3.tarski);
  CHECK(full3.lind1);  // vacuously: no nontrivial sets
  CHECK(full3.lind2);
  CHECK(full3.lind3);
  CHECK(full3.lind4);
  CHECK(full3.tl4);
}

TEST_CASE("characterization statement examples") {
  const LogicalStructure s = g5();
  CHECK(check_characterization(s, CharacterizationTheorem::Lindenbaum4, 2));
  CHECK(!check_characterization(s, CharacterizationTheorem::TarskiType, 3));
  const LogicalStructure id2 = structure_from_rule(2, "identity");
  CHECK(check_characterization(id2, CharacterizationTheorem::TarskiType, 4));

  CHECK_THROWS_AS(check_characterization(id2, CharacterizationTheorem::TarskiType, 5), Error);
  CHECK_THROWS_AS(check_characterization(id2, CharacterizationTheorem::Lindenbaum3, 0), Error);
}

TEST_CASE("every characterization statement agrees with the definitional verdict on all "
          "two-element tables") {
  long structures = 0;
  for_each_structure(2, [&structures](const LogicalStructure& s) {
    ++structures;
    const ClassificationReport r = classify(s);
    for (int i = 1; i <= 4; ++i) {
      CHECK(check_characterization(s, CharacterizationTheorem::TarskiType, i) == r.tarski);
    }
    for (int i = 1; i <= 3; ++i) {
      CHECK(check_characterization(s, CharacterizationTheorem::Lindenbaum4, i) == r.lind4);
      CHECK(check_characterization(s, CharacterizationTheorem::Lindenbaum3, i) == r.lind3);
    }
    for (int i = 1; i <= 5; ++i) {
      CHECK(check_characterization(s, CharacterizationTheorem::TarskiLindenbaum4, i) == r.tl4);
    }
  });
  CHECK(structures == 255);  // all tables except the empty-relation reject
}

TEST_CASE("on monotone structures Lindenbaum-IV and II coincide") {
  for (int index = 0; index < 60; ++index) {
    const GeneratorSpec spec{Strategy::Monotone, 3 + index % 2, 0x1234, 60};
    const ClassificationReport r = classify(generate(spec, index));
    CHECK(r.monotone);
    CHECK(r.lind4 == r.lind2);
  }
}

TEST_CASE("report invariants hold on random structures") {
  for (int index = 0; index < 80; ++index) {
    const GeneratorSpec spec{Strategy::Arbitrary, 2 + index % 3, 0x77, 80};
    const ClassificationReport r = classify(generate(spec, index));
    CHECK(r.tarski == (r.reflexive && r.monotone && r.transitive));
    if (r.lind4) CHECK(r.lind2);
    if (r.lind2) CHECK(r.lind1);
    if (r.lind3) CHECK(r.lind1);
    CHECK(r.tl1 == (r.tarski && r.lind1));
    CHECK(r.tl2 == r.tl4);  // equal by the monotone bridge once Tarski holds
  }
}
