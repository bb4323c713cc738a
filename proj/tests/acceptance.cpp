// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Time limits are asserted alongside the content checks.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lsx/bival.hpp"
#include "lsx/classify.hpp"
#include "lsx/format.hpp"
#include "lsx/gallery.hpp"
#include "lsx/ordinal.hpp"
#include "lsx/propcheck.hpp"
#include "lsx/rng.hpp"

using namespace lsx;

namespace {

int failures = 0;

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool ok = true;

  Criterion(int number, std::string title, double limit_seconds)
      : number(number), title(std::move(title)), limit_seconds(limit_seconds) {}

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "  - " << what << "\n";
    }
  }

  void finish() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > limit_seconds) {
      ok = false;
      detail << "  - exceeded the time limit of " << limit_seconds << " s\n";
    }
    std::printf("[%d] %s  %s (%.2f s, limit %.0f s)\n", number, ok ? "PASS" : "FAIL",
                title.c_str(), elapsed, limit_seconds);
    if (!ok) {
      std::fputs(detail.str().c_str(), stdout);
      ++failures;
    }
  }
};

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(LSX_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  CliResult result;
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture(const std::string& name) { return std::string(LSX_FIXTURES) + "/" + name; }

void criterion_1_g5() {
  Criterion c(1, "three-element structure: classification matches the published verdicts", 1.0);
  const StructureFile file = load_structure_file(fixture("g5.ls"));
  const ClassificationReport r = classify(to_structure(file));
  c.require(!r.tarski, "tarski should be false");
  c.require(r.lind1 && r.lind2 && r.lind3 && r.lind4, "all four Lindenbaum verdicts should hold");
  c.require(!r.tl1 && !r.tl2 && !r.tl3 && !r.tl4, "all four TL verdicts should fail");
  c.finish();
}

void criterion_2_exhaustive_n2() {
  Criterion c(2, "all 255 two-element tables: characterizations agree with definitions", 10.0);
  long disagreements = 0;
  long structures = 0;
  for_each_structure(2, [&](const LogicalStructure& s) {
    ++structures;
    const ClassificationReport r = classify(s);
    for (int i = 1; i <= 4; ++i) {
      if (check_characterization(s, CharacterizationTheorem::TarskiType, i) != r.tarski) {
        ++disagreements;
      }
    }
    for (int i = 1; i <= 3; ++i) {
      if (check_characterization(s, CharacterizationTheorem::Lindenbaum4, i) != r.lind4) {
        ++disagreements;
      }
      if (check_characterization(s, CharacterizationTheorem::Lindenbaum3, i) != r.lind3) {
        ++disagreements;
      }
    }
    for (int i = 1; i <= 5; ++i) {
      if (check_characterization(s, CharacterizationTheorem::TarskiLindenbaum4, i) != r.tl4) {
        ++disagreements;
      }
    }
  });
  c.require(structures == 255, "expected 255 candidate tables");
  c.require(disagreements == 0,
            "found " + std::to_string(disagreements) + " statement disagreements");
  c.finish();
}

void criterion_3_registry() {
  Criterion c(3, "theorem checks over a 5000+ structure corpus, full coverage", 120.0);
  std::vector<CorpusItem> corpus = build_corpus(Strategy::Arbitrary, 2000, 2, 6, 20240831);
  for (auto& item : build_corpus(Strategy::Monotone, 1500, 2, 6, 20240832)) {
    corpus.push_back(std::move(item));
  }
  for (auto& item : build_corpus(Strategy::BivaluationInduced, 1600, 2, 6, 20240833)) {
    corpus.push_back(std::move(item));
  }
  for (auto& item : canonical_exhibits()) corpus.push_back(std::move(item));
  c.require(corpus.size() >= 5000, "corpus too small");

  RegistryOptions opts;  // all theorems
  const RegistryReport report = run_registry(corpus, opts);
  c.require(report.all_passed(), "registry failures found");
  for (const auto& f : report.failures) {
    c.require(false, f.theorem_id + " failed on " + f.item_label + ": " + f.witness);
  }
  const auto uncovered = report.uncovered();
  for (const auto& id : uncovered) {
    c.require(false, "hypothesis never fired for " + id);
  }
  c.finish();
}

void criterion_4_tl4_semantics() {
  Criterion c(4, "valuation semantics on 500 induced structures", 60.0);
  const auto corpus = build_corpus(Strategy::BivaluationInduced, 500, 3, 6, 77001);
  long adequacy = 0, representation = 0, relmax_eq = 0, minimality = 0;
  for (const auto& item : corpus) {
    const LogicalStructure& s = item.structure;
    const auto scs = extract(s, ValuationFamily::SCS).valuations;
    const auto cmp = compare_valuations(s, scs);
    if (!cmp.sound || !cmp.complete) { ++adequacy; continue; }

    const auto star = extract(s, ValuationFamily::SCS_STAR).valuations;
    const auto cmp_star = compare_valuations(s, star);
    if (!cmp_star.sound || !cmp_star.complete) ++representation;

    if (extract(s, ValuationFamily::RELMAX).valuations != scs) ++relmax_eq;

    for (std::size_t i = 0; i < scs.size(); ++i) {
      std::vector<Mask> rest;
      for (std::size_t j = 0; j < scs.size(); ++j) {
        if (j != i) rest.push_back(scs[j]);
      }
      const auto thin = compare_valuations(s, rest);
      if (!thin.sound || thin.complete) {
        ++minimality;
        break;
      }
    }
  }
  c.require(adequacy == 0, std::to_string(adequacy) + " adequacy failures");
  c.require(representation == 0, std::to_string(representation) + " representation failures");
  c.require(relmax_eq == 0, std::to_string(relmax_eq) + " RELMAX/SCS mismatches");
  c.require(minimality == 0, std::to_string(minimality) + " minimality failures");
  c.finish();
}

void criterion_5_gallery() {
  Criterion c(5, "gallery claim scripts, including the ordinal computations", 5.0);
  for (const auto& id : gallery::gallery_ids()) {
    const auto report = gallery::run_claims(id);
    for (const auto& claim : report.claims) {
      if (!claim.pass) c.require(false, claim.id + " failed: " + claim.detail);
    }
  }
  using gallery::DownsetOrd;
  c.require(gallery::symbolic_equal(
                gallery::gallery_consequences("G6", DownsetOrd{Ordinal::nat(1)}),
                DownsetOrd{Ordinal::nat(1)}),
            "C(downset 1) should be downset 1");
  c.require(gallery::symbolic_equal(
                gallery::gallery_consequences("G6", DownsetOrd{Ordinal::omega()}),
                DownsetOrd{Ordinal::omega_plus(1)}),
            "C(downset w) should be downset w+1");
  const ClassificationReport g5 = classify(gallery::g5_structure());
  c.require(!g5.tarski && g5.lind3 && g5.lind4,
            "general classifier disagrees with the finite gallery item");
  c.finish();
}

void criterion_6_ordinal_oracle() {
  Criterion c(6, "least-containing-ordinal arithmetic matches the truncated model", 5.0);
  const TruncatedOrdinalModel model{64};
  SplitMix64 gen(0xACCE57);
  long mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Ordinal> elems;
    const int size = static_cast<int>(gen.below(7));
    for (int i = 0; i < size; ++i) {
      elems.push_back(Ordinal{static_cast<int>(gen.below(2)), static_cast<int>(gen.below(63))});
    }
    if (gallery::ord_least_containing(gallery::FiniteOrds{elems}) !=
        model.least_containing(elems)) {
      ++mismatches;
    }
  }
  c.require(mismatches == 0, std::to_string(mismatches) + " oracle mismatches");
  c.finish();
}

void criterion_7_cli() {
  Criterion c(7, "file round-trips and the exit-code contract", 30.0);

  for (const std::string name : {"g5.ls", "id2.ls", "id3.ls", "full3.ls", "named_default.ls"}) {
    const StructureFile once = load_structure_file(fixture(name));
    const StructureFile twice = parse_structure_file(serialize_structure_file(once));
    c.require(once == twice, name + " does not round-trip");
    c.require(to_structure(once).table == to_structure(twice).table,
              name + " round-trip changes the structure");
  }

  c.require(run_cli("classify " + fixture("g5.ls") + " --json").exit_code == 0,
            "pass case should exit 0");
  c.require(run_cli("check " + fixture("g5.ls") + " --property monotone").exit_code == 1,
            "counterexample case should exit 1");
  c.require(run_cli("classify " + fixture("bad_parse.ls")).exit_code == 2,
            "parse-error case should exit 2");

  // a conclusion the registry only asserts under a hypothesis, forced onto a
  // structure violating it: the failure must surface as a counterexample
  TheoremEntry fake;
  fake.id = "X01";
  fake.summary = "saturated sets are closed (hypothesis dropped)";
  fake.hypothesis = [](const TheoremContext&) { return true; };
  fake.conclusion = [](const TheoremContext& ctx) {
    for (Mask g = 0; g <= ctx.s->full(); ++g) {
      if (ctx.analysis->sat_alphas[g] != 0 && ctx.s->table[g] != g) {
        return TheoremCheckOutcome{1, false, "saturated set " + format_subset(g) + " not closed"};
      }
    }
    return TheoremCheckOutcome{1, true, ""};
  };
  // hand-built structure: {1} is 0-saturated but not closed (and cut fails)
  CorpusItem bad;
  bad.structure = structure_from_table(2, {0b00, 0b11, 0b00, 0b11});
  bad.label = "hand-built";
  const RegistryReport fake_report = run_custom_entry({bad}, fake);
  c.require(!fake_report.all_passed(), "the forced conclusion should fail");
  c.require(fake_report.failures.size() == 1 && !fake_report.failures[0].witness.empty(),
            "failure should carry a witness");
  c.finish();
}

}  // namespace

int main() {
  criterion_1_g5();
  criterion_2_exhaustive_n2();
  criterion_3_registry();
  criterion_4_tl4_semantics();
  criterion_5_gallery();
  criterion_6_ordinal_oracle();
  criterion_7_cli();
  if (failures == 0) {
    std::puts("acceptance: all criteria passed");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
