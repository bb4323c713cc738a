#pragma once

#include <map>
#include <string>
#include <vector>

#include "lsx/core.hpp"
#include "lsx/properties.hpp"

namespace lsx {

/// The extensions of gamma that avoid alpha (pair kind), or the nontrivial
/// extensions of gamma, together with the inclusion-maximal ones.
struct LimSet {
  bool pair_kind = true;
  Mask gamma = 0;
  int alpha = -1;  // pair kind only
  std::vector<Mask> members;           // ascending by bit pattern
  std::vector<Mask> maximal_elements;  // subset of members
};

LimSet lim_pair(const LogicalStructure& s, Mask gamma, int alpha);
LimSet lim_nontrivial(const LogicalStructure& s, Mask gamma);

/// Verdicts for every classification predicate, with a counterexample for
/// each false one. Key order is fixed so reports are reproducible.
struct ClassificationReport {
  bool reflexive = false;
  bool monotone = false;
  bool transitive = false;
  bool cut = false;
  bool mixed_cut = false;
  bool tarski = false;
  bool lind1 = false, lind2 = false, lind3 = false, lind4 = false;
  bool tl1 = false, tl2 = false, tl3 = false, tl4 = false;

  std::map<std::string, Witness> witnesses;  // keyed by verdict name, false verdicts only

  static const std::vector<std::string>& verdict_order();
  bool verdict(const std::string& name) const;
};

/// Decides every verdict by the literal definition, quantifying over all
/// subsets and elements.
ClassificationReport classify(const LogicalStructure& s);

/// Characterization statements evaluated literally and independently of
/// classify(); used to cross-check the classifier against the equivalent
/// formulations. Statement indices are 1-based.
enum class CharacterizationTheorem {
  TarskiType,           // 4 statements
  Lindenbaum4,          // 3 statements
  Lindenbaum3,          // 3 statements
  TarskiLindenbaum4,    // 5 statements
};

int statement_count(CharacterizationTheorem thm);
std::string characterization_name(CharacterizationTheorem thm);

bool check_characterization(const LogicalStructure& s, CharacterizationTheorem thm,
                            int statement);

}  // namespace lsx
