#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsx/core.hpp"

namespace lsx {

/// Counterexample data for a failed check. Slots are filled as applicable;
/// the note explains which condition broke.
struct Witness {
  std::optional<Mask> gamma;
  std::optional<Mask> sigma;
  std::optional<int> alpha;
  std::optional<int> beta;
  std::string note;

  std::string to_string() const;
};

struct CheckResult {
  bool holds = false;
  std::optional<Witness> witness;  // set on most failures

  explicit operator bool() const { return holds; }
};

/// Predicates on a single subset of the carrier. The maximal-* tags mean
/// inclusion-maximal among sets with the base property.
struct SetProperty {
  enum class Tag {
    Closed,
    StronglyClosed,
    Trivial,
    Nontrivial,
    AlphaSaturated,
    Saturated,
    RelativelyMaximal,
    MaximalNontrivial,
    MaximalSaturated,
    MaximalAlphaSaturated,
    ArrowSaturated,
  };

  Tag tag;
  int alpha = -1;                    // for the alpha-parameterized tags
  const ArrowTable* arrow = nullptr; // for ArrowSaturated

  static SetProperty closed() { return {Tag::Closed}; }
  static SetProperty strongly_closed() { return {Tag::StronglyClosed}; }
  static SetProperty trivial() { return {Tag::Trivial}; }
  static SetProperty nontrivial() { return {Tag::Nontrivial}; }
  static SetProperty alpha_saturated(int alpha) { return {Tag::AlphaSaturated, alpha}; }
  static SetProperty saturated() { return {Tag::Saturated}; }
  static SetProperty relatively_maximal(int alpha) { return {Tag::RelativelyMaximal, alpha}; }
  static SetProperty maximal_nontrivial() { return {Tag::MaximalNontrivial}; }
  static SetProperty maximal_saturated() { return {Tag::MaximalSaturated}; }
  static SetProperty maximal_alpha_saturated(int alpha) {
    return {Tag::MaximalAlphaSaturated, alpha};
  }
  static SetProperty arrow_saturated(const ArrowTable& arrow) {
    return {Tag::ArrowSaturated, -1, &arrow};
  }

  std::string name() const;
};

/// Predicates on the whole structure.
struct StructureProperty {
  enum class Tag {
    Reflexive,
    Monotone,
    Transitive,
    TarskiByDef,
    Cut,
    MixedCut,
    Finitary,
    ModusPonens,
  };

  Tag tag;
  const ArrowTable* arrow = nullptr;  // for ModusPonens

  static StructureProperty reflexive() { return {Tag::Reflexive}; }
  static StructureProperty monotone() { return {Tag::Monotone}; }
  static StructureProperty transitive() { return {Tag::Transitive}; }
  static StructureProperty tarski_by_def() { return {Tag::TarskiByDef}; }
  static StructureProperty cut() { return {Tag::Cut}; }
  static StructureProperty mixed_cut() { return {Tag::MixedCut}; }
  static StructureProperty finitary() { return {Tag::Finitary}; }
  static StructureProperty modus_ponens(const ArrowTable& arrow) {
    return {Tag::ModusPonens, &arrow};
  }

  std::string name() const;
};

/// Exact decision by full quantifier expansion over the finite carrier.
CheckResult check_set(const LogicalStructure& s, const SetProperty& prop, Mask gamma);
CheckResult check_structure(const LogicalStructure& s, const StructureProperty& prop);

/// All subsets with the property, ascending by bit pattern.
std::vector<Mask> enumerate_sets(const LogicalStructure& s, const SetProperty& prop);

/// xi(alpha) = { arrow(alpha, beta) : beta in carrier }, as a subset mask.
Mask xi(const LogicalStructure& s, const ArrowTable& arrow, int alpha);

/// Name lookup used by the CLI; parameterized tags take alpha/arrow later.
std::optional<SetProperty::Tag> set_property_tag_from_name(std::string_view name);
std::optional<StructureProperty::Tag> structure_property_tag_from_name(std::string_view name);

}  // namespace lsx
