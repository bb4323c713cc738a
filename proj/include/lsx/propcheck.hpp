#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lsx/classify.hpp"
#include "lsx/core.hpp"

namespace lsx {

enum class Strategy { Arbitrary, Monotone, BivaluationInduced, Arrowed };

std::string strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);

/// Generation is a pure function of (strategy, n, seed, index); rejected
/// draws (empty relation) are retried within the same stream, so the result
/// is still deterministic.
struct GeneratorSpec {
  Strategy strategy = Strategy::Arbitrary;
  int n = 3;
  std::uint64_t seed = 0;
  int count = 0;
};

LogicalStructure generate(const GeneratorSpec& spec, int index);
ArrowTable generate_arrow(const GeneratorSpec& spec, int index);

/// One corpus entry: a structure plus the arrow tables the arrow-dependent
/// theorems are evaluated against.
struct CorpusItem {
  LogicalStructure structure;
  std::vector<ArrowTable> arrows;
  std::string label;
};

/// Deterministic corpus over a size range: index i gets n = size_min + (i mod
/// span). Every item carries canonical arrows (projections, a constant) plus
/// a seeded random one.
std::vector<CorpusItem> build_corpus(Strategy strategy, int count, int size_min, int size_max,
                                     std::uint64_t seed);

/// Fixed structures whose shapes make rarely-fired hypotheses fire (identity,
/// constant, the three-element gallery structure, two arrow exhibits).
std::vector<CorpusItem> canonical_exhibits();

/// Everything the theorem checks need about one structure, computed once per
/// corpus item.
struct StructureAnalysis {
  ClassificationReport cls;
  std::vector<Mask> sat_alphas;     // bit a set: the subset is a-saturated
  std::vector<Mask> relmax_alphas;  // bit a set: relatively maximal in a
  std::vector<char> strongly_closed;
  std::vector<char> max_nontrivial;
  std::vector<Mask> scs;            // strongly closed and saturated subsets
  std::vector<Mask> scs_star;
  std::vector<Mask> relmax_family;
  std::vector<Mask> suszko_closed;  // the closed subsets
};

StructureAnalysis analyze_structure(const LogicalStructure& s);

struct TheoremContext {
  const LogicalStructure* s = nullptr;
  const ArrowTable* arrow = nullptr;  // null unless the entry needs one
  const StructureAnalysis* analysis = nullptr;
};

/// A registry entry asserts: whenever the hypothesis holds for a corpus item,
/// the conclusion must hold. Conclusions report how many inner instances they
/// checked, so vacuous passes stay visible.
struct TheoremCheckOutcome {
  long instances = 0;
  bool ok = true;
  std::string witness;  // set when !ok
};

struct TheoremEntry {
  std::string id;       // "T01".."T33"
  std::string summary;  // what the statement says
  bool needs_arrow = false;
  std::function<bool(const TheoremContext&)> hypothesis;
  std::function<TheoremCheckOutcome(const TheoremContext&)> conclusion;
};

const std::vector<TheoremEntry>& theorem_registry();
const TheoremEntry* find_theorem(const std::string& id);
std::vector<std::string> all_theorem_ids();

struct TheoremFailure {
  std::string theorem_id;
  std::string item_label;
  std::string witness;
  int original_carrier = 0;
  int minimized_carrier = 0;
};

struct TheoremStats {
  std::string id;
  std::string summary;
  long hypothesis_satisfied = 0;
  long conclusions_checked = 0;
  long failures = 0;
};

struct RegistryReport {
  std::vector<TheoremStats> stats;       // in id order
  std::vector<TheoremFailure> failures;  // ordered by corpus index
  long items = 0;

  bool all_passed() const { return failures.empty(); }
  std::vector<std::string> uncovered() const;  // ids whose hypothesis never fired
};

struct RegistryOptions {
  std::vector<std::string> ids;  // empty = all
  bool minimize_witnesses = true;
  int threads = 0;  // 0 = pick automatically
};

RegistryReport run_registry(const std::vector<CorpusItem>& corpus, const RegistryOptions& options);

/// Runs a single hand-built entry over the corpus; used to exercise the
/// failure path, since the registered theorems cannot fail on a correct
/// implementation.
RegistryReport run_custom_entry(const std::vector<CorpusItem>& corpus, const TheoremEntry& entry,
                                bool minimize_witnesses = true);

/// All consequence tables over a carrier of size n (minus the empty-relation
/// reject). Practical for n <= 2 only: there are (2^n)^(2^n) candidates.
void for_each_structure(int n, const std::function<void(const LogicalStructure&)>& fn);

/// Substructure on the kept elements: consequences are intersected with the
/// kept set and reindexed.
LogicalStructure restrict_structure(const LogicalStructure& s, Mask keep);

}  // namespace lsx
