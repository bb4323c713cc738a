#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lsx {

/// A subset of a carrier {0,...,n-1}, encoded as a bit pattern: bit i set
/// iff element i is in the set. The owning structure fixes the width n.
using Mask = std::uint32_t;

/// Dense consequence tables hold 2^n entries, so carriers are capped.
constexpr int kMaxCarrier = 16;

enum class ErrorKind {
  Width,            // subset bits outside the carrier width
  Index,            // element index outside the carrier
  Rule,             // unknown construction rule
  EmptyRelation,    // induced relation is empty (rejected at construction)
  EmptyValuations,  // bivaluation set must be nonempty
  Budget,           // exhaustive check would exceed the step budget
  Parse,            // structure/arrow file syntax error
  Domain,           // operation not applicable to the given input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }
inline Mask element_bit(int i) { return Mask{1} << i; }
inline bool contains(Mask set, int i) { return (set >> i) & 1u; }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
int popcount(Mask m);

std::string format_subset(Mask m);  // "{0 2}" ; "{}" for the empty set

/// Exhaustive checks estimate their step count up front and refuse to run
/// past the budget. Env LSX_BUDGET overrides the default of 2^23 steps.
std::uint64_t step_budget();
void require_budget(double estimated_steps, std::string_view check_name);

/// A finite logical structure: carrier {0..n-1} plus the total consequence
/// map C(gamma) for every subset gamma. The table is arbitrary; nothing
/// about closure or monotonicity is assumed. The induced relation is
/// guaranteed nonempty by every constructor.
struct LogicalStructure {
  int n = 0;
  std::vector<Mask> table;  // table[gamma] = C(gamma), size 2^n
  std::string origin;       // "explicit-table" | "rule:NAME" | "bivaluation-induced"

  Mask full() const { return full_mask(n); }
  std::uint32_t subset_count() const { return Mask{1} << n; }

  void check_width(Mask gamma) const;
  void check_element(int alpha) const;

  Mask consequences(Mask gamma) const;
  bool derives(Mask gamma, int alpha) const;

  /// FNV-1a over the carrier size and table, as a hex string.
  std::string digest() const;
};

/// A nonempty set of bivaluations over {0..n-1}. Each valuation is stored
/// as the subset it is the characteristic function of: v satisfies gamma
/// iff gamma is a subset of v's bits.
struct BivaluationSet {
  int width = 0;
  std::vector<Mask> valuations;  // deduplicated, ascending
};

BivaluationSet make_bivaluation_set(int width, std::vector<Mask> valuations);

inline bool valuation_satisfies(Mask v, Mask gamma) { return subset_of(gamma, v); }

/// Semantic consequence for a valuation family. The empty family yields the
/// full carrier (vacuous universal quantification); callers that must reject
/// empty families do so before calling.
Mask induced_consequences(int n, const std::vector<Mask>& valuations, Mask gamma);

/// A total binary connective on the carrier.
struct ArrowTable {
  int n = 0;
  std::vector<int> op;  // op[a*n + b] = arrow(a, b)

  int at(int a, int b) const;
};

ArrowTable make_arrow(int n, std::vector<int> op);
ArrowTable arrow_first_projection(int n);
ArrowTable arrow_second_projection(int n);
ArrowTable arrow_constant(int n, int c);

struct TableEntry {
  Mask gamma = 0;
  Mask value = 0;

  bool operator==(const TableEntry&) const = default;
};

enum class DefaultRule { Identity, Full, NamedSubset };

LogicalStructure structure_from_table(int n, std::vector<Mask> table,
                                      std::string origin = "explicit-table");
LogicalStructure structure_from_entries(int n, const std::vector<TableEntry>& entries,
                                        DefaultRule default_rule, Mask named_default = 0);
/// Registered rules: "identity", "full" (alias "full-constant"), and
/// "empty" (alias "empty-then-reject"), which always fails the nonempty
/// invariant and exists to exercise that error path.
LogicalStructure structure_from_rule(int n, std::string_view rule_name);
LogicalStructure structure_from_bivaluations(const BivaluationSet& vals);

/// True iff a's relation is contained in b's (same carrier required).
bool subrelation(const LogicalStructure& a, const LogicalStructure& b);
bool relation_equal(const LogicalStructure& a, const LogicalStructure& b);

struct RelationGap {
  Mask gamma = 0;
  int alpha = 0;
};

/// Least (gamma, alpha) derivable in b but not in a, if any.
std::optional<RelationGap> relation_gap(const LogicalStructure& a, const LogicalStructure& b);

/// subrelation(a, b) plus a witness pair in b but not a.
bool strict_subrelation(const LogicalStructure& a, const LogicalStructure& b,
                        RelationGap* witness = nullptr);

}  // namespace lsx
