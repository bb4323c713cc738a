#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "lsx/core.hpp"
#include "lsx/ordinal.hpp"

namespace lsx::gallery {

// Symbolic descriptors for subsets of the infinite gallery carriers. Only
// the shapes the arguments actually traverse are representable; anything
// else is rejected rather than approximated. In particular, cofinal subsets
// of the ordinal carrier (e.g. the tail {w, w+1, ...}) have no containing
// ordinal inside the carrier and are only representable as an opaque
// MarkedInfinite, on which consequence queries raise an error.

struct FiniteNats {
  std::vector<std::uint64_t> elems;  // sorted, unique
};

struct CoFiniteNats {
  std::vector<std::uint64_t> excluded;  // sorted, unique; the set is N minus these
};

struct MultiplesOf {
  std::uint64_t modulus = 2;  // >= 2; the set m, 2m, 3m, ... inside Z+
};

struct FiniteOrds {
  std::vector<Ordinal> elems;  // sorted, unique
};

struct DownsetOrd {
  Ordinal bound;  // { x : x < bound }
};

struct DownsetPlus {
  Ordinal bound;
  std::vector<Ordinal> extras;  // sorted, unique, each >= bound
};

struct MarkedInfinite {
  std::string tag;  // carrier-specific: "lambda0", "co-lambda0", "infinite", "cofinal-tail"
};

struct FullCarrier {};

using SymbolicSet = std::variant<FiniteNats, CoFiniteNats, MultiplesOf, FiniteOrds, DownsetOrd,
                                 DownsetPlus, MarkedInfinite, FullCarrier>;

SymbolicSet canonical(SymbolicSet set);
std::string to_string(const SymbolicSet& set);
bool symbolic_equal(const SymbolicSet& a, const SymbolicSet& b);

/// Least ordinal whose downset contains the described set. Defined for the
/// bounded ordinal-carrier shapes; a cofinal descriptor has no containing
/// ordinal and raises an error.
Ordinal ord_least_containing(const SymbolicSet& set);

/// How an infinite quantifier in a claim was reduced to a finite procedure.
enum class Discharge { Exhaustive, CaseAnalysis, SymmetryReduction };

std::string discharge_name(Discharge d);

struct ClaimResult {
  std::string id;
  std::string description;
  Discharge discharge = Discharge::Exhaustive;
  bool pass = false;
  std::string detail;
};

struct ClaimReport {
  std::string gallery_id;
  std::vector<ClaimResult> claims;

  bool all_pass() const;
};

/// Stable gallery identifiers, in order.
const std::vector<std::string>& gallery_ids();
bool is_gallery_id(const std::string& id);
std::string resolve_gallery_id(const std::string& id_or_prefix);  // accepts "G6" for "G6-..."
std::string gallery_carrier(const std::string& id);
std::string gallery_rule(const std::string& id);

/// Applies the item's published consequence rule to a symbolic set.
SymbolicSet gallery_consequences(const std::string& id, const SymbolicSet& gamma);

/// Runs every claim script for the item. Failing claims are report entries,
/// never exceptions.
ClaimReport run_claims(const std::string& id);

/// The finite three-element gallery structure, usable with every general
/// module.
LogicalStructure g5_structure();

/// Finite restriction of a natural-number gallery rule to the window
/// {0..window_size-1}: consequences are computed by the rule and intersected
/// with the window. Defined for G1-G4.
LogicalStructure windowed_structure(const std::string& id, int window_size);

}  // namespace lsx::gallery
