#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsx/core.hpp"
#include "lsx/properties.hpp"

namespace lsx {

/// The distinguished valuation families. Each valuation is the
/// characteristic function of the subset stored in `valuations`.
enum class ValuationFamily { SCS, SCS_STAR, RELMAX, SUSZKO_CLOSED };

std::string valuation_family_name(ValuationFamily kind);
std::optional<ValuationFamily> valuation_family_from_name(std::string_view name);

struct NamedBivaluationSet {
  ValuationFamily kind;
  int width = 0;
  std::vector<Mask> valuations;  // ascending, possibly empty

  /// For SCS_STAR: the (beta, alpha) buckets; a member may appear in many.
  struct Bucket {
    int beta = 0;
    int alpha = 0;
    std::vector<Mask> members;
  };
  std::vector<Bucket> buckets;

  bool empty() const { return valuations.empty(); }
};

/// Exact construction by enumeration; deterministic canonical order. The
/// result may be empty (feeding an empty set to structure_from_bivaluations
/// is an error, but comparisons below handle it via the total-relation
/// convention).
NamedBivaluationSet extract(const LogicalStructure& s, ValuationFamily kind);

struct CompareReport {
  bool sound = false;
  bool complete = false;
  std::optional<RelationGap> sound_gap;     // pair derivable in s but not semantically
  std::optional<RelationGap> complete_gap;  // pair derivable semantically but not in s
  bool empty_family = false;                // total-relation convention applied
};

/// Soundness and completeness of s against the structure induced by V.
CompareReport compare(const LogicalStructure& s, const BivaluationSet& v);

/// Same comparison for a possibly-empty family: the empty family induces the
/// total relation (a vacuous universal quantifier), used only in reports.
CompareReport compare_valuations(const LogicalStructure& s, const std::vector<Mask>& valuations);

/// True iff { characteristic functions of closed sets } is adequate for s.
/// This is the canonical candidate used to decide whether any adequate
/// valuation family exists at all.
bool suszko_candidate_adequate(const LogicalStructure& s);

struct MinimalityReport {
  struct Deletion {
    Mask removed = 0;
    bool remainder_empty = false;
    bool strict = false;
    std::optional<RelationGap> gap;
  };
  std::vector<Deletion> deletions;    // one per removed SCS member
  bool sampled_subsets_sound = true;  // relation contained in every sampled induced one
  bool ok() const;
};

/// For a TL-4 structure: every single-member deletion from SCS must strictly
/// enlarge the induced relation, and arbitrary subfamilies stay sound.
MinimalityReport minimality_probe(const LogicalStructure& s);

struct RepresentationReport {
  bool scs_star_adequate = false;
  bool tl4 = false;
  bool suszko_adequate = false;
  bool tarski = false;

  bool agree_tl4() const { return scs_star_adequate == tl4; }
  bool agree_tarski() const { return suszko_adequate == tarski; }
  bool ok() const { return agree_tl4() && agree_tarski(); }
};

/// Checks adequacy of SCS* against the TL-4 verdict and of the closed-set
/// candidate against the Tarski verdict.
RepresentationReport representation_check(const LogicalStructure& s);

}  // namespace lsx
