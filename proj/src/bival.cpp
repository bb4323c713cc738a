#include "lsx/bival.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "lsx/classify.hpp"
#include "lsx/rng.hpp"

namespace lsx {

std::string valuation_family_name(ValuationFamily kind) {
  switch (kind) {
    case ValuationFamily::SCS: return "scs";
    case ValuationFamily::SCS_STAR: return "scs-star";
    case ValuationFamily::RELMAX: return "relmax";
    case ValuationFamily::SUSZKO_CLOSED: return "suszko";
  }
  return "?";
}

std::optional<ValuationFamily> valuation_family_from_name(std::string_view name) {
  if (name == "scs") return ValuationFamily::SCS;
  if (name == "scs-star") return ValuationFamily::SCS_STAR;
  if (name == "relmax") return ValuationFamily::RELMAX;
  if (name == "suszko") return ValuationFamily::SUSZKO_CLOSED;
  return std::nullopt;
}

NamedBivaluationSet extract(const LogicalStructure& s, ValuationFamily kind) {
  require_budget(std::ldexp(1.0, 2 * s.n) * s.n, "bivaluation extraction");
  NamedBivaluationSet out{kind, s.n, {}, {}};
  const Mask full = s.full();
  switch (kind) {
    case ValuationFamily::SCS: {
      for (Mask g = 0; g <= full; ++g) {
        if (!check_set(s, SetProperty::strongly_closed(), g).holds) continue;
        if (check_set(s, SetProperty::saturated(), g).holds) out.valuations.push_back(g);
      }
      break;
    }
    case ValuationFamily::SCS_STAR: {
      for (int b = 0; b < s.n; ++b) {
        for (int a = 0; a < s.n; ++a) {
          if (!contains(s.table[element_bit(b)], a)) continue;  // need {beta} |- alpha
          NamedBivaluationSet::Bucket bucket{b, a, {}};
          for (Mask g = 0; g <= full; ++g) {
            if (contains(s.table[g], a)) continue;  // need gamma not deriving alpha
            if (!check_set(s, SetProperty::alpha_saturated(b), g).holds) continue;
            if (!check_set(s, SetProperty::strongly_closed(), g).holds) continue;
            bucket.members.push_back(g);
          }
          if (!bucket.members.empty()) out.buckets.push_back(std::move(bucket));
        }
      }
      for (const auto& bucket : out.buckets) {
        out.valuations.insert(out.valuations.end(), bucket.members.begin(), bucket.members.end());
      }
      std::sort(out.valuations.begin(), out.valuations.end());
      out.valuations.erase(std::unique(out.valuations.begin(), out.valuations.end()),
                           out.valuations.end());
      break;
    }
    case ValuationFamily::RELMAX: {
      for (Mask g = 0; g <= full; ++g) {
        for (int a = 0; a < s.n; ++a) {
          if (check_set(s, SetProperty::relatively_maximal(a), g).holds) {
            out.valuations.push_back(g);
            break;
          }
        }
      }
      break;
    }
    case ValuationFamily::SUSZKO_CLOSED: {
      for (Mask g = 0; g <= full; ++g) {
        if (s.table[g] == g) out.valuations.push_back(g);
      }
      break;
    }
  }
  return out;
}

namespace {

// Consequence table induced by a valuation family, with the empty family
// giving the total relation.
std::vector<Mask> induced_table(const LogicalStructure& s, const std::vector<Mask>& vals) {
  std::vector<Mask> table(s.subset_count());
  for (Mask g = 0; g <= s.full(); ++g) table[g] = induced_consequences(s.n, vals, g);
  return table;
}

}  // namespace

CompareReport compare_valuations(const LogicalStructure& s, const std::vector<Mask>& vals) {
  require_budget(std::ldexp(1.0, s.n) * (vals.size() + 1.0), "bivaluation comparison");
  CompareReport r;
  r.empty_family = vals.empty();
  const std::vector<Mask> ind = induced_table(s, vals);
  r.sound = true;
  r.complete = true;
  for (Mask g = 0; g <= s.full(); ++g) {
    if (r.sound) {
      Mask lost = s.table[g] & ~ind[g];
      if (lost != 0) {
        r.sound = false;
        r.sound_gap = RelationGap{g, std::countr_zero(lost)};
      }
    }
    if (r.complete) {
      Mask extra = ind[g] & ~s.table[g];
      if (extra != 0) {
        r.complete = false;
        r.complete_gap = RelationGap{g, std::countr_zero(extra)};
      }
    }
    if (!r.sound && !r.complete) break;
  }
  return r;
}

CompareReport compare(const LogicalStructure& s, const BivaluationSet& v) {
  if (v.width != s.n) fail(ErrorKind::Width, "valuation width differs from carrier size");
  if (v.valuations.empty()) fail(ErrorKind::EmptyValuations, "bivaluation set must be nonempty");
  return compare_valuations(s, v.valuations);
}

bool suszko_candidate_adequate(const LogicalStructure& s) {
  std::vector<Mask> closed;
  for (Mask g = 0; g <= s.full(); ++g) {
    if (s.table[g] == g) closed.push_back(g);
  }
  auto r = compare_valuations(s, closed);
  return r.sound && r.complete;
}

bool MinimalityReport::ok() const {
  if (!sampled_subsets_sound) return false;
  for (const auto& d : deletions) {
    if (!d.strict) return false;
  }
  return true;
}

MinimalityReport minimality_probe(const LogicalStructure& s) {
  const ClassificationReport cls = classify(s);
  if (!cls.tl4) fail(ErrorKind::Domain, "minimality probe requires a TL-4 structure");
  const NamedBivaluationSet scs = extract(s, ValuationFamily::SCS);
  if (scs.empty()) fail(ErrorKind::Domain, "minimality probe requires a nonempty SCS");

  MinimalityReport report;
  for (std::size_t i = 0; i < scs.valuations.size(); ++i) {
    std::vector<Mask> rest;
    rest.reserve(scs.valuations.size() - 1);
    for (std::size_t j = 0; j < scs.valuations.size(); ++j) {
      if (j != i) rest.push_back(scs.valuations[j]);
    }
    MinimalityReport::Deletion d;
    d.removed = scs.valuations[i];
    d.remainder_empty = rest.empty();
    auto cmp = compare_valuations(s, rest);
    // strict growth: still sound, and some pair holds semantically but not in s
    d.strict = cmp.sound && !cmp.complete;
    if (cmp.complete_gap) d.gap = cmp.complete_gap;
    report.deletions.push_back(d);
  }

  // a few deterministic subfamilies; every one must stay sound
  SplitMix64 rng(0x5c5u ^ static_cast<std::uint64_t>(s.subset_count()));
  for (int sample = 0; sample < 4; ++sample) {
    std::vector<Mask> sub;
    for (Mask v : scs.valuations) {
      if (rng.next() & 1u) sub.push_back(v);
    }
    if (!compare_valuations(s, sub).sound) report.sampled_subsets_sound = false;
  }
  return report;
}

RepresentationReport representation_check(const LogicalStructure& s) {
  const ClassificationReport cls = classify(s);
  RepresentationReport r;
  r.tl4 = cls.tl4;
  r.tarski = cls.tarski;
  auto star = compare_valuations(s, extract(s, ValuationFamily::SCS_STAR).valuations);
  r.scs_star_adequate = star.sound && star.complete;
  r.suszko_adequate = suszko_candidate_adequate(s);
  return r;
}

}  // namespace lsx
