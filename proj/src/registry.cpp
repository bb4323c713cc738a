// The theorem registry: each entry pairs a hypothesis over a structure (and
// optionally an arrow table) with a conclusion that must then hold. Failures
// carry witnesses; the runner counts hypothesis firings so vacuously passing
// entries stay visible.

#include <bit>
#include <sstream>

#include "lsx/bival.hpp"
#include "lsx/classify.hpp"
#include "lsx/propcheck.hpp"
#include "lsx/properties.hpp"
#include "lsx/rng.hpp"

namespace lsx {

namespace {

using Ctx = TheoremContext;

TheoremCheckOutcome pass(long instances) { return {instances, true, ""}; }

TheoremCheckOutcome failed(long instances, std::string witness) {
  return {instances, false, std::move(witness)};
}

std::string set_wit(Mask g, const std::string& note) {
  return "gamma=" + format_subset(g) + " — " + note;
}

std::string pair_wit(Mask g, int a, const std::string& note) {
  return "gamma=" + format_subset(g) + ", alpha=" + std::to_string(a) + " — " + note;
}

bool prop(const Ctx& c, StructureProperty p) { return check_structure(*c.s, p).holds; }

// mask of alphas for which g is maximal alpha-saturated
Mask maximal_sat_mask(const Ctx& c, Mask g) {
  const auto& sat = c.analysis->sat_alphas;
  const Mask full = c.s->full();
  Mask above = 0;
  const Mask co = full & ~g;
  for (Mask add = co; add != 0; add = (add - 1) & co) above |= sat[g | add];
  return sat[g] & ~above;
}

bool is_maximal_saturated(const Ctx& c, Mask g) {
  const auto& sat = c.analysis->sat_alphas;
  if (sat[g] == 0) return false;
  const Mask co = c.s->full() & ~g;
  for (Mask add = co; add != 0; add = (add - 1) & co) {
    if (sat[g | add] != 0) return false;
  }
  return true;
}

// Every saturated set derives its own members. Reflexivity implies this, and
// the saturation theorems below silently use it: without it, a set can be
// alpha-saturated vacuously (e.g. the whole carrier) while its consequences
// miss some of its members, and the published conclusions fail. The smallest
// counterexample lives on one element: C({}) = {0}, C({0}) = {} satisfies
// cut, mixed-cut and Lindenbaum-II while {0} is saturated, not closed, and
// the structure is not reflexive.
bool saturated_sets_self_deriving(const Ctx& c) {
  for (Mask g = 0; g <= c.s->full(); ++g) {
    if (c.analysis->sat_alphas[g] != 0 && !subset_of(g, c.s->table[g])) return false;
  }
  return true;
}

// the Batens-style absorption condition: adding xi(beta) never grows consequences
bool xi_absorbed(const Ctx& c) {
  const auto& s = *c.s;
  for (int b = 0; b < s.n; ++b) {
    const Mask xb = xi(s, *c.arrow, b);
    for (Mask g = 0; g <= s.full(); ++g) {
      if (contains(g, b)) continue;
      if (!subset_of(s.table[g | xb], s.table[g])) return false;
    }
  }
  return true;
}

TheoremCheckOutcome characterization_agrees(const Ctx& c, CharacterizationTheorem thm,
                                            bool definitional) {
  const int count = statement_count(thm);
  for (int i = 1; i <= count; ++i) {
    if (check_characterization(*c.s, thm, i) != definitional) {
      return failed(count, "statement " + std::to_string(i) + " of " +
                               characterization_name(thm) +
                               " disagrees with the definitional verdict");
    }
  }
  return pass(count);
}

std::vector<TheoremEntry> build_registry() {
  std::vector<TheoremEntry> reg;
  auto add = [&reg](std::string id, std::string summary, bool needs_arrow,
                    std::function<bool(const Ctx&)> hyp,
                    std::function<TheoremCheckOutcome(const Ctx&)> concl) {
    reg.push_back({std::move(id), std::move(summary), needs_arrow, std::move(hyp),
                   std::move(concl)});
  };
  auto always = [](const Ctx&) { return true; };

  add("T01", "under cut (with self-deriving saturated sets), every saturated set is closed",
      false,
      [](const Ctx& c) { return c.analysis->cls.cut && saturated_sets_self_deriving(c); },
      [](const Ctx& c) {
        long n = 0;
        for (Mask g = 0; g <= c.s->full(); ++g) {
          if (c.analysis->sat_alphas[g] == 0) continue;
          ++n;
          if (c.s->table[g] != g) return failed(n, set_wit(g, "saturated but not closed"));
        }
        return pass(n);
      });

  add("T02", "under cut (with self-deriving saturated sets), the carrier derives everything",
      false,
      [](const Ctx& c) { return c.analysis->cls.cut && saturated_sets_self_deriving(c); },
      [](const Ctx& c) {
        if (c.s->table[c.s->full()] != c.s->full()) {
          return failed(1, set_wit(c.s->full(), "the carrier does not derive everything"));
        }
        return pass(1);
      });

  add("T03",
      "under mixed-cut (with self-deriving saturated sets), saturated sets are strongly closed",
      false,
      [](const Ctx& c) { return c.analysis->cls.mixed_cut && saturated_sets_self_deriving(c); },
      [](const Ctx& c) {
        long n = 0;
        for (Mask g = 0; g <= c.s->full(); ++g) {
          if (c.analysis->sat_alphas[g] == 0) continue;
          ++n;
          if (!c.analysis->strongly_closed[g]) {
            return failed(n, set_wit(g, "saturated but not strongly closed"));
          }
        }
        return pass(n);
      });

  add("T04", "a maximal nontrivial set is relatively maximal in every avoided element", false,
      always, [](const Ctx& c) {
        long n = 0;
        for (Mask g = 0; g <= c.s->full(); ++g) {
          if (!c.analysis->max_nontrivial[g]) continue;
          for (int a = 0; a < c.s->n; ++a) {
            if (contains(c.s->table[g], a)) continue;
            ++n;
            if (!contains(c.analysis->relmax_alphas[g], a)) {
              return failed(n, pair_wit(g, a, "maximal nontrivial but not relatively maximal"));
            }
          }
        }
        return pass(n);
      });

  add("T05", "a maximal nontrivial set is alpha-saturated in every avoided element", false,
      always, [](const Ctx& c) {
        long n = 0;
        for (Mask g = 0; g <= c.s->full(); ++g) {
          if (!c.analysis->max_nontrivial[g]) continue;
          bool any = false;
          for (int a = 0; a < c.s->n; ++a) {
            if (contains(c.s->table[g], a)) continue;
            ++n;
            any = true;
            if (!contains(c.analysis->sat_alphas[g], a)) {
              return failed(n, pair_wit(g, a, "maximal nontrivial but not alpha-saturated"));
            }
          }
          if (!any || c.analysis->sat_alphas[g] == 0) {
            return failed(n, set_wit(g, "maximal nontrivial but not saturated"));
          }
        }
        return pass(n);
      });

  add("T06", "every saturated set is nontrivial", false, always, [](const Ctx& c) {
    long n = 0;
    for (Mask g = 0; g <= c.s->full(); ++g) {
      if (c.analysis->sat_alphas[g] == 0) continue;
      ++n;
      if (c.s->table[g] == c.s->full()) return failed(n, set_wit(g, "saturated yet trivial"));
    }
    return pass(n);
  });

  add("T07",
      "on a monotone structure, a nontrivial set relatively maximal in every avoided element "
      "is maximal nontrivial",
      false, [](const Ctx& c) { return c.analysis->cls.monotone; },
      [](const Ctx& c) {
        long n = 0;
        for (Mask g = 0; g <= c.s->full(); ++g) {
          const Mask avoided = ~c.s->table[g] & c.s->full();
          if (avoided == 0) continue;  // trivial sets are outside the statement
          if ((avoided & ~c.analysis->relmax_alphas[g]) != 0) continue;
          ++n;
          if (!c.analysis->max_nontrivial[g]) {
            return failed(n, set_wit(g, "relatively maximal everywhere yet not maximal "
                                        "nontrivial"));
          }
        }
        return pass(n);
      });

  add("T08",
      "with reflexivity and modus ponens, nontrivial arrow-saturated sets are maximal "
      "nontrivial and closed",
      true,
      [](const Ctx& c) {
        return c.analysis->cls.reflexive &&
               prop(c, StructureProperty::modus_ponens(*c.arrow));
      },
      [](const Ctx& c) {
        long n = 0;
        for (Mask g = 0; g <= c.s->full(); ++g) {
          if (c.s->table[g] == c.s->full()) continue;
          if (!check_set(*c.s, SetProperty::arrow_saturated(*c.arrow), g).holds) continue;
          ++n;
          if (!c.analysis->max_nontrivial[g] || c.s->table[g] != g) {
            return failed(n, set_wit(g, "arrow-saturated but not maximal nontrivial and closed"));
          }
        }
        return pass(n);
      });

  add("T09",
      "with reflexivity and absorbed xi-sets, every closed set is arrow-saturated", true,
      [](const Ctx& c) { return c.analysis->cls.reflexive && xi_absorbed(c); },
      [](const Ctx& c) {
        long n = 0;
        for (Mask g = 0; g <= c.s->full(); ++g) {
          if (c.s->table[g] != g) continue;
          ++n;
          if (!check_set(*c.s, SetProperty::arrow_saturated(*c.arrow), g).holds) {
            return failed(n, set_wit(g, "closed but not arrow-saturated"));
          }
        }
        return pass(n);
      });

  add("T10", "in a Lindenbaum-II structure, maximal alpha-saturated sets are relatively "
      "maximal",
      false, [](const Ctx& c) { return c.analysis->cls.lind2; },
      [](const Ctx& c) {
        long n = 0;
        for (Mask g = 0; g <= c.s->full(); ++g) {
          Mask max_at = maximal_sat_mask(c, g);
          while (max_at != 0) {
            const int a = std::countr_zero(max_at);
            max_at &= max_at - 1;
            ++n;
            if (!contains(c.analysis->relmax_alphas[g], a)) {
              return failed(n, pair_wit(g, a, "maximal alpha-saturated but not relatively "
                                              "maximal"));
            }
          }
        }
        return pass(n);
      });

  add("T11",
      "in a Lindenbaum-II structure with cut, a proper closed set is the intersection of its "
      "saturated extensions",
      false,
      [](const Ctx& c) {
        return c.analysis->cls.lind2 && c.analysis->cls.cut && saturated_sets_self_deriving(c);
      },
      [](const Ctx& c) {
        long n = 0;
        const Mask full = c.s->full();
        for (Mask g = 0; g < full; ++g) {
          if (c.s->table[g] != g) continue;
          ++n;
          Mask inter = full;
          const Mask co = full & ~g;
          Mask add = co;
          for (;;) {
            if (c.analysis->sat_alphas[g | add] != 0) inter &= (g | add);
            if (add == 0) break;
            add = (add - 1) & co;
          }
          if (inter != g) {
            return failed(n, set_wit(g, "closed set differs from the intersection " +
                                            format_subset(inter)));
          }
        }
        return pass(n);
      });

  add("T12",
      "in a reflexive Lindenbaum-II structure, a proper closed set is the intersection of the "
      "consequences of its saturated extensions",
      false, [](const Ctx& c) { return c.analysis->cls.lind2 && c.analysis->cls.reflexive; },
      [](const Ctx& c) {
        long n = 0;
        const Mask full = c.s->full();
        for (Mask g = 0; g < full; ++g) {
          if (c.s->table[g] != g) continue;
          ++n;
          Mask inter = full;
          const Mask co = full & ~g;
          Mask add = co;
          for (;;) {
            if (c.analysis->sat_alphas[g | add] != 0) inter &= c.s->table[g | add];
            if (add == 0) break;
            add = (add - 1) & co;
          }
          if (inter != g) {
            return failed(n, set_wit(g, "closed set differs from the consequence intersection " +
                                            format_subset(inter)));
          }
        }
        return pass(n);
      });

  add("T13",
      "a Lindenbaum-II structure with cut and self-deriving saturated sets is reflexive", false,
      [](const Ctx& c) {
        return c.analysis->cls.lind2 && c.analysis->cls.cut && saturated_sets_self_deriving(c);
      },
      [](const Ctx& c) {
        if (!c.analysis->cls.reflexive) return failed(1, "structure is not reflexive");
        return pass(1);
      });

  add("T14",
      "a Lindenbaum-II structure with mixed-cut and self-deriving saturated sets is of Tarski "
      "type",
      false,
      [](const Ctx& c) {
        return c.analysis->cls.lind2 && c.analysis->cls.mixed_cut &&
               saturated_sets_self_deriving(c);
      },
      [](const Ctx& c) {
        if (!c.analysis->cls.tarski) return failed(1, "structure is not of Tarski type");
        return pass(1);
      });

  add("T15", "the Lindenbaum-IV characterization statements agree with the definition", false,
      always, [](const Ctx& c) {
        return characterization_agrees(c, CharacterizationTheorem::Lindenbaum4,
                                       c.analysis->cls.lind4);
      });

  add("T16",
      "reflexivity, cut, and the closure condition on single extensions force Lindenbaum-IV",
      false,
      [](const Ctx& c) {
        if (!c.analysis->cls.reflexive || !c.analysis->cls.cut) return false;
        const auto& s = *c.s;
        for (Mask g = 0; g <= s.full(); ++g) {
          for (int a = 0; a < s.n; ++a) {
            if (contains(g, a)) continue;
            if (subset_of(s.table[g | element_bit(a)], s.table[g]) && s.table[g] != g) {
              return false;
            }
          }
        }
        return true;
      },
      [](const Ctx& c) {
        if (!c.analysis->cls.lind4) return failed(1, "structure is not Lindenbaum-IV");
        return pass(1);
      });

  add("T17", "on a monotone structure, Lindenbaum-IV and Lindenbaum-II coincide", false,
      [](const Ctx& c) { return c.analysis->cls.monotone; },
      [](const Ctx& c) {
        if (c.analysis->cls.lind4 != c.analysis->cls.lind2) {
          return failed(1, "Lindenbaum-IV and Lindenbaum-II verdicts differ");
        }
        return pass(1);
      });

  add("T18", "in a Lindenbaum-I structure, maximal saturated sets are maximal nontrivial",
      false, [](const Ctx& c) { return c.analysis->cls.lind1; },
      [](const Ctx& c) {
        long n = 0;
        for (Mask g = 0; g <= c.s->full(); ++g) {
          if (!is_maximal_saturated(c, g)) continue;
          ++n;
          if (!c.analysis->max_nontrivial[g]) {
            return failed(n, set_wit(g, "maximal saturated but not maximal nontrivial"));
          }
        }
        return pass(n);
      });

  add("T19", "the Lindenbaum-III characterization statements agree with the definition", false,
      always, [](const Ctx& c) {
        return characterization_agrees(c, CharacterizationTheorem::Lindenbaum3,
                                       c.analysis->cls.lind3);
      });

  add("T20",
      "in a Lindenbaum-I structure with mixed-cut and self-deriving saturated sets, trivial "
      "sets are upward closed",
      false,
      [](const Ctx& c) {
        return c.analysis->cls.lind1 && c.analysis->cls.mixed_cut &&
               saturated_sets_self_deriving(c);
      },
      [](const Ctx& c) {
        long n = 0;
        const Mask full = c.s->full();
        for (Mask g = 0; g <= full; ++g) {
          if (c.s->table[g] != full) continue;
          ++n;
          for (int i = 0; i < c.s->n; ++i) {
            if (contains(g, i)) continue;
            if (c.s->table[g | element_bit(i)] != full) {
              return failed(n, set_wit(g | element_bit(i),
                                       "extends a trivial set but is nontrivial"));
            }
          }
        }
        return pass(n);
      });

  add("T21", "Lindenbaum-II and III imply I; Lindenbaum-IV implies II", false, always,
      [](const Ctx& c) {
        const auto& r = c.analysis->cls;
        const bool ok = (!r.lind2 || r.lind1) && (!r.lind4 || r.lind2) && (!r.lind3 || r.lind1);
        if (!ok) return failed(3, "Lindenbaum implication chain violated");
        return pass(3);
      });

  add("T22", "a finitary monotone structure is of Lindenbaum-IV type (and so II and I)", false,
      [](const Ctx& c) {
        return c.analysis->cls.monotone && check_structure(*c.s, StructureProperty::finitary()).holds;
      },
      [](const Ctx& c) {
        const auto& r = c.analysis->cls;
        if (!(r.lind4 && r.lind2 && r.lind1)) {
          return failed(1, "monotone finite structure misses a Lindenbaum verdict");
        }
        return pass(1);
      });

  add("T23", "TL-2, TL-3, TL-4 imply TL-1, and TL-2 equals TL-4", false, always,
      [](const Ctx& c) {
        const auto& r = c.analysis->cls;
        const bool ok =
            (!r.tl2 || r.tl1) && (!r.tl3 || r.tl1) && (!r.tl4 || r.tl1) && (r.tl2 == r.tl4);
        if (!ok) return failed(4, "TL implication pattern violated");
        return pass(4);
      });

  add("T24", "a Tarski-type structure satisfies mixed-cut", false,
      [](const Ctx& c) { return c.analysis->cls.tarski; },
      [](const Ctx& c) {
        if (!c.analysis->cls.mixed_cut) return failed(1, "Tarski-type without mixed-cut");
        return pass(1);
      });

  add("T25", "the TL-4 characterization statements agree with the definition", false, always,
      [](const Ctx& c) {
        return characterization_agrees(c, CharacterizationTheorem::TarskiLindenbaum4,
                                       c.analysis->cls.tl4);
      });

  add("T26", "the relation is sound for the SCS valuations, for every structure", false, always,
      [](const Ctx& c) {
        auto cmp = compare_valuations(*c.s, c.analysis->scs);
        if (!cmp.sound) {
          return failed(1, pair_wit(cmp.sound_gap->gamma, cmp.sound_gap->alpha,
                                    "derivable pair lost under SCS"));
        }
        return pass(1);
      });

  add("T27", "a TL-4 structure is adequate for its SCS valuations", false,
      [](const Ctx& c) { return c.analysis->cls.tl4; },
      [](const Ctx& c) {
        auto cmp = compare_valuations(*c.s, c.analysis->scs);
        if (!cmp.sound || !cmp.complete) return failed(1, "SCS adequacy fails");
        return pass(1);
      });

  add("T28", "dropping any SCS valuation strictly enlarges the induced relation", false,
      [](const Ctx& c) { return c.analysis->cls.tl4; },
      [](const Ctx& c) {
        const auto& scs = c.analysis->scs;
        long n = 0;
        for (std::size_t i = 0; i < scs.size(); ++i) {
          std::vector<Mask> rest;
          for (std::size_t j = 0; j < scs.size(); ++j) {
            if (j != i) rest.push_back(scs[j]);
          }
          ++n;
          auto cmp = compare_valuations(*c.s, rest);
          if (!cmp.sound || cmp.complete) {
            return failed(n, set_wit(scs[i], "deletion does not strictly enlarge the relation"));
          }
        }
        // sampled subfamilies stay sound
        SplitMix64 rng(0x517eu ^ c.s->subset_count());
        for (int sample = 0; sample < 3; ++sample) {
          std::vector<Mask> sub;
          for (Mask v : scs) {
            if (rng.next() & 1u) sub.push_back(v);
          }
          ++n;
          if (!compare_valuations(*c.s, sub).sound) {
            return failed(n, "a sampled subfamily is unsound");
          }
        }
        return pass(n);
      });

  add("T29", "SCS* adequacy holds exactly for TL-4 structures", false, always,
      [](const Ctx& c) {
        auto cmp = compare_valuations(*c.s, c.analysis->scs_star);
        const bool adequate = cmp.sound && cmp.complete;
        if (adequate != c.analysis->cls.tl4) {
          return failed(1, "SCS* adequacy disagrees with the TL-4 verdict");
        }
        return pass(1);
      });

  add("T30", "the Tarski characterization statements agree with the definition", false, always,
      [](const Ctx& c) {
        return characterization_agrees(c, CharacterizationTheorem::TarskiType,
                                       c.analysis->cls.tarski);
      });

  add("T31",
      "on a Tarski-type structure, relatively maximal sets are strongly closed and RELMAX "
      "equals SCS",
      false, [](const Ctx& c) { return c.analysis->cls.tarski; },
      [](const Ctx& c) {
        long n = 0;
        for (Mask g = 0; g <= c.s->full(); ++g) {
          if (c.analysis->relmax_alphas[g] == 0) continue;
          ++n;
          if (!c.analysis->strongly_closed[g]) {
            return failed(n, set_wit(g, "relatively maximal but not strongly closed"));
          }
        }
        ++n;
        if (c.analysis->relmax_family != c.analysis->scs) {
          return failed(n, "RELMAX and SCS differ as valuation sets");
        }
        return pass(n);
      });

  add("T32", "mixed-cut implies cut", false,
      [](const Ctx& c) { return c.analysis->cls.mixed_cut; },
      [](const Ctx& c) {
        if (!c.analysis->cls.cut) return failed(1, "mixed-cut without cut");
        return pass(1);
      });

  add("T33",
      "Tarski type is equivalent to every avoided pair having a minimum strongly closed "
      "extension",
      false, always, [](const Ctx& c) {
        const Mask full = c.s->full();
        bool lhs = true;
        for (Mask g = 0; g <= full && lhs; ++g) {
          for (int a = 0; a < c.s->n && lhs; ++a) {
            if (contains(c.s->table[g], a)) continue;
            Mask inter = full;
            bool nonempty = false;
            const Mask co = full & ~g;
            Mask add = co;
            for (;;) {
              const Mask sig = g | add;
              if (c.analysis->strongly_closed[sig] && !contains(c.s->table[sig], a)) {
                inter &= sig;
                nonempty = true;
              }
              if (add == 0) break;
              add = (add - 1) & co;
            }
            // a minimum exists iff the family is nonempty and its
            // intersection is itself a member
            lhs = nonempty && c.analysis->strongly_closed[inter] &&
                  !contains(c.s->table[inter], a) && subset_of(g, inter);
          }
        }
        if (lhs != c.analysis->cls.tarski) {
          return failed(1, "minimum strongly closed extension criterion disagrees with the "
                           "Tarski verdict");
        }
        return pass(1);
      });

  return reg;
}

}  // namespace

const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> reg = build_registry();
  return reg;
}

const TheoremEntry* find_theorem(const std::string& id) {
  for (const auto& e : theorem_registry()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<std::string> all_theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& e : theorem_registry()) ids.push_back(e.id);
  return ids;
}

}  // namespace lsx
