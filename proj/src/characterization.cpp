// Evaluators for the characterization statements. These are written directly
// from the quantifier forms and deliberately share no predicate code with the
// definitional classifier, so agreement between the two paths is a real
// cross-check rather than a tautology. Each evaluation precomputes its own
// per-subset tables from the raw consequence table.

#include <cmath>

#include "lsx/bival.hpp"
#include "lsx/classify.hpp"

namespace lsx {

namespace {

bool below(Mask a, Mask b) { return (a & ~b) == 0; }

struct CharTables {
  int n = 0;
  Mask full = 0;
  const std::vector<Mask>* c = nullptr;  // the consequence table
  std::vector<char> strongly_closed;
  std::vector<Mask> sat_at;      // bit a: subset is a-saturated
  std::vector<Mask> relmax_at;   // bit a: relatively maximal in a
  std::vector<Mask> max_sat_at;  // bit a: maximal among the a-saturated sets
  std::vector<char> nontrivial;
  std::vector<char> max_nontrivial;
};

CharTables build_tables(const LogicalStructure& s) {
  CharTables t;
  t.n = s.n;
  t.full = s.full();
  t.c = &s.table;
  const auto& c = s.table;
  const std::size_t count = s.subset_count();

  t.strongly_closed.assign(count, 1);
  for (Mask g = 0; g <= t.full; ++g) {
    if (!below(g, c[g])) {
      t.strongly_closed[g] = 0;
      continue;
    }
    Mask part = g;
    for (;;) {
      if ((c[part] & ~g) != 0) {
        t.strongly_closed[g] = 0;
        break;
      }
      if (part == 0) break;
      part = (part - 1) & g;
    }
  }

  t.sat_at.assign(count, 0);
  t.nontrivial.assign(count, 0);
  for (Mask g = 0; g <= t.full; ++g) {
    t.nontrivial[g] = c[g] != t.full;
    Mask candidates = ~c[g] & t.full;  // a-saturation needs g not deriving a
    for (int b = 0; b < t.n && candidates != 0; ++b) {
      if (!contains(g, b)) candidates &= c[g | element_bit(b)];
    }
    t.sat_at[g] = candidates;
  }

  // accumulate over strict supersets
  t.relmax_at.assign(count, 0);
  t.max_sat_at.assign(count, 0);
  t.max_nontrivial.assign(count, 0);
  for (Mask g = 0; g <= t.full; ++g) {
    Mask derived_by_all = t.full;    // elements every strict superset derives
    Mask sat_above = 0;              // alphas with a strictly larger a-saturated set
    bool nontrivial_above = false;
    const Mask co = t.full & ~g;
    for (Mask add = co; add != 0; add = (add - 1) & co) {
      const Mask h = g | add;
      derived_by_all &= c[h];
      sat_above |= t.sat_at[h];
      nontrivial_above = nontrivial_above || t.nontrivial[h];
    }
    t.relmax_at[g] = ~c[g] & derived_by_all & t.full;
    t.max_sat_at[g] = t.sat_at[g] & ~sat_above;
    t.max_nontrivial[g] = t.nontrivial[g] && !nontrivial_above;
  }
  return t;
}

// --- Tarski-type statements -------------------------------------------------

bool tarski_stmt1(const CharTables& t) {
  const auto& c = *t.c;
  for (Mask g = 0; g <= t.full; ++g) {
    if (!below(g, c[g])) return false;  // reflexivity
  }
  for (Mask g = 0; g <= t.full; ++g) {
    for (Mask h = 0; h <= t.full; ++h) {
      if (below(g, h) && !below(c[g], c[h])) return false;          // monotonicity
      if (below(h, c[g]) && !below(c[h], c[g])) return false;       // transitivity
    }
  }
  return true;
}

bool tarski_stmt3(const CharTables& t) {
  const auto& c = *t.c;
  for (Mask g = 0; g <= t.full; ++g) {
    Mask targets = ~c[g] & t.full;
    if (targets == 0) continue;
    Mask covered = 0;
    for (Mask sig = 0; sig <= t.full; ++sig) {
      if (below(g, sig) && t.strongly_closed[sig]) covered |= ~c[sig] & targets;
    }
    if (covered != targets) return false;
  }
  return true;
}

bool tarski_stmt4(const CharTables& t) {
  const auto& c = *t.c;
  for (Mask g = 0; g <= t.full; ++g) {
    for (Mask h = 0; h <= t.full; ++h) {
      if (below(h, c[g]) != below(c[h], c[g])) return false;
    }
  }
  return true;
}

// --- Lindenbaum-IV statements -----------------------------------------------

bool extension_covers(const CharTables& t, const std::vector<Mask>& at, bool only_nonderiving) {
  const auto& c = *t.c;
  for (Mask g = 0; g <= t.full; ++g) {
    Mask targets = only_nonderiving ? (~c[g] & t.full) : t.full;
    if (targets == 0) continue;
    Mask covered = 0;
    const Mask co = t.full & ~g;
    Mask add = co;
    for (;;) {
      covered |= at[g | add];
      if (add == 0) break;
      add = (add - 1) & co;
    }
    if ((targets & ~covered) != 0) return false;
  }
  return true;
}

bool lind4_stmt1(const CharTables& t) { return extension_covers(t, t.relmax_at, true); }

bool lind4_stmt2(const CharTables& t) { return extension_covers(t, t.max_sat_at, true); }

bool lind4_stmt3(const CharTables& t) {
  // whenever some extension of gamma avoids alpha, some extension must be a
  // maximal element of that family, i.e. avoid alpha while all strictly
  // larger sets derive it
  const auto& c = *t.c;
  for (Mask g = 0; g <= t.full; ++g) {
    Mask nonempty_at = 0;  // alphas for which Lim(g, alpha) is nonempty
    Mask maximal_at = 0;
    const Mask co = t.full & ~g;
    Mask add = co;
    for (;;) {
      const Mask sig = g | add;
      nonempty_at |= ~c[sig] & t.full;
      maximal_at |= t.relmax_at[sig];
      if (add == 0) break;
      add = (add - 1) & co;
    }
    if ((nonempty_at & ~maximal_at) != 0) return false;
  }
  return true;
}

// --- Lindenbaum-III statements ----------------------------------------------

bool lind3_extension_covers(const CharTables& t, const std::vector<char>& flag) {
  for (Mask g = 0; g <= t.full; ++g) {
    if (!t.nontrivial[g]) continue;
    bool found = false;
    const Mask co = t.full & ~g;
    Mask add = co;
    for (;;) {
      if (flag[g | add]) {
        found = true;
        break;
      }
      if (add == 0) break;
      add = (add - 1) & co;
    }
    if (!found) return false;
  }
  return true;
}

bool lind3_stmt1(const CharTables& t) { return lind3_extension_covers(t, t.max_nontrivial); }

bool lind3_stmt2(const CharTables& t) {
  std::vector<char> max_saturated(t.full + 1u, 0);
  for (Mask g = 0; g <= t.full; ++g) {
    if (t.sat_at[g] == 0) continue;
    bool above = false;
    const Mask co = t.full & ~g;
    for (Mask add = co; add != 0; add = (add - 1) & co) {
      if (t.sat_at[g | add] != 0) {
        above = true;
        break;
      }
    }
    max_saturated[g] = !above;
  }
  return lind3_extension_covers(t, max_saturated);
}

bool lind3_stmt3(const CharTables& t) {
  // the family of nontrivial extensions, when nonempty, needs a maximal
  // element: a nontrivial extension all of whose strict supersets are trivial
  for (Mask g = 0; g <= t.full; ++g) {
    bool nonempty = false;
    bool has_maximal = false;
    const Mask co = t.full & ~g;
    Mask add = co;
    for (;;) {
      const Mask sig = g | add;
      if (t.nontrivial[sig]) {
        nonempty = true;
        if (t.max_nontrivial[sig]) {
          has_maximal = true;
          break;
        }
      }
      if (add == 0) break;
      add = (add - 1) & co;
    }
    if (nonempty && !has_maximal) return false;
  }
  return true;
}

// --- Tarski-Lindenbaum-IV statements ----------------------------------------

bool tl4_stmt1(const CharTables& t) { return tarski_stmt1(t) && lind4_stmt1(t); }

bool tl4_covering(const CharTables& t, const std::vector<Mask>& at) {
  // like extension_covers, but the witness extension must also be strongly closed
  const auto& c = *t.c;
  for (Mask g = 0; g <= t.full; ++g) {
    Mask targets = ~c[g] & t.full;
    if (targets == 0) continue;
    Mask covered = 0;
    const Mask co = t.full & ~g;
    Mask add = co;
    for (;;) {
      const Mask sig = g | add;
      if (t.strongly_closed[sig]) covered |= at[sig];
      if (add == 0) break;
      add = (add - 1) & co;
    }
    if ((targets & ~covered) != 0) return false;
  }
  return true;
}

bool tl4_stmt2(const CharTables& t) { return tl4_covering(t, t.relmax_at); }

bool tl4_stmt3(const CharTables& t) { return tl4_covering(t, t.sat_at); }

bool tl4_stmt4(const CharTables& t) {
  const auto& c = *t.c;
  for (Mask g = 0; g <= t.full; ++g) {
    for (int a = 0; a < t.n; ++a) {
      if (contains(c[g], a)) continue;
      bool found = false;
      for (int b = 0; b < t.n && !found; ++b) {
        if (!contains(c[element_bit(b)], a)) continue;  // need {beta} deriving alpha
        const Mask co = t.full & ~g;
        Mask add = co;
        for (;;) {
          const Mask sig = g | add;
          if (t.strongly_closed[sig] && contains(t.sat_at[sig], b) && !contains(c[sig], a)) {
            found = true;
            break;
          }
          if (add == 0) break;
          add = (add - 1) & co;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool tl4_stmt5(const CharTables& t) {
  // for each alpha, a single beta must work across every gamma avoiding alpha
  const auto& c = *t.c;
  for (int a = 0; a < t.n; ++a) {
    bool beta_found = false;
    for (int b = 0; b < t.n && !beta_found; ++b) {
      bool works = true;
      for (Mask g = 0; g <= t.full && works; ++g) {
        if (contains(c[g], a)) continue;
        bool found = false;
        const Mask co = t.full & ~g;
        Mask add = co;
        for (;;) {
          const Mask sig = g | add;
          if (t.strongly_closed[sig] && contains(t.sat_at[sig], b) && !contains(c[sig], a)) {
            found = true;
            break;
          }
          if (add == 0) break;
          add = (add - 1) & co;
        }
        works = found;
      }
      beta_found = works;
    }
    if (!beta_found) return false;
  }
  return true;
}

}  // namespace

int statement_count(CharacterizationTheorem thm) {
  switch (thm) {
    case CharacterizationTheorem::TarskiType: return 4;
    case CharacterizationTheorem::Lindenbaum4: return 3;
    case CharacterizationTheorem::Lindenbaum3: return 3;
    case CharacterizationTheorem::TarskiLindenbaum4: return 5;
  }
  return 0;
}

std::string characterization_name(CharacterizationTheorem thm) {
  switch (thm) {
    case CharacterizationTheorem::TarskiType: return "tarski-type";
    case CharacterizationTheorem::Lindenbaum4: return "lindenbaum-IV";
    case CharacterizationTheorem::Lindenbaum3: return "lindenbaum-III";
    case CharacterizationTheorem::TarskiLindenbaum4: return "tarski-lindenbaum-4";
  }
  return "?";
}

bool check_characterization(const LogicalStructure& s, CharacterizationTheorem thm,
                            int statement) {
  if (statement < 1 || statement > statement_count(thm)) {
    fail(ErrorKind::Domain, "statement " + std::to_string(statement) + " not valid for " +
                                characterization_name(thm));
  }
  require_budget(std::ldexp(1.0, 2 * s.n) * s.n, "characterization");
  if (thm == CharacterizationTheorem::TarskiType && statement == 2) {
    return suszko_candidate_adequate(s);
  }
  const CharTables t = build_tables(s);
  switch (thm) {
    case CharacterizationTheorem::TarskiType:
      switch (statement) {
        case 1: return tarski_stmt1(t);
        case 3: return tarski_stmt3(t);
        case 4: return tarski_stmt4(t);
      }
      break;
    case CharacterizationTheorem::Lindenbaum4:
      switch (statement) {
        case 1: return lind4_stmt1(t);
        case 2: return lind4_stmt2(t);
        case 3: return lind4_stmt3(t);
      }
      break;
    case CharacterizationTheorem::Lindenbaum3:
      switch (statement) {
        case 1: return lind3_stmt1(t);
        case 2: return lind3_stmt2(t);
        case 3: return lind3_stmt3(t);
      }
      break;
    case CharacterizationTheorem::TarskiLindenbaum4:
      switch (statement) {
        case 1: return tl4_stmt1(t);
        case 2: return tl4_stmt2(t);
        case 3: return tl4_stmt3(t);
        case 4: return tl4_stmt4(t);
        case 5: return tl4_stmt5(t);
      }
      break;
  }
  fail(ErrorKind::Domain, "unreachable statement dispatch");
}

}  // namespace lsx
