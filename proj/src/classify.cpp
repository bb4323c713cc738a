#include "lsx/classify.hpp"

#include <cmath>

namespace lsx {

namespace {

std::vector<Mask> maximal_of(const std::vector<Mask>& members) {
  std::vector<Mask> out;
  for (Mask a : members) {
    bool maximal = true;
    for (Mask b : members) {
      if (a != b && subset_of(a, b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

}  // namespace

LimSet lim_pair(const LogicalStructure& s, Mask gamma, int alpha) {
  s.check_width(gamma);
  s.check_element(alpha);
  require_budget(std::ldexp(1.0, 2 * s.n), "lim");
  LimSet out{true, gamma, alpha, {}, {}};
  const Mask co = s.full() & ~gamma;
  // ascending order: supersets of gamma enumerated via submasks of the complement
  for (Mask g = 0; g <= s.full(); ++g) {
    if (!subset_of(gamma, g)) continue;
    if (!contains(s.table[g], alpha)) out.members.push_back(g);
  }
  (void)co;
  out.maximal_elements = maximal_of(out.members);
  return out;
}

LimSet lim_nontrivial(const LogicalStructure& s, Mask gamma) {
  s.check_width(gamma);
  require_budget(std::ldexp(1.0, 2 * s.n), "lim");
  LimSet out{false, gamma, -1, {}, {}};
  for (Mask g = 0; g <= s.full(); ++g) {
    if (!subset_of(gamma, g)) continue;
    if (s.table[g] != s.full()) out.members.push_back(g);
  }
  out.maximal_elements = maximal_of(out.members);
  return out;
}

const std::vector<std::string>& ClassificationReport::verdict_order() {
  static const std::vector<std::string> order = {
      "reflexive", "monotone", "transitive", "cut",   "mixed-cut", "tarski", "lindI",
      "lindII",    "lindIII",  "lindIV",     "tl1",   "tl2",       "tl3",    "tl4"};
  return order;
}

bool ClassificationReport::verdict(const std::string& name) const {
  if (name == "reflexive") return reflexive;
  if (name == "monotone") return monotone;
  if (name == "transitive") return transitive;
  if (name == "cut") return cut;
  if (name == "mixed-cut") return mixed_cut;
  if (name == "tarski") return tarski;
  if (name == "lindI") return lind1;
  if (name == "lindII") return lind2;
  if (name == "lindIII") return lind3;
  if (name == "lindIV") return lind4;
  if (name == "tl1") return tl1;
  if (name == "tl2") return tl2;
  if (name == "tl3") return tl3;
  if (name == "tl4") return tl4;
  fail(ErrorKind::Domain, "unknown verdict '" + name + "'");
}

ClassificationReport classify(const LogicalStructure& s) {
  require_budget(std::ldexp(1.0, 2 * s.n) * s.n * s.n, "classify");
  ClassificationReport r;

  auto record = [&r](const std::string& name, const CheckResult& c) {
    if (!c.holds && c.witness) r.witnesses.emplace(name, *c.witness);
    return c.holds;
  };

  r.reflexive = record("reflexive", check_structure(s, StructureProperty::reflexive()));
  r.monotone = record("monotone", check_structure(s, StructureProperty::monotone()));
  r.transitive = record("transitive", check_structure(s, StructureProperty::transitive()));
  r.cut = record("cut", check_structure(s, StructureProperty::cut()));
  r.mixed_cut = record("mixed-cut", check_structure(s, StructureProperty::mixed_cut()));
  r.tarski = r.reflexive && r.monotone && r.transitive;
  if (!r.tarski) {
    for (const char* part : {"reflexive", "monotone", "transitive"}) {
      auto it = r.witnesses.find(part);
      if (it != r.witnesses.end()) {
        r.witnesses.emplace("tarski", it->second);
        break;
      }
    }
  }

  const Mask full = s.full();

  // Per-set predicate tables, computed once from the definitions.
  std::vector<Mask> sat_alphas(s.subset_count(), 0);  // bit a set: g is a-saturated
  std::vector<Mask> relmax_alphas(s.subset_count(), 0);
  std::vector<char> max_nontrivial(s.subset_count(), 0);
  for (Mask g = 0; g <= full; ++g) {
    for (int a = 0; a < s.n; ++a) {
      if (check_set(s, SetProperty::alpha_saturated(a), g).holds) sat_alphas[g] |= element_bit(a);
      if (check_set(s, SetProperty::relatively_maximal(a), g).holds)
        relmax_alphas[g] |= element_bit(a);
    }
    max_nontrivial[g] = check_set(s, SetProperty::maximal_nontrivial(), g).holds;
  }

  auto has_extension = [&](Mask gamma, auto pred) {
    const Mask co = full & ~gamma;
    Mask add = co;
    for (;;) {
      if (pred(gamma | add)) return true;
      if (add == 0) break;
      add = (add - 1) & co;
    }
    return false;
  };

  r.lind1 = true;
  r.lind2 = true;
  r.lind3 = true;
  r.lind4 = true;
  for (Mask g = 0; g <= full; ++g) {
    const bool nontrivial = s.table[g] != full;
    if (nontrivial && r.lind1 &&
        !has_extension(g, [&](Mask e) { return sat_alphas[e] != 0; })) {
      r.lind1 = false;
      r.witnesses.emplace("lindI", Witness{g, std::nullopt, std::nullopt, std::nullopt,
                                           "no saturated extension"});
    }
    if (nontrivial && r.lind3 &&
        !has_extension(g, [&](Mask e) { return max_nontrivial[e] != 0; })) {
      r.lind3 = false;
      r.witnesses.emplace("lindIII", Witness{g, std::nullopt, std::nullopt, std::nullopt,
                                             "no maximal nontrivial extension"});
    }
    for (int a = 0; a < s.n; ++a) {
      if (contains(s.table[g], a)) continue;
      if (r.lind2 && !has_extension(g, [&](Mask e) { return contains(sat_alphas[e], a); })) {
        r.lind2 = false;
        r.witnesses.emplace("lindII", Witness{g, std::nullopt, a, std::nullopt,
                                              "no alpha-saturated extension"});
      }
      if (r.lind4 && !has_extension(g, [&](Mask e) { return contains(relmax_alphas[e], a); })) {
        r.lind4 = false;
        r.witnesses.emplace("lindIV", Witness{g, std::nullopt, a, std::nullopt,
                                              "no relatively maximal extension"});
      }
    }
  }

  r.tl1 = r.tarski && r.lind1;
  r.tl2 = r.tarski && r.lind2;
  r.tl3 = r.tarski && r.lind3;
  r.tl4 = r.tarski && r.lind4;
  return r;
}

}  // namespace lsx
