#include "lsx/properties.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace lsx {

std::string Witness::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ", ";
    first = false;
  };
  if (gamma) { sep(); out << "gamma=" << format_subset(*gamma); }
  if (sigma) { sep(); out << "sigma=" << format_subset(*sigma); }
  if (alpha) { sep(); out << "alpha=" << *alpha; }
  if (beta)  { sep(); out << "beta=" << *beta; }
  if (!note.empty()) { sep(); out << note; }
  return out.str();
}

std::string SetProperty::name() const {
  switch (tag) {
    case Tag::Closed: return "closed";
    case Tag::StronglyClosed: return "strongly-closed";
    case Tag::Trivial: return "trivial";
    case Tag::Nontrivial: return "nontrivial";
    case Tag::AlphaSaturated: return "alpha-saturated(" + std::to_string(alpha) + ")";
    case Tag::Saturated: return "saturated";
    case Tag::RelativelyMaximal: return "relatively-maximal(" + std::to_string(alpha) + ")";
    case Tag::MaximalNontrivial: return "maximal-nontrivial";
    case Tag::MaximalSaturated: return "maximal-saturated";
    case Tag::MaximalAlphaSaturated:
      return "maximal-alpha-saturated(" + std::to_string(alpha) + ")";
    case Tag::ArrowSaturated: return "arrow-saturated";
  }
  return "?";
}

std::string StructureProperty::name() const {
  switch (tag) {
    case Tag::Reflexive: return "reflexive";
    case Tag::Monotone: return "monotone";
    case Tag::Transitive: return "transitive";
    case Tag::TarskiByDef: return "tarski-by-def";
    case Tag::Cut: return "cut";
    case Tag::MixedCut: return "mixed-cut";
    case Tag::Finitary: return "finitary";
    case Tag::ModusPonens: return "modus-ponens";
  }
  return "?";
}

namespace {

CheckResult pass() { return {true, std::nullopt}; }

CheckResult fail_with(Witness w) { return {false, std::move(w)}; }

void check_alpha(const LogicalStructure& s, const SetProperty& prop) {
  if (prop.tag == SetProperty::Tag::AlphaSaturated ||
      prop.tag == SetProperty::Tag::RelativelyMaximal ||
      prop.tag == SetProperty::Tag::MaximalAlphaSaturated) {
    s.check_element(prop.alpha);
  }
}

void check_arrow(const LogicalStructure& s, const ArrowTable* arrow, std::string_view what) {
  if (arrow == nullptr || arrow->n != s.n) {
    fail(ErrorKind::Domain, std::string(what) + " requires an arrow table on the same carrier");
  }
}

bool is_closed(const LogicalStructure& s, Mask g) { return s.table[g] == g; }

bool is_trivial(const LogicalStructure& s, Mask g) { return s.table[g] == s.full(); }

// Strongly closed: gamma is below its consequences, and anything derivable
// from any subset of gamma already lies in gamma. Subsets are scanned in
// ascending order so the witness is the least violating one.
CheckResult strongly_closed_check(const LogicalStructure& s, Mask g) {
  require_budget(std::ldexp(1.0, popcount(g)), "strongly-closed");
  if (!subset_of(g, s.table[g])) {
    int a = std::countr_zero(g & ~s.table[g]);
    return fail_with({g, std::nullopt, a, std::nullopt, "gamma not below its consequences"});
  }
  for (Mask sub = 0;; sub = (sub - g) & g) {
    Mask escape = s.table[sub] & ~g;
    if (escape != 0) {
      int a = std::countr_zero(escape);
      return fail_with({g, sub, a, std::nullopt, "a subset derives an element outside gamma"});
    }
    if (sub == g) break;
  }
  return pass();
}

CheckResult alpha_saturated_check(const LogicalStructure& s, Mask g, int alpha) {
  if (contains(s.table[g], alpha)) {
    return fail_with({g, std::nullopt, alpha, std::nullopt, "gamma already derives alpha"});
  }
  for (int b = 0; b < s.n; ++b) {
    if (contains(g, b)) continue;
    if (!contains(s.table[g | element_bit(b)], alpha)) {
      return fail_with({g, std::nullopt, alpha, b, "adding beta does not force alpha"});
    }
  }
  return pass();
}

CheckResult saturated_check(const LogicalStructure& s, Mask g) {
  for (int a = 0; a < s.n; ++a) {
    if (alpha_saturated_check(s, g, a).holds) return pass();
  }
  return fail_with({g, std::nullopt, std::nullopt, std::nullopt, "alpha-saturated for no alpha"});
}

CheckResult relatively_maximal_check(const LogicalStructure& s, Mask g, int alpha) {
  if (contains(s.table[g], alpha)) {
    return fail_with({g, std::nullopt, alpha, std::nullopt, "gamma already derives alpha"});
  }
  const Mask co = s.full() & ~g;
  for (Mask add = co; add != 0; add = (add - 1) & co) {
    Mask sigma = g | add;
    if (!contains(s.table[sigma], alpha)) {
      return fail_with({g, sigma, alpha, std::nullopt, "a proper extension avoids alpha"});
    }
  }
  return pass();
}

// Inclusion-maximal within the family of sets satisfying `base`.
template <typename BasePred>
CheckResult maximal_within(const LogicalStructure& s, Mask g, BasePred base,
                           std::string_view base_name) {
  if (!base(g)) {
    return fail_with({g, std::nullopt, std::nullopt, std::nullopt,
                      "gamma is not " + std::string(base_name)});
  }
  const Mask co = s.full() & ~g;
  for (Mask add = co; add != 0; add = (add - 1) & co) {
    Mask sigma = g | add;
    if (base(sigma)) {
      return fail_with({g, sigma, std::nullopt, std::nullopt,
                        "a strictly larger set is also " + std::string(base_name)});
    }
  }
  return pass();
}

CheckResult arrow_saturated_check(const LogicalStructure& s, const ArrowTable& arrow, Mask g) {
  for (int a = 0; a < s.n; ++a) {
    if (contains(g, a)) continue;
    Mask xi_a = xi(s, arrow, a);
    if (!subset_of(xi_a, g)) {
      int missing = std::countr_zero(xi_a & ~g);
      return fail_with({g, std::nullopt, a, missing, "xi(alpha) escapes gamma"});
    }
  }
  return pass();
}

CheckResult reflexive_check(const LogicalStructure& s) {
  require_budget(std::ldexp(1.0, s.n), "reflexive");
  for (Mask g = 0; g <= s.full(); ++g) {
    Mask missing = g & ~s.table[g];
    if (missing != 0) {
      return fail_with({g, std::nullopt, std::countr_zero(missing), std::nullopt,
                        "gamma does not derive its own element"});
    }
  }
  return pass();
}

// Single-element steps suffice: any violation along a chain of subsets shows
// up across some gamma vs gamma+{i}.
CheckResult monotone_check(const LogicalStructure& s) {
  require_budget(std::ldexp(1.0, s.n) * s.n, "monotone");
  for (Mask g = 0; g <= s.full(); ++g) {
    for (int i = 0; i < s.n; ++i) {
      if (contains(g, i)) continue;
      Mask sigma = g | element_bit(i);
      Mask lost = s.table[g] & ~s.table[sigma];
      if (lost != 0) {
        return fail_with({g, sigma, std::countr_zero(lost), std::nullopt,
                          "consequence lost when growing gamma"});
      }
    }
  }
  return pass();
}

CheckResult transitive_check(const LogicalStructure& s) {
  require_budget(std::ldexp(1.0, 2 * s.n), "transitive");
  for (Mask g = 0; g <= s.full(); ++g) {
    for (Mask sig = 0; sig <= s.full(); ++sig) {
      if (!subset_of(sig, s.table[g])) continue;
      Mask extra = s.table[sig] & ~s.table[g];
      if (extra != 0) {
        return fail_with({g, sig, std::countr_zero(extra), std::nullopt,
                          "sigma below C(gamma) but C(sigma) escapes C(gamma)"});
      }
    }
  }
  return pass();
}

CheckResult cut_check(const LogicalStructure& s) {
  require_budget(std::ldexp(1.0, s.n) * s.n, "cut");
  for (Mask g = 0; g <= s.full(); ++g) {
    for (int a = 0; a < s.n; ++a) {
      if (!contains(s.table[g], a)) continue;
      Mask extra = s.table[g | element_bit(a)] & ~s.table[g];
      if (extra != 0) {
        return fail_with({g, std::nullopt, a, std::countr_zero(extra),
                          "gamma derives alpha, gamma+alpha derives beta, gamma misses beta"});
      }
    }
  }
  return pass();
}

CheckResult mixed_cut_check(const LogicalStructure& s) {
  require_budget(std::ldexp(1.0, 2 * s.n) * s.n * s.n, "mixed-cut");
  for (Mask g = 0; g <= s.full(); ++g) {
    for (Mask sig = 0; sig <= s.full(); ++sig) {
      const Mask target = s.table[g | sig];
      for (int a = 0; a < s.n; ++a) {
        if (!contains(s.table[g], a)) continue;
        Mask extra = s.table[sig | element_bit(a)] & ~target;
        if (extra != 0) {
          return fail_with({g, sig, a, std::countr_zero(extra),
                            "gamma derives alpha, sigma+alpha derives beta, union misses beta"});
        }
      }
    }
  }
  return pass();
}

CheckResult modus_ponens_check(const LogicalStructure& s, const ArrowTable& arrow) {
  require_budget(std::ldexp(1.0, s.n) * s.n * s.n, "modus-ponens");
  for (Mask g = 0; g <= s.full(); ++g) {
    const Mask c = s.table[g];
    for (int a = 0; a < s.n; ++a) {
      if (!contains(c, a)) continue;
      for (int b = 0; b < s.n; ++b) {
        if (contains(c, arrow.at(a, b)) && !contains(c, b)) {
          return fail_with({g, std::nullopt, a, b,
                            "gamma derives alpha and alpha->beta but not beta"});
        }
      }
    }
  }
  return pass();
}

}  // namespace

Mask xi(const LogicalStructure& s, const ArrowTable& arrow, int alpha) {
  s.check_element(alpha);
  check_arrow(s, &arrow, "xi");
  Mask out = 0;
  for (int b = 0; b < s.n; ++b) out |= element_bit(arrow.at(alpha, b));
  return out;
}

CheckResult check_set(const LogicalStructure& s, const SetProperty& prop, Mask gamma) {
  s.check_width(gamma);
  check_alpha(s, prop);
  using Tag = SetProperty::Tag;
  switch (prop.tag) {
    case Tag::Closed:
      if (is_closed(s, gamma)) return pass();
      return fail_with({gamma, std::nullopt, std::nullopt, std::nullopt,
                        "C(gamma)=" + format_subset(s.table[gamma])});
    case Tag::StronglyClosed:
      return strongly_closed_check(s, gamma);
    case Tag::Trivial:
      if (is_trivial(s, gamma)) return pass();
      return fail_with({gamma, std::nullopt, std::countr_zero(s.full() & ~s.table[gamma]),
                        std::nullopt, "gamma does not derive alpha"});
    case Tag::Nontrivial:
      if (!is_trivial(s, gamma)) return pass();
      return fail_with({gamma, std::nullopt, std::nullopt, std::nullopt, "gamma is trivial"});
    case Tag::AlphaSaturated:
      return alpha_saturated_check(s, gamma, prop.alpha);
    case Tag::Saturated:
      return saturated_check(s, gamma);
    case Tag::RelativelyMaximal:
      require_budget(std::ldexp(1.0, s.n - popcount(gamma)), "relatively-maximal");
      return relatively_maximal_check(s, gamma, prop.alpha);
    case Tag::MaximalNontrivial:
      return maximal_within(s, gamma, [&](Mask g) { return !is_trivial(s, g); }, "nontrivial");
    case Tag::MaximalSaturated:
      require_budget(std::ldexp(1.0, s.n) * s.n * s.n, "maximal-saturated");
      return maximal_within(s, gamma, [&](Mask g) { return saturated_check(s, g).holds; },
                            "saturated");
    case Tag::MaximalAlphaSaturated:
      require_budget(std::ldexp(1.0, s.n) * s.n, "maximal-alpha-saturated");
      return maximal_within(
          s, gamma, [&](Mask g) { return alpha_saturated_check(s, g, prop.alpha).holds; },
          "alpha-saturated");
    case Tag::ArrowSaturated:
      check_arrow(s, prop.arrow, "arrow-saturated");
      return arrow_saturated_check(s, *prop.arrow, gamma);
  }
  fail(ErrorKind::Domain, "unknown set property");
}

CheckResult check_structure(const LogicalStructure& s, const StructureProperty& prop) {
  using Tag = StructureProperty::Tag;
  switch (prop.tag) {
    case Tag::Reflexive: return reflexive_check(s);
    case Tag::Monotone: return monotone_check(s);
    case Tag::Transitive: return transitive_check(s);
    case Tag::TarskiByDef: {
      if (auto r = reflexive_check(s); !r.holds) return r;
      if (auto r = monotone_check(s); !r.holds) return r;
      return transitive_check(s);
    }
    case Tag::Cut: return cut_check(s);
    case Tag::MixedCut: return mixed_cut_check(s);
    case Tag::Finitary:
      return pass();  // on a finite carrier, gamma itself is the finite witness
    case Tag::ModusPonens:
      check_arrow(s, prop.arrow, "modus-ponens");
      return modus_ponens_check(s, *prop.arrow);
  }
  fail(ErrorKind::Domain, "unknown structure property");
}

std::vector<Mask> enumerate_sets(const LogicalStructure& s, const SetProperty& prop) {
  check_alpha(s, prop);
  require_budget(std::ldexp(1.0, 2 * s.n) * s.n, "enumerate-sets");
  std::vector<Mask> out;
  for (Mask g = 0; g <= s.full(); ++g) {
    if (check_set(s, prop, g).holds) out.push_back(g);
  }
  return out;
}

std::optional<SetProperty::Tag> set_property_tag_from_name(std::string_view name) {
  using Tag = SetProperty::Tag;
  if (name == "closed") return Tag::Closed;
  if (name == "strongly-closed") return Tag::StronglyClosed;
  if (name == "trivial") return Tag::Trivial;
  if (name == "nontrivial") return Tag::Nontrivial;
  if (name == "alpha-saturated") return Tag::AlphaSaturated;
  if (name == "saturated") return Tag::Saturated;
  if (name == "relatively-maximal") return Tag::RelativelyMaximal;
  if (name == "maximal-nontrivial") return Tag::MaximalNontrivial;
  if (name == "maximal-saturated") return Tag::MaximalSaturated;
  if (name == "maximal-alpha-saturated") return Tag::MaximalAlphaSaturated;
  if (name == "arrow-saturated") return Tag::ArrowSaturated;
  return std::nullopt;
}

std::optional<StructureProperty::Tag> structure_property_tag_from_name(std::string_view name) {
  using Tag = StructureProperty::Tag;
  if (name == "reflexive") return Tag::Reflexive;
  if (name == "monotone") return Tag::Monotone;
  if (name == "transitive") return Tag::Transitive;
  if (name == "tarski" || name == "tarski-by-def") return Tag::TarskiByDef;
  if (name == "cut") return Tag::Cut;
  if (name == "mixed-cut") return Tag::MixedCut;
  if (name == "finitary") return Tag::Finitary;
  if (name == "modus-ponens") return Tag::ModusPonens;
  return std::nullopt;
}

}  // namespace lsx
