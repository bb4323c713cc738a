#include "lsx/propcheck.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "lsx/bival.hpp"
#include "lsx/gallery.hpp"
#include "lsx/properties.hpp"
#include "lsx/rng.hpp"

namespace lsx {

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Arbitrary: return "arbitrary";
    case Strategy::Monotone: return "monotone";
    case Strategy::BivaluationInduced: return "bivaluation";
    case Strategy::Arrowed: return "arrowed";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
  if (name == "arbitrary") return Strategy::Arbitrary;
  if (name == "monotone") return Strategy::Monotone;
  if (name == "bivaluation" || name == "bivaluation-induced") return Strategy::BivaluationInduced;
  if (name == "arrowed") return Strategy::Arrowed;
  return std::nullopt;
}

namespace {

std::uint64_t stream_seed(const GeneratorSpec& spec, int index, std::uint64_t salt) {
  std::uint64_t h = mix_seed(spec.seed, static_cast<std::uint64_t>(spec.strategy) + 1);
  h = mix_seed(h, static_cast<std::uint64_t>(spec.n));
  h = mix_seed(h, static_cast<std::uint64_t>(index));
  return mix_seed(h, salt);
}

std::vector<Mask> random_table(SplitMix64& rng, int n) {
  const std::uint64_t entries = std::uint64_t{1} << n;
  std::vector<Mask> table(entries);
  for (auto& e : table) e = static_cast<Mask>(rng.below(entries));
  return table;
}

bool all_zero(const std::vector<Mask>& table) {
  for (Mask e : table) {
    if (e != 0) return false;
  }
  return true;
}

// monotone envelope: C'(gamma) = union of C(sigma) over sigma below gamma
void monotone_envelope(std::vector<Mask>& table, int n) {
  for (Mask g = 0; g < table.size(); ++g) {
    for (int i = 0; i < n; ++i) {
      if (contains(g, i)) table[g] |= table[g & ~element_bit(i)];
    }
  }
}

}  // namespace

LogicalStructure generate(const GeneratorSpec& spec, int index) {
  if (spec.n < 1 || spec.n > kMaxCarrier) {
    fail(ErrorKind::Domain, "generator carrier size outside the cap");
  }
  SplitMix64 rng(stream_seed(spec, index, 0xA11CE));
  switch (spec.strategy) {
    case Strategy::Arbitrary:
    case Strategy::Arrowed: {
      std::vector<Mask> table = random_table(rng, spec.n);
      while (all_zero(table)) table = random_table(rng, spec.n);
      return structure_from_table(spec.n, std::move(table));
    }
    case Strategy::Monotone: {
      std::vector<Mask> table = random_table(rng, spec.n);
      while (all_zero(table)) table = random_table(rng, spec.n);
      monotone_envelope(table, spec.n);
      return structure_from_table(spec.n, std::move(table));
    }
    case Strategy::BivaluationInduced: {
      const std::uint64_t space = std::uint64_t{1} << spec.n;
      const std::uint64_t k = 1 + rng.below(space);
      std::vector<Mask> vals;
      vals.reserve(k);
      for (std::uint64_t i = 0; i < k; ++i) vals.push_back(static_cast<Mask>(rng.below(space)));
      return structure_from_bivaluations(make_bivaluation_set(spec.n, std::move(vals)));
    }
  }
  fail(ErrorKind::Domain, "unknown strategy");
}

ArrowTable generate_arrow(const GeneratorSpec& spec, int index) {
  SplitMix64 rng(stream_seed(spec, index, 0xA770));
  std::vector<int> op(static_cast<std::size_t>(spec.n) * spec.n);
  for (auto& v : op) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.n)));
  return make_arrow(spec.n, std::move(op));
}

std::vector<CorpusItem> build_corpus(Strategy strategy, int count, int size_min, int size_max,
                                     std::uint64_t seed) {
  if (size_min < 1 || size_max < size_min || size_max > kMaxCarrier) {
    fail(ErrorKind::Domain, "invalid size range");
  }
  std::vector<CorpusItem> corpus;
  corpus.reserve(count);
  const int span = size_max - size_min + 1;
  for (int i = 0; i < count; ++i) {
    GeneratorSpec spec{strategy, size_min + (i % span), seed, count};
    CorpusItem item;
    item.structure = generate(spec, i);
    item.arrows.push_back(arrow_second_projection(spec.n));
    item.arrows.push_back(arrow_constant(spec.n, 0));
    item.arrows.push_back(generate_arrow(spec, i));
    item.label = strategy_name(strategy) + "[" + std::to_string(i) + "] n=" +
                 std::to_string(spec.n) + " seed=" + std::to_string(seed);
    corpus.push_back(std::move(item));
  }
  return corpus;
}

std::vector<CorpusItem> canonical_exhibits() {
  std::vector<CorpusItem> out;
  auto with_arrows = [](LogicalStructure s, std::string label) {
    CorpusItem item;
    const int n = s.n;
    item.structure = std::move(s);
    item.arrows.push_back(arrow_second_projection(n));
    item.arrows.push_back(arrow_constant(n, 0));
    item.label = std::move(label);
    return item;
  };
  for (int n : {2, 3, 4}) {
    out.push_back(with_arrows(structure_from_rule(n, "identity"),
                              "exhibit:identity-" + std::to_string(n)));
  }
  out.push_back(with_arrows(structure_from_rule(3, "full"), "exhibit:full-3"));
  out.push_back(with_arrows(gallery::g5_structure(), "exhibit:g5"));

  {
    // reflexive structure with modus ponens for a bespoke arrow, where {0}
    // is a nontrivial arrow-saturated set
    std::vector<Mask> table = {0b00, 0b01, 0b11, 0b11};
    CorpusItem item = with_arrows(structure_from_table(2, std::move(table)),
                                  "exhibit:arrow-saturated");
    item.arrows.push_back(make_arrow(2, {0, 1, 0, 0}));
    out.push_back(std::move(item));
  }
  {
    // reflexive structure where adding xi(beta) never grows consequences for
    // the constant arrow, with the closed set {0} arrow-saturated
    std::vector<Mask> table = {0b01, 0b01, 0b11, 0b11};
    out.push_back(with_arrows(structure_from_table(2, std::move(table)),
                              "exhibit:absorbed-arrow"));
  }
  return out;
}

StructureAnalysis analyze_structure(const LogicalStructure& s) {
  StructureAnalysis a;
  a.cls = classify(s);
  const std::size_t count = s.subset_count();
  a.sat_alphas.assign(count, 0);
  a.relmax_alphas.assign(count, 0);
  a.strongly_closed.assign(count, 0);
  a.max_nontrivial.assign(count, 0);
  for (Mask g = 0; g <= s.full(); ++g) {
    for (int alpha = 0; alpha < s.n; ++alpha) {
      if (check_set(s, SetProperty::alpha_saturated(alpha), g).holds) {
        a.sat_alphas[g] |= element_bit(alpha);
      }
      if (check_set(s, SetProperty::relatively_maximal(alpha), g).holds) {
        a.relmax_alphas[g] |= element_bit(alpha);
      }
    }
    a.strongly_closed[g] = check_set(s, SetProperty::strongly_closed(), g).holds;
    a.max_nontrivial[g] = check_set(s, SetProperty::maximal_nontrivial(), g).holds;
  }
  a.scs = extract(s, ValuationFamily::SCS).valuations;
  a.scs_star = extract(s, ValuationFamily::SCS_STAR).valuations;
  a.relmax_family = extract(s, ValuationFamily::RELMAX).valuations;
  a.suszko_closed = extract(s, ValuationFamily::SUSZKO_CLOSED).valuations;
  return a;
}

std::vector<std::string> RegistryReport::uncovered() const {
  std::vector<std::string> out;
  for (const auto& st : stats) {
    if (st.hypothesis_satisfied == 0) out.push_back(st.id);
  }
  return out;
}

LogicalStructure restrict_structure(const LogicalStructure& s, Mask keep) {
  s.check_width(keep);
  const int m = popcount(keep);
  if (m < 1) fail(ErrorKind::Domain, "restriction must keep at least one element");
  std::vector<int> old_of_new;
  for (int i = 0; i < s.n; ++i) {
    if (contains(keep, i)) old_of_new.push_back(i);
  }
  auto expand = [&](Mask small) {
    Mask big = 0;
    for (int j = 0; j < m; ++j) {
      if (contains(small, j)) big |= element_bit(old_of_new[j]);
    }
    return big;
  };
  auto compress = [&](Mask big) {
    Mask small = 0;
    for (int j = 0; j < m; ++j) {
      if (contains(big, old_of_new[j])) small |= element_bit(j);
    }
    return small;
  };
  std::vector<Mask> table(std::size_t{1} << m);
  for (Mask g = 0; g < table.size(); ++g) {
    table[g] = compress(s.table[expand(g)] & keep);
  }
  return structure_from_table(m, std::move(table), "restriction");
}

namespace {

struct EvaluatedEntry {
  const TheoremEntry* entry = nullptr;
  bool fired = false;
  TheoremCheckOutcome outcome;
};

ArrowTable restrict_arrow(const ArrowTable& arrow, Mask keep, bool* ok) {
  std::vector<int> old_of_new;
  for (int i = 0; i < arrow.n; ++i) {
    if (contains(keep, i)) old_of_new.push_back(i);
  }
  const int m = static_cast<int>(old_of_new.size());
  std::vector<int> new_of_old(arrow.n, -1);
  for (int j = 0; j < m; ++j) new_of_old[old_of_new[j]] = j;
  std::vector<int> op(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int v = arrow.at(old_of_new[a], old_of_new[b]);
      if (!contains(keep, v)) {
        *ok = false;
        return ArrowTable{};
      }
      op[static_cast<std::size_t>(a) * m + b] = new_of_old[v];
    }
  }
  *ok = true;
  return make_arrow(m, std::move(op));
}

// does the entry still fail on this structure (for some usable arrow)?
bool entry_fails_on(const TheoremEntry& entry, const LogicalStructure& s,
                    const std::vector<ArrowTable>& arrows) {
  StructureAnalysis analysis = analyze_structure(s);
  if (!entry.needs_arrow) {
    TheoremContext ctx{&s, nullptr, &analysis};
    return entry.hypothesis(ctx) && !entry.conclusion(ctx).ok;
  }
  for (const auto& arrow : arrows) {
    TheoremContext ctx{&s, &arrow, &analysis};
    if (entry.hypothesis(ctx) && !entry.conclusion(ctx).ok) return true;
  }
  return false;
}

// greedy single-element removals while the failure persists; best effort
std::pair<LogicalStructure, std::vector<ArrowTable>> minimize_failure(
    const TheoremEntry& entry, const CorpusItem& item) {
  LogicalStructure current = item.structure;
  std::vector<ArrowTable> arrows = item.arrows;
  bool shrunk = true;
  while (shrunk && current.n > 1) {
    shrunk = false;
    for (int e = current.n - 1; e >= 0; --e) {
      const Mask keep = current.full() & ~element_bit(e);
      LogicalStructure candidate;
      try {
        candidate = restrict_structure(current, keep);
      } catch (const Error&) {
        continue;  // restriction emptied the relation
      }
      std::vector<ArrowTable> restricted;
      for (const auto& arrow : arrows) {
        bool ok = false;
        ArrowTable ra = restrict_arrow(arrow, keep, &ok);
        if (ok) restricted.push_back(std::move(ra));
      }
      if (entry.needs_arrow && restricted.empty()) continue;
      if (entry_fails_on(entry, candidate, restricted)) {
        current = std::move(candidate);
        arrows = std::move(restricted);
        shrunk = true;
        break;
      }
    }
  }
  return {std::move(current), std::move(arrows)};
}

struct ItemOutcome {
  // per selected entry: fired flag, instances, and failure witness if any
  std::vector<char> fired;
  std::vector<long> instances;
  std::vector<std::string> witnesses;  // empty string = passed
};

ItemOutcome evaluate_item(const std::vector<const TheoremEntry*>& entries,
                          const CorpusItem& item) {
  ItemOutcome out;
  out.fired.assign(entries.size(), 0);
  out.instances.assign(entries.size(), 0);
  out.witnesses.assign(entries.size(), std::string());
  const StructureAnalysis analysis = analyze_structure(item.structure);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const TheoremEntry& entry = *entries[k];
    if (!entry.needs_arrow) {
      TheoremContext ctx{&item.structure, nullptr, &analysis};
      if (!entry.hypothesis(ctx)) continue;
      out.fired[k] = 1;
      auto res = entry.conclusion(ctx);
      out.instances[k] += res.instances;
      if (!res.ok) out.witnesses[k] = res.witness;
    } else {
      for (const auto& arrow : item.arrows) {
        TheoremContext ctx{&item.structure, &arrow, &analysis};
        if (!entry.hypothesis(ctx)) continue;
        out.fired[k] = 1;
        auto res = entry.conclusion(ctx);
        out.instances[k] += res.instances;
        if (!res.ok && out.witnesses[k].empty()) out.witnesses[k] = res.witness;
      }
    }
  }
  return out;
}

}  // namespace

RegistryReport run_registry(const std::vector<CorpusItem>& corpus,
                            const RegistryOptions& options) {
  std::vector<const TheoremEntry*> entries;
  if (options.ids.empty()) {
    for (const auto& e : theorem_registry()) entries.push_back(&e);
  } else {
    for (const auto& id : options.ids) {
      const TheoremEntry* e = find_theorem(id);
      if (e == nullptr) fail(ErrorKind::Domain, "unknown theorem id '" + id + "'");
      entries.push_back(e);
    }
  }

  std::vector<ItemOutcome> outcomes(corpus.size());
  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::min(8u, std::thread::hardware_concurrency()));
  threads = std::max(1, std::min<int>(threads, static_cast<int>(corpus.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) outcomes[i] = evaluate_item(entries, corpus[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= corpus.size()) return;
        outcomes[i] = evaluate_item(entries, corpus[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  RegistryReport report;
  report.items = static_cast<long>(corpus.size());
  report.stats.reserve(entries.size());
  for (const auto* e : entries) report.stats.push_back({e->id, e->summary, 0, 0, 0});
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ItemOutcome& out = outcomes[i];
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (!out.fired[k]) continue;
      report.stats[k].hypothesis_satisfied += 1;
      report.stats[k].conclusions_checked += out.instances[k];
      if (out.witnesses[k].empty()) continue;
      report.stats[k].failures += 1;
      TheoremFailure failure;
      failure.theorem_id = entries[k]->id;
      failure.item_label = corpus[i].label;
      failure.witness = out.witnesses[k];
      failure.original_carrier = corpus[i].structure.n;
      failure.minimized_carrier = corpus[i].structure.n;
      if (options.minimize_witnesses) {
        failure.minimized_carrier = minimize_failure(*entries[k], corpus[i]).first.n;
      }
      report.failures.push_back(std::move(failure));
    }
  }
  return report;
}

RegistryReport run_custom_entry(const std::vector<CorpusItem>& corpus, const TheoremEntry& entry,
                                bool minimize_witnesses) {
  std::vector<const TheoremEntry*> entries = {&entry};
  RegistryOptions opts;
  opts.minimize_witnesses = minimize_witnesses;
  opts.threads = 1;
  RegistryReport report;
  report.items = static_cast<long>(corpus.size());
  report.stats.push_back({entry.id, entry.summary, 0, 0, 0});
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ItemOutcome out = evaluate_item(entries, corpus[i]);
    if (!out.fired[0]) continue;
    report.stats[0].hypothesis_satisfied += 1;
    report.stats[0].conclusions_checked += out.instances[0];
    if (out.witnesses[0].empty()) continue;
    report.stats[0].failures += 1;
    TheoremFailure failure;
    failure.theorem_id = entry.id;
    failure.item_label = corpus[i].label;
    failure.witness = out.witnesses[0];
    failure.original_carrier = corpus[i].structure.n;
    failure.minimized_carrier = corpus[i].structure.n;
    if (minimize_witnesses) {
      failure.minimized_carrier = minimize_failure(entry, corpus[i]).first.n;
    }
    report.failures.push_back(std::move(failure));
  }
  return report;
}

void for_each_structure(int n, const std::function<void(const LogicalStructure&)>& fn) {
  if (n < 1 || n > 2) {
    fail(ErrorKind::Domain, "exhaustive table enumeration is limited to n <= 2");
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const Mask entry_space = static_cast<Mask>(subsets);
  std::vector<Mask> table(subsets, 0);
  for (;;) {
    if (!all_zero(table)) {
      fn(structure_from_table(n, table));
    }
    // odometer increment over the table entries
    std::size_t pos = 0;
    while (pos < subsets) {
      if (++table[pos] < entry_space) break;
      table[pos] = 0;
      ++pos;
    }
    if (pos == subsets) break;
  }
}

}  // namespace lsx
