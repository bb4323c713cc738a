#include "lsx/core.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

namespace lsx {

void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

int popcount(Mask m) { return std::popcount(m); }

std::string format_subset(Mask m) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!contains(m, i)) continue;
    if (!first) out << ' ';
    out << i;
    first = false;
  }
  out << '}';
  return out.str();
}

std::uint64_t step_budget() {
  if (const char* env = std::getenv("LSX_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::uint64_t{1} << 23;
}

void require_budget(double estimated_steps, std::string_view check_name) {
  const auto budget = static_cast<double>(step_budget());
  if (estimated_steps > budget) {
    std::ostringstream msg;
    msg << check_name << " needs ~" << static_cast<std::uint64_t>(estimated_steps)
        << " steps, over the budget of " << step_budget()
        << " (raise LSX_BUDGET to force)";
    fail(ErrorKind::Budget, msg.str());
  }
}

void LogicalStructure::check_width(Mask gamma) const {
  if (!subset_of(gamma, full())) {
    fail(ErrorKind::Width,
         "subset " + format_subset(gamma) + " does not fit carrier of size " + std::to_string(n));
  }
}

void LogicalStructure::check_element(int alpha) const {
  if (alpha < 0 || alpha >= n) {
    fail(ErrorKind::Index,
         "element " + std::to_string(alpha) + " outside carrier of size " + std::to_string(n));
  }
}

Mask LogicalStructure::consequences(Mask gamma) const {
  check_width(gamma);
  return table[gamma];
}

bool LogicalStructure::derives(Mask gamma, int alpha) const {
  check_width(gamma);
  check_element(alpha);
  return contains(table[gamma], alpha);
}

std::string LogicalStructure::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  for (Mask entry : table) mix(entry);
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

namespace {

void check_carrier_size(int n) {
  if (n < 1) fail(ErrorKind::Domain, "carrier size must be at least 1");
  if (n > kMaxCarrier) {
    fail(ErrorKind::Domain, "carrier size " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(kMaxCarrier));
  }
}

void check_nonempty_relation(const LogicalStructure& s) {
  for (Mask entry : s.table) {
    if (entry != 0) return;
  }
  fail(ErrorKind::EmptyRelation, "induced relation is empty: no gamma derives any element");
}

}  // namespace

BivaluationSet make_bivaluation_set(int width, std::vector<Mask> valuations) {
  check_carrier_size(width);
  if (valuations.empty()) {
    fail(ErrorKind::EmptyValuations, "bivaluation set must be nonempty");
  }
  for (Mask v : valuations) {
    if (!subset_of(v, full_mask(width))) {
      fail(ErrorKind::Width, "valuation " + format_subset(v) + " does not fit width " +
                                 std::to_string(width));
    }
  }
  std::sort(valuations.begin(), valuations.end());
  valuations.erase(std::unique(valuations.begin(), valuations.end()), valuations.end());
  return BivaluationSet{width, std::move(valuations)};
}

Mask induced_consequences(int n, const std::vector<Mask>& valuations, Mask gamma) {
  Mask result = full_mask(n);
  for (Mask v : valuations) {
    if (valuation_satisfies(v, gamma)) result &= v;
  }
  return result;
}

int ArrowTable::at(int a, int b) const {
  if (a < 0 || a >= n || b < 0 || b >= n) {
    fail(ErrorKind::Index, "arrow argument outside carrier of size " + std::to_string(n));
  }
  return op[static_cast<std::size_t>(a) * n + b];
}

ArrowTable make_arrow(int n, std::vector<int> op) {
  check_carrier_size(n);
  if (op.size() != static_cast<std::size_t>(n) * n) {
    fail(ErrorKind::Domain, "arrow table must have n*n entries");
  }
  for (int v : op) {
    if (v < 0 || v >= n) {
      fail(ErrorKind::Index, "arrow value " + std::to_string(v) + " outside carrier");
    }
  }
  return ArrowTable{n, std::move(op)};
}

ArrowTable arrow_first_projection(int n) {
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) op[static_cast<std::size_t>(a) * n + b] = a;
  return make_arrow(n, std::move(op));
}

ArrowTable arrow_second_projection(int n) {
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) op[static_cast<std::size_t>(a) * n + b] = b;
  return make_arrow(n, std::move(op));
}

ArrowTable arrow_constant(int n, int c) {
  if (c < 0 || c >= n) fail(ErrorKind::Index, "arrow constant outside carrier");
  return make_arrow(n, std::vector<int>(static_cast<std::size_t>(n) * n, c));
}

LogicalStructure structure_from_table(int n, std::vector<Mask> table, std::string origin) {
  check_carrier_size(n);
  if (table.size() != (std::size_t{1} << n)) {
    fail(ErrorKind::Width, "table must have exactly 2^n entries");
  }
  for (Mask entry : table) {
    if (!subset_of(entry, full_mask(n))) {
      fail(ErrorKind::Width, "table entry " + format_subset(entry) + " does not fit width " +
                                 std::to_string(n));
    }
  }
  LogicalStructure s{n, std::move(table), std::move(origin)};
  check_nonempty_relation(s);
  return s;
}

LogicalStructure structure_from_entries(int n, const std::vector<TableEntry>& entries,
                                        DefaultRule default_rule, Mask named_default) {
  check_carrier_size(n);
  const Mask full = full_mask(n);
  if (default_rule == DefaultRule::NamedSubset && !subset_of(named_default, full)) {
    fail(ErrorKind::Width, "default subset does not fit the carrier");
  }
  std::vector<Mask> table(std::size_t{1} << n);
  std::vector<char> given(std::size_t{1} << n, 0);
  for (const TableEntry& e : entries) {
    if (!subset_of(e.gamma, full) || !subset_of(e.value, full)) {
      fail(ErrorKind::Width, "table entry does not fit width " + std::to_string(n));
    }
    if (given[e.gamma]) {
      fail(ErrorKind::Domain, "duplicate entry for subset " + format_subset(e.gamma));
    }
    given[e.gamma] = 1;
    table[e.gamma] = e.value;
  }
  for (Mask g = 0; g <= full; ++g) {
    if (given[g]) continue;
    switch (default_rule) {
      case DefaultRule::Identity: table[g] = g; break;
      case DefaultRule::Full: table[g] = full; break;
      case DefaultRule::NamedSubset: table[g] = named_default; break;
    }
  }
  return structure_from_table(n, std::move(table));
}

LogicalStructure structure_from_rule(int n, std::string_view rule_name) {
  check_carrier_size(n);
  const Mask full = full_mask(n);
  std::vector<Mask> table(std::size_t{1} << n);
  if (rule_name == "identity") {
    for (Mask g = 0; g <= full; ++g) table[g] = g;
  } else if (rule_name == "full" || rule_name == "full-constant") {
    for (Mask g = 0; g <= full; ++g) table[g] = full;
  } else if (rule_name == "empty" || rule_name == "empty-then-reject") {
    // all entries zero; rejected below
  } else {
    fail(ErrorKind::Rule, "unknown rule '" + std::string(rule_name) + "'");
  }
  return structure_from_table(n, std::move(table), "rule:" + std::string(rule_name));
}

LogicalStructure structure_from_bivaluations(const BivaluationSet& vals) {
  check_carrier_size(vals.width);
  if (vals.valuations.empty()) {
    fail(ErrorKind::EmptyValuations, "bivaluation set must be nonempty");
  }
  const Mask full = full_mask(vals.width);
  std::vector<Mask> table(std::size_t{1} << vals.width);
  for (Mask g = 0; g <= full; ++g) {
    table[g] = induced_consequences(vals.width, vals.valuations, g);
  }
  return structure_from_table(vals.width, std::move(table), "bivaluation-induced");
}

namespace {

void check_same_carrier(const LogicalStructure& a, const LogicalStructure& b) {
  if (a.n != b.n) {
    fail(ErrorKind::Width, "carrier sizes differ: " + std::to_string(a.n) + " vs " +
                               std::to_string(b.n));
  }
}

}  // namespace

bool subrelation(const LogicalStructure& a, const LogicalStructure& b) {
  check_same_carrier(a, b);
  for (Mask g = 0; g <= a.full(); ++g) {
    if (!subset_of(a.table[g], b.table[g])) return false;
  }
  return true;
}

bool relation_equal(const LogicalStructure& a, const LogicalStructure& b) {
  check_same_carrier(a, b);
  return a.table == b.table;
}

std::optional<RelationGap> relation_gap(const LogicalStructure& a, const LogicalStructure& b) {
  check_same_carrier(a, b);
  for (Mask g = 0; g <= a.full(); ++g) {
    Mask extra = b.table[g] & ~a.table[g];
    if (extra != 0) return RelationGap{g, std::countr_zero(extra)};
  }
  return std::nullopt;
}

bool strict_subrelation(const LogicalStructure& a, const LogicalStructure& b,
                        RelationGap* witness) {
  if (!subrelation(a, b)) return false;
  auto gap = relation_gap(a, b);
  if (!gap) return false;
  if (witness) *witness = *gap;
  return true;
}

}  // namespace lsx
