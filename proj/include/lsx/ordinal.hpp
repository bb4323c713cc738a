#pragma once

#include <compare>
#include <string>
#include <vector>

namespace lsx {

/// An ordinal below omega*2, written w*limit + fin with limit in {0,1}.
/// Membership coincides with the order: a is an element of b iff a < b.
struct Ordinal {
  int limit = 0;
  int fin = 0;

  friend auto operator<=>(const Ordinal&, const Ordinal&) = default;

  static Ordinal nat(int m) { return {0, m}; }
  static Ordinal omega_plus(int m) { return {1, m}; }
  static Ordinal omega() { return {1, 0}; }

  bool is_finite() const { return limit == 0; }
  bool is_omega() const { return limit == 1 && fin == 0; }

  Ordinal succ() const { return {limit, fin + 1}; }

  std::string to_string() const;  // "3", "w", "w+2"
};

inline bool ordinal_member(Ordinal a, Ordinal b) { return a < b; }
inline Ordinal ordinal_max(Ordinal a, Ordinal b) { return a < b ? b : a; }

/// Least ordinal whose downset contains every listed ordinal: the successor
/// of the maximum, or 0 for the empty list. Always representable below
/// omega*2 since inputs are.
Ordinal least_upper_downset(const std::vector<Ordinal>& elems);

/// Brute-force model of the ordinals below w+K with w truncated to K: each
/// ordinal is identified with its rank, and the downset of rank r is exactly
/// the ordinals of smaller rank. Faithful for inputs whose finite parts stay
/// below K. Used as an oracle against the arithmetic above.
struct TruncatedOrdinalModel {
  int K = 64;

  int rank(Ordinal o) const;
  Ordinal from_rank(int r) const;

  /// First rank whose downset contains all of `elems`, by linear scan.
  Ordinal least_containing(const std::vector<Ordinal>& elems) const;
};

}  // namespace lsx
