#include "lsx/ordinal.hpp"

#include "lsx/core.hpp"

namespace lsx {

std::string Ordinal::to_string() const {
  if (limit == 0) return std::to_string(fin);
  if (fin == 0) return "w";
  return "w+" + std::to_string(fin);
}

Ordinal least_upper_downset(const std::vector<Ordinal>& elems) {
  Ordinal out{0, 0};
  for (const Ordinal& e : elems) out = ordinal_max(out, e.succ());
  return out;
}

int TruncatedOrdinalModel::rank(Ordinal o) const {
  if (o.fin < 0 || o.fin >= K || o.limit < 0 || o.limit > 1) {
    fail(ErrorKind::Domain,
         "ordinal " + o.to_string() + " outside the truncated model (K=" + std::to_string(K) + ")");
  }
  return o.limit * K + o.fin;
}

Ordinal TruncatedOrdinalModel::from_rank(int r) const {
  if (r < 0 || r >= 2 * K) fail(ErrorKind::Domain, "rank outside the truncated model");
  return Ordinal{r / K, r % K};
}

Ordinal TruncatedOrdinalModel::least_containing(const std::vector<Ordinal>& elems) const {
  for (int r = 0; r < 2 * K; ++r) {
    bool contains_all = true;
    for (const Ordinal& e : elems) {
      if (rank(e) >= r) {
        contains_all = false;
        break;
      }
    }
    if (contains_all) return from_rank(r);
  }
  fail(ErrorKind::Domain, "no containing ordinal within the truncated model");
}

}  // namespace lsx
