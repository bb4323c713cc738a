#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsx/gallery.hpp"
#include "lsx/ordinal.hpp"
#include "lsx/rng.hpp"

using namespace lsx;
using gallery::ord_least_containing;

TEST_CASE("ordinal order, membership, successors") {
  const Ordinal three = Ordinal::nat(3);
  const Ordinal w = Ordinal::omega();
  const Ordinal w2 = Ordinal::omega_plus(2);

  CHECK(three < w);
  CHECK(w < w2);
  CHECK(ordinal_member(three, w));
  CHECK(!ordinal_member(w, three));
  CHECK(!ordinal_member(w, w));  // no ordinal is a member of itself
  CHECK(three.succ() == Ordinal::nat(4));
  CHECK(w.succ() == Ordinal::omega_plus(1));
  CHECK(!Ordinal::nat(1000).succ().is_omega());  // successors are never the limit

  CHECK(three.to_string() == "3");
  CHECK(w.to_string() == "w");
  CHECK(w2.to_string() == "w+2");
}

TEST_CASE("the order is strict and total on a sample grid") {
  std::vector<Ordinal> grid;
  for (int lim = 0; lim <= 1; ++lim) {
    for (int f = 0; f < 20; ++f) grid.push_back(Ordinal{lim, f});
  }
  for (const Ordinal& a : grid) {
    CHECK(!(a < a));
    for (const Ordinal& b : grid) {
      const int relations = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (b < a ? 1 : 0);
      CHECK(relations == 1);  // trichotomy
      CHECK(ordinal_member(a, b) == (a < b));
      for (const Ordinal& c : grid) {
        if (a < b && b < c) CHECK(a < c);
      }
    }
  }
}

TEST_CASE("least containing downsets") {
  using gallery::DownsetOrd;
  using gallery::FiniteOrds;
  CHECK(ord_least_containing(FiniteOrds{{Ordinal::nat(3), Ordinal::omega_plus(1)}}) ==
        Ordinal::omega_plus(2));
  CHECK(ord_least_containing(DownsetOrd{Ordinal::nat(1)}) == Ordinal::nat(1));
  CHECK(ord_least_containing(DownsetOrd{Ordinal::omega()}) == Ordinal::omega());
  CHECK(ord_least_containing(FiniteOrds{}) == Ordinal::nat(0));
  CHECK(ord_least_containing(gallery::DownsetPlus{Ordinal::nat(2), {Ordinal::omega_plus(3)}}) ==
        Ordinal::omega_plus(4));
}

TEST_CASE("cofinal descriptors have no containing ordinal") {
  try {
    ord_least_containing(gallery::MarkedInfinite{"cofinal-tail"});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
    CHECK(std::string(e.what()).find("no containing ordinal") != std::string::npos);
  }
}

TEST_CASE("arithmetic agrees with the truncated brute-force model") {
  const TruncatedOrdinalModel model{64};
  CHECK(model.rank(Ordinal::omega()) == 64);
  CHECK(model.from_rank(65) == Ordinal::omega_plus(1));

  SplitMix64 gen(0x97531);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Ordinal> elems;
    const int size = static_cast<int>(gen.below(6));
    for (int i = 0; i < size; ++i) {
      elems.push_back(Ordinal{static_cast<int>(gen.below(2)), static_cast<int>(gen.below(63))});
    }
    const Ordinal fast = ord_least_containing(gallery::FiniteOrds{elems});
    const Ordinal brute = model.least_containing(elems);
    CHECK(fast == brute);
  }
}
