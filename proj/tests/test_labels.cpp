#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "species/errors.hpp"
#include "species/labels.hpp"

using namespace species;
using testing::comp;

namespace {

unsigned long long binomial(unsigned n, unsigned k) {
  unsigned long long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

unsigned long long fubini(unsigned n) {
  std::vector<unsigned long long> a(n + 1, 0);
  a[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned k = 1; k <= m; ++k) a[m] += binomial(m, k) * a[m - k];
  }
  return a[n];
}

}  // namespace

TEST_CASE("label sets are sorted and reject duplicates") {
  LabelSet s{3, 1, 2};
  CHECK(s.elements() == std::vector<Label>{1, 2, 3});
  CHECK_THROWS_AS(LabelSet({1, 1}), DomainError);
  CHECK(LabelSet::stars(2).elements() == std::vector<Label>{-2, -1});
  CHECK((LabelSet{1, 2} | LabelSet{2, 3}) == LabelSet{1, 2, 3});
  CHECK((LabelSet{1, 2} & LabelSet{2, 3}) == LabelSet{2});
  CHECK((LabelSet{1, 2} - LabelSet{2, 3}) == LabelSet{1});
}

TEST_CASE("compositions reject empty or overlapping lumps") {
  CHECK_THROWS_AS(Composition({LabelSet{1}, LabelSet{}}), DomainError);
  CHECK_THROWS_AS(Composition({LabelSet{1, 2}, LabelSet{2}}), DomainError);
}

TEST_CASE("compositions_of") {
  auto empty = compositions_of(LabelSet());
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());
  auto two = compositions_of(LabelSet::range(2));
  CHECK(two == std::vector<Composition>{comp("12"), comp("1,2"), comp("2,1")});
  CHECK(compositions_of(LabelSet::range(3)).size() == 13);
  CHECK_THROWS_AS(compositions_of(LabelSet::range(3), 2), SizeLimitError);

  for (int n = 0; n <= 5; ++n) {
    auto all = compositions_of(LabelSet::range(n));
    CHECK(all.size() == fubini(n));
    CHECK(std::is_sorted(all.begin(), all.end()));
    auto oracle = testing::compositions_by_surjection(n);
    std::sort(oracle.begin(), oracle.end());
    CHECK(all == oracle);
  }
  const std::vector<unsigned long long> expected{1, 1, 3, 13, 75, 541};
  for (unsigned n = 0; n < expected.size(); ++n) CHECK(fubini(n) == expected[n]);
}

TEST_CASE("restrict") {
  CHECK(restrict(comp("12,3"), {1, 3}) == comp("1,3"));
  CHECK(restrict(comp("1,2"), {2}) == comp("2"));
  CHECK(restrict(comp("12,3"), {}).empty());
  CHECK(restrict(comp("12,3"), {}).ground().empty());
  CHECK_THROWS_AS(restrict(comp("12"), {3}), DomainError);
  for (const auto& f : compositions_of(LabelSet::range(4))) CHECK(restrict(f, f.ground()) == f);
}

TEST_CASE("concat") {
  CHECK(concat(comp("1"), comp("2")) == comp("1,2"));
  CHECK(concat(Composition(), comp("12")) == comp("12"));
  CHECK(concat(comp("13,2"), comp("4")) == comp("13,2,4"));
  CHECK_THROWS_AS(concat(comp("1"), comp("12")), DomainError);
  const auto all = compositions_of(LabelSet::range(3));
  const Composition a = comp("4"), b = comp("56");
  for (const auto& f : all) {
    CHECK(concat(concat(f, a), b) == concat(f, concat(a, b)));
    CHECK(concat(f, Composition()) == f);
    CHECK(concat(Composition(), f) == f);
    CHECK(concat(f, a).ground() == (f.ground() | a.ground()));
  }
}

TEST_CASE("coarsening order") {
  CHECK(coarsens(comp("123"), comp("12,3")));
  CHECK_FALSE(coarsens(comp("13,2"), comp("1,2,3")));
  CHECK(coarsens(comp("12,3"), comp("12,3")));
  CHECK_THROWS_AS(coarsens(comp("12"), comp("1,3")), DomainError);

  for (int n = 0; n <= 4; ++n) {
    const auto all = compositions_of(LabelSet::range(n));
    for (const auto& f : all) {
      CHECK(coarsens(f, f));
      for (const auto& g : all) {
        const bool gf = coarsens(g, f);
        if (gf && coarsens(f, g)) CHECK(f == g);
        CHECK(gf == coarsens(opposite(g), opposite(f)));
        if (!gf) continue;
        for (const auto& h : all) {
          if (coarsens(h, g)) CHECK(coarsens(h, f));
        }
      }
      const auto up = coarsenings_of(f);
      const auto down = refinements_of(f);
      std::size_t coarser = 0, finer = 0;
      for (const auto& g : all) {
        coarser += coarsens(g, f);
        finer += coarsens(f, g);
      }
      CHECK(up.size() == coarser);
      CHECK(down.size() == finer);
      for (const auto& g : up) CHECK(coarsens(g, f));
      for (const auto& g : down) CHECK(coarsens(f, g));
    }
  }
}

TEST_CASE("quotient_stats") {
  auto q = quotient_stats(comp("1,2,3"), comp("12,3"));
  CHECK(q.length == 2);
  CHECK(q.factorial == 2);
  q = quotient_stats(comp("1,2,3"), comp("1,2,3"));
  CHECK(q.length == 1);
  CHECK(q.factorial == 1);
  q = quotient_stats(comp("1,2,3"), comp("123"));
  CHECK(q.length == 3);
  CHECK(q.factorial == 6);
  CHECK_THROWS_AS(quotient_stats(comp("1,2,3"), comp("13,2")), OrderError);
}

TEST_CASE("opposite") {
  CHECK(opposite(comp("1,2")) == comp("2,1"));
  CHECK(opposite(comp("12")) == comp("12"));
  CHECK(opposite(comp("13,2,4")) == comp("4,2,13"));
  for (const auto& f : compositions_of(LabelSet::range(4))) CHECK(opposite(opposite(f)) == f);
}

TEST_CASE("deshuffle") {
  CHECK(deshuffle(comp("1,2"), {2}) == comp("2"));
  CHECK_FALSE(deshuffle(comp("12,3"), {1}).has_value());
  CHECK(deshuffle(comp("12,3"), {1, 2, 3}) == comp("12,3"));
  CHECK(deshuffle(comp("1,23,4"), {1, 4}) == comp("1,4"));
  CHECK_THROWS_AS(deshuffle(comp("12"), {5}), DomainError);
}

TEST_CASE("relabel") {
  auto m = order_preserving_map({2, 5}, {1, 2});
  CHECK(relabel(comp("5,2"), m) == comp("2,1"));
  CHECK_THROWS_AS(relabel(comp("3"), m), DomainError);
  CHECK_THROWS_AS(order_preserving_map({1}, {1, 2}), DomainError);
}
