#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "species/arrows.hpp"
#include "species/errors.hpp"

using namespace species;
using testing::comp;
using testing::H;

namespace {

const LabelSet kStar{-1};

std::vector<SigmaElem> basis_over(const LabelSet& ground) {
  std::vector<SigmaElem> out;
  for (const auto& f : compositions_of(ground)) out.push_back(SigmaElem::H(f));
  return out;
}

// All (Y_1, ..., Y_k) with Y_i pairwise disjoint, union Y, empties allowed.
std::vector<std::vector<LabelSet>> decompositions(const LabelSet& y, std::size_t k) {
  if (k == 0) return y.empty() ? std::vector<std::vector<LabelSet>>{{}} : std::vector<std::vector<LabelSet>>{};
  std::vector<std::vector<LabelSet>> out;
  for (const auto& [first, rest] : ordered_splits(y)) {
    for (auto tail : decompositions(rest, k - 1)) {
      tail.insert(tail.begin(), first);
      out.push_back(std::move(tail));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("u_ab examples") {
  CHECK(u_ab(1, 0, -1, H("1")) == -H("*1,1") + H("*11"));
  CHECK(u_ab(0, 1, -1, H("1")) == H("*11") - H("1,*1"));
  CHECK(u_ab(1, 0, -1, H("1,2")) == -H("*1,1,2") + H("*11,2") - H("1,*1,2") + H("1,*12"));
  CHECK(u_ab(1, 0, -1, SigmaElem::unit()).is_zero());
  CHECK_THROWS_AS(u_ab(1, 0, 1, H("1")), DomainError);
}

TEST_CASE("arrow examples") {
  CHECK(arrow_down({}, H("12")) == H("12"));
  CHECK(arrow_down(kStar, H("12")) == -H("*1,12") + H("*112"));
  CHECK(arrow_down({-2, -1}, H("1")) == retarded_element({-2, -1}, {1}));
  CHECK(arrow_up({-2, -1}, H("1")) == advanced_element({-2, -1}, {1}));
  CHECK_THROWS_AS(arrow_down({1}, H("1")), DomainError);
}

TEST_CASE("retarded and advanced elements") {
  CHECK(retarded_element(kStar, {1}) == H("*11") - H("*1,1"));
  CHECK(advanced_element(kStar, {1}) == H("*11") - H("1,*1"));
  CHECK(retarded_element({1}, {2}) == H("12") - H("1,2"));
  CHECK(retarded_element({1}, {2}) == dynkin(Cell::total_retarded(LabelSet::range(2), 2)));
  CHECK(retarded_element({}, {1, 2}) == H("12"));
  CHECK_THROWS_AS(retarded_element({1}, {}), DomainError);
  CHECK_THROWS_AS(retarded_element({1}, {1}), DomainError);
  for (int n = 2; n <= 4; ++n) {
    const LabelSet ground = LabelSet::range(n);
    for (Label i : ground) {
      CHECK(retarded_element(ground - LabelSet{i}, {i}) == dynkin(Cell::total_retarded(ground, i)));
      // advanced total element: i in the first lump
      SigmaElem expected(ground);
      for (const auto& f : compositions_of(ground)) {
        if (f[0].contains(i)) expected.add_term(f, f.length() % 2 ? 1 : -1);
      }
      CHECK(advanced_element(ground - LabelSet{i}, {i}) == expected);
    }
  }
}

TEST_CASE("u_ab is a biderivation") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 4; ++trial) {
    const Scalar a = coeff(rng), b = coeff(rng);
    for (int split = 0; split <= 3; ++split) {
      LabelSet left, right;
      for (int l = 1; l <= 3; ++l) {
        if (l <= split) {
          left = left | LabelSet{l};
        } else {
          right = right | LabelSet{l};
        }
      }
      for (const auto& x : basis_over(left)) {
        for (const auto& y : basis_over(right)) {
          CHECK(u_ab(a, b, -1, mu(x, y)) == mu(u_ab(a, b, -1, x), y) + mu(x, u_ab(a, b, -1, y)));
        }
      }
    }
    for (int n = 1; n <= 3; ++n) {
      const LabelSet ground = LabelSet::range(n);
      for (const auto& f : compositions_of(ground)) {
        const SigmaElem ux = u_ab(a, b, -1, SigmaElem::H(f));
        for (const auto& [s, t] : ordered_splits(ground)) {
          const auto lhs = flatten(delta(s | kStar, t, ux));
          const auto rhs =
              flatten({{u_ab(a, b, -1, SigmaElem::H(restrict(f, s))), SigmaElem::H(restrict(f, t))}});
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("arrows commute and differ by the adjoint action") {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& x : basis_over(LabelSet::range(n))) {
      CHECK(u_ab(1, 0, -2, u_ab(1, 0, -1, x)) == u_ab(1, 0, -1, u_ab(1, 0, -2, x)));
      CHECK(u_ab(0, 1, -2, u_ab(0, 1, -1, x)) == u_ab(0, 1, -1, u_ab(0, 1, -2, x)));
      CHECK(arrow_up(kStar, x) - arrow_down(kStar, x) == commutator(H("*1"), x));
      CHECK(u_ab(-1, 1, -1, x) == commutator(H("*1"), x));
    }
  }
}

TEST_CASE("arrows preserve primitives and derive brackets") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& p : primitive_part_basis(n)) {
      CHECK(is_primitive(arrow_down(kStar, p)));
      CHECK(is_primitive(arrow_up(kStar, p)));
    }
  }
  for (const auto& x : primitive_part_basis(1)) {
    for (const auto& y0 : primitive_part_basis(2)) {
      std::map<Label, Label> shift{{1, 2}, {2, 3}};
      SigmaElem y(LabelSet{2, 3});
      for (const auto& [g, c] : y0) y.add_term(relabel(g, shift), c);
      CHECK(arrow_down(kStar, commutator(x, y)) ==
            commutator(arrow_down(kStar, x), y) + commutator(x, arrow_down(kStar, y)));
      CHECK(arrow_up(kStar, commutator(x, y)) ==
            commutator(arrow_up(kStar, x), y) + commutator(x, arrow_up(kStar, y)));
    }
  }
}

TEST_CASE("arrows on cells match arrows on dynkin elements") {
  const Cell point(LabelSet{1}, {});
  const Cell lifted = arrow_cell_down(kStar, point);
  CHECK(lifted.contains({1}));
  CHECK(arrow_cell_up(kStar, point).contains({-1}));
  for (const auto& c : enumerate_cells(LabelSet::range(2))) {
    const auto cells3 = enumerate_cells(LabelSet{-1, 1, 2});
    CHECK(std::find(cells3.begin(), cells3.end(), arrow_cell_down(kStar, c)) != cells3.end());
  }
  CHECK(arrow_cell_down({}, point) == point);
  CHECK_THROWS_AS(arrow_cell_down({1}, point), DomainError);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& c : enumerate_cells(LabelSet::range(n))) {
      for (const LabelSet& y : {LabelSet{-1}, LabelSet{-2, -1}}) {
        CHECK(arrow_down(y, dynkin(c)) == dynkin(arrow_cell_down(y, c)));
        CHECK(arrow_up(y, dynkin(c)) == dynkin(arrow_cell_up(y, c)));
      }
    }
  }
}

TEST_CASE("factorized expansion of arrows") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& f : compositions_of(LabelSet::range(n))) {
      for (const LabelSet& y : {LabelSet{}, LabelSet{-1}, LabelSet{-2, -1}}) {
        SigmaElem down(y | f.ground()), up(y | f.ground());
        for (const auto& parts : decompositions(y, f.length())) {
          std::vector<SigmaElem> r, a;
          for (std::size_t i = 0; i < f.length(); ++i) {
            r.push_back(retarded_element(parts[i], f[i]));
            a.push_back(advanced_element(parts[i], f[i]));
          }
          down += mu(r);
          up += mu(a);
        }
        CHECK(arrow_down(y, SigmaElem::H(f)) == down);
        CHECK(arrow_up(y, SigmaElem::H(f)) == up);
      }
    }
  }
}

TEST_CASE("arrows are multiplicative in the E-module sense") {
  const LabelSet ys[] = {LabelSet{}, LabelSet{-1}, LabelSet{-2, -1}};
  for (const auto& y : ys) {
    for (const auto& x : basis_over({1})) {
      for (const auto& z : basis_over({2, 3})) {
        SigmaElem expected(y | LabelSet{1, 2, 3});
        for (const auto& [y1, y2] : ordered_splits(y)) {
          expected += mu(arrow_down(y1, x), arrow_down(y2, z));
        }
        CHECK(arrow_down(y, mu(x, z)) == expected);
      }
    }
  }
}
