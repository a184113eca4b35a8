#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "species/errors.hpp"
#include "species/tits.hpp"

using namespace species;
using testing::H;
using testing::Q;

TEST_CASE("tits product examples") {
  CHECK(tits(H("123"), H("1,23")) == H("1,23"));
  CHECK(tits(H("13,2"), H("12,3")) == H("1,3,2"));
  CHECK(tits(H("1,2"), H("2,1")) == H("1,2"));
  CHECK_THROWS_AS(tits(H("1"), H("2")), DomainError);
}

TEST_CASE("tits agrees with hopf powers") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& f : compositions_of(LabelSet::range(n))) {
      for (const auto& b : testing::h_basis(n)) CHECK(tits(SigmaElem::H(f), b) == hopf_power(f, b));
      CHECK(tits(SigmaElem::H(f), SigmaElem::H(f)) == SigmaElem::H(f));
    }
  }
}

TEST_CASE("tits associativity and unit") {
  for (int n = 1; n <= 3; ++n) {
    const auto basis = testing::h_basis(n);
    const SigmaElem unit = tits_unit(LabelSet::range(n));
    for (const auto& a : basis) {
      CHECK(tits(unit, a) == a);
      CHECK(tits(a, unit) == a);
      for (const auto& b : basis) {
        for (const auto& c : basis) CHECK(tits(tits(a, b), c) == tits(a, tits(b, c)));
      }
    }
  }
  std::mt19937_64 rng(5);
  const auto basis = testing::h_basis(4);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_elem = [&] {
    SigmaElem x(LabelSet::range(4));
    for (int k = 0; k < 4; ++k) x += Scalar(coeff(rng)) * basis[pick(rng)];
    return x;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_elem(), b = random_elem(), c = random_elem();
    CHECK(tits(tits(a, b), c) == tits(a, tits(b, c)));
  }
}

TEST_CASE("hopf powers compose as an action") {
  for (int n = 1; n <= 3; ++n) {
    const auto all = compositions_of(LabelSet::range(n));
    for (const auto& f : all) {
      for (const auto& g : all) {
        const SigmaElem fg = tits(SigmaElem::H(f), SigmaElem::H(g));
        for (const auto& a : testing::h_basis(n)) {
          SigmaElem expanded(LabelSet::range(n));
          for (const auto& [k, c] : fg) expanded += c * hopf_power(k, a);
          CHECK(hopf_power(f, hopf_power(g, a)) == expanded);
        }
      }
    }
  }
}
