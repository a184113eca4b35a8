#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "species/errors.hpp"
#include "species/exactlin.hpp"
#include "species/sigma.hpp"

using namespace species;
using testing::comp;

TEST_CASE("rational parsing and printing") {
  CHECK(rational_string(parse_rational("6/4")) == "3/2");
  CHECK(rational_string(parse_rational("-7")) == "-7/1");
  CHECK(rational_string(parse_rational("0")) == "0/1");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/-2"), DomainError);
}

TEST_CASE("scalar arithmetic against a big-integer oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int trial = 0; trial < 500; ++trial) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Scalar sum = Scalar::fraction(a, b) + Scalar::fraction(c, d);
    mpz_class p = mpz_class(a) * d + mpz_class(c) * b;
    mpz_class q = mpz_class(b) * d;
    // cross-multiplied comparison avoids relying on canonicalization
    CHECK(sum.re().get_num() * q == p * sum.re().get_den());
    CHECK(sum.re().get_den() > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), sum.re().get_num_mpz_t(), sum.re().get_den_mpz_t());
    CHECK(g == 1);
  }
  const Scalar i = Scalar::imag_unit();
  CHECK(i * i == Scalar(-1));
  CHECK((Scalar(1, 2) * Scalar(3, -1)) == Scalar(5, 5));
  CHECK(Scalar(1, 1).inverse() == Scalar(Rational(1, 2), Rational(-1, 2)));
  CHECK_THROWS_AS(Scalar().inverse(), DomainError);
  CHECK(inverse_factorial(4) == Scalar::fraction(1, 24));
}

TEST_CASE("laurent polynomials in hbar") {
  const Laurent c = Laurent::inverse_i_hbar();
  CHECK(c * Laurent::i_hbar() == Laurent(1));
  CHECK(c.min_power() == -1);
  CHECK(c.coeff(-1) == -Scalar::imag_unit());
  CHECK(pow(c, 2).coeff(-2) == Scalar(-1));
  CHECK((c - c).is_zero());
}

TEST_CASE("linear combinations") {
  auto a = SigmaElem::H(comp("1,2"));
  CHECK((a - a).is_zero());
  CHECK((Scalar::fraction(1, 2) * SigmaElem::H(comp("12"))).coeff(comp("12")) == Scalar::fraction(1, 2));
  CHECK((SigmaElem::H(comp("12")) + SigmaElem::H(comp("1,2"))).size() == 2);
  CHECK((Scalar(0) * a).is_zero());
}

TEST_CASE("rank") {
  using V = LinComb<Composition>;
  CHECK(rank(std::vector<V>{V::basis(comp("12")), V::basis(comp("12"), 2)}) == 1);
  CHECK(rank(std::vector<V>{}) == 0);
  CHECK(rank(std::vector<V>{V()}) == 0);
  V x = V::basis(comp("12"), Scalar(0, 1));
  CHECK(rank(std::vector<V>{x, V::basis(comp("12"))}) == 1);
  CHECK(rank(std::vector<V>{x, V::basis(comp("1,2"))}) == 2);
}

TEST_CASE("rank is invariant under row scaling and permutation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> scale(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = 2 + trial % 7, cols = 2 + (trial * 5) % 6;
    std::vector<LinComb<int>> m(rows);
    for (auto& row : m) {
      for (int j = 0; j < cols; ++j) row.add_term(j, Scalar::fraction(entry(rng), scale(rng)));
    }
    // a dependent row
    m.push_back(m[0] + Scalar(3) * m[1]);
    const std::size_t r = rank(m);
    auto shuffled = m;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& row : shuffled) row *= Scalar::fraction(scale(rng) * (entry(rng) < 0 ? -1 : 1), scale(rng));
    CHECK(rank(shuffled) == r);
    CHECK(r <= static_cast<std::size_t>(std::min(rows, cols)));
  }
}

TEST_CASE("kernel_basis") {
  using V = LinComb<int>;
  std::vector<std::pair<int, V>> zero{{0, V()}, {1, V()}, {2, V()}};
  CHECK(kernel_basis(zero, std::vector<int>{0, 1, 2}).size() == 3);
  std::vector<std::pair<int, V>> identity{{0, V::basis(0)}, {1, V::basis(1)}, {2, V::basis(2)}};
  CHECK(kernel_basis(identity, std::vector<int>{0, 1, 2}).empty());
  CHECK_THROWS_AS(kernel_basis(identity, std::vector<int>{0, 5}), DomainError);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<int, V>> map;
    std::vector<int> domain;
    for (int j = 0; j < 6; ++j) {
      V col;
      for (int i = 0; i < 4; ++i) col.add_term(i, Scalar(entry(rng), trial % 3 == 0 ? entry(rng) : 0));
      map.emplace_back(j, col);
      domain.push_back(j);
    }
    const auto basis = kernel_basis(map, domain);
    std::vector<V> cols;
    for (const auto& [j, c] : map) cols.push_back(c);
    CHECK(basis.size() + rank(cols) == domain.size());
    for (const auto& v : basis) {
      V image;
      for (const auto& [j, c] : v) image += c * map[j].second;
      CHECK(image.is_zero());
    }
    CHECK(rank(basis) == basis.size());
  }
}

TEST_CASE("kernel of the stacked coproduct on Sigma[2]") {
  CHECK(primitive_part_basis(2).size() == 2);
}
