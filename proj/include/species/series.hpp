#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "species/lincomb.hpp"
#include "species/scalar.hpp"
#include "species/sigma.hpp"

namespace species {

/// A series of Sigma: for each n <= max_n, an S_n-invariant element of
/// Sigma[n], stored in the H-basis.
class SigmaSeries {
 public:
  SigmaSeries() = default;
  // Zero series.
  explicit SigmaSeries(int max_n);
  // terms[n] must live over [n] and be invariant; throws DomainError.
  explicit SigmaSeries(std::vector<SigmaElem> terms);

  static SigmaSeries unit(int max_n);

  int max_n() const { return static_cast<int>(terms_.size()) - 1; }
  const SigmaElem& operator[](int n) const;
  const std::vector<SigmaElem>& terms() const { return terms_; }

  friend bool operator==(const SigmaSeries& a, const SigmaSeries& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SigmaSeries& a, const SigmaSeries& b) { return !(a == b); }

 private:
  std::vector<SigmaElem> terms_;
};

/// Invariance under every bijection [n] -> [n], tested on adjacent transpositions.
bool is_invariant(const SigmaElem& x);
/// Average over all relabelings of the ground set.
SigmaElem symmetrize(const SigmaElem& x);

SigmaSeries convolve(const SigmaSeries& s, const SigmaSeries& t);
/// G(c)_n = c^n H_([n]).
SigmaSeries universal_series(const Scalar& c, int max_n);
/// Degreewise antipode, s o G in the convolution notation.
SigmaSeries antipode(const SigmaSeries& s);
bool is_group_like(const SigmaSeries& s);

using Word = std::vector<std::string>;
/// Words in observable ids with Laurent-in-hbar coefficients. The empty word is the unit.
using WordElem = LinComb<Word, Laurent>;

std::string to_string(const Word& w);
std::string to_string(const WordElem& w);

WordElem word_unit();
WordElem word_of(const Word& w, const Laurent& coeff = 1);
/// Concatenation; with `commutative` the letters of each product are sorted.
WordElem word_product(const WordElem& a, const WordElem& b, bool commutative = false);

enum class FormalSymbol { g, j };

constexpr unsigned kDefaultOrder = 4;

/// Power series in g and j, truncated at total degree `order`, with
/// word-algebra coefficients.
class TruncSeries {
 public:
  using Monomial = std::pair<unsigned, unsigned>;  // (g exponent, j exponent)
  using Terms = std::map<Monomial, WordElem>;

  explicit TruncSeries(unsigned order = kDefaultOrder, bool commutative = false);
  static TruncSeries constant(const WordElem& value, unsigned order = kDefaultOrder,
                              bool commutative = false);

  unsigned order() const { return order_; }
  bool commutative() const { return commutative_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  WordElem coeff(unsigned g, unsigned j) const;

  // Monomials beyond the order are dropped.
  void add(unsigned g, unsigned j, const WordElem& value);

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Laurent& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const Laurent& c, TruncSeries a) { return a *= c; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

 private:
  void require_compatible(const TruncSeries& o) const;
  unsigned order_;
  bool commutative_;
  Terms terms_;
};

std::string to_string(const TruncSeries& ts);

/// Lowest hbar power at g^r j^n is at least -(r + n).
bool satisfies_hbar_bound(const TruncSeries& ts);

/// d/dg or d/dj; the order drops by one.
TruncSeries formal_diff(const TruncSeries& ts, FormalSymbol x);
/// Keeps the monomials free of x.
TruncSeries set_zero(const TruncSeries& ts, FormalSymbol x);
TruncSeries truncate(const TruncSeries& ts, unsigned order);
/// Substitutes rational values for letters; every word collapses to the unit.
TruncSeries evaluate_at(const TruncSeries& ts, const std::map<std::string, Rational>& point);

}  // namespace species
