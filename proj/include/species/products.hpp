#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "species/series.hpp"
#include "species/sigma.hpp"

namespace species {

/// A system of products: lumps of decorated compositions evaluate to
/// elements of a word algebra, extended to all of Sigma by multiplying
/// the lump values in order.
class ProductSystem {
 public:
  virtual ~ProductSystem() = default;

  // Value of H_(S) on the decorations of S, listed in increasing label order.
  virtual WordElem lump_value(const std::vector<std::string>& symbols) const = 0;
  virtual bool commutative() const { return false; }
  virtual bool claims_homomorphism() const { return true; }
  // H_F on a decoration covering ground(F).
  virtual WordElem evaluate(const Composition& f, const Decoration& d) const;

  WordElem multiply(const WordElem& a, const WordElem& b) const {
    return word_product(a, b, commutative());
  }
};

/// Commutative polynomial functions: a lump evaluates to the product of its
/// decorations. Letters stand for pairings <gamma, Phi>.
class PolynomialSystem : public ProductSystem {
 public:
  WordElem lump_value(const std::vector<std::string>& symbols) const override;
  bool commutative() const override { return true; }
};

/// Time-ordered words: a lump evaluates to its decorations sorted by
/// decreasing time, ties by increasing id.
class CausalWordSystem : public ProductSystem {
 public:
  explicit CausalWordSystem(std::map<std::string, Rational> times);
  WordElem lump_value(const std::vector<std::string>& symbols) const override;
  const std::map<std::string, Rational>& times() const { return times_; }

 private:
  std::map<std::string, Rational> times_;
};

/// Negative control: forgets the last lump of every composition of length >= 2.
class FactorDroppingSystem : public ProductSystem {
 public:
  explicit FactorDroppingSystem(std::shared_ptr<const ProductSystem> base);
  WordElem lump_value(const std::vector<std::string>& symbols) const override;
  bool commutative() const override { return base_->commutative(); }
  WordElem evaluate(const Composition& f, const Decoration& d) const override;

 private:
  std::shared_ptr<const ProductSystem> base_;
};

/// Z_S(A_S) as a combination of single letters.
using Recombination = std::function<LinComb<std::string, Laurent>(const std::vector<std::string>&)>;

/// T'_I(A_I) = sum over partitions P of I of T_P(Z_S1(A_S1) ... Z_Sk(A_Sk)).
class RecombinedSystem : public ProductSystem {
 public:
  RecombinedSystem(std::shared_ptr<const ProductSystem> base, Recombination z);
  WordElem lump_value(const std::vector<std::string>& symbols) const override;
  bool commutative() const override { return base_->commutative(); }

 private:
  std::shared_ptr<const ProductSystem> base_;
  Recombination z_;
};

/// Z_{i} = identity, Z_S = 0 for |S| >= 2.
LinComb<std::string, Laurent> trivial_recombination(const std::vector<std::string>& symbols);

/// Linear extension over the H-basis. Throws DomainError on missing decorations.
WordElem eval_system(const ProductSystem& sys, const SigmaElem& x, const Decoration& d);
WordElem eval_system(const ProductSystem& sys, const DecoratedElem& x);

/// eta(mu(x, y)) = eta(x) eta(y) on H-basis pairs over [m], m <= n. Label i is
/// decorated by symbols[(i - 1) mod size].
bool homomorphism_check(const ProductSystem& sys, int n, const std::vector<std::string>& symbols);

/// One summand of a linear argument: `symbol` weighted by the formal variable.
struct Insertion {
  FormalSymbol var;
  std::string symbol;
};

/// S_s(x) = sum_m 1/m! eta(s_m, x^m) with x = sum of insertions, expanded
/// over every assignment of insertions to labels. Degree m is scaled by weight^m.
TruncSeries t_exponential(const ProductSystem& sys, const SigmaSeries& s,
                          const std::vector<Insertion>& argument, unsigned order,
                          const Laurent& weight = 1);
/// S_s(jA).
TruncSeries t_exponential(const ProductSystem& sys, const SigmaSeries& s, const std::string& a,
                          unsigned order, const Laurent& weight = 1);

/// sum g^r j^n c^{r+n}/(r! n!) eta(s_{r+n}, S^r A^n), with S on labels *1..*r.
TruncSeries perturb_coderivation(const ProductSystem& sys, const SigmaSeries& s,
                                 const std::string& s_sym, const std::string& a, unsigned order,
                                 const Laurent& weight = 1);

enum class ArrowDirection { down, up };

/// sum g^r j^n c^{r+n}/(r! n!) R_{r;n}(S^r; A^n), or the advanced A_{r;n}.
TruncSeries perturb_arrow(const ProductSystem& sys, const std::string& s_sym, const std::string& a,
                          unsigned order, ArrowDirection direction, const Laurent& weight = 1);

}  // namespace species
