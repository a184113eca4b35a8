#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "species/labels.hpp"
#include "species/lincomb.hpp"
#include "species/scalar.hpp"

namespace species {

enum class Basis { H, Q };

std::string to_string(Basis b);

/// An element of Sigma[I] in the H- or Q-basis. Arithmetic between elements
/// of different grounds or different bases throws DomainError.
class SigmaElem {
 public:
  using Terms = LinComb<Composition>;

  SigmaElem() = default;
  explicit SigmaElem(LabelSet ground, Basis basis = Basis::H);

  static SigmaElem H(const Composition& f, const Scalar& coeff = 1);
  static SigmaElem Q(const Composition& f, const Scalar& coeff = 1);
  static SigmaElem unit() { return H(Composition()); }

  const LabelSet& ground() const { return ground_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  Scalar coeff(const Composition& f) const { return terms_.coeff(f); }

  void add_term(const Composition& f, const Scalar& coeff);

  SigmaElem& operator+=(const SigmaElem& o);
  SigmaElem& operator-=(const SigmaElem& o);
  SigmaElem& operator*=(const Scalar& c);

  friend SigmaElem operator+(SigmaElem a, const SigmaElem& b) { return a += b; }
  friend SigmaElem operator-(SigmaElem a, const SigmaElem& b) { return a -= b; }
  friend SigmaElem operator-(SigmaElem a) { return a *= Scalar(-1); }
  friend SigmaElem operator*(const Scalar& c, SigmaElem a) { return a *= c; }
  friend bool operator==(const SigmaElem& a, const SigmaElem& b);
  friend bool operator!=(const SigmaElem& a, const SigmaElem& b) { return !(a == b); }

 private:
  void require_compatible(const SigmaElem& o) const;
  LabelSet ground_;
  Basis basis_ = Basis::H;
  Terms terms_;
};

std::string to_string(const SigmaElem& a);

using PureTensor = std::pair<SigmaElem, SigmaElem>;
using TensorSum = std::vector<PureTensor>;
using Tensor = LinComb<std::pair<Composition, Composition>>;

/// Concatenation product. Both factors must share a basis; Q_F Q_G = Q_FG.
SigmaElem mu(const SigmaElem& a, const SigmaElem& b);
/// Ordered product of several factors over pairwise disjoint grounds.
SigmaElem mu(const std::vector<SigmaElem>& factors);

/// Comultiplication Delta_{S,T} as a sum of pure tensors, one per surviving
/// basis pair, coefficient carried by the left factor.
TensorSum delta(const LabelSet& s, const LabelSet& t, const SigmaElem& a);
Tensor flatten(const TensorSum& sum);

/// Coefficient of the empty composition; zero on nonempty grounds.
Scalar counit(const SigmaElem& a);

/// Closed-form antipode. Q-basis input is converted and the result returned in Q.
SigmaElem antipode(const SigmaElem& a);
/// Alternating sum of Hopf powers over all compositions of the ground.
SigmaElem takeuchi_antipode(const SigmaElem& a);

SigmaElem to_q(const SigmaElem& a);
SigmaElem to_h(const SigmaElem& a);

/// mu_F(Delta_F(a)), built from delta and mu. The result is in the H-basis.
SigmaElem hopf_power(const Composition& f, const SigmaElem& a);

/// True iff every proper Delta_{S,T} vanishes on a.
bool is_primitive(const SigmaElem& a);

constexpr std::size_t kDefaultPrimitiveBound = 5;

/// Exact basis of the primitive part of Sigma[n], in the H-basis.
std::vector<SigmaElem> primitive_part_basis(int n, std::size_t bound = kDefaultPrimitiveBound);

/// Transports an element along a label bijection covering its ground.
SigmaElem relabel(const SigmaElem& a, const std::map<Label, Label>& rename);

/// Sum over set partitions P of [n] of (|P| - 1)!.
unsigned long long zie_dimension(int n);

using Decoration = std::map<Label, std::string>;

/// Sigma tensored with decorations: each label carries a formal symbol.
class DecoratedElem {
 public:
  DecoratedElem() = default;
  DecoratedElem(SigmaElem coeffs, Decoration decoration);

  const SigmaElem& coeffs() const { return coeffs_; }
  const Decoration& decoration() const { return decoration_; }
  const LabelSet& ground() const { return coeffs_.ground(); }

  friend bool operator==(const DecoratedElem& a, const DecoratedElem& b) {
    return a.coeffs_ == b.coeffs_ && a.decoration_ == b.decoration_;
  }

 private:
  SigmaElem coeffs_;
  Decoration decoration_;
};

DecoratedElem decorated_mu(const DecoratedElem& a, const DecoratedElem& b);
std::vector<std::pair<DecoratedElem, DecoratedElem>> decorated_delta(const LabelSet& s,
                                                                     const LabelSet& t,
                                                                     const DecoratedElem& a);
DecoratedElem decorated_antipode(const DecoratedElem& a);

Decoration restrict(const Decoration& d, const LabelSet& s);

}  // namespace species
