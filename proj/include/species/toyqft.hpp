#pragma once

#include <map>
#include <string>
#include <vector>

#include "species/products.hpp"
#include "species/series.hpp"
#include "species/sigma.hpp"

namespace species {

/// A local observable supported at a single instant.
struct TimedObservable {
  std::string id;
  Rational time;

  friend bool operator==(const TimedObservable& a, const TimedObservable& b) {
    return a.id == b.id && a.time == b.time;
  }
};

/// Labels decorated by timed observables.
using TimedDecoration = std::map<Label, TimedObservable>;

/// A finite set of observables with distinct ids, one of which may be the interaction.
class Model {
 public:
  Model() = default;
  explicit Model(std::vector<TimedObservable> observables, std::string interaction = "");

  const std::vector<TimedObservable>& observables() const { return observables_; }
  const std::string& interaction() const { return interaction_; }
  bool has(const std::string& id) const;
  const TimedObservable& get(const std::string& id) const;
  CausalWordSystem system() const;

 private:
  std::vector<TimedObservable> observables_;
  std::string interaction_;
};

/// Ids sorted by decreasing time, ties by increasing id.
WordElem time_ordered(const std::vector<TimedObservable>& observables);

/// Lumpwise time ordering, concatenated; linear in x.
WordElem generalized_T(const SigmaElem& x, const TimedDecoration& decoration);
/// generalized_T of the antipode of x.
WordElem reverse_T(const SigmaElem& x, const TimedDecoration& decoration);

/// time(i1) >= time(i2) whenever i1 sits in an earlier lump of G than i2.
bool respects(const TimedDecoration& decoration, const Composition& g);

/// T(x) == T(x |> H_G); requires that the decoration respects G.
bool causal_factorization_check(const SigmaElem& x, const Composition& g, const TimedDecoration& decoration);

/// R_{Y;I}(S_Y; A_I): the retarded element evaluated by generalized_T.
WordElem retarded_product(const TimedDecoration& y, const TimedDecoration& i);
/// A_{Y;I}(S_Y; A_I).
WordElem advanced_product(const TimedDecoration& y, const TimedDecoration& i);

/// sum_r (1/(i hbar))^r g^r/r! R_{r;1}(S^r; A), truncated at g^order.
TruncSeries interacting_observable(const TimedObservable& a, const TimedObservable& s_int, unsigned order);

/// sum_n (1/(i hbar))^n j^n/n! T_n(A^n).
TruncSeries smatrix(const TimedObservable& a, unsigned order);
/// S(jA) with the antipode-composed universal series.
TruncSeries inverse_smatrix(const TimedObservable& a, unsigned order);
/// Z_{gS}(jA), the retarded perturbation of the S-matrix scheme.
TruncSeries generating_function(const TimedObservable& a, const TimedObservable& s_int, unsigned order);
/// The advanced mirror W_{gS}(jA).
TruncSeries advanced_generating_function(const TimedObservable& a, const TimedObservable& s_int,
                                         unsigned order);
/// S^{-1}(gS) * S(gS + jA), or S(gS + jA) * S^{-1}(gS) for the advanced side.
TruncSeries factorized_generating_function(const TimedObservable& a, const TimedObservable& s_int,
                                           unsigned order, ArrowDirection direction);

/// i hbar d/dj|_{j=0} of the generating function computed at order + 1.
TruncSeries bogoliubov(const TimedObservable& a, const TimedObservable& s_int, unsigned order);

}  // namespace species
