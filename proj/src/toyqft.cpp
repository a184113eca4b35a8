#include "species/toyqft.hpp"

#include <algorithm>
#include <set>

#include "species/arrows.hpp"
#include "species/errors.hpp"
#include "species/tits.hpp"

namespace species {

namespace {

struct Evaluation {
  std::map<std::string, Rational> times;
  Decoration ids;
};

void add_observable(std::map<std::string, Rational>& times, const TimedObservable& o) {
  auto [it, inserted] = times.emplace(o.id, o.time);
  if (!inserted && it->second != o.time)
    throw DomainError("observable '" + o.id + "' appears with two different times");
}

Evaluation prepare(const TimedDecoration& decoration) {
  Evaluation e;
  for (const auto& [label, o] : decoration) {
    add_observable(e.times, o);
    e.ids[label] = o.id;
  }
  return e;
}

WordElem evaluate_timed(const SigmaElem& x, const TimedDecoration& decoration) {
  Evaluation e = prepare(decoration);
  return eval_system(CausalWordSystem(std::move(e.times)), x, e.ids);
}

CausalWordSystem pair_system(const TimedObservable& a, const TimedObservable& s_int) {
  std::map<std::string, Rational> times;
  add_observable(times, a);
  add_observable(times, s_int);
  return CausalWordSystem(std::move(times));
}

LabelSet labels_of(const TimedDecoration& d) {
  std::vector<Label> out;
  for (const auto& [l, o] : d) out.push_back(l);
  return LabelSet(std::move(out));
}

WordElem retarded_or_advanced(const TimedDecoration& y, const TimedDecoration& i, bool retarded) {
  if (i.empty()) return y.empty() ? word_unit() : WordElem();
  TimedDecoration all = i;
  for (const auto& [l, o] : y) {
    if (!all.emplace(l, o).second) throw DomainError("retarded/advanced product: Y and I share a label");
  }
  const SigmaElem x = retarded ? retarded_element(labels_of(y), labels_of(i))
                               : advanced_element(labels_of(y), labels_of(i));
  return evaluate_timed(x, all);
}

}  // namespace

Model::Model(std::vector<TimedObservable> observables, std::string interaction)
    : observables_(std::move(observables)), interaction_(std::move(interaction)) {
  std::set<std::string> seen;
  for (const auto& o : observables_) {
    if (o.id.empty()) throw DomainError("model: empty observable id");
    if (!seen.insert(o.id).second) throw DomainError("model: duplicate observable id '" + o.id + "'");
  }
  if (!interaction_.empty() && !seen.count(interaction_))
    throw DomainError("model: interaction '" + interaction_ + "' is not an observable");
}

bool Model::has(const std::string& id) const {
  return std::any_of(observables_.begin(), observables_.end(), [&](const auto& o) { return o.id == id; });
}

const TimedObservable& Model::get(const std::string& id) const {
  for (const auto& o : observables_) {
    if (o.id == id) return o;
  }
  throw DomainError("model: unknown observable '" + id + "'");
}

CausalWordSystem Model::system() const {
  std::map<std::string, Rational> times;
  for (const auto& o : observables_) times[o.id] = o.time;
  return CausalWordSystem(std::move(times));
}

WordElem time_ordered(const std::vector<TimedObservable>& observables) {
  std::map<std::string, Rational> times;
  std::vector<std::string> ids;
  for (const auto& o : observables) {
    add_observable(times, o);
    ids.push_back(o.id);
  }
  return CausalWordSystem(std::move(times)).lump_value(ids);
}

WordElem generalized_T(const SigmaElem& x, const TimedDecoration& decoration) {
  return evaluate_timed(x, decoration);
}

WordElem reverse_T(const SigmaElem& x, const TimedDecoration& decoration) {
  return evaluate_timed(antipode(x), decoration);
}

bool respects(const TimedDecoration& decoration, const Composition& g) {
  auto time_of = [&](Label l) -> const Rational& {
    auto it = decoration.find(l);
    if (it == decoration.end()) throw DomainError("respects: label " + std::to_string(l) + " is not decorated");
    return it->second.time;
  };
  for (std::size_t p = 0; p < g.length(); ++p) {
    for (std::size_t q = p + 1; q < g.length(); ++q) {
      for (Label i1 : g[p]) {
        for (Label i2 : g[q]) {
          if (time_of(i1) < time_of(i2)) return false;
        }
      }
    }
  }
  return true;
}

bool causal_factorization_check(const SigmaElem& x, const Composition& g, const TimedDecoration& decoration) {
  if (!respects(decoration, g)) throw DomainError("causal_factorization_check: decoration does not respect G");
  return generalized_T(x, decoration) == generalized_T(tits(x, SigmaElem::H(g)), decoration);
}

WordElem retarded_product(const TimedDecoration& y, const TimedDecoration& i) {
  return retarded_or_advanced(y, i, true);
}

WordElem advanced_product(const TimedDecoration& y, const TimedDecoration& i) {
  return retarded_or_advanced(y, i, false);
}

TruncSeries interacting_observable(const TimedObservable& a, const TimedObservable& s_int, unsigned order) {
  pair_system(a, s_int);
  const Laurent c = Laurent::inverse_i_hbar();
  TruncSeries out(order);
  const TimedDecoration i{{1, a}};
  for (unsigned r = 0; r <= order; ++r) {
    TimedDecoration y;
    for (int k = 1; k <= static_cast<int>(r); ++k) y[-k] = s_int;
    WordElem v = retarded_product(y, i);
    v *= pow(c, r) * Laurent(inverse_factorial(r));
    out.add(r, 0, v);
  }
  return out;
}

TruncSeries smatrix(const TimedObservable& a, unsigned order) {
  const CausalWordSystem sys({{a.id, a.time}});
  return t_exponential(sys, universal_series(1, static_cast<int>(order)), a.id, order, Laurent::inverse_i_hbar());
}

TruncSeries inverse_smatrix(const TimedObservable& a, unsigned order) {
  const CausalWordSystem sys({{a.id, a.time}});
  return t_exponential(sys, antipode(universal_series(1, static_cast<int>(order))), a.id, order,
                       Laurent::inverse_i_hbar());
}

TruncSeries generating_function(const TimedObservable& a, const TimedObservable& s_int, unsigned order) {
  return perturb_arrow(pair_system(a, s_int), s_int.id, a.id, order, ArrowDirection::down,
                       Laurent::inverse_i_hbar());
}

TruncSeries advanced_generating_function(const TimedObservable& a, const TimedObservable& s_int,
                                         unsigned order) {
  return perturb_arrow(pair_system(a, s_int), s_int.id, a.id, order, ArrowDirection::up,
                       Laurent::inverse_i_hbar());
}

TruncSeries factorized_generating_function(const TimedObservable& a, const TimedObservable& s_int,
                                           unsigned order, ArrowDirection direction) {
  const CausalWordSystem sys = pair_system(a, s_int);
  const Laurent c = Laurent::inverse_i_hbar();
  const SigmaSeries g = universal_series(1, static_cast<int>(order));
  const TruncSeries inverse = t_exponential(sys, antipode(g), {{FormalSymbol::g, s_int.id}}, order, c);
  const TruncSeries shifted =
      t_exponential(sys, g, {{FormalSymbol::g, s_int.id}, {FormalSymbol::j, a.id}}, order, c);
  return direction == ArrowDirection::down ? inverse * shifted : shifted * inverse;
}

TruncSeries bogoliubov(const TimedObservable& a, const TimedObservable& s_int, unsigned order) {
  const TruncSeries z = generating_function(a, s_int, order + 1);
  return Laurent::i_hbar() * set_zero(formal_diff(z, FormalSymbol::j), FormalSymbol::j);
}

}  // namespace species
