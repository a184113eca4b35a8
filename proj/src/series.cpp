#include "species/series.hpp"

#include <algorithm>

#include "species/errors.hpp"

namespace species {

namespace {

LabelSet canonical(int n) { return n == 0 ? LabelSet() : LabelSet::range(n); }

SigmaElem transport(const SigmaElem& x, const LabelSet& target) {
  return relabel(x, order_preserving_map(x.ground(), target));
}

}  // namespace

SigmaSeries::SigmaSeries(int max_n) {
  if (max_n < 0) throw DomainError("SigmaSeries: negative truncation");
  for (int n = 0; n <= max_n; ++n) terms_.emplace_back(canonical(n));
}

SigmaSeries::SigmaSeries(std::vector<SigmaElem> terms) {
  if (terms.empty()) throw DomainError("SigmaSeries: no terms");
  for (std::size_t n = 0; n < terms.size(); ++n) {
    SigmaElem h = to_h(terms[n]);
    if (h.ground() != canonical(static_cast<int>(n)))
      throw DomainError("SigmaSeries: term " + std::to_string(n) + " is not over [n]");
    if (!is_invariant(h))
      throw DomainError("SigmaSeries: term " + std::to_string(n) + " is not invariant");
    terms_.push_back(std::move(h));
  }
}

SigmaSeries SigmaSeries::unit(int max_n) {
  SigmaSeries s(max_n);
  s.terms_[0] = SigmaElem::unit();
  return s;
}

const SigmaElem& SigmaSeries::operator[](int n) const {
  if (n < 0 || n > max_n())
    throw DomainError("SigmaSeries: degree " + std::to_string(n) + " beyond truncation");
  return terms_[n];
}

bool is_invariant(const SigmaElem& x) {
  const auto& g = x.ground().elements();
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    std::map<Label, Label> swap;
    for (Label l : g) swap[l] = l;
    std::swap(swap[g[k]], swap[g[k + 1]]);
    if (relabel(x, swap) != x) return false;
  }
  return true;
}

SigmaElem symmetrize(const SigmaElem& x) {
  std::vector<Label> perm = x.ground().elements();
  const std::vector<Label> base = perm;
  SigmaElem out(x.ground(), x.basis());
  unsigned long count = 0;
  do {
    std::map<Label, Label> rename;
    for (std::size_t k = 0; k < base.size(); ++k) rename[base[k]] = perm[k];
    out += relabel(x, rename);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  out *= Scalar(Rational(1, count));
  return out;
}

SigmaSeries convolve(const SigmaSeries& s, const SigmaSeries& t) {
  if (s.max_n() != t.max_n()) throw DomainError("convolve: truncation mismatch");
  std::vector<SigmaElem> out;
  for (int n = 0; n <= s.max_n(); ++n) {
    SigmaElem acc(canonical(n));
    for (const auto& [a, b] : ordered_splits(canonical(n))) {
      acc += mu(transport(s[static_cast<int>(a.size())], a), transport(t[static_cast<int>(b.size())], b));
    }
    out.push_back(std::move(acc));
  }
  return SigmaSeries(std::move(out));
}

SigmaSeries universal_series(const Scalar& c, int max_n) {
  std::vector<SigmaElem> out{SigmaElem::unit()};
  for (int n = 1; n <= max_n; ++n) {
    SigmaElem x(canonical(n));
    x.add_term(Composition{canonical(n)}, pow(c, static_cast<unsigned>(n)));
    out.push_back(std::move(x));
  }
  return SigmaSeries(std::move(out));
}

SigmaSeries antipode(const SigmaSeries& s) {
  std::vector<SigmaElem> out;
  for (const auto& x : s.terms()) out.push_back(antipode(x));
  return SigmaSeries(std::move(out));
}

bool is_group_like(const SigmaSeries& s) {
  if (s[0] != SigmaElem::unit()) return false;
  for (int n = 1; n <= s.max_n(); ++n) {
    for (const auto& [a, b] : ordered_splits(canonical(n))) {
      const Tensor lhs = flatten(delta(a, b, s[n]));
      const Tensor rhs = flatten({{transport(s[static_cast<int>(a.size())], a),
                                   transport(s[static_cast<int>(b.size())], b)}});
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& letter : w) {
    if (!out.empty()) out += "·";
    out += letter;
  }
  return out;
}

std::string to_string(const WordElem& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (const auto& [word, c] : w) {
    if (!out.empty()) out += " + ";
    out += "[" + to_string(c) + "] " + to_string(word);
  }
  return out;
}

WordElem word_unit() { return WordElem::basis(Word{}); }

WordElem word_of(const Word& w, const Laurent& coeff) { return WordElem::basis(w, coeff); }

WordElem word_product(const WordElem& a, const WordElem& b, bool commutative) {
  WordElem out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      if (commutative) std::sort(w.begin(), w.end());
      out.add_term(w, cu * cv);
    }
  }
  return out;
}

TruncSeries::TruncSeries(unsigned order, bool commutative) : order_(order), commutative_(commutative) {}

TruncSeries TruncSeries::constant(const WordElem& value, unsigned order, bool commutative) {
  TruncSeries ts(order, commutative);
  ts.add(0, 0, value);
  return ts;
}

WordElem TruncSeries::coeff(unsigned g, unsigned j) const {
  auto it = terms_.find({g, j});
  return it == terms_.end() ? WordElem() : it->second;
}

void TruncSeries::add(unsigned g, unsigned j, const WordElem& value) {
  if (g + j > order_ || value.is_zero()) return;
  WordElem v = value;
  if (commutative_) {
    v = WordElem();
    for (const auto& [word, c] : value) {
      Word w = word;
      std::sort(w.begin(), w.end());
      v.add_term(w, c);
    }
  }
  auto& slot = terms_[{g, j}];
  slot += v;
  if (slot.is_zero()) terms_.erase({g, j});
}

void TruncSeries::require_compatible(const TruncSeries& o) const {
  if (order_ != o.order_) throw DomainError("TruncSeries: truncation order mismatch");
  if (commutative_ != o.commutative_) throw DomainError("TruncSeries: commutativity mismatch");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  require_compatible(o);
  for (const auto& [m, v] : o.terms_) add(m.first, m.second, v);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  require_compatible(o);
  for (const auto& [m, v] : o.terms_) add(m.first, m.second, -v);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Laurent& c) {
  Terms old;
  old.swap(terms_);
  for (auto& [m, v] : old) {
    v *= c;
    add(m.first, m.second, v);
  }
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.require_compatible(b);
  TruncSeries out(a.order_, a.commutative_);
  for (const auto& [ma, va] : a.terms_) {
    for (const auto& [mb, vb] : b.terms_) {
      const unsigned g = ma.first + mb.first;
      const unsigned j = ma.second + mb.second;
      if (g + j > out.order_) continue;
      out.add(g, j, word_product(va, vb, out.commutative_));
    }
  }
  return out;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.order_ == b.order_ && a.commutative_ == b.commutative_ && a.terms_ == b.terms_;
}

std::string to_string(const TruncSeries& ts) {
  if (ts.is_zero()) return "0";
  std::string out;
  for (const auto& [m, v] : ts.terms()) {
    if (!out.empty()) out += "\n";
    out += "g^" + std::to_string(m.first) + " j^" + std::to_string(m.second) + ": " + to_string(v);
  }
  return out;
}

bool satisfies_hbar_bound(const TruncSeries& ts) {
  for (const auto& [m, v] : ts.terms()) {
    const int bound = -static_cast<int>(m.first + m.second);
    for (const auto& [w, c] : v) {
      if (c.min_power() < bound) return false;
    }
  }
  return true;
}

TruncSeries formal_diff(const TruncSeries& ts, FormalSymbol x) {
  TruncSeries out(ts.order() == 0 ? 0 : ts.order() - 1, ts.commutative());
  for (const auto& [m, v] : ts.terms()) {
    auto [g, j] = m;
    unsigned& e = x == FormalSymbol::g ? g : j;
    if (e == 0) continue;
    WordElem scaled = v;
    scaled *= Laurent(static_cast<long>(e));
    --e;
    out.add(g, j, scaled);
  }
  return out;
}

TruncSeries set_zero(const TruncSeries& ts, FormalSymbol x) {
  TruncSeries out(ts.order(), ts.commutative());
  for (const auto& [m, v] : ts.terms()) {
    if ((x == FormalSymbol::g ? m.first : m.second) == 0) out.add(m.first, m.second, v);
  }
  return out;
}

TruncSeries truncate(const TruncSeries& ts, unsigned order) {
  TruncSeries out(order, ts.commutative());
  for (const auto& [m, v] : ts.terms()) out.add(m.first, m.second, v);
  return out;
}

TruncSeries evaluate_at(const TruncSeries& ts, const std::map<std::string, Rational>& point) {
  TruncSeries out(ts.order(), ts.commutative());
  for (const auto& [m, v] : ts.terms()) {
    Laurent total;
    for (const auto& [w, c] : v) {
      Rational value = 1;
      for (const auto& letter : w) {
        auto it = point.find(letter);
        if (it == point.end()) throw DomainError("evaluate_at: no value for '" + letter + "'");
        value *= it->second;
      }
      total += c * Laurent(Scalar(value));
    }
    out.add(m.first, m.second, word_of(Word{}, total));
  }
  return out;
}

}  // namespace species
