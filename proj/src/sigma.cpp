#include "species/sigma.hpp"

#include "species/errors.hpp"
#include "species/exactlin.hpp"

namespace species {

std::string to_string(Basis b) { return b == Basis::H ? "H" : "Q"; }

SigmaElem::SigmaElem(LabelSet ground, Basis basis) : ground_(std::move(ground)), basis_(basis) {}

SigmaElem SigmaElem::H(const Composition& f, const Scalar& coeff) {
  SigmaElem a(f.ground(), Basis::H);
  a.terms_.add_term(f, coeff);
  return a;
}

SigmaElem SigmaElem::Q(const Composition& f, const Scalar& coeff) {
  SigmaElem a(f.ground(), Basis::Q);
  a.terms_.add_term(f, coeff);
  return a;
}

void SigmaElem::add_term(const Composition& f, const Scalar& coeff) {
  if (f.ground() != ground_) {
    throw DomainError("composition " + to_string(f) + " is not over " + species::to_string(ground_));
  }
  terms_.add_term(f, coeff);
}

void SigmaElem::require_compatible(const SigmaElem& o) const {
  if (ground_ != o.ground_) throw DomainError("ground mismatch");
  if (basis_ != o.basis_) throw DomainError("basis mismatch");
}

SigmaElem& SigmaElem::operator+=(const SigmaElem& o) {
  require_compatible(o);
  terms_ += o.terms_;
  return *this;
}

SigmaElem& SigmaElem::operator-=(const SigmaElem& o) {
  require_compatible(o);
  terms_ -= o.terms_;
  return *this;
}

SigmaElem& SigmaElem::operator*=(const Scalar& c) {
  terms_ *= c;
  return *this;
}

bool operator==(const SigmaElem& a, const SigmaElem& b) {
  a.require_compatible(b);
  return a.terms_ == b.terms_;
}

std::string to_string(const SigmaElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [f, c] : a) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")" + to_string(a.basis()) + to_string(f);
  }
  return out;
}

SigmaElem mu(const SigmaElem& a, const SigmaElem& b) {
  if (a.basis() != b.basis()) throw DomainError("mu: basis mismatch");
  if (!a.ground().disjoint_from(b.ground())) throw DomainError("mu: overlapping grounds");
  SigmaElem out(a.ground() | b.ground(), a.basis());
  for (const auto& [f, cf] : a) {
    for (const auto& [g, cg] : b) out.add_term(concat(f, g), cf * cg);
  }
  return out;
}

SigmaElem mu(const std::vector<SigmaElem>& factors) {
  SigmaElem out = SigmaElem::unit();
  if (!factors.empty() && factors.front().basis() == Basis::Q) out = SigmaElem::Q(Composition());
  for (const auto& x : factors) out = mu(out, x);
  return out;
}

TensorSum delta(const LabelSet& s, const LabelSet& t, const SigmaElem& a) {
  if (!s.disjoint_from(t) || (s | t) != a.ground()) {
    throw DomainError("delta: (S,T) is not a decomposition of " + to_string(a.ground()));
  }
  Tensor flat;
  for (const auto& [f, c] : a) {
    if (a.basis() == Basis::H) {
      flat.add_term({restrict(f, s), restrict(f, t)}, c);
    } else if (auto left = deshuffle(f, s)) {
      flat.add_term({*left, restrict(f, t)}, c);
    }
  }
  TensorSum out;
  out.reserve(flat.size());
  for (const auto& [pair, c] : flat) {
    SigmaElem x(s, a.basis());
    x.add_term(pair.first, c);
    SigmaElem y(t, a.basis());
    y.add_term(pair.second, 1);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

Tensor flatten(const TensorSum& sum) {
  Tensor out;
  for (const auto& [x, y] : sum) {
    for (const auto& [f, cf] : x) {
      for (const auto& [g, cg] : y) out.add_term({f, g}, cf * cg);
    }
  }
  return out;
}

Scalar counit(const SigmaElem& a) {
  return a.ground().empty() ? a.coeff(Composition()) : Scalar();
}

SigmaElem antipode(const SigmaElem& a) {
  if (a.basis() == Basis::Q) return to_q(antipode(to_h(a)));
  SigmaElem out(a.ground());
  for (const auto& [f, c] : a) {
    for (const auto& g : refinements_of(opposite(f))) {
      out.add_term(g, g.length() % 2 ? -c : c);
    }
  }
  return out;
}

SigmaElem takeuchi_antipode(const SigmaElem& a) {
  SigmaElem out(a.ground());
  for (const auto& f : compositions_of(a.ground())) {
    SigmaElem term = hopf_power(f, a);
    if (f.length() % 2) {
      out -= term;
    } else {
      out += term;
    }
  }
  return out;
}

SigmaElem to_q(const SigmaElem& a) {
  if (a.basis() == Basis::Q) return a;
  SigmaElem out(a.ground(), Basis::Q);
  for (const auto& [f, c] : a) {
    for (const auto& g : refinements_of(f)) {
      out.add_term(g, c / Scalar(quotient_stats(g, f).factorial));
    }
  }
  return out;
}

SigmaElem to_h(const SigmaElem& a) {
  if (a.basis() == Basis::H) return a;
  SigmaElem out(a.ground(), Basis::H);
  for (const auto& [f, c] : a) {
    for (const auto& g : refinements_of(f)) {
      Scalar coeff = c / Scalar(quotient_stats(g, f).length);
      if ((g.length() - f.length()) % 2) coeff = -coeff;
      out.add_term(g, coeff);
    }
  }
  return out;
}

namespace {

SigmaElem hopf_power_from(const Composition& f, std::size_t i, const SigmaElem& a) {
  if (i + 1 >= f.length()) return a;
  SigmaElem out(a.ground());
  for (const auto& [x, y] : delta(f[i], a.ground() - f[i], a)) {
    out += mu(x, hopf_power_from(f, i + 1, y));
  }
  return out;
}

}  // namespace

SigmaElem hopf_power(const Composition& f, const SigmaElem& a) {
  if (f.ground() != a.ground()) throw DomainError("hopf_power: ground mismatch");
  return hopf_power_from(f, 0, to_h(a));
}

bool is_primitive(const SigmaElem& a) {
  for (const auto& [s, t] : ordered_splits(a.ground())) {
    if (s.empty() || t.empty()) continue;
    if (!delta(s, t, a).empty()) return false;
  }
  return true;
}

std::vector<SigmaElem> primitive_part_basis(int n, std::size_t bound) {
  if (n < 0) throw DomainError("primitive_part_basis: negative degree");
  if (static_cast<std::size_t>(n) > bound) {
    throw SizeLimitError("primitive_part_basis: n = " + std::to_string(n) + " exceeds bound " +
                         std::to_string(bound));
  }
  if (n == 0) return {};
  const LabelSet ground = LabelSet::range(n);
  const auto domain = compositions_of(ground);
  std::vector<std::pair<LabelSet, LabelSet>> splits;
  for (auto& st : ordered_splits(ground)) {
    if (!st.first.empty() && !st.second.empty()) splits.push_back(std::move(st));
  }
  std::vector<std::pair<Composition, Tensor>> stacked;
  stacked.reserve(domain.size());
  for (const auto& f : domain) {
    Tensor image;
    for (const auto& [s, t] : splits) image.add_term({restrict(f, s), restrict(f, t)}, 1);
    stacked.emplace_back(f, std::move(image));
  }
  std::vector<SigmaElem> out;
  for (const auto& v : kernel_basis(stacked, domain)) {
    SigmaElem x(ground);
    for (const auto& [f, c] : v) x.add_term(f, c);
    out.push_back(std::move(x));
  }
  return out;
}

SigmaElem relabel(const SigmaElem& a, const std::map<Label, Label>& rename) {
  SigmaElem out(relabel(a.ground(), rename), a.basis());
  for (const auto& [f, c] : a) out.add_term(relabel(f, rename), c);
  return out;
}

unsigned long long zie_dimension(int n) {
  if (n <= 0) return 0;
  // stirling[k] = S(m, k) for the current m
  std::vector<unsigned long long> stirling(n + 1, 0);
  stirling[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = m; k >= 1; --k) stirling[k] = k * stirling[k] + stirling[k - 1];
    stirling[0] = 0;
  }
  unsigned long long total = 0;
  unsigned long long fact = 1;
  for (int k = 1; k <= n; ++k) {
    total += stirling[k] * fact;
    fact *= k;
  }
  return total;
}

Decoration restrict(const Decoration& d, const LabelSet& s) {
  Decoration out;
  for (Label l : s) {
    auto it = d.find(l);
    if (it == d.end()) throw DomainError("decoration missing for label " + std::to_string(l));
    out.emplace(l, it->second);
  }
  return out;
}

DecoratedElem::DecoratedElem(SigmaElem coeffs, Decoration decoration)
    : coeffs_(std::move(coeffs)), decoration_(std::move(decoration)) {
  if (decoration_.size() != coeffs_.ground().size()) {
    throw DomainError("decoration must cover exactly the ground set");
  }
  for (Label l : coeffs_.ground()) {
    if (!decoration_.count(l)) throw DomainError("decoration missing for label " + std::to_string(l));
  }
}

DecoratedElem decorated_mu(const DecoratedElem& a, const DecoratedElem& b) {
  Decoration merged = a.decoration();
  for (const auto& [l, sym] : b.decoration()) {
    if (!merged.emplace(l, sym).second) throw DomainError("decoration collision on label " + std::to_string(l));
  }
  return DecoratedElem(mu(a.coeffs(), b.coeffs()), std::move(merged));
}

std::vector<std::pair<DecoratedElem, DecoratedElem>> decorated_delta(const LabelSet& s,
                                                                     const LabelSet& t,
                                                                     const DecoratedElem& a) {
  std::vector<std::pair<DecoratedElem, DecoratedElem>> out;
  const Decoration ds = restrict(a.decoration(), s);
  const Decoration dt = restrict(a.decoration(), t);
  for (auto& [x, y] : delta(s, t, a.coeffs())) {
    out.emplace_back(DecoratedElem(std::move(x), ds), DecoratedElem(std::move(y), dt));
  }
  return out;
}

DecoratedElem decorated_antipode(const DecoratedElem& a) {
  return DecoratedElem(antipode(a.coeffs()), a.decoration());
}

}  // namespace species
