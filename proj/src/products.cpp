#include "species/products.hpp"

#include <algorithm>

#include "species/arrows.hpp"
#include "species/errors.hpp"

namespace species {

namespace {

std::vector<std::string> symbols_of(const LabelSet& lump, const Decoration& d) {
  std::vector<std::string> out;
  out.reserve(lump.size());
  for (Label l : lump) {
    auto it = d.find(l);
    if (it == d.end()) throw DomainError("product system: label " + std::to_string(l) + " is not decorated");
    out.push_back(it->second);
  }
  return out;
}

Laurent scalar_to_laurent(const Scalar& c) { return Laurent(c); }

// All set partitions of {0, ..., k-1} as block lists, via restricted growth strings.
std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t k) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> rgs(k, 0);
  auto emit = [&] {
    std::size_t blocks = k == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<std::size_t>> p(blocks);
    for (std::size_t i = 0; i < k; ++i) p[rgs[i]].push_back(i);
    out.push_back(std::move(p));
  };
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == k) {
      emit();
      return;
    }
    for (std::size_t b = 0; b <= used && b < k; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (k == 0) {
    out.emplace_back();
  } else {
    rec(1, 1);
  }
  return out;
}

LabelSet canonical(int n) { return n == 0 ? LabelSet() : LabelSet::range(n); }

Decoration two_color_decoration(int r, int n, const std::string& s_sym, const std::string& a) {
  Decoration d;
  for (int k = 1; k <= r; ++k) d[-k] = s_sym;
  for (int k = 1; k <= n; ++k) d[k] = a;
  return d;
}

Laurent degree_weight(const Laurent& weight, unsigned r, unsigned n) {
  return pow(weight, r + n) * Laurent(inverse_factorial(r) * inverse_factorial(n));
}

}  // namespace

WordElem ProductSystem::evaluate(const Composition& f, const Decoration& d) const {
  WordElem out = word_unit();
  for (const auto& lump : f) out = multiply(out, lump_value(symbols_of(lump, d)));
  return out;
}

WordElem PolynomialSystem::lump_value(const std::vector<std::string>& symbols) const {
  Word w = symbols;
  std::sort(w.begin(), w.end());
  return word_of(w);
}

CausalWordSystem::CausalWordSystem(std::map<std::string, Rational> times) : times_(std::move(times)) {}

WordElem CausalWordSystem::lump_value(const std::vector<std::string>& symbols) const {
  std::vector<std::pair<Rational, std::string>> keyed;
  for (const auto& s : symbols) {
    auto it = times_.find(s);
    if (it == times_.end()) throw DomainError("causal word system: unknown observable '" + s + "'");
    keyed.emplace_back(it->second, s);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
  Word w;
  for (auto& [t, s] : keyed) w.push_back(std::move(s));
  return word_of(w);
}

FactorDroppingSystem::FactorDroppingSystem(std::shared_ptr<const ProductSystem> base)
    : base_(std::move(base)) {}

WordElem FactorDroppingSystem::lump_value(const std::vector<std::string>& symbols) const {
  return base_->lump_value(symbols);
}

WordElem FactorDroppingSystem::evaluate(const Composition& f, const Decoration& d) const {
  if (f.length() < 2) return base_->evaluate(f, d);
  std::vector<LabelSet> kept(f.lumps().begin(), f.lumps().end() - 1);
  return base_->evaluate(Composition(std::move(kept)), d);
}

RecombinedSystem::RecombinedSystem(std::shared_ptr<const ProductSystem> base, Recombination z)
    : base_(std::move(base)), z_(std::move(z)) {}

WordElem RecombinedSystem::lump_value(const std::vector<std::string>& symbols) const {
  WordElem out;
  for (const auto& partition : set_partitions(symbols.size())) {
    // Expand the product of the block images letter by letter.
    std::vector<std::pair<std::vector<std::string>, Laurent>> choices{{{}, Laurent(1)}};
    for (const auto& block : partition) {
      std::vector<std::string> block_symbols;
      for (std::size_t i : block) block_symbols.push_back(symbols[i]);
      const auto image = z_(block_symbols);
      std::vector<std::pair<std::vector<std::string>, Laurent>> next;
      for (const auto& [letters, c] : choices) {
        for (const auto& [letter, zc] : image) {
          auto extended = letters;
          extended.push_back(letter);
          next.emplace_back(std::move(extended), c * zc);
        }
      }
      choices = std::move(next);
    }
    for (const auto& [letters, c] : choices) {
      WordElem v = base_->lump_value(letters);
      v *= c;
      out += v;
    }
  }
  return out;
}

LinComb<std::string, Laurent> trivial_recombination(const std::vector<std::string>& symbols) {
  if (symbols.size() == 1) return LinComb<std::string, Laurent>::basis(symbols[0]);
  return {};
}

WordElem eval_system(const ProductSystem& sys, const SigmaElem& x, const Decoration& d) {
  for (Label l : x.ground()) {
    if (!d.count(l)) throw DomainError("eval_system: label " + std::to_string(l) + " is not decorated");
  }
  WordElem out;
  for (const auto& [f, c] : to_h(x)) {
    WordElem v = sys.evaluate(f, d);
    v *= scalar_to_laurent(c);
    out += v;
  }
  return out;
}

WordElem eval_system(const ProductSystem& sys, const DecoratedElem& x) {
  return eval_system(sys, x.coeffs(), x.decoration());
}

bool homomorphism_check(const ProductSystem& sys, int n, const std::vector<std::string>& symbols) {
  if (symbols.empty()) throw DomainError("homomorphism_check: no decoration symbols");
  for (int m = 0; m <= n; ++m) {
    Decoration d;
    for (int i = 1; i <= m; ++i) d[i] = symbols[(i - 1) % symbols.size()];
    for (const auto& [s, t] : ordered_splits(canonical(m))) {
      const auto fs = compositions_of(s);
      const auto gs = compositions_of(t);
      for (const auto& f : fs) {
        const WordElem left = eval_system(sys, SigmaElem::H(f), restrict(d, s));
        for (const auto& g : gs) {
          const WordElem right = eval_system(sys, SigmaElem::H(g), restrict(d, t));
          const WordElem whole = eval_system(sys, SigmaElem::H(concat(f, g)), d);
          if (whole != sys.multiply(left, right)) return false;
        }
      }
    }
  }
  return true;
}

TruncSeries t_exponential(const ProductSystem& sys, const SigmaSeries& s,
                          const std::vector<Insertion>& argument, unsigned order, const Laurent& weight) {
  if (argument.empty()) throw DomainError("t_exponential: empty argument");
  if (s.max_n() < static_cast<int>(order)) throw DomainError("t_exponential: series truncated below the order");
  TruncSeries out(order, sys.commutative());
  for (unsigned m = 0; m <= order; ++m) {
    const SigmaElem& x = s[static_cast<int>(m)];
    const Laurent scale = pow(weight, m) * Laurent(inverse_factorial(m));
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      Decoration d;
      unsigned g = 0;
      for (unsigned i = 0; i < m; ++i) {
        const Insertion& ins = argument[pick[i]];
        d[static_cast<Label>(i + 1)] = ins.symbol;
        if (ins.var == FormalSymbol::g) ++g;
      }
      WordElem v = eval_system(sys, x, d);
      v *= scale;
      out.add(g, m - g, v);
      std::size_t k = 0;
      while (k < m && ++pick[k] == argument.size()) pick[k++] = 0;
      if (k == m) break;
    }
  }
  return out;
}

TruncSeries t_exponential(const ProductSystem& sys, const SigmaSeries& s, const std::string& a,
                          unsigned order, const Laurent& weight) {
  return t_exponential(sys, s, {{FormalSymbol::j, a}}, order, weight);
}

TruncSeries perturb_coderivation(const ProductSystem& sys, const SigmaSeries& s, const std::string& s_sym,
                                 const std::string& a, unsigned order, const Laurent& weight) {
  if (s.max_n() < static_cast<int>(order))
    throw DomainError("perturb_coderivation: series truncated below the order");
  TruncSeries out(order, sys.commutative());
  for (unsigned r = 0; r <= order; ++r) {
    for (unsigned n = 0; r + n <= order; ++n) {
      const LabelSet ground = LabelSet::stars(static_cast<int>(r)) | canonical(static_cast<int>(n));
      const SigmaElem& x = s[static_cast<int>(r + n)];
      const SigmaElem moved = relabel(x, order_preserving_map(x.ground(), ground));
      WordElem v = eval_system(sys, moved, two_color_decoration(static_cast<int>(r), static_cast<int>(n), s_sym, a));
      v *= degree_weight(weight, r, n);
      out.add(r, n, v);
    }
  }
  return out;
}

TruncSeries perturb_arrow(const ProductSystem& sys, const std::string& s_sym, const std::string& a,
                          unsigned order, ArrowDirection direction, const Laurent& weight) {
  TruncSeries out(order, sys.commutative());
  out.add(0, 0, word_unit());
  for (unsigned n = 1; n <= order; ++n) {
    for (unsigned r = 0; r + n <= order; ++r) {
      const LabelSet y = LabelSet::stars(static_cast<int>(r));
      const LabelSet i = canonical(static_cast<int>(n));
      const SigmaElem x = direction == ArrowDirection::down ? retarded_element(y, i) : advanced_element(y, i);
      WordElem v = eval_system(sys, x, two_color_decoration(static_cast<int>(r), static_cast<int>(n), s_sym, a));
      v *= degree_weight(weight, r, n);
      out.add(r, n, v);
    }
  }
  return out;
}

}  // namespace species
