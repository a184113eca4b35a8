#include "species/labels.hpp"

#include <algorithm>
#include <iterator>

#include "species/errors.hpp"

namespace species {

LabelSet::LabelSet(std::initializer_list<Label> labels) : LabelSet(std::vector<Label>(labels)) {}

LabelSet::LabelSet(std::vector<Label> labels) : elems_(std::move(labels)) {
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
    throw DomainError("duplicate label in label set");
  }
}

LabelSet LabelSet::range(int n) {
  std::vector<Label> v(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return LabelSet(Sorted{}, std::move(v));
}

LabelSet LabelSet::stars(int r) {
  std::vector<Label> v;
  for (int i = r; i >= 1; --i) v.push_back(-i);
  return LabelSet(Sorted{}, std::move(v));
}

bool LabelSet::contains(Label l) const { return std::binary_search(elems_.begin(), elems_.end(), l); }

bool LabelSet::is_subset_of(const LabelSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

bool LabelSet::disjoint_from(const LabelSet& other) const {
  auto a = elems_.begin();
  auto b = other.elems_.begin();
  while (a != elems_.end() && b != other.elems_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

LabelSet operator|(const LabelSet& a, const LabelSet& b) {
  std::vector<Label> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return LabelSet(LabelSet::Sorted{}, std::move(out));
}

LabelSet operator&(const LabelSet& a, const LabelSet& b) {
  std::vector<Label> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return LabelSet(LabelSet::Sorted{}, std::move(out));
}

LabelSet operator-(const LabelSet& a, const LabelSet& b) {
  std::vector<Label> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return LabelSet(LabelSet::Sorted{}, std::move(out));
}

std::string to_string(const LabelSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::vector<LabelSet> subsets_of(const LabelSet& ground) {
  const std::size_t n = ground.size();
  if (n > 20) throw SizeLimitError("subsets_of: ground set too large");
  std::vector<LabelSet> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<Label> v;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) v.push_back(ground[i]);
    }
    out.emplace_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const LabelSet& a, const LabelSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::pair<LabelSet, LabelSet>> ordered_splits(const LabelSet& ground) {
  std::vector<std::pair<LabelSet, LabelSet>> out;
  for (auto& s : subsets_of(ground)) {
    LabelSet t = ground - s;
    out.emplace_back(std::move(s), std::move(t));
  }
  return out;
}

Composition::Composition(std::initializer_list<LabelSet> lumps)
    : Composition(std::vector<LabelSet>(lumps)) {}

Composition::Composition(std::vector<LabelSet> lumps) : lumps_(std::move(lumps)) {
  for (const auto& lump : lumps_) {
    if (lump.empty()) throw DomainError("composition lumps must be nonempty");
    if (!ground_.disjoint_from(lump)) throw DomainError("composition lumps must be disjoint");
    ground_ = ground_ | lump;
  }
}

bool operator<(const Composition& a, const Composition& b) {
  if (a.lumps_.size() != b.lumps_.size()) return a.lumps_.size() < b.lumps_.size();
  return a.lumps_ < b.lumps_;
}

std::string to_string(const Composition& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.length(); ++i) {
    if (i) out += ",";
    for (Label l : f[i]) {
      out += l < 0 ? "*" + std::to_string(-l) : std::to_string(l);
    }
  }
  return out + ")";
}

namespace {

void extend_compositions(const LabelSet& remaining, std::vector<LabelSet>& prefix,
                         std::vector<Composition>& out) {
  if (remaining.empty()) {
    out.emplace_back(prefix);
    return;
  }
  for (const auto& lump : subsets_of(remaining)) {
    if (lump.empty()) continue;
    prefix.push_back(lump);
    extend_compositions(remaining - lump, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_of(const LabelSet& ground, std::size_t bound) {
  if (ground.size() > bound) {
    throw SizeLimitError("compositions_of: |I| = " + std::to_string(ground.size()) +
                         " exceeds bound " + std::to_string(bound));
  }
  std::vector<Composition> out;
  std::vector<LabelSet> prefix;
  extend_compositions(ground, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Composition restrict(const Composition& f, const LabelSet& s) {
  if (!s.is_subset_of(f.ground())) throw DomainError("restrict: S is not a subset of ground(F)");
  Composition out;
  for (const auto& lump : f) {
    LabelSet piece = lump & s;
    if (!piece.empty()) out.lumps_.push_back(std::move(piece));
  }
  out.ground_ = s;
  return out;
}

Composition concat(const Composition& f, const Composition& g) {
  if (!f.ground().disjoint_from(g.ground())) throw DomainError("concat: overlapping grounds");
  Composition out;
  out.lumps_ = f.lumps_;
  out.lumps_.insert(out.lumps_.end(), g.lumps_.begin(), g.lumps_.end());
  out.ground_ = f.ground() | g.ground();
  return out;
}

namespace {

// Lengths of the blocks of F grouped by the lumps of G, or nullopt when G is
// not a coarsening of F.
std::optional<std::vector<long>> block_lengths(const Composition& g, const Composition& f) {
  std::vector<long> lengths;
  std::size_t i = 0;
  for (const auto& target : g) {
    LabelSet acc;
    long count = 0;
    while (i < f.length() && acc.size() < target.size()) {
      acc = acc | f[i];
      ++i;
      ++count;
    }
    if (acc != target) return std::nullopt;
    lengths.push_back(count);
  }
  if (i != f.length()) return std::nullopt;
  return lengths;
}

}  // namespace

bool coarsens(const Composition& g, const Composition& f) {
  if (g.ground() != f.ground()) throw DomainError("coarsens: different ground sets");
  return block_lengths(g, f).has_value();
}

QuotientStats quotient_stats(const Composition& f, const Composition& g) {
  if (g.ground() != f.ground()) throw DomainError("quotient_stats: different ground sets");
  auto lengths = block_lengths(g, f);
  if (!lengths) throw OrderError("quotient_stats: G is not a coarsening of F");
  QuotientStats stats;
  for (long len : *lengths) {
    stats.length *= len;
    long fact = 1;
    for (long k = 2; k <= len; ++k) fact *= k;
    stats.factorial *= fact;
  }
  return stats;
}

Composition opposite(const Composition& f) {
  Composition out;
  out.lumps_.assign(f.lumps_.rbegin(), f.lumps_.rend());
  out.ground_ = f.ground_;
  return out;
}

std::optional<Composition> deshuffle(const Composition& f, const LabelSet& s) {
  if (!s.is_subset_of(f.ground())) throw DomainError("deshuffle: S is not a subset of ground(F)");
  for (const auto& lump : f) {
    const std::size_t inside = (lump & s).size();
    if (inside != 0 && inside != lump.size()) return std::nullopt;
  }
  return restrict(f, s);
}

std::vector<Composition> coarsenings_of(const Composition& f) {
  std::vector<Composition> out;
  const std::size_t k = f.length();
  if (k == 0) return {f};
  // Bit i of `cuts` keeps the boundary between lump i and lump i+1.
  for (unsigned long cuts = 0; cuts < (1ul << (k - 1)); ++cuts) {
    std::vector<LabelSet> lumps;
    LabelSet acc;
    for (std::size_t i = 0; i < k; ++i) {
      acc = acc | f[i];
      if (i + 1 == k || (cuts >> i & 1u)) {
        lumps.push_back(acc);
        acc = LabelSet();
      }
    }
    out.emplace_back(std::move(lumps));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> refinements_of(const Composition& f) {
  std::vector<Composition> out{Composition()};
  for (const auto& lump : f) {
    std::vector<Composition> next;
    for (const auto& piece : compositions_of(lump, lump.size())) {
      for (const auto& prefix : out) next.push_back(concat(prefix, piece));
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabelSet relabel(const LabelSet& s, const std::map<Label, Label>& rename) {
  std::vector<Label> v;
  v.reserve(s.size());
  for (Label l : s) {
    auto it = rename.find(l);
    if (it == rename.end()) throw DomainError("relabel: label " + std::to_string(l) + " not mapped");
    v.push_back(it->second);
  }
  return LabelSet(std::move(v));
}

Composition relabel(const Composition& f, const std::map<Label, Label>& rename) {
  std::vector<LabelSet> lumps;
  lumps.reserve(f.length());
  for (const auto& lump : f) lumps.push_back(relabel(lump, rename));
  return Composition(std::move(lumps));
}

std::map<Label, Label> order_preserving_map(const LabelSet& from, const LabelSet& to) {
  if (from.size() != to.size()) throw DomainError("order_preserving_map: size mismatch");
  std::map<Label, Label> m;
  for (std::size_t i = 0; i < from.size(); ++i) m.emplace(from[i], to[i]);
  return m;
}

}  // namespace species
