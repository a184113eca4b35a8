#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace species {

// Positive integers are ordinary ("j-colored") labels; negative integers are
// adjoined ("g-colored") labels *1 = -1, *2 = -2, ...
using Label = int;

constexpr std::size_t kDefaultCompositionBound = 8;

/// A finite set of labels, stored strictly increasing.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<Label> labels);
  explicit LabelSet(std::vector<Label> labels);

  // The canonical set [n] = {1, ..., n}.
  static LabelSet range(int n);
  // Adjoined labels {-1, ..., -r}.
  static LabelSet stars(int r);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(Label l) const;
  bool is_subset_of(const LabelSet& other) const;
  bool disjoint_from(const LabelSet& other) const;
  const std::vector<Label>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  Label operator[](std::size_t i) const { return elems_[i]; }
  Label max() const { return elems_.back(); }

  friend LabelSet operator|(const LabelSet& a, const LabelSet& b);
  friend LabelSet operator&(const LabelSet& a, const LabelSet& b);
  friend LabelSet operator-(const LabelSet& a, const LabelSet& b);

  friend bool operator==(const LabelSet& a, const LabelSet& b) { return a.elems_ == b.elems_; }
  friend bool operator!=(const LabelSet& a, const LabelSet& b) { return !(a == b); }
  friend bool operator<(const LabelSet& a, const LabelSet& b) { return a.elems_ < b.elems_; }

 private:
  struct Sorted {};
  LabelSet(Sorted, std::vector<Label> labels) : elems_(std::move(labels)) {}
  std::vector<Label> elems_;
};

std::string to_string(const LabelSet& s);

/// All subsets of I, ordered by size then lexicographically.
std::vector<LabelSet> subsets_of(const LabelSet& ground);

/// All ordered pairs (S, T) with S disjoint union T = I, including empty parts.
std::vector<std::pair<LabelSet, LabelSet>> ordered_splits(const LabelSet& ground);

/// A set composition: an ordered sequence of nonempty, pairwise disjoint lumps.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<LabelSet> lumps);
  explicit Composition(std::vector<LabelSet> lumps);

  std::size_t length() const { return lumps_.size(); }
  bool empty() const { return lumps_.empty(); }
  const std::vector<LabelSet>& lumps() const { return lumps_; }
  const LabelSet& operator[](std::size_t i) const { return lumps_[i]; }
  auto begin() const { return lumps_.begin(); }
  auto end() const { return lumps_.end(); }
  const LabelSet& ground() const { return ground_; }

  // Canonical order: by length, then lexicographic on lumps.
  friend bool operator<(const Composition& a, const Composition& b);
  friend bool operator==(const Composition& a, const Composition& b) { return a.lumps_ == b.lumps_; }
  friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }

 private:
  friend Composition concat(const Composition&, const Composition&);
  friend Composition restrict(const Composition&, const LabelSet&);
  friend Composition opposite(const Composition&);
  std::vector<LabelSet> lumps_;
  LabelSet ground_;
};

std::string to_string(const Composition& f);

/// Every composition of I exactly once, in canonical order. Throws
/// SizeLimitError when |I| exceeds `bound`.
std::vector<Composition> compositions_of(const LabelSet& ground,
                                         std::size_t bound = kDefaultCompositionBound);

/// (F|_S)_+ ; S must be a subset of ground(F).
Composition restrict(const Composition& f, const LabelSet& s);
/// FG; grounds must be disjoint.
Composition concat(const Composition& f, const Composition& g);
/// True iff G <= F, i.e. G is obtained from F by merging contiguous lumps.
bool coarsens(const Composition& g, const Composition& f);

struct QuotientStats {
  long length = 1;     // l(F/G)
  long factorial = 1;  // (F/G)!
};
/// Requires G <= F, otherwise throws OrderError.
QuotientStats quotient_stats(const Composition& f, const Composition& g);

Composition opposite(const Composition& f);
/// F|_S when S is a union of lumps of F, nullopt (the zero vector) otherwise.
std::optional<Composition> deshuffle(const Composition& f, const LabelSet& s);

/// All G with G <= F (coarsenings), in canonical order.
std::vector<Composition> coarsenings_of(const Composition& f);
/// All G with G >= F (refinements), in canonical order.
std::vector<Composition> refinements_of(const Composition& f);

/// Renames labels according to `rename`, which must cover ground(F).
Composition relabel(const Composition& f, const std::map<Label, Label>& rename);
LabelSet relabel(const LabelSet& s, const std::map<Label, Label>& rename);

/// The order-preserving bijection from `from` onto `to` (equal sizes).
std::map<Label, Label> order_preserving_map(const LabelSet& from, const LabelSet& to);

}  // namespace species
