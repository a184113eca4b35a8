#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "species/labels.hpp"
#include "species/sigma.hpp"

namespace species {

/// A full binary tree with disjoint label-set leaves.
class Tree {
 public:
  static Tree leaf(LabelSet labels);
  static Tree node(Tree left, Tree right);

  bool is_leaf() const { return !left_; }
  const LabelSet& ground() const { return ground_; }
  const Tree& left() const { return *left_; }
  const Tree& right() const { return *right_; }

 private:
  Tree() = default;
  LabelSet ground_;
  std::shared_ptr<const Tree> left_;
  std::shared_ptr<const Tree> right_;
};

std::string to_string(const Tree& t);

/// Signed sum of Q_{F_T'} over all node flips T' of t, in the Q-basis.
SigmaElem tree_to_primitive(const Tree& t);

/// mu(a, b) - mu(b, a); grounds must be disjoint.
SigmaElem commutator(const SigmaElem& a, const SigmaElem& b);

constexpr std::size_t kDefaultCellBound = 6;

/// An orientation of every channel {S, I - S}. Channels are indexed by the
/// side S avoiding the maximal label; the stored bit says whether that side
/// is the positive one.
class Cell {
 public:
  Cell() = default;
  Cell(LabelSet ground, std::vector<bool> orientation);

  /// Builds a family from its positive sides; DomainError unless exactly one
  /// side of each channel is given.
  static Cell from_positive(const LabelSet& ground, const std::vector<LabelSet>& positive);
  /// The cell of all channels whose positive side contains i.
  static Cell total_retarded(const LabelSet& ground, Label i);

  const LabelSet& ground() const { return ground_; }
  std::size_t channel_count() const { return orientation_.size(); }
  const std::vector<bool>& orientation() const { return orientation_; }

  /// Whether (S, I - S) belongs to the family. S must be a proper nonempty subset.
  bool contains(const LabelSet& s) const;
  /// Same, with S given as a bitmask over positions of the ground set.
  bool contains_mask(std::uint64_t mask) const;

  /// Positive sides ordered by size, then lexicographically.
  std::vector<LabelSet> positive_sides() const;
  /// Replaces (S, I - S) by (I - S, S).
  Cell flipped(const LabelSet& s) const;

  friend bool operator==(const Cell& a, const Cell& b) {
    return a.ground_ == b.ground_ && a.orientation_ == b.orientation_;
  }
  friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
  friend bool operator<(const Cell& a, const Cell& b);

 private:
  std::size_t channel_of(const LabelSet& s, bool& positive_if_set) const;
  LabelSet ground_;
  std::vector<bool> orientation_;
};

std::string to_string(const Cell& c);
std::uint64_t mask_of(const LabelSet& ground, const LabelSet& s);
LabelSet subset_of_mask(const LabelSet& ground, std::uint64_t mask);

/// A rational lambda with sum zero and lambda(S) >= 1 on every positive side,
/// or nullopt when none exists.
std::optional<std::vector<Rational>> is_cell(const Cell& family);
std::optional<std::vector<Rational>> is_cell(const LabelSet& ground, const std::vector<LabelSet>& positive);

/// All cells over I in canonical order, by incremental chamber insertion.
std::vector<Cell> enumerate_cells(const LabelSet& ground, std::size_t bound = kDefaultCellBound);
/// All cells by testing every orientation; exponential, for cross-checks.
std::vector<Cell> enumerate_cells_brute_force(const LabelSet& ground);

/// D_S = -sum over F with every tail union a positive side of (-1)^l(F) H_F.
SigmaElem dynkin(const Cell& cell);
/// Iterated Tits product of (H_(I) - H_(T,S)) over (S,T) in the cell.
SigmaElem dynkin_tits_factorization(const Cell& cell);

struct SteinmannQuadruple {
  Cell s1, s2, s3, s4;
  // Positive sides in s1 of the two overlapping channels.
  LabelSet first, second;
};

std::vector<SteinmannQuadruple> steinmann_quadruples(const LabelSet& ground);
std::vector<SteinmannQuadruple> steinmann_quadruples(const std::vector<Cell>& cells);
SigmaElem steinmann_sum(const SteinmannQuadruple& q);
bool steinmann_relation_holds(const SteinmannQuadruple& q);
/// Rank of the formal relation vectors s1 - s2 + s3 - s4 among cells.
std::size_t steinmann_relation_rank(const std::vector<SteinmannQuadruple>& quads);

/// Whether bridge is admissible for cell1 over S and cell2 over T: it
/// contains (S,T), (A, B u T), (A u T, B) for (A,B) in cell1 and
/// (C, D u S), (C u S, D) for (C,D) in cell2, and its flip at (S,T) is a cell.
bool ruelle_admissible(const Cell& cell1, const Cell& cell2, const Cell& bridge);
bool ruelle_check(const Cell& cell1, const Cell& cell2, const Cell& bridge);

/// D_{i1} - D_{i2} against the sum of brackets of total Dynkin elements on lumps.
SigmaElem glz_defect(const LabelSet& ground, Label i1, Label i2);
bool glz_check(const LabelSet& ground, Label i1, Label i2);

struct DynkinRank {
  std::size_t cells = 0;
  std::size_t rank = 0;
  unsigned long long zie_dim = 0;
};

constexpr std::size_t kDefaultDynkinBound = 5;
DynkinRank dynkin_rank(const LabelSet& ground, std::size_t bound = kDefaultDynkinBound);

}  // namespace species
