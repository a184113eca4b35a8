#include "species/zie.hpp"

#include <algorithm>
#include <set>

#include "species/errors.hpp"
#include "species/exactlin.hpp"
#include "species/lp.hpp"
#include "species/tits.hpp"

namespace species {

Tree Tree::leaf(LabelSet labels) {
  if (labels.empty()) throw DomainError("tree leaves must be nonempty");
  Tree t;
  t.ground_ = std::move(labels);
  return t;
}

Tree Tree::node(Tree left, Tree right) {
  if (!left.ground().disjoint_from(right.ground())) throw DomainError("tree leaves must be disjoint");
  Tree t;
  t.ground_ = left.ground() | right.ground();
  t.left_ = std::make_shared<const Tree>(std::move(left));
  t.right_ = std::make_shared<const Tree>(std::move(right));
  return t;
}

std::string to_string(const Tree& t) {
  if (t.is_leaf()) {
    std::string out;
    for (Label l : t.ground()) out += std::to_string(l);
    return out;
  }
  return "[" + to_string(t.left()) + "," + to_string(t.right()) + "]";
}

namespace {

using SignedLeaves = std::vector<std::pair<std::vector<LabelSet>, int>>;

SignedLeaves flips(const Tree& t) {
  if (t.is_leaf()) return {{{t.ground()}, 1}};
  SignedLeaves out;
  for (const auto& [l, sl] : flips(t.left())) {
    for (const auto& [r, sr] : flips(t.right())) {
      std::vector<LabelSet> lr = l;
      lr.insert(lr.end(), r.begin(), r.end());
      std::vector<LabelSet> rl = r;
      rl.insert(rl.end(), l.begin(), l.end());
      out.emplace_back(std::move(lr), sl * sr);
      out.emplace_back(std::move(rl), -sl * sr);
    }
  }
  return out;
}

}  // namespace

SigmaElem tree_to_primitive(const Tree& t) {
  SigmaElem out(t.ground(), Basis::Q);
  for (const auto& [lumps, sign] : flips(t)) out.add_term(Composition(lumps), sign);
  return out;
}

SigmaElem commutator(const SigmaElem& a, const SigmaElem& b) {
  if (!a.ground().disjoint_from(b.ground())) throw DomainError("commutator: overlapping grounds");
  return mu(a, b) - mu(b, a);
}

namespace {

std::size_t channel_total(std::size_t n) { return n == 0 ? 0 : (std::size_t{1} << (n - 1)) - 1; }

std::uint64_t full_mask(std::size_t n) { return (std::uint64_t{1} << n) - 1; }

}  // namespace

std::uint64_t mask_of(const LabelSet& ground, const LabelSet& s) {
  if (ground.size() > 63) throw SizeLimitError("label set too large for a channel mask");
  std::uint64_t mask = 0;
  const auto& g = ground.elements();
  for (Label l : s) {
    auto it = std::lower_bound(g.begin(), g.end(), l);
    if (it == g.end() || *it != l) throw DomainError("label " + std::to_string(l) + " not in ground set");
    mask |= std::uint64_t{1} << (it - g.begin());
  }
  return mask;
}

LabelSet subset_of_mask(const LabelSet& ground, std::uint64_t mask) {
  std::vector<Label> v;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (mask >> i & 1u) v.push_back(ground[i]);
  }
  return LabelSet(std::move(v));
}

Cell::Cell(LabelSet ground, std::vector<bool> orientation)
    : ground_(std::move(ground)), orientation_(std::move(orientation)) {
  if (ground_.size() > 20) throw SizeLimitError("cell ground set too large");
  if (orientation_.size() != channel_total(ground_.size())) {
    throw DomainError("cell orientation has the wrong number of channels");
  }
}

Cell Cell::from_positive(const LabelSet& ground, const std::vector<LabelSet>& positive) {
  const std::size_t n = ground.size();
  if (n > 20) throw SizeLimitError("cell ground set too large");
  const std::uint64_t full = full_mask(n);
  const std::uint64_t top = n ? std::uint64_t{1} << (n - 1) : 0;
  std::vector<bool> orientation(channel_total(n), false);
  std::vector<bool> seen(channel_total(n), false);
  for (const auto& s : positive) {
    const std::uint64_t m = mask_of(ground, s);
    if (m == 0 || m == full) throw DomainError("positive side must be a proper nonempty subset");
    const bool avoids_top = !(m & top);
    const std::size_t idx = (avoids_top ? m : full ^ m) - 1;
    if (seen[idx]) throw DomainError("channel " + to_string(s) + " oriented twice");
    seen[idx] = true;
    orientation[idx] = avoids_top;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw DomainError("family does not orient every channel");
  }
  return Cell(ground, std::move(orientation));
}

Cell Cell::total_retarded(const LabelSet& ground, Label i) {
  if (!ground.contains(i)) throw DomainError("label " + std::to_string(i) + " not in ground set");
  const std::uint64_t bit = mask_of(ground, LabelSet{i});
  std::vector<bool> orientation(channel_total(ground.size()));
  for (std::size_t idx = 0; idx < orientation.size(); ++idx) orientation[idx] = (idx + 1) & bit;
  return Cell(ground, std::move(orientation));
}

bool Cell::contains_mask(std::uint64_t mask) const {
  const std::size_t n = ground_.size();
  const std::uint64_t full = full_mask(n);
  if (mask == 0 || mask == full || (mask & ~full)) throw DomainError("not a proper nonempty subset");
  if (mask >> (n - 1) & 1u) return !orientation_[(full ^ mask) - 1];
  return orientation_[mask - 1];
}

bool Cell::contains(const LabelSet& s) const { return contains_mask(mask_of(ground_, s)); }

std::vector<LabelSet> Cell::positive_sides() const {
  const std::uint64_t full = full_mask(ground_.size());
  std::vector<LabelSet> out;
  for (std::size_t idx = 0; idx < orientation_.size(); ++idx) {
    const std::uint64_t m = idx + 1;
    out.push_back(subset_of_mask(ground_, orientation_[idx] ? m : full ^ m));
  }
  std::sort(out.begin(), out.end(), [](const LabelSet& a, const LabelSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Cell Cell::flipped(const LabelSet& s) const {
  std::uint64_t m = mask_of(ground_, s);
  const std::size_t n = ground_.size();
  const std::uint64_t full = full_mask(n);
  if (m == 0 || m == full) throw DomainError("not a proper nonempty subset");
  if (m >> (n - 1) & 1u) m = full ^ m;
  Cell out = *this;
  out.orientation_[m - 1] = !out.orientation_[m - 1];
  return out;
}

bool operator<(const Cell& a, const Cell& b) {
  if (a.ground_ != b.ground_) return a.ground_ < b.ground_;
  return a.orientation_ < b.orientation_;
}

std::string to_string(const Cell& c) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : c.positive_sides()) {
    if (!first) out += ",";
    first = false;
    out += "(" + to_string(s) + "|" + to_string(c.ground() - s) + ")";
  }
  return out + "}";
}

namespace {

// lambda(P) >= 1 in the coordinates lambda_0 .. lambda_{n-2}, with
// lambda_{n-1} eliminated by the sum-zero condition.
std::vector<int> constraint_row(std::size_t n, std::uint64_t positive) {
  std::vector<int> row(n - 1);
  const int top = (positive >> (n - 1) & 1u) ? 1 : 0;
  for (std::size_t k = 0; k + 1 < n; ++k) row[k] = static_cast<int>(positive >> k & 1u) - top;
  return row;
}

Rational evaluate(const std::vector<Rational>& lambda, std::uint64_t mask) {
  Rational total = 0;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (mask >> k & 1u) total += lambda[k];
  }
  return total;
}

std::optional<std::vector<Rational>> solve_sides(std::size_t n, const std::vector<std::uint64_t>& sides) {
  if (n == 0) return std::vector<Rational>{};
  std::vector<std::vector<int>> rows;
  rows.reserve(sides.size());
  for (auto p : sides) rows.push_back(constraint_row(n, p));
  auto x = solve_ge_one(rows, n - 1);
  if (!x) return std::nullopt;
  Rational last = 0;
  for (const auto& v : *x) last -= v;
  x->push_back(last);
  for (auto p : sides) {
    if (evaluate(*x, p) <= 0) throw InvariantError("cell witness fails a strict inequality");
  }
  return x;
}

std::vector<std::uint64_t> positive_masks(const Cell& c) {
  const std::uint64_t full = full_mask(c.ground().size());
  std::vector<std::uint64_t> out;
  for (std::size_t idx = 0; idx < c.channel_count(); ++idx) {
    out.push_back(c.orientation()[idx] ? idx + 1 : full ^ (idx + 1));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> is_cell(const Cell& family) {
  return solve_sides(family.ground().size(), positive_masks(family));
}

std::optional<std::vector<Rational>> is_cell(const LabelSet& ground, const std::vector<LabelSet>& positive) {
  return is_cell(Cell::from_positive(ground, positive));
}

std::vector<Cell> enumerate_cells(const LabelSet& ground, std::size_t bound) {
  const std::size_t n = ground.size();
  if (n > bound) {
    throw SizeLimitError("enumerate_cells: |I| = " + std::to_string(n) + " exceeds bound " +
                         std::to_string(bound));
  }
  const std::size_t channels = channel_total(n);
  const std::uint64_t full = full_mask(n);
  struct Partial {
    std::vector<bool> orientation;
    std::vector<std::uint64_t> sides;
    std::vector<Rational> witness;
  };
  std::vector<Partial> partials{{{}, {}, std::vector<Rational>(n, 0)}};
  for (std::size_t idx = 0; idx < channels; ++idx) {
    const std::uint64_t side = idx + 1;
    std::vector<Partial> next;
    next.reserve(partials.size() * 2);
    for (auto& p : partials) {
      const int sign = sgn(evaluate(p.witness, side));
      for (bool orient : {true, false}) {
        const std::uint64_t positive = orient ? side : full ^ side;
        Partial child{p.orientation, p.sides, {}};
        child.orientation.push_back(orient);
        child.sides.push_back(positive);
        if (sign != 0 && (sign > 0) == orient) {
          child.witness = p.witness;
        } else {
          auto w = solve_sides(n, child.sides);
          if (!w) continue;
          child.witness = std::move(*w);
        }
        next.push_back(std::move(child));
      }
    }
    partials = std::move(next);
  }
  std::vector<Cell> out;
  out.reserve(partials.size());
  for (auto& p : partials) out.emplace_back(ground, std::move(p.orientation));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> enumerate_cells_brute_force(const LabelSet& ground) {
  const std::size_t channels = channel_total(ground.size());
  if (channels > 20) throw SizeLimitError("enumerate_cells_brute_force: too many channels");
  std::vector<Cell> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << channels); ++bits) {
    std::vector<bool> orientation(channels);
    for (std::size_t i = 0; i < channels; ++i) orientation[i] = bits >> i & 1u;
    Cell c(ground, std::move(orientation));
    if (is_cell(c)) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void dynkin_terms(const Cell& cell, std::uint64_t remaining, std::uint64_t tail,
                  std::vector<LabelSet>& reversed, SigmaElem& out) {
  if (remaining == 0) {
    const int sign = reversed.size() % 2 ? 1 : -1;
    out.add_term(Composition(std::vector<LabelSet>(reversed.rbegin(), reversed.rend())), sign);
    return;
  }
  for (std::uint64_t lump = remaining; lump; lump = (lump - 1) & remaining) {
    const std::uint64_t rest = remaining ^ lump;
    if (rest && !cell.contains_mask(tail | lump)) continue;
    reversed.push_back(subset_of_mask(cell.ground(), lump));
    dynkin_terms(cell, rest, tail | lump, reversed, out);
    reversed.pop_back();
  }
}

}  // namespace

SigmaElem dynkin(const Cell& cell) {
  if (cell.ground().empty()) throw DomainError("dynkin: empty ground set");
  SigmaElem out(cell.ground());
  std::vector<LabelSet> reversed;
  dynkin_terms(cell, full_mask(cell.ground().size()), 0, reversed, out);
  return out;
}

SigmaElem dynkin_tits_factorization(const Cell& cell) {
  const LabelSet& ground = cell.ground();
  SigmaElem out = tits_unit(ground);
  for (const auto& s : cell.positive_sides()) {
    SigmaElem factor = tits_unit(ground) - SigmaElem::H(Composition{ground - s, s});
    out = tits(out, factor);
  }
  return out;
}

std::vector<SteinmannQuadruple> steinmann_quadruples(const LabelSet& ground) {
  return steinmann_quadruples(enumerate_cells(ground));
}

namespace {

bool overlapping(const LabelSet& s, const LabelSet& t, const LabelSet& u) {
  return !(s & u).empty() && !(t & u).empty();
}

}  // namespace

std::vector<SteinmannQuadruple> steinmann_quadruples(const std::vector<Cell>& cells) {
  std::set<Cell> known(cells.begin(), cells.end());
  std::set<std::pair<std::pair<Cell, Cell>, std::pair<Cell, Cell>>> seen;
  std::vector<SteinmannQuadruple> out;
  for (const auto& c1 : cells) {
    const LabelSet& ground = c1.ground();
    const auto sides = c1.positive_sides();
    for (std::size_t a = 0; a < sides.size(); ++a) {
      for (std::size_t b = a + 1; b < sides.size(); ++b) {
        const LabelSet& s = sides[a];
        const LabelSet& u = sides[b];
        if (!overlapping(s, ground - s, u) && !overlapping(u, ground - u, s)) continue;
        Cell c2 = c1.flipped(s);
        Cell c4 = c1.flipped(u);
        Cell c3 = c2.flipped(u);
        if (!known.count(c2) || !known.count(c3) || !known.count(c4)) continue;
        auto diag1 = std::minmax(c1, c3);
        auto diag2 = std::minmax(c2, c4);
        std::pair<Cell, Cell> d1{diag1.first, diag1.second};
        std::pair<Cell, Cell> d2{diag2.first, diag2.second};
        if (d2 < d1) std::swap(d1, d2);
        if (!seen.emplace(d1, d2).second) continue;
        out.push_back({c1, std::move(c2), std::move(c3), std::move(c4), s, u});
      }
    }
  }
  return out;
}

SigmaElem steinmann_sum(const SteinmannQuadruple& q) {
  return dynkin(q.s1) - dynkin(q.s2) + dynkin(q.s3) - dynkin(q.s4);
}

bool steinmann_relation_holds(const SteinmannQuadruple& q) { return steinmann_sum(q).is_zero(); }

std::size_t steinmann_relation_rank(const std::vector<SteinmannQuadruple>& quads) {
  std::vector<LinComb<Cell>> vectors;
  vectors.reserve(quads.size());
  for (const auto& q : quads) {
    LinComb<Cell> v;
    v.add_term(q.s1, 1);
    v.add_term(q.s2, -1);
    v.add_term(q.s3, 1);
    v.add_term(q.s4, -1);
    vectors.push_back(std::move(v));
  }
  return rank(vectors);
}

bool ruelle_admissible(const Cell& cell1, const Cell& cell2, const Cell& bridge) {
  const LabelSet& s = cell1.ground();
  const LabelSet& t = cell2.ground();
  if (s.empty() || t.empty() || !s.disjoint_from(t) || bridge.ground() != (s | t)) return false;
  if (!bridge.contains(s)) return false;
  for (const auto& a : cell1.positive_sides()) {
    if (!bridge.contains(a) || !bridge.contains(a | t)) return false;
  }
  for (const auto& c : cell2.positive_sides()) {
    if (!bridge.contains(c) || !bridge.contains(c | s)) return false;
  }
  return is_cell(bridge).has_value() && is_cell(bridge.flipped(s)).has_value();
}

bool ruelle_check(const Cell& cell1, const Cell& cell2, const Cell& bridge) {
  if (!ruelle_admissible(cell1, cell2, bridge)) throw DomainError("ruelle_check: inadmissible bridge cell");
  const SigmaElem lhs = commutator(dynkin(cell1), dynkin(cell2));
  const SigmaElem rhs = dynkin(bridge) - dynkin(bridge.flipped(cell1.ground()));
  return lhs == rhs;
}

SigmaElem glz_defect(const LabelSet& ground, Label i1, Label i2) {
  if (!ground.contains(i1) || !ground.contains(i2)) throw DomainError("glz: labels must lie in I");
  if (i1 == i2) throw DomainError("glz: labels must differ");
  SigmaElem out = dynkin(Cell::total_retarded(ground, i1)) - dynkin(Cell::total_retarded(ground, i2));
  for (const auto& [s, t] : ordered_splits(ground)) {
    if (!s.contains(i1) || !t.contains(i2)) continue;
    out -= commutator(dynkin(Cell::total_retarded(s, i1)), dynkin(Cell::total_retarded(t, i2)));
  }
  return out;
}

bool glz_check(const LabelSet& ground, Label i1, Label i2) { return glz_defect(ground, i1, i2).is_zero(); }

DynkinRank dynkin_rank(const LabelSet& ground, std::size_t bound) {
  if (ground.size() > bound) {
    throw SizeLimitError("dynkin_rank: |I| = " + std::to_string(ground.size()) + " exceeds bound " +
                         std::to_string(bound));
  }
  DynkinRank out;
  const auto cells = enumerate_cells(ground);
  out.cells = cells.size();
  std::vector<LinComb<Composition>> images;
  images.reserve(cells.size());
  for (const auto& c : cells) images.push_back(dynkin(c).terms());
  out.rank = rank(images);
  out.zie_dim = zie_dimension(static_cast<int>(ground.size()));
  return out;
}

}  // namespace species
