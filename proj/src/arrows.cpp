#include "species/arrows.hpp"

#include "species/errors.hpp"

namespace species {

SigmaElem u_ab(const Scalar& a, const Scalar& b, Label star, const SigmaElem& x) {
  if (x.ground().contains(star)) throw DomainError("u_ab: label " + std::to_string(star) + " already in ground");
  const LabelSet s{star};
  const SigmaElem h = to_h(x);
  SigmaElem out(h.ground() | s);
  const Scalar ab = a + b;
  for (const auto& [f, c] : h) {
    const auto& lumps = f.lumps();
    for (std::size_t m = 0; m < lumps.size(); ++m) {
      std::vector<LabelSet> before(lumps.begin(), lumps.begin() + m);
      std::vector<LabelSet> after(lumps.begin() + m + 1, lumps.end());
      auto build = [&](std::vector<LabelSet> middle) {
        std::vector<LabelSet> all = before;
        all.insert(all.end(), middle.begin(), middle.end());
        all.insert(all.end(), after.begin(), after.end());
        return Composition(std::move(all));
      };
      out.add_term(build({s, lumps[m]}), -a * c);
      out.add_term(build({lumps[m] | s}), ab * c);
      out.add_term(build({lumps[m], s}), -b * c);
    }
  }
  return out;
}

namespace {

void require_disjoint(const LabelSet& y, const LabelSet& ground, const char* what) {
  if (!y.disjoint_from(ground)) throw DomainError(std::string(what) + ": Y overlaps the ground set");
}

}  // namespace

SigmaElem arrow_down(const LabelSet& y, const SigmaElem& x) {
  require_disjoint(y, x.ground(), "arrow_down");
  SigmaElem out = x;
  for (Label l : y) out = u_ab(1, 0, l, out);
  return out;
}

SigmaElem arrow_up(const LabelSet& y, const SigmaElem& x) {
  require_disjoint(y, x.ground(), "arrow_up");
  SigmaElem out = x;
  for (Label l : y) out = u_ab(0, 1, l, out);
  return out;
}

namespace {

SigmaElem one_lump(const LabelSet& s) {
  return s.empty() ? SigmaElem::unit() : SigmaElem::H(Composition{s});
}

SigmaElem retarded_or_advanced(const LabelSet& y, const LabelSet& i, bool retarded) {
  if (i.empty()) throw DomainError("retarded/advanced element: I must be nonempty");
  require_disjoint(y, i, "retarded/advanced element");
  SigmaElem out(y | i);
  for (const auto& [y1, y2] : ordered_splits(y)) {
    const SigmaElem bar = antipode(one_lump(y1));
    const SigmaElem rest = one_lump(y2 | i);
    out += retarded ? mu(bar, rest) : mu(rest, bar);
  }
  return out;
}

Cell arrow_cell(const LabelSet& y, const Cell& c, bool down) {
  require_disjoint(y, c.ground(), "arrow_cell");
  if (c.ground().empty()) throw DomainError("arrow_cell: empty ground set");
  const LabelSet& ground = c.ground();
  const LabelSet all = y | ground;
  std::vector<LabelSet> positive;
  for (const auto& x : subsets_of(all)) {
    if (x.empty() || x == all) continue;
    const LabelSet s = x & ground;
    const LabelSet t = ground - s;
    bool x_positive;
    if (!s.empty() && !t.empty()) {
      x_positive = c.contains(s);
    } else if (t.empty()) {
      x_positive = down;  // S = I
    } else {
      x_positive = !down;  // T = I
    }
    if (x_positive) positive.push_back(x);
  }
  Cell out = Cell::from_positive(all, positive);
  if (!is_cell(out)) throw InvariantError("arrow_cell: image is not a cell");
  return out;
}

}  // namespace

SigmaElem retarded_element(const LabelSet& y, const LabelSet& i) { return retarded_or_advanced(y, i, true); }

SigmaElem advanced_element(const LabelSet& y, const LabelSet& i) { return retarded_or_advanced(y, i, false); }

Cell arrow_cell_down(const LabelSet& y, const Cell& c) { return arrow_cell(y, c, true); }

Cell arrow_cell_up(const LabelSet& y, const Cell& c) { return arrow_cell(y, c, false); }

}  // namespace species
