#include "species/tits.hpp"

#include "species/errors.hpp"

namespace species {

Composition tits(const Composition& f, const Composition& g) {
  if (f.ground() != g.ground()) throw DomainError("tits: ground mismatch");
  std::vector<LabelSet> lumps;
  for (const auto& s : f) {
    for (const auto& t : g) {
      LabelSet piece = s & t;
      if (!piece.empty()) lumps.push_back(std::move(piece));
    }
  }
  return Composition(std::move(lumps));
}

SigmaElem tits(const SigmaElem& a, const SigmaElem& b) {
  if (a.ground() != b.ground()) throw DomainError("tits: ground mismatch");
  const SigmaElem x = to_h(a);
  const SigmaElem y = to_h(b);
  SigmaElem out(a.ground());
  for (const auto& [f, cf] : x) {
    for (const auto& [g, cg] : y) out.add_term(tits(f, g), cf * cg);
  }
  return out;
}

SigmaElem tits_unit(const LabelSet& ground) {
  if (ground.empty()) return SigmaElem::unit();
  return SigmaElem::H(Composition{ground});
}

}  // namespace species
