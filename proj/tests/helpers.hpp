#pragma once

#include <vector>

#include "species/labels.hpp"
#include "species/sigma.hpp"

namespace testing {

using species::Composition;
using species::LabelSet;

// "12,3" -> (12,3); labels are single digits, '*' prefixes a negated digit.
inline Composition comp(const std::string& text) {
  std::vector<LabelSet> lumps;
  std::vector<int> current;
  bool star = false;
  for (char c : text) {
    if (c == ',') {
      lumps.emplace_back(current);
      current.clear();
    } else if (c == '*') {
      star = true;
    } else {
      current.push_back(star ? -(c - '0') : c - '0');
      star = false;
    }
  }
  if (!current.empty()) lumps.emplace_back(current);
  return Composition(lumps);
}

inline species::SigmaElem H(const std::string& text, const species::Scalar& c = 1) {
  return species::SigmaElem::H(comp(text), c);
}

inline species::SigmaElem Q(const std::string& text, const species::Scalar& c = 1) {
  return species::SigmaElem::Q(comp(text), c);
}

// Compositions of [n] from surjections [n] -> [k]: an enumeration that does
// not share code with compositions_of.
inline std::vector<Composition> compositions_by_surjection(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition()};
  for (int k = 1; k <= n; ++k) {
    std::vector<int> assign(n, 0);
    for (;;) {
      std::vector<std::vector<int>> blocks(k);
      for (int i = 0; i < n; ++i) blocks[assign[i]].push_back(i + 1);
      bool surjective = true;
      for (const auto& b : blocks) surjective = surjective && !b.empty();
      if (surjective) {
        std::vector<LabelSet> lumps;
        for (const auto& b : blocks) lumps.emplace_back(b);
        out.emplace_back(lumps);
      }
      int i = 0;
      while (i < n && ++assign[i] == k) assign[i++] = 0;
      if (i == n) break;
    }
  }
  return out;
}

inline std::vector<species::SigmaElem> h_basis(int n) {
  std::vector<species::SigmaElem> out;
  for (const auto& f : species::compositions_of(LabelSet::range(n))) out.push_back(species::SigmaElem::H(f));
  return out;
}

}  // namespace testing
