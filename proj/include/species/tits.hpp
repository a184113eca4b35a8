#pragma once

#include "species/sigma.hpp"

namespace species {

/// H_F |> H_G = H_{(T_1 n S_1, ..., T_l n S_1, ..., T_l n S_k)_+}, extended bilinearly.
SigmaElem tits(const SigmaElem& a, const SigmaElem& b);

/// Tits product of two compositions of the same ground.
Composition tits(const Composition& f, const Composition& g);

/// The Tits unit H_(I).
SigmaElem tits_unit(const LabelSet& ground);

}  // namespace species
