#pragma once

#include "species/sigma.hpp"
#include "species/zie.hpp"

namespace species {

/// The up biderivation with u(H_(I)) = -a H_(*,I) + (a+b) H_(*I) - b H_(I,*).
SigmaElem u_ab(const Scalar& a, const Scalar& b, Label star, const SigmaElem& x);

/// Retarded arrow: u_{1,0} applied once for each label of Y, in increasing order.
SigmaElem arrow_down(const LabelSet& y, const SigmaElem& x);
/// Advanced arrow: u_{0,1} likewise.
SigmaElem arrow_up(const LabelSet& y, const SigmaElem& x);

/// R_(Y;I) = sum over Y1 u Y2 = Y of antipode(H_(Y1)) H_(Y2 u I).
SigmaElem retarded_element(const LabelSet& y, const LabelSet& i);
/// A_(Y;I) = sum over Y1 u Y2 = Y of H_(Y2 u I) antipode(H_(Y1)).
SigmaElem advanced_element(const LabelSet& y, const LabelSet& i);

/// {(Y1 u S, Y2 u T) : (S,T) in c, or S = I}.
Cell arrow_cell_down(const LabelSet& y, const Cell& c);
/// {(Y1 u S, Y2 u T) : (S,T) in c, or T = I}.
Cell arrow_cell_up(const LabelSet& y, const Cell& c);

}  // namespace species
