"""Exact computations in the Hopf monoid of set compositions.

Elements of Sigma are ``SigmaElem`` values in the H- or Q-basis. Compositions
are tuples of tuples of labels, coefficients are ``Fraction`` (or a pair
``(re, im)`` when not real). The ``*_verify``/``*_check`` functions return the
same JSON reports as the ``species-hopf`` command line tool.
"""

from ._core import (
    Cell,
    SigmaElem,
    advanced_element,
    antipode,
    arrow_down,
    arrow_up,
    arrows_verify,
    causal_suite,
    cells,
    cells_count,
    commutator,
    counit,
    delta,
    dynkin,
    dynkin_rank,
    glz_check,
    glz_verify,
    hopf_check,
    is_primitive,
    lie_verify,
    mu,
    primitive_basis,
    retarded_element,
    ruelle_verify,
    series_identities,
    steinmann_verify,
    takeuchi_antipode,
    tits,
    to_h,
    to_q,
    toy_bogoliubov,
    toy_demo,
    zie_dimension,
)

__all__ = [name for name in dir() if not name.startswith("_")]
