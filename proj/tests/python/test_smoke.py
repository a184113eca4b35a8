from fractions import Fraction

import pytest

import species_hopf as sh
from species_hopf import SigmaElem


def H(*lumps, coeff=1):
    return SigmaElem.H(lumps, coeff)


def test_product_and_coproduct():
    x = sh.mu(H((1,)), H((2,)))
    assert x == H((1,), (2,))
    assert x.ground == (1, 2)
    pieces = sh.delta([1], [2], H((1, 2)))
    assert len(pieces) == 1
    left, right = pieces[0]
    assert left == H((1,)) and right == H((2,))


def test_antipode_examples():
    assert sh.antipode(H((1, 2))) == H((1,), (2,)) + H((2,), (1,)) - H((1, 2))
    assert sh.antipode(H((1,), (2,))) == H((2,), (1,))
    for f in [((1,), (2,), (3,)), ((1, 3), (2,)), ((2,), (1, 3))]:
        assert sh.antipode(H(*f)) == sh.takeuchi_antipode(H(*f))


def test_coefficients_are_exact():
    x = H((1,), (2,), coeff=Fraction(2, 3)) + H((2,), (1,), coeff="-1/2")
    assert x.coeff(((1,), (2,))) == Fraction(2, 3)
    assert x.terms()[((2,), (1,))] == Fraction(-1, 2)
    z = H((1,), coeff=(0, 1))
    assert z.coeff(((1,),)) == (Fraction(0), Fraction(1))
    assert SigmaElem.from_dict(x.to_dict()) == x


def test_basis_change_and_primitives():
    q = SigmaElem.Q([[1, 2, 3]])
    assert sh.is_primitive(q)
    assert sh.to_q(sh.to_h(q)) == q
    assert [len(sh.primitive_basis(n)) for n in range(1, 5)] == [1, 2, 6, 26]
    assert [sh.zie_dimension(n) for n in range(1, 6)] == [1, 2, 6, 26, 150]


def test_cells_and_dynkin():
    assert [len(sh.cells(n)) for n in range(1, 5)] == [1, 2, 6, 32]
    for c in sh.cells(3):
        w = c.witness()
        assert sum(w) == 0
        assert sh.is_primitive(sh.dynkin(c))
    report = sh.dynkin_rank(4)
    assert (report["cells"], report["rank"], report["zieDim"]) == (32, 26, 26)
    assert report["status"] == "pass"


def test_arrows():
    x = H((1,), (2,))
    assert sh.arrow_up([-1], x) - sh.arrow_down([-1], x) == sh.commutator(H((-1,)), x)
    assert sh.retarded_element([-1], [1]).ground == (-1, 1)


def test_reports():
    assert sh.cells_count(4)["count"] == 32
    for fn in (sh.hopf_check, sh.steinmann_verify, sh.ruelle_verify, sh.glz_verify, sh.lie_verify):
        assert fn(3)["status"] == "pass"
    assert sh.steinmann_verify(4)["rank"] == 6
    assert sh.series_identities(3)["status"] == "pass"


def test_toy_model():
    model = {
        "observables": [{"id": "a", "time": "0"}, {"id": "s", "time": "1"}],
        "interaction": "s",
    }
    assert sh.toy_demo(model, 2)["status"] == "pass"
    assert sh.toy_bogoliubov(model, 2)["status"] == "pass"
    with pytest.raises(ValueError):
        sh.toy_bogoliubov({"observables": [{"id": "a", "time": "0"}]}, 2)


def test_errors():
    with pytest.raises(ValueError):
        sh.mu(H((1,)), H((1,)))
    with pytest.raises(ValueError):
        SigmaElem.H([[1]], 0.5)
