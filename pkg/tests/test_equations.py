import pytest

from primeatlas.equations import (
    InvalidExponents,
    ZeroParameter,
    equilateral_equation,
    genus_of,
    hyperelliptic_equation,
    lefschetz_equation,
    rotation_multiplicity_check,
    square_equation,
)
from primeatlas.gimel import TilingFlavor, enumerate_classes
from primeatlas.modular import OutOfRange

PRIMES = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def test_lefschetz_equation_examples():
    klein = lefschetz_equation(7, 2)
    assert klein.text() == "y^7 = x(x-1)^2"
    assert klein.genus == 3
    small = lefschetz_equation(5, 1)
    assert small.text() == "y^5 = x(x-1)"
    assert small.genus == 2
    rot = {r.branch: r.rotation for r in lefschetz_equation(13, 3).rotation_data}
    assert rot == {"0": 1, "1": 9, "inf": 3}
    with pytest.raises(OutOfRange):
        lefschetz_equation(7, 6)


def test_hyperelliptic_examples():
    at_one = hyperelliptic_equation(5, 1)
    assert at_one.text() == "y^2 = x^10 - 1"
    assert at_one.genus == 4
    cubic = hyperelliptic_equation(3, 1)
    assert cubic.text() == "y^2 = x^6 - 1"
    assert cubic.genus == 2
    generic = hyperelliptic_equation(5, 2)
    assert generic.text() == "y^2 = (x^5-32)(x^5+1/32)"
    with pytest.raises(ZeroParameter):
        hyperelliptic_equation(5, 0)


def test_hyperelliptic_sign_symmetry():
    plus = hyperelliptic_equation(7, 1)
    minus = hyperelliptic_equation(7, -1)
    assert sorted(f.to_json()["root"]["name"] for f in plus.factors) == sorted(
        f.to_json()["root"]["name"] for f in minus.factors
    )
    assert set(plus.factors) == set(minus.factors)
    assert "(x,y) -> (-x, y)" in plus.generators
    assert "(x,y) -> (-x, y)" in minus.generators
    assert "(x,y) -> (-x, y)" not in hyperelliptic_equation(7, 2).generators


def test_equilateral_examples():
    a = equilateral_equation(7, 1, 1)
    assert a.text() == "y^7 = x^3 - 1"
    assert a.genus == 6
    c = equilateral_equation(7, 2, 6)
    assert c.text() == "y^7 = (x-1)(x-w)^2(x-w^2)^6"
    with pytest.raises(InvalidExponents):
        equilateral_equation(7, 3, 3)
    hyp = equilateral_equation(7, 6, 6)
    assert hyp.text() == "y^7 = (x-1)(x^2+x+1)^6"


def test_square_examples():
    bring = square_equation(5, 2, 4)
    assert bring.text() == "y^5 = (x-1)(x-i)^2(x+1)^3(x+i)^4"
    assert bring.genus == 4
    reduced = square_equation(13, 1, 1)
    mults = [f.mult for f in reduced.factors]
    assert mults == [1, 1, 10, 1]  # c = 2p-1-2 = 23 reduces to 10 mod 13
    assert sum(mults) % 13 == 0
    edge = square_equation(7, 6, 6)
    assert [f.mult for f in edge.factors] == [1, 6, 1, 6]
    with pytest.raises(InvalidExponents):
        square_equation(7, 2, 4)  # a + b = -1 mod 7 kills the exponent at -1


def test_square_section_templates():
    # the four named square templates
    k1 = square_equation(7, 1, 1)
    assert k1.text() == "y^7 = (x-1)(x^2+1)(x+1)^4"
    k3_big = square_equation(7, 6, 6)
    assert k3_big.text() == "y^7 = (x^2-1)(x^2+1)^6"
    k3_dihedral = square_equation(7, 6, 1)
    assert k3_dihedral.text() == "y^7 = (x-1)(x-i)^6(x+1)^6(x+i)"
    k5 = square_equation(13, 5, 8)
    assert k5.text() == "y^13 = (x-1)(x-i)^5(x+1)^12(x+i)^8"
    assert [f.mult for f in k5.factors] == [1, 5, 12, 8]  # c = p-1, b = p-a


def test_k2_diagonal_template():
    eq = square_equation(7, 4, 4)
    assert [f.mult for f in eq.factors] == [1, 4, 5, 4]  # c = 2p-1-2a mod p
    assert eq.text() == "y^7 = (x-1)(x^2+1)^4(x+1)^5"


def test_genus_of_examples():
    assert genus_of(lefschetz_equation(7, 2)) == 3
    assert genus_of(square_equation(5, 2, 4)) == 4
    assert genus_of(equilateral_equation(13, 1, 1)) == 12


def test_rotation_check():
    assert rotation_multiplicity_check(1, 1, 7)
    assert rotation_multiplicity_check(4, 2, 7)
    assert not rotation_multiplicity_check(2, 2, 7)


@pytest.mark.parametrize("p", PRIMES)
def test_genus_sweep(p):
    for k in range(1, p - 1):
        eq = lefschetz_equation(p, k)
        assert genus_of(eq) == eq.genus == (p - 1) // 2
        assert eq.multiplicity_sum() % p != 0
        for r in eq.rotation_data:
            assert rotation_multiplicity_check(r.rotation, r.multiplicity, p)
    for cls in enumerate_classes(p, TilingFlavor.EQUILATERAL):
        n, m = cls.representative
        eq = equilateral_equation(p, n, m)
        assert genus_of(eq) == p - 1
        assert eq.multiplicity_sum() % p != 0
        for r in eq.rotation_data:
            assert rotation_multiplicity_check(r.rotation, r.multiplicity, p)
    for cls in enumerate_classes(p, TilingFlavor.SQUARE):
        a, b = cls.representative
        eq = square_equation(p, a, b)
        assert genus_of(eq) == p - 1
        assert eq.multiplicity_sum() % p == 0
        for r in eq.rotation_data:
            assert rotation_multiplicity_check(r.rotation, r.multiplicity, p)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_hyperelliptic_genus(p):
    for a in (1, -1, 2, 1 + 1j):
        eq = hyperelliptic_equation(p, a)
        assert genus_of(eq) == eq.genus == p - 1


def test_json_roundtrip():
    import json

    eq = square_equation(5, 2, 4)
    payload = eq.to_json()
    assert json.loads(json.dumps(payload)) == payload
    assert payload["factors"][1] == {"root": {"tag": "i"}, "mult": 2}
