import pytest
from hypothesis import given, settings, strategies as st

from primeatlas.fixtures import LAMBDA_TABLES, SLOT_ORDER
from primeatlas.gimel import (
    GluingPair,
    KappaCase,
    NotInSigma,
    TilingFlavor,
    class_counts_closed_form,
    domain_assignment,
    enumerate_classes,
    equilateral_key,
    generic_key,
    kappa_case,
    lambda_class,
    sigma_contains,
    sigma_pairs,
    sigma_size,
)
from primeatlas.modular import UnsupportedPrime, inverse_table

PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


def test_sigma_contains():
    assert sigma_contains(13, 2, 11)
    assert not sigma_contains(13, 2, 10)
    assert not sigma_contains(13, 0, 4)
    assert not sigma_contains(13, 5, 13)


@pytest.mark.parametrize("p", PRIMES)
def test_sigma_size(p):
    assert len(list(sigma_pairs(p))) == sigma_size(p) == p * p - 3 * p + 3


def test_domain_assignment_fixture_columns():
    # appendix-style spot checks; the exhaustive sweep is in test_oracle
    expectations = {
        (11, 2, 3): {
            "AD": (2, 3, 1), "AB": (3, 5, 3), "AC": (5, 2, 2),
            "BD": (7, 6, 2), "BC": (6, 8, 1), "BA": (8, 7, 3),
            "CD": (4, 8, 3), "CA": (8, 9, 2), "CB": (9, 4, 1),
            "DA": (5, 7, 1), "DC": (7, 9, 3), "DB": (9, 5, 2),
        },
        (5, 1, 1): {
            "AD": (1, 1, 1), "AB": (1, 2, 3), "AC": (2, 1, 2),
            "BD": (1, 1, 2), "BC": (1, 2, 1), "BA": (2, 1, 3),
            "CD": (1, 1, 3), "CA": (1, 2, 2), "CB": (2, 1, 1),
            "DA": (3, 3, 1), "DC": (3, 3, 3), "DB": (3, 3, 2),
        },
    }
    for (p, i, j), slots in expectations.items():
        assignment = domain_assignment(p, (i, j))
        for label, (a, b, angle) in slots.items():
            sp = assignment.slots[label]
            assert (sp.i, sp.j, sp.angle) == (a, b, angle)


def test_domain_assignment_angle1_repeats():
    a = domain_assignment(13, (2, 11))
    for label in ("AD", "DA"):
        assert a.slots[label].pair() == (2, 11)
    for label in ("BC", "CB"):
        assert a.slots[label].pair() == (7, 6)


def test_domain_assignment_rejects():
    with pytest.raises(NotInSigma):
        domain_assignment(13, (2, 10))


def test_gluing_pair_metadata():
    pair = GluingPair(11, 2, 3)
    assert pair.k == 5
    assert pair.generator_words() == ("x^2 y^-1", "x^3 z^-1")
    with pytest.raises(NotInSigma):
        GluingPair(11, 0, 3)


def test_lambda_class_examples():
    eq5 = lambda_class(5, (1, 4), TilingFlavor.EQUILATERAL)
    assert set(eq5.members) == {(1, 4), (4, 4), (4, 1)}
    eq7 = lambda_class(7, (1, 1), TilingFlavor.EQUILATERAL)
    assert set(eq7.members) == {(1, 1), (1, 4), (4, 1), (2, 2)}
    gen13 = lambda_class(13, (2, 3), TilingFlavor.GENERIC)
    assert len(gen13.members) == 12  # twelve distinct subindexed pairs


def test_kappa_examples():
    assert kappa_case(13, (5, 8)) is KappaCase.K5
    assert kappa_case(13, (2, 11)) is KappaCase.K4
    assert kappa_case(11, (2, 3)) is KappaCase.K6
    assert kappa_case(7, (1, 6)) is KappaCase.K3
    assert kappa_case(13, (1, 1)) is KappaCase.K1
    assert kappa_case(13, (1, 2)) is KappaCase.K2


def test_kappa_p3():
    assert kappa_case(3, (2, 2)) is KappaCase.K3
    with pytest.raises(UnsupportedPrime):
        kappa_case(3, (2, 2), strict=True)


@pytest.mark.parametrize("p", sorted(LAMBDA_TABLES))
def test_kappa_matches_tables(p):
    for column in LAMBDA_TABLES[p]:
        assert kappa_case(p, (column.i, column.j)).value == column.kappa


def test_enumerate_counts_small():
    assert len(enumerate_classes(5, TilingFlavor.EQUILATERAL)) == 3
    assert len(enumerate_classes(13, TilingFlavor.EQUILATERAL)) == 15
    assert len(enumerate_classes(5, TilingFlavor.GENERIC)) == 7
    assert len(enumerate_classes(5, TilingFlavor.SQUARE)) == 5
    assert len(enumerate_classes(3, TilingFlavor.EQUILATERAL)) == 1
    assert len(enumerate_classes(3, TilingFlavor.GENERIC)) == 3
    with pytest.raises(UnsupportedPrime):
        enumerate_classes(2, TilingFlavor.GENERIC)


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("flavor", list(TilingFlavor))
def test_enumerate_matches_closed_form(p, flavor):
    assert len(enumerate_classes(p, flavor)) == class_counts_closed_form(p)[flavor.value]


@pytest.mark.parametrize("p", PRIMES)
def test_class_partitions(p):
    for flavor in (TilingFlavor.GENERIC, TilingFlavor.EQUILATERAL, TilingFlavor.SQUARE):
        covered: set = set()
        for cls in enumerate_classes(p, flavor):
            assert not (covered & set(cls.key))
            covered |= set(cls.key)
        assert covered == set(sigma_pairs(p))


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 29])
def test_equilateral_size_census(p):
    # exactly one class of size 4 (that of (1,1)), one of size 3 (that of
    # (1,p-1)); classes of (i,p-1) with i != +-1 have size 6; the rest 12
    sizes = {}
    for cls in enumerate_classes(p, TilingFlavor.EQUILATERAL):
        sizes.setdefault(len(cls.members), []).append(cls)
    assert len(sizes[4]) == 1 and (1, 1) in sizes[4][0].members
    assert len(sizes[3]) == 1 and (1, p - 1) in sizes[3][0].members
    for cls in sizes.get(6, []):
        assert any(b == p - 1 for _, b in cls.members)
    expected_six = (p - 3) // 2  # pairs {i, i^-1} with i != +-1
    assert len(sizes.get(6, [])) == expected_six
    total = sum(len(group) for group in sizes.values())
    assert total == (p * p + 11) // 12


def test_twelve_image_set_is_closed():
    # the twelve-slot image of any member reproduces the same plain-pair set
    for p in (5, 7, 11, 13, 19):
        for cls in enumerate_classes(p, TilingFlavor.EQUILATERAL):
            for member in cls.members:
                assert equilateral_key(p, member) == cls.key


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([5, 7, 11, 13, 17, 19, 23]), st.data())
def test_representative_independence(p, data):
    pair = data.draw(st.sampled_from(sorted(sigma_pairs(p))))
    key = generic_key(p, pair)
    for other in key:
        assert generic_key(p, other) == key
    cls = lambda_class(p, pair, TilingFlavor.SQUARE)
    for other in cls.key:
        assert lambda_class(p, other, TilingFlavor.SQUARE).key == cls.key


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47])
def test_kappa_matches_literal_generator_lists(p):
    """The pattern detection agrees with the literal case-family lists, read
    at family level (a named class tags all three angle-permuted siblings):
    k1 = family of (1,1); k2 = families of (1,i), (i,1) for 2 <= i <= p-4
    and (i,i) for 2 <= i <= p-2, i != (p-3)^-1; k3 = family of (-1,-1);
    k5 = families of (-1,a) with a^2 = -1; k4 = families of (-1,i) with
    i^2 + 1 nonzero; k6 = the rest.  The generator lists must not collide,
    i.e. the exclusions in the k2/k4 ranges are exactly right."""
    inv = inverse_table(p)
    literal: dict[tuple, str] = {}

    def mark(i, j, label):
        if not sigma_contains(p, i, j):
            return
        family = equilateral_key(p, (i, j))
        prev = literal.get(family)
        assert prev is None or prev == label, (
            f"generator collision at family {family[0]}: {prev} vs {label}"
        )
        literal[family] = label

    mark(1, 1, "k1")
    mark(p - 1, p - 1, "k3")
    if p % 4 == 1:
        for a in range(1, p):
            if (a * a + 1) % p == 0:
                mark(p - 1, a, "k5")
    for i in range(2, p - 3):
        mark(1, i, "k2")
        mark(i, 1, "k2")
    excluded = inv[(p - 3) % p]
    for i in range(2, p - 1):
        if i != excluded:
            mark(i, i, "k2")
    for i in range(2, p - 1):
        if (i * i + 1) % p != 0:
            mark(p - 1, i, "k4")

    for cls in enumerate_classes(p, TilingFlavor.GENERIC):
        family = equilateral_key(p, cls.representative)
        expected = literal.get(family, "k6")
        assert cls.kappa.value == expected, (p, cls.key, expected, cls.kappa)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_sibling_classes_distinct_outside_k1(p):
    # the three generic classes sharing an equilateral class coincide only
    # in the k1 family
    by_eq: dict = {}
    for cls in enumerate_classes(p, TilingFlavor.GENERIC):
        by_eq.setdefault(equilateral_key(p, cls.representative), set()).add(cls.key)
    for eq_key, generics in by_eq.items():
        kappa = kappa_case(p, eq_key[0])
        assert len(generics) == (1 if kappa is KappaCase.K1 else 3)
