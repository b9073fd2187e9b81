"""Hand-checked golden tables for small primes.

These are independent transcriptions of the published classification tables
for the families handled by this package: the six-value invariant sets for
p in {5, 7, 11, 13, 17, 19} and the twelve-slot domain tables (with their
kappa labels) for p in {3, 5, 7, 11, 13}.  The test suite and the `verify`
command compare computed output cell-for-cell against this data.
"""

from __future__ import annotations

from typing import NamedTuple

# Six-value invariant sets, keyed by prime then by the smallest member.
OMEGA_TABLES: dict[int, dict[int, frozenset[int]]] = {
    5: {1: frozenset({1, 2, 3})},
    7: {1: frozenset({1, 3, 5}), 2: frozenset({2, 4})},
    11: {1: frozenset({1, 5, 9}), 2: frozenset({2, 3, 4, 6, 7, 8})},
    13: {
        1: frozenset({1, 6, 11}),
        2: frozenset({2, 10, 5, 7, 8, 4}),
        3: frozenset({3, 9}),
    },
    17: {
        1: frozenset({1, 8, 15}),
        2: frozenset({2, 5, 7, 9, 11, 14}),
        3: frozenset({3, 4, 6, 10, 12, 13}),
    },
    19: {
        1: frozenset({1, 9, 17}),
        2: frozenset({2, 6, 8, 10, 12, 16}),
        3: frozenset({3, 4, 5, 13, 14, 15}),
        7: frozenset({7, 11}),
    },
}

# Fixed row order of the twelve special-domain slots in every table.
SLOT_ORDER = ("AD", "AB", "AC", "BD", "BC", "BA", "CD", "CA", "CB", "DA", "DC", "DB")
SLOT_ANGLES = (1, 3, 2, 2, 1, 3, 3, 2, 1, 1, 3, 2)


class LambdaColumn(NamedTuple):
    i: int
    j: int
    kappa: str  # "k1" .. "k6"
    cells: tuple[tuple[int, int], ...]  # twelve (a, b) pairs in SLOT_ORDER


LAMBDA_TABLES: dict[int, tuple[LambdaColumn, ...]] = {
    3: (
        LambdaColumn(2, 2, "k3", (
            (2, 2), (2, 1), (1, 2),
            (1, 2), (2, 2), (2, 1),
            (2, 1), (1, 2), (2, 2),
            (2, 2), (2, 1), (1, 2),
        )),
    ),
    5: (
        LambdaColumn(1, 1, "k1", (
            (1, 1), (1, 2), (2, 1),
            (1, 1), (1, 2), (2, 1),
            (1, 1), (1, 2), (2, 1),
            (3, 3), (3, 3), (3, 3),
        )),
        LambdaColumn(1, 4, "k3", (
            (1, 4), (4, 4), (4, 1),
            (4, 1), (1, 4), (4, 4),
            (4, 4), (4, 1), (1, 4),
            (1, 4), (4, 4), (4, 1),
        )),
        LambdaColumn(2, 3, "k5", (
            (2, 3), (3, 4), (4, 2),
            (4, 3), (3, 2), (2, 4),
            (2, 4), (4, 3), (3, 2),
            (2, 3), (3, 4), (4, 2),
        )),
    ),
    7: (
        LambdaColumn(1, 1, "k1", (
            (1, 1), (1, 4), (4, 1),
            (1, 1), (1, 4), (4, 1),
            (1, 1), (1, 4), (4, 1),
            (2, 2), (2, 2), (2, 2),
        )),
        LambdaColumn(1, 2, "k2", (
            (1, 2), (2, 3), (3, 1),
            (2, 1), (1, 3), (3, 2),
            (4, 4), (4, 5), (5, 4),
            (3, 5), (5, 5), (5, 3),
        )),
        LambdaColumn(1, 6, "k3", (
            (1, 6), (6, 6), (6, 1),
            (6, 1), (1, 6), (6, 6),
            (6, 6), (6, 1), (1, 6),
            (1, 6), (6, 6), (6, 1),
        )),
        LambdaColumn(2, 5, "k4", (
            (2, 5), (5, 6), (6, 2),
            (6, 4), (4, 3), (3, 6),
            (3, 6), (6, 4), (4, 3),
            (2, 5), (5, 6), (6, 2),
        )),
        LambdaColumn(3, 4, "k4", (
            (3, 4), (4, 6), (6, 3),
            (6, 5), (5, 2), (2, 6),
            (2, 6), (6, 5), (5, 2),
            (3, 4), (4, 6), (6, 3),
        )),
    ),
    11: (
        LambdaColumn(1, 1, "k1", (
            (1, 1), (1, 8), (8, 1),
            (1, 1), (1, 8), (8, 1),
            (1, 1), (1, 8), (8, 1),
            (7, 7), (7, 7), (7, 7),
        )),
        LambdaColumn(1, 2, "k2", (
            (1, 2), (2, 7), (7, 1),
            (2, 1), (1, 7), (7, 2),
            (6, 6), (6, 9), (9, 6),
            (5, 8), (8, 8), (8, 5),
        )),
        LambdaColumn(1, 3, "k2", (
            (1, 3), (3, 6), (6, 1),
            (3, 1), (1, 6), (6, 3),
            (4, 4), (4, 2), (2, 4),
            (6, 2), (2, 2), (2, 6),
        )),
        LambdaColumn(1, 4, "k2", (
            (1, 4), (4, 5), (5, 1),
            (4, 1), (1, 5), (5, 4),
            (3, 3), (3, 4), (4, 3),
            (3, 9), (9, 9), (9, 3),
        )),
        # The four angle-2 cells of this column circulate misprinted as
        # (10, 10); the twelve-slot formulas give (10, 1), consistent with
        # the analogous columns at p = 7 and p = 13.
        LambdaColumn(1, 10, "k3", (
            (1, 10), (10, 10), (10, 1),
            (10, 1), (1, 10), (10, 10),
            (10, 10), (10, 1), (1, 10),
            (1, 10), (10, 10), (10, 1),
        )),
        LambdaColumn(2, 3, "k6", (
            (2, 3), (3, 5), (5, 2),
            (7, 6), (6, 8), (8, 7),
            (4, 8), (8, 9), (9, 4),
            (5, 7), (7, 9), (9, 5),
        )),
        LambdaColumn(2, 5, "k6", (
            (2, 5), (5, 3), (3, 2),
            (8, 6), (6, 7), (7, 8),
            (9, 7), (7, 5), (5, 9),
            (9, 8), (8, 4), (4, 9),
        )),
        LambdaColumn(2, 10, "k4", (
            (2, 10), (10, 9), (9, 2),
            (5, 6), (6, 10), (10, 5),
            (10, 9), (9, 2), (2, 10),
            (6, 10), (10, 5), (5, 6),
        )),
        LambdaColumn(8, 10, "k4", (
            (8, 10), (10, 3), (3, 8),
            (4, 7), (7, 10), (10, 4),
            (10, 3), (3, 8), (8, 10),
            (7, 10), (10, 4), (4, 7),
        )),
        LambdaColumn(3, 10, "k4", (
            (3, 10), (10, 8), (8, 3),
            (7, 4), (4, 10), (10, 7),
            (10, 8), (8, 3), (3, 10),
            (4, 10), (10, 7), (7, 4),
        )),
        LambdaColumn(5, 10, "k4", (
            (5, 10), (10, 6), (6, 5),
            (2, 9), (9, 10), (10, 2),
            (10, 6), (6, 5), (5, 10),
            (9, 10), (10, 2), (2, 9),
        )),
    ),
    13: (
        LambdaColumn(1, 1, "k1", (
            (1, 1), (1, 10), (10, 1),
            (1, 1), (1, 10), (10, 1),
            (1, 1), (1, 10), (10, 1),
            (4, 4), (4, 4), (4, 4),
        )),
        LambdaColumn(1, 2, "k2", (
            (1, 2), (2, 9), (9, 1),
            (2, 1), (1, 9), (9, 2),
            (7, 7), (7, 11), (11, 7),
            (6, 3), (3, 3), (3, 6),
        )),
        LambdaColumn(1, 3, "k2", (
            (1, 3), (3, 8), (8, 1),
            (3, 1), (1, 8), (8, 3),
            (9, 9), (9, 7), (7, 9),
            (2, 5), (5, 5), (5, 2),
        )),
        LambdaColumn(1, 4, "k2", (
            (1, 4), (4, 7), (7, 1),
            (4, 1), (1, 7), (7, 4),
            (10, 10), (10, 5), (5, 10),
            (8, 2), (2, 2), (2, 8),
        )),
        LambdaColumn(1, 5, "k2", (
            (1, 5), (5, 6), (6, 1),
            (5, 1), (1, 6), (6, 5),
            (8, 8), (8, 9), (9, 8),
            (3, 11), (11, 11), (11, 3),
        )),
        LambdaColumn(1, 12, "k3", (
            (1, 12), (12, 12), (12, 1),
            (12, 1), (1, 12), (12, 12),
            (12, 12), (12, 1), (1, 12),
            (1, 12), (12, 12), (12, 1),
        )),
        LambdaColumn(2, 3, "k6", (
            (2, 3), (3, 7), (7, 2),
            (8, 7), (7, 10), (10, 8),
            (9, 5), (5, 11), (11, 9),
            (6, 4), (4, 2), (2, 6),
        )),
        LambdaColumn(2, 4, "k6", (
            (2, 4), (4, 6), (6, 2),
            (2, 7), (7, 3), (3, 2),
            (10, 7), (7, 8), (8, 10),
            (5, 9), (9, 11), (11, 5),
        )),
        LambdaColumn(2, 11, "k4", (
            (2, 11), (11, 12), (12, 2),
            (12, 7), (7, 6), (6, 12),
            (6, 12), (12, 7), (7, 6),
            (2, 11), (11, 12), (12, 2),
        )),
        LambdaColumn(2, 12, "k4", (
            (2, 12), (12, 11), (11, 2),
            (6, 7), (7, 12), (12, 6),
            (12, 11), (11, 2), (2, 12),
            (7, 12), (12, 6), (6, 7),
        )),
        LambdaColumn(3, 4, "k6", (
            (3, 4), (4, 5), (5, 3),
            (10, 9), (9, 6), (6, 10),
            (10, 4), (4, 11), (11, 10),
            (6, 11), (11, 8), (8, 6),
        )),
        LambdaColumn(3, 5, "k6", (
            (3, 5), (5, 4), (4, 3),
            (6, 9), (9, 10), (10, 6),
            (8, 11), (11, 6), (6, 8),
            (11, 4), (4, 10), (10, 11),
        )),
        LambdaColumn(3, 10, "k4", (
            (3, 10), (10, 12), (12, 3),
            (12, 9), (9, 4), (4, 12),
            (4, 12), (12, 9), (9, 4),
            (3, 10), (10, 12), (12, 3),
        )),
        LambdaColumn(3, 12, "k4", (
            (3, 12), (12, 10), (10, 3),
            (4, 9), (9, 12), (12, 4),
            (12, 10), (10, 3), (3, 12),
            (9, 12), (12, 4), (4, 9),
        )),
        LambdaColumn(5, 8, "k5", (
            (5, 8), (8, 12), (12, 5),
            (12, 8), (8, 5), (5, 12),
            (5, 12), (12, 8), (8, 5),
            (5, 8), (8, 12), (12, 5),
        )),
    ),
}

FIXTURE_OMEGA_PRIMES = tuple(sorted(OMEGA_TABLES))
FIXTURE_LAMBDA_PRIMES = tuple(sorted(LAMBDA_TABLES))
