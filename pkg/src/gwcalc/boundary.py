"""Boundary-divisor combinatorics of the space of pointed rational maps.

A boundary divisor is labelled by a datum: a two-sided partition of the
marking set together with an effective splitting of the curve class, subject
to the stability condition that a side carrying the zero class holds at
least two markings.  Data are unordered; we fix the orientation with the
lexicographically least side first.

``intersection_counts`` replays the plane argument: cutting the two sides of
the four-point linear equivalence with a generic curve of incidence
conditions itemizes, datum type by datum type, into products of counts, and
equality of the two sides is exactly the degree-d recursion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import GWTable
from .series import MultiIndex, binomial_z


@dataclass(frozen=True)
class BoundaryDatum:
    """One boundary divisor: marking sides a | b and class parts beta1, beta2."""

    a: frozenset[int]
    b: frozenset[int]
    beta1: MultiIndex
    beta2: MultiIndex

    def is_valid(self, n: int, beta: MultiIndex) -> bool:
        if self.a | self.b != frozenset(range(1, n + 1)) or self.a & self.b:
            return False
        if tuple(x + y for x, y in zip(self.beta1, self.beta2)) != tuple(beta):
            return False
        if any(x < 0 for x in self.beta1 + self.beta2):
            return False
        if not any(self.beta1) and len(self.a) < 2:
            return False
        if not any(self.beta2) and len(self.b) < 2:
            return False
        return True

    def unordered(self) -> frozenset:
        return frozenset(((self.a, self.beta1), (self.b, self.beta2)))


def _class_splits(beta: MultiIndex) -> list[MultiIndex]:
    out: list[tuple[int, ...]] = [()]
    for entry in beta:
        out = [prefix + (x,) for prefix in out for x in range(entry + 1)]
    return out


def _complement(beta: MultiIndex, part: MultiIndex) -> MultiIndex:
    return tuple(x - y for x, y in zip(beta, part))


def enumerate_boundary(n: int, beta: MultiIndex) -> list[BoundaryDatum]:
    """All boundary data for n markings and class beta, each exactly once.

    Orientation: for n >= 1 the side containing marking 1 comes first; for
    n = 0 the lexicographically smaller class part comes first.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    beta = tuple(beta)
    if any(x < 0 for x in beta):
        raise ValueError("beta must be effective")
    data: list[BoundaryDatum] = []
    if n == 0:
        empty: frozenset[int] = frozenset()
        for beta1 in _class_splits(beta):
            beta2 = _complement(beta, beta1)
            if beta1 > beta2:
                continue  # unordered pair; keep the lexicographically least part
            datum = BoundaryDatum(empty, empty, beta1, beta2)
            if datum.is_valid(0, beta):
                data.append(datum)
        return data
    others = list(range(2, n + 1))
    for mask in range(1 << len(others)):
        side_a = frozenset({1} | {others[i] for i in range(len(others)) if mask >> i & 1})
        side_b = frozenset(range(1, n + 1)) - side_a
        for beta1 in _class_splits(beta):
            datum = BoundaryDatum(side_a, side_b, beta1, _complement(beta, beta1))
            if datum.is_valid(n, beta):
                data.append(datum)
    return data


def d_sum(
    n: int, beta: MultiIndex, i: int, j: int, k: int, l: int
) -> list[BoundaryDatum]:
    """All boundary data with markings i, j on the first side and k, l on the
    second; the side containing i is reported first."""
    if len({i, j, k, l}) != 4:
        raise ValueError("markings i, j, k, l must be distinct")
    if not all(1 <= x <= n for x in (i, j, k, l)):
        raise ValueError("markings out of range")
    beta = tuple(beta)
    rest = [x for x in range(1, n + 1) if x not in (i, j, k, l)]
    data = []
    for mask in range(1 << len(rest)):
        side_a = frozenset({i, j} | {rest[t] for t in range(len(rest)) if mask >> t & 1})
        side_b = frozenset(range(1, n + 1)) - side_a
        for beta1 in _class_splits(beta):
            datum = BoundaryDatum(side_a, side_b, beta1, _complement(beta, beta1))
            if datum.is_valid(n, beta):
                data.append(datum)
    return data


# ---------------------------------------------------------------------------
# The geometric derivation of the plane recursion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CountSide:
    """One side of the boundary equivalence cut with the incidence curve."""

    label: str
    items: tuple[tuple[str, int], ...]

    @property
    def total(self) -> int:
        return sum(value for _, value in self.items)


@dataclass(frozen=True)
class IntersectionCounts:
    degree: int
    markings: int
    lhs: CountSide
    rhs: CountSide

    @property
    def balanced(self) -> bool:
        return self.lhs.total == self.rhs.total


def intersection_counts(d: int, table: GWTable) -> IntersectionCounts:
    """Evaluate both sides of the plane's boundary equivalence at degree d.

    With 3d markings (two on lines, the rest on points), one side picks up
    the degree-d count from the datum whose line-markings split off with the
    zero class, plus reducible data weighted d1^3 d2; the other side only
    sees reducible data weighted d1^2 d2^2.  The partition counts are the
    binomials over the 3d - 4 interior markings.
    """
    if d < 2:
        raise ValueError("the equivalence is used for degree at least 2")

    def count_of(degree: int) -> int:
        return table.get((degree,), (3 * degree - 1,))

    n = 3 * d
    lhs_items: list[tuple[str, int]] = [("contracted side through the two line markings", count_of(d))]
    rhs_items: list[tuple[str, int]] = []
    for d1 in range(1, d):
        d2 = d - d1
        pair = count_of(d1) * count_of(d2)
        lhs_items.append(
            (
                f"split {d1}+{d2}, {binomial_z(3 * d - 4, 3 * d1 - 1)} partitions "
                f"of weight {d1 ** 3 * d2}",
                pair * d1 ** 3 * d2 * binomial_z(3 * d - 4, 3 * d1 - 1),
            )
        )
        rhs_items.append(
            (
                f"split {d1}+{d2}, {binomial_z(3 * d - 4, 3 * d1 - 2)} partitions "
                f"of weight {d1 ** 2 * d2 ** 2}",
                pair * d1 ** 2 * d2 ** 2 * binomial_z(3 * d - 4, 3 * d1 - 2),
            )
        )
    return IntersectionCounts(
        degree=d,
        markings=n,
        lhs=CountSide("lines with lines", tuple(lhs_items)),
        rhs=CountSide("lines split across", tuple(rhs_items)),
    )
