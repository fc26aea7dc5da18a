"""The quantum potential of a count table and its associativity residuals.

The potential is stored with the divisor directions exponentiated away, so
its divided-power coefficients are exactly the table's counts.  Third
partials are the series

    phi_{ijk} = (classical triple product)  +  d^3(potential)/dy_i dy_j dy_k,

the brackets contract two of them against the inverse pairing, and the
residual of an index quadruple is the difference of the two bracket orders.
For a correct table every residual vanishes identically; we verify this on
the completeness region that the series operations track.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .engine import GWTable, gw_invariant
from .model import FanoModel
from .series import GWSeries, MultiIndex, NO_LIMIT, SeriesBounds, series_partial


@dataclass
class PotentialBundle:
    """A model's truncated potential plus a cache of its third partials."""

    model: FanoModel
    bounds: SeriesBounds
    gamma: GWSeries
    _phi: dict[tuple[int, int, int], GWSeries] = field(default_factory=dict)

    def phi(self, i: int, j: int, k: int) -> GWSeries:
        """Third partial of the full potential, classical part included.

        Symmetric in (i, j, k); an index 0 contributes only the pairing.
        """
        key = tuple(sorted((i, j, k)))
        cached = self._phi.get(key)
        if cached is not None:
            return cached
        constant = GWSeries.constant(self.bounds, self.model.triple(*key))
        if 0 in key:
            series = constant
        else:
            series = self.gamma
            for index in key:
                series = series_partial(series, index)
            series = constant + series
        self._phi[key] = series
        return series

    def gamma_partial(self, i: int, j: int, k: int) -> GWSeries:
        """Third partial of the quantum part alone."""
        return self.phi(i, j, k) - GWSeries.constant(
            self.bounds, self.model.triple(i, j, k)
        )


def build_potential(
    model: FanoModel,
    table: GWTable,
    max_c1: int,
    max_total: int | None = None,
) -> PotentialBundle:
    """Assemble the potential of a table, truncated at c1-degree ``max_c1``.

    The table must cover the requested bound; counts appear verbatim as
    coefficients.  Within the c1 bound the dimension constraint caps every
    insertion degree, so the series is complete at all total degrees.
    """
    if table.model != model:
        raise ValueError("table belongs to a different model")
    if max_c1 > table.c1_max:
        raise ValueError(
            f"requested c1-degree {max_c1} exceeds table coverage {table.c1_max}"
        )
    bounds = model.series_bounds(max_c1, max_total)
    terms = {}
    for (beta, n), value in table.entries.items():
        if model.c1_degree(beta) > max_c1:
            continue
        if sum(n) > bounds.max_total:
            raise ValueError(
                f"table key {(beta, n)} exceeds the total-degree bound "
                f"{bounds.max_total}"
            )
        if value:
            terms[(beta, n)] = Fraction(value)
    gamma = GWSeries(bounds, terms, complete_c1=max_c1, complete_total=NO_LIMIT)
    return PotentialBundle(model, bounds, gamma)


def f_bracket(bundle: PotentialBundle, i: int, j: int, k: int, l: int) -> GWSeries:
    """Contraction sum_{e,f} phi_{ije} g^{ef} phi_{fkl} as a series."""
    total = GWSeries.zero(bundle.bounds)
    for e, f, gef in bundle.model.g_inv_pairs():
        total = total + (bundle.phi(i, j, e) * bundle.phi(f, k, l)).scale(gef)
    return total


def wdvv_residual(bundle: PotentialBundle, i: int, j: int, k: int, l: int) -> GWSeries:
    """F(i,j|k,l) - F(j,k|i,l); the zero series for a correct table."""
    return f_bracket(bundle, i, j, k, l) - f_bracket(bundle, j, k, i, l)


def g_bracket(
    model: FanoModel,
    table: GWTable,
    beta: MultiIndex,
    classes: Sequence[int],
    q: int,
    r: int,
    s: int,
    t: int,
) -> int:
    """Boundary-divisor intersection sum for marked points q,r | s,t.

    Sums, over all two-sided partitions of the markings with q,r on the
    first side and s,t on the second and over all effective splittings of
    beta, the pairing-contracted product of the two side invariants.
    Positions are 1-based into ``classes``.
    """
    n = len(classes)
    positions = (q, r, s, t)
    if len(set(positions)) != 4 or not all(1 <= x <= n for x in positions):
        raise ValueError("q, r, s, t must be four distinct positions")
    if n < 4:
        raise ValueError("need at least four insertions")
    free = [x for x in range(1, n + 1) if x not in positions]
    total = Fraction(0)
    pairs = model.g_inv_pairs()
    for mask in range(1 << len(free)):
        side_a = {q, r} | {free[x] for x in range(len(free)) if mask >> x & 1}
        side_b = set(range(1, n + 1)) - side_a
        classes_a = [classes[x - 1] for x in sorted(side_a)]
        classes_b = [classes[x - 1] for x in sorted(side_b)]
        for beta1 in _splits(beta):
            beta2 = tuple(x - y for x, y in zip(beta, beta1))
            for e, f, gef in pairs:
                left = gw_invariant(model, table, beta1, classes_a + [e])
                if left == 0:
                    continue
                right = gw_invariant(model, table, beta2, classes_b + [f])
                if right == 0:
                    continue
                total += gef * left * right
    if total.denominator != 1:
        raise ArithmeticError(f"boundary sum is not integral: {total}")
    return int(total)


def _splits(beta: MultiIndex) -> list[MultiIndex]:
    out: list[tuple[int, ...]] = [()]
    for entry in beta:
        out = [prefix + (x,) for prefix in out for x in range(entry + 1)]
    return out
