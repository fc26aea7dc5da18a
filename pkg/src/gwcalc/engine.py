"""Rational-curve count tables and the associativity-equation machinery.

Counts are stored per model as a :class:`GWTable`: an exact integer for each
pair (curve class beta, insertion multi-index n over the non-divisor basis
classes).  Three producers are implemented:

* ``nd_plane``:   the classical degree-d plane-curve recursion,
* ``fano3_solve``: the six coupled recursions shared by the projective
  3-space and the quadric threefold, every value cross-checked against all
  applicable recursions,
* ``wdvv_solve``:  a generic solver that extracts one coefficient equation of
  the associativity system per unknown and verifies the rest.

``gw_invariant`` evaluates an arbitrary invariant from a table by the three
reduction rules: a zero curve class gives the classical triple product, a
unit insertion kills the count, and a divisor insertion multiplies by its
degree on the curve class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .model import FanoModel, builtin_model
from .series import (
    MultiIndex,
    binomial_z,
    compositions,
    index_sub,
    split_binomial,
    splittings,
)

TableKey = tuple[MultiIndex, MultiIndex]


class TableDepthError(LookupError):
    """A dimensionally-valid key was requested beyond the table's coverage."""


class SolveError(RuntimeError):
    """The recursion or equation system could not be solved consistently."""


@dataclass
class GWTable:
    """Exact curve-count table for one model.

    ``entries`` holds every dimensionally-valid key whose c1-degree is at
    most ``c1_max`` (values may be zero); immutable by convention once
    returned from a producer.
    """

    model: FanoModel
    c1_max: int
    entries: dict[TableKey, int] = field(default_factory=dict)

    def add(self, beta: MultiIndex, n: MultiIndex, value: int) -> None:
        if not self.model.dimension_matches(beta, n):
            raise ValueError(f"key {(beta, n)} violates the dimension constraint")
        if value < 0:
            raise ValueError(f"negative count {value} at {(beta, n)}")
        self.entries[(beta, n)] = value

    def get(self, beta: MultiIndex, n: MultiIndex) -> int:
        key = (beta, n)
        if key in self.entries:
            return self.entries[key]
        if self.model.c1_degree(beta) > self.c1_max:
            raise TableDepthError(
                f"table for {self.model.name} covers c1-degree <= {self.c1_max}; "
                f"key {key} needs c1-degree {self.model.c1_degree(beta)}"
            )
        raise TableDepthError(
            f"table for {self.model.name} is missing in-coverage key {key}"
        )

    def sorted_items(self) -> list[tuple[TableKey, int]]:
        return sorted(self.entries.items())


# ---------------------------------------------------------------------------
# Axiom-based reduction of invariants
# ---------------------------------------------------------------------------


def _reduce(
    model: FanoModel,
    beta: MultiIndex,
    counts: MultiIndex,
    extra: Sequence[int],
):
    """Fold basis-class insertions into a table key using the three rules.

    Returns ("const", value) when the invariant is determined without a
    table, otherwise ("table", multiplier, key).
    """
    p = model.divisor_count
    if len(beta) != p or any(d < 0 for d in beta):
        raise ValueError(f"{beta} is not an effective class for {model.name}")
    if not any(beta):
        if sum(counts) + len(extra) != 3:
            return "const", 0
        classes = list(extra)
        for pos, count in enumerate(counts):
            classes.extend([model.nondivisor_indices[pos]] * count)
        return "const", model.triple(*classes)
    mult = 1
    tally = list(counts)
    for cls in extra:
        if not 0 <= cls <= model.top_index:
            raise ValueError(f"basis index {cls} out of range")
        if cls == 0:
            return "const", 0
        if cls <= p:
            mult *= model.divisor_pairing(beta, cls)
            if mult == 0:
                return "const", 0
        else:
            tally[cls - p - 1] += 1
    n = tuple(tally)
    if not model.dimension_matches(beta, n):
        return "const", 0
    return "table", mult, (beta, n)


def gw_invariant(
    model: FanoModel,
    table: GWTable,
    beta: MultiIndex,
    classes: Sequence[int],
) -> int:
    """Evaluate the invariant of ``classes`` against ``beta`` from a table."""
    zero_counts = (0,) * len(model.nondivisor_indices)
    result = _reduce(model, tuple(beta), zero_counts, classes)
    if result[0] == "const":
        return result[1]
    _, mult, (b, n) = result
    return mult * table.get(b, n)


# ---------------------------------------------------------------------------
# Plane curves
# ---------------------------------------------------------------------------


def nd_plane_numbers(d_max: int) -> dict[int, int]:
    """Counts of degree-d rational plane curves through 3d-1 general points."""
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    counts = {1: 1}
    for d in range(2, d_max + 1):
        total = 0
        for d1 in range(1, d):
            d2 = d - d1
            total += counts[d1] * counts[d2] * (
                d1 * d1 * d2 * d2 * binomial_z(3 * d - 4, 3 * d1 - 2)
                - d1 ** 3 * d2 * binomial_z(3 * d - 4, 3 * d1 - 1)
            )
        counts[d] = total
    return counts


def nd_plane(d_max: int) -> GWTable:
    """Plane-curve table: key ((d,), (3d-1,)) holds the degree-d count."""
    model = builtin_model("p2")
    table = GWTable(model, 3 * d_max)
    for d, value in nd_plane_numbers(d_max).items():
        table.add((d,), (3 * d - 1,), value)
    return table


# ---------------------------------------------------------------------------
# The two Fano threefolds
# ---------------------------------------------------------------------------

_FANO3 = {
    # name -> (c1 degree of a line, hyperplane self-intersection c, seed)
    "p3": (4, 1, (0, 2)),
    "q3": (3, 2, (1, 1)),
}


def _fano3_rhs(
    rec: int, a: int, b: int, k: int, known: Mapping[tuple[int, int], int]
) -> int:
    """Right-hand side of recursion ``rec`` at (a, b); sums over splittings
    into strictly lower degrees, which must already be in ``known``."""
    d = (a + 2 * b) // k
    total = 0
    for a1 in range(a + 1):
        for b1 in range(b + 1):
            weight = a1 + 2 * b1
            if weight % k or weight == 0 or weight == k * d:
                continue
            d1 = weight // k
            d2 = d - d1
            pair = known[(a1, b1)] * known[(a - a1, b - b1)]
            if pair == 0:
                continue
            if rec == 1:
                w = binomial_z(b, b1) * (
                    d1 ** 3 * binomial_z(a - 3, a1)
                    - d1 * d1 * d2 * binomial_z(a - 3, a1 - 1)
                )
            elif rec == 2:
                w = binomial_z(a - 2, a1) * (
                    d1 ** 3 * binomial_z(b - 1, b1)
                    - d1 * d1 * d2 * binomial_z(b - 1, b1 - 1)
                )
            elif rec == 3:
                w = (
                    2 * d1 * d1 * d2 * binomial_z(a - 1, a1) * binomial_z(b - 2, b1 - 1)
                    - d1 * d1 * d2 * binomial_z(a - 1, a1 - 1) * binomial_z(b - 2, b1)
                    - d1 ** 3 * binomial_z(a - 1, a1) * binomial_z(b - 2, b1)
                )
            elif rec == 4:
                w = d1 * d1 * (
                    binomial_z(a - 3, a1) * binomial_z(b - 1, b1 - 1)
                    - binomial_z(a - 3, a1 - 1) * binomial_z(b - 1, b1)
                )
            elif rec == 5:
                w = (
                    d1 * d2 * binomial_z(a - 2, a1 - 1) * binomial_z(b - 2, b1 - 1)
                    - d1 * d2 * binomial_z(a - 2, a1 - 2) * binomial_z(b - 2, b1)
                    + d1 * d1 * binomial_z(a - 2, a1) * binomial_z(b - 2, b1 - 1)
                    - d1 * d1 * binomial_z(a - 2, a1 - 1) * binomial_z(b - 2, b1)
                )
            elif rec == 6:
                w = d1 * (
                    binomial_z(a - 3, a1) * binomial_z(b - 2, b1 - 2)
                    - 2 * binomial_z(a - 3, a1 - 1) * binomial_z(b - 2, b1 - 1)
                    + binomial_z(a - 3, a1 - 2) * binomial_z(b - 2, b1)
                )
            else:
                raise ValueError(f"no recursion {rec}")
            total += pair * w
    return total


def fano3_numbers(space: str, d_max: int) -> dict[tuple[int, int], int]:
    """All counts N_{a,b} with a + 2b = k*d, d <= d_max, for p3 or q3.

    N_{a,b} counts degree-d rational curves meeting a general lines and b
    general points.  Every value is derived from at least one recursion and
    afterwards checked against every applicable one.
    """
    if space not in _FANO3:
        raise ValueError(f"space must be one of {sorted(_FANO3)}, got {space!r}")
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    k, c, seed = _FANO3[space]
    known: dict[tuple[int, int], int] = {seed: 1}

    def record(target: tuple[int, int], value: Fraction, route: str) -> None:
        if value.denominator != 1:
            raise SolveError(f"{space}: non-integral value {value} for {target} via {route}")
        if value < 0:
            raise SolveError(f"{space}: negative value {value} for {target} via {route}")
        prev = known.get(target)
        if prev is not None and prev != value:
            raise SolveError(
                f"{space}: recursions disagree at {target}: {prev} vs {value} via {route}"
            )
        known[target] = int(value)

    for d in range(1, d_max + 1):
        targets = [(a, (k * d - a) // 2) for a in range(k * d % 2, k * d + 1, 2)]
        missing = [t for t in targets if t not in known]
        while missing:
            progressed = False
            for a, b in list(missing):
                got = False
                # Direct forms: each determines one value from lower degrees.
                if a >= 1 and b >= 2:
                    record((a, b), Fraction(_fano3_rhs(3, a, b, k, known), c), "(3)")
                    record((a, b), Fraction(_fano3_rhs(4, a + 2, b - 1, k, known)), "(4)")
                    got = True
                if b >= 3:
                    record((a, b), Fraction(_fano3_rhs(5, a + 2, b - 1, k, known)), "(5)")
                    got = True
                # Two-term forms, usable once the partner value is known.
                if a >= 2 and b >= 1 and (a - 2, b + 1) in known:
                    rhs = _fano3_rhs(2, a, b, k, known)
                    record((a, b), Fraction(d * known[(a - 2, b + 1)] - rhs, c), "(2)")
                    got = True
                if b >= 2 and (a + 2, b - 1) in known:
                    rhs = _fano3_rhs(2, a + 2, b - 1, k, known)
                    record((a, b), Fraction(rhs + c * known[(a + 2, b - 1)], d), "(2')")
                    got = True
                if a >= 3 and (a - 2, b + 1) in known:
                    rhs = _fano3_rhs(1, a, b, k, known)
                    record((a, b), Fraction(2 * d * known[(a - 2, b + 1)] - rhs, c), "(1)")
                    got = True
                if a >= 1 and b >= 1 and (a + 2, b - 1) in known:
                    rhs = _fano3_rhs(1, a + 2, b - 1, k, known)
                    record((a, b), Fraction(rhs + c * known[(a + 2, b - 1)], 2 * d), "(1')")
                    got = True
                if got:
                    missing.remove((a, b))
                    progressed = True
            if not progressed:
                raise SolveError(
                    f"{space}: counts {missing} at degree {d} are unreachable "
                    "by the recursions"
                )

    _fano3_cross_validate(space, d_max, known)
    return known


def _fano3_cross_validate(
    space: str, d_max: int, known: Mapping[tuple[int, int], int]
) -> None:
    """Check every applicable recursion instance on the finished table."""
    k, c, _ = _FANO3[space]
    for d in range(1, d_max + 1):
        for a in range(k * d % 2, k * d + 1, 2):
            b = (k * d - a) // 2
            up = known.get((a - 2, b + 1))
            checks: list[tuple[str, int, int]] = []
            if a >= 3:
                checks.append(("(1)", 2 * d * up - c * known[(a, b)], _fano3_rhs(1, a, b, k, known)))
            if a >= 2 and b >= 1:
                checks.append(("(2)", d * up - c * known[(a, b)], _fano3_rhs(2, a, b, k, known)))
            if a >= 1 and b >= 2:
                checks.append(("(3)", c * known[(a, b)], _fano3_rhs(3, a, b, k, known)))
            if a >= 3 and b >= 1:
                checks.append(("(4)", up, _fano3_rhs(4, a, b, k, known)))
            if a >= 2 and b >= 2:
                checks.append(("(5)", up, _fano3_rhs(5, a, b, k, known)))
            if a >= 3 and b >= 2:
                checks.append(("(6)", 0, _fano3_rhs(6, a, b, k, known)))
            for label, lhs, rhs in checks:
                if lhs != rhs:
                    raise SolveError(
                        f"{space}: recursion {label} fails at (a,b)=({a},{b}): "
                        f"{lhs} != {rhs}"
                    )


def fano3_solve(space: str, d_max: int) -> GWTable:
    """Table for p3 or q3: key ((d,), (a, b)) counts curves meeting a lines
    and b points."""
    if space not in _FANO3:
        raise ValueError(f"space must be one of {sorted(_FANO3)}, got {space!r}")
    model = builtin_model(space)
    k, _, _ = _FANO3[space]
    table = GWTable(model, k * d_max)
    for (a, b), value in fano3_numbers(space, d_max).items():
        d = (a + 2 * b) // k
        table.add((d,), (a, b), value)
    return table


# ---------------------------------------------------------------------------
# Associativity equation bookkeeping
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WdvvEquationId:
    """An index quadruple labelling one associativity equation."""

    indices: tuple[int, int, int, int]
    canonical: bool

    @staticmethod
    def orbit(quad: tuple[int, int, int, int]) -> set[tuple[int, int, int, int]]:
        """Signed symmetry orbit, generated by the reversal (keeps sign) and
        the outer swap (flips sign)."""
        seen = {quad}
        frontier = [quad]
        while frontier:
            i, j, k, l = frontier.pop()
            for image in ((k, j, i, l), (l, k, j, i)):
                if image not in seen:
                    seen.add(image)
                    frontier.append(image)
        return seen

    @classmethod
    def canonicalize(cls, i: int, j: int, k: int, l: int) -> "WdvvEquationId | None":
        """Canonical id for the (i,j,k,l) equation, or None if it is
        identically zero (repeated outer index, or any index 0)."""
        if i == k or j == l or 0 in (i, j, k, l):
            return None
        quad = (i, j, k, l)
        best = min(cls.orbit(quad))
        return cls(best, canonical=quad == best)


def wdvv_count(m: int) -> int:
    """Number of essentially distinct associativity equations for a basis
    with m classes of positive codimension."""
    if m < 1:
        raise ValueError("m must be at least 1")
    count = 3 * binomial_z(m, 4) + m * binomial_z(m - 1, 2) + binomial_z(m, 2)
    assert count == m * (m - 1) * (m * m - m + 2) // 8
    return count


def wdvv_canonical_equations(m: int) -> list[WdvvEquationId]:
    """One canonical representative per equation class on indices 1..m."""
    if m < 1:
        raise ValueError("m must be at least 1")
    found: set[tuple[int, int, int, int]] = set()
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            for k in range(1, m + 1):
                for l in range(1, m + 1):
                    eq = WdvvEquationId.canonicalize(i, j, k, l)
                    if eq is not None:
                        found.add(eq.indices)
    return [WdvvEquationId(q, True) for q in sorted(found)]


# ---------------------------------------------------------------------------
# Generic solver
# ---------------------------------------------------------------------------


@dataclass
class _Lin:
    """Affine-linear expression in not-yet-solved table entries."""

    const: Fraction = Fraction(0)
    terms: dict[TableKey, Fraction] = field(default_factory=dict)

    @classmethod
    def number(cls, value: int | Fraction) -> "_Lin":
        return cls(Fraction(value), {})

    @classmethod
    def symbol(cls, key: TableKey) -> "_Lin":
        return cls(Fraction(0), {key: Fraction(1)})

    def __add__(self, other: "_Lin") -> "_Lin":
        terms = dict(self.terms)
        for key, value in other.terms.items():
            acc = terms.get(key, Fraction(0)) + value
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
        return _Lin(self.const + other.const, terms)

    def __sub__(self, other: "_Lin") -> "_Lin":
        return self + other.scale(-1)

    def scale(self, value: int | Fraction) -> "_Lin":
        value = Fraction(value)
        if not value:
            return _Lin()
        return _Lin(self.const * value, {k: v * value for k, v in self.terms.items()})

    def __mul__(self, other: "_Lin") -> "_Lin":
        if self.terms and other.terms:
            raise SolveError("nonlinear term: two unsolved counts multiplied")
        if self.terms:
            return self.scale(other.const) if other.const else _Lin()
        return other.scale(self.const)


Lookup = Callable[[TableKey], _Lin]


def _phi_coeff(
    model: FanoModel,
    lookup: Lookup,
    beta: MultiIndex,
    n: MultiIndex,
    a: int,
    b: int,
    c: int,
) -> _Lin:
    """Divided-power coefficient at (beta, n) of the third-partial series of
    the potential in directions (a, b, c)."""
    if not any(beta):
        if any(n):
            return _Lin()
        return _Lin.number(model.triple(a, b, c))
    result = _reduce(model, beta, n, (a, b, c))
    if result[0] == "const":
        return _Lin.number(result[1])
    _, mult, key = result
    return lookup(key).scale(mult)


def _equation_coefficient(
    model: FanoModel,
    lookup: Lookup,
    quad: tuple[int, int, int, int],
    beta: MultiIndex,
    n: MultiIndex,
) -> _Lin:
    """Coefficient at (beta, n) of the associativity expression for ``quad``,
    via the convolution of third-partial coefficients against the inverse
    pairing."""
    i, j, k, l = quad
    total = _Lin()
    pairs = model.g_inv_pairs()
    for beta1 in _vector_splits(beta):
        beta2 = index_sub(beta, beta1)
        for n1, n2 in splittings(n):
            weight = split_binomial(n, n1)
            for e, f, gef in pairs:
                first = _phi_coeff(model, lookup, beta1, n1, i, j, e) * _phi_coeff(
                    model, lookup, beta2, n2, f, k, l
                )
                second = _phi_coeff(model, lookup, beta1, n1, j, k, e) * _phi_coeff(
                    model, lookup, beta2, n2, f, i, l
                )
                total = total + (first - second).scale(gef * weight)
    return total


def _vector_splits(beta: MultiIndex) -> list[MultiIndex]:
    out: list[tuple[int, ...]] = [()]
    for entry in beta:
        out = [prefix + (x,) for prefix in out for x in range(entry + 1)]
    return out


def _nondivisor_delta(model: FanoModel, cls: int) -> MultiIndex:
    delta = [0] * len(model.nondivisor_indices)
    p = model.divisor_count
    if cls > p:
        delta[cls - p - 1] = 1
    return tuple(delta)


def wdvv_solve(model: FanoModel, seeds: GWTable, c1_max: int) -> GWTable:
    """Solve for every count with c1-degree at most ``c1_max`` from seeds.

    Unknowns are processed level by level in the c1-degree; inside a level
    each unknown is read off from some coefficient equation in which it
    appears linearly and alone, and afterwards every remaining equation at
    the level is checked to vanish.
    """
    if seeds.model != model:
        raise ValueError("seed table belongs to a different model")
    known: dict[TableKey, int] = {}
    for (beta, n), value in seeds.entries.items():
        if model.c1_degree(beta) <= c1_max:
            known[(beta, n)] = value

    weights = model.insertion_weights()
    quads = [eq.indices for eq in wdvv_canonical_equations(model.top_index)]
    classes = [b for b in model.effective_classes(c1_max) if any(b)]
    levels = sorted({model.c1_degree(b) for b in classes})

    def lookup_factory(pending: set[TableKey]) -> Lookup:
        def lookup(key: TableKey) -> _Lin:
            if key in known:
                return _Lin.number(known[key])
            if key in pending:
                return _Lin.symbol(key)
            raise SolveError(f"lookup of unexpected key {key}")

        return lookup

    for level in levels:
        level_classes = [b for b in classes if model.c1_degree(b) == level]
        target_degree = model.dimension + level - 3
        pending: list[TableKey] = []
        for beta in level_classes:
            for n in compositions(weights, target_degree):
                if (beta, n) not in known:
                    pending.append((beta, n))
        pending.sort(key=lambda key: (sum(key[1]), key[0], tuple(reversed(key[1]))))
        pending_set = set(pending)
        lookup = lookup_factory(pending_set)

        while pending:
            progressed = False
            for unknown in list(pending):
                solution = _solve_one(model, lookup, quads, unknown, pending_set)
                if solution is None:
                    continue
                if solution.denominator != 1:
                    raise SolveError(f"non-integral solution {solution} for {unknown}")
                if solution < 0:
                    raise SolveError(f"negative solution {solution} for {unknown}")
                known[unknown] = int(solution)
                pending.remove(unknown)
                pending_set.discard(unknown)
                progressed = True
            if not progressed:
                raise SolveError(
                    f"no solvable equation for unknown {pending[0]} "
                    f"(c1-degree {level}) on {model.name}"
                )

        _verify_level(model, lookup, quads, level_classes, level)

    table = GWTable(model, c1_max)
    for (beta, n), value in known.items():
        table.add(beta, n, value)
    return table


def _solve_one(
    model: FanoModel,
    lookup: Lookup,
    quads: list[tuple[int, int, int, int]],
    unknown: TableKey,
    pending: set[TableKey],
) -> Fraction | None:
    """Find an equation containing ``unknown`` linearly and no other pending
    unknown; return its value, or None if no such equation exists yet."""
    beta, n_target = unknown
    codims = model.codims
    for quad in quads:
        quad_codim = sum(codims[x] for x in quad)
        required = model.dimension + model.c1_degree(beta) - quad_codim
        if required < 0:
            continue
        keys: set[MultiIndex] = set()
        for x, y in ((quad[0], quad[1]), (quad[2], quad[3]), (quad[1], quad[2]), (quad[0], quad[3])):
            # subtract the two fixed insertions, then each choice of pairing index
            partial = index_sub(n_target, _nondivisor_delta(model, x))
            if partial is None:
                continue
            partial = index_sub(partial, _nondivisor_delta(model, y))
            if partial is None:
                continue
            for e in range(model.rank):
                candidate = index_sub(partial, _nondivisor_delta(model, e))
                if candidate is None:
                    continue
                if sum(w * v for w, v in zip(model.insertion_weights(), candidate)) == required:
                    keys.add(candidate)
        for n_key in sorted(keys):
            expr = _equation_coefficient(model, lookup, quad, beta, n_key)
            coeff = expr.terms.get(unknown)
            if not coeff:
                continue
            if any(k != unknown for k in expr.terms):
                continue
            return -expr.const / coeff
    return None


def _verify_level(
    model: FanoModel,
    lookup: Lookup,
    quads: list[tuple[int, int, int, int]],
    level_classes: list[MultiIndex],
    level: int,
) -> None:
    """Evaluate every canonical equation coefficient at this level; all must
    vanish once the level is solved."""
    weights = model.insertion_weights()
    for quad in quads:
        quad_codim = sum(model.codims[x] for x in quad)
        required = model.dimension + level - quad_codim
        if required < 0:
            continue
        for beta in level_classes:
            for n in compositions(weights, required):
                value = _equation_coefficient(model, lookup, quad, beta, n)
                if value.terms or value.const:
                    raise SolveError(
                        f"inconsistent system on {model.name}: equation "
                        f"{quad} at key {(beta, n)} leaves {value.const}"
                    )


# ---------------------------------------------------------------------------
# Standard seeds and tables per built-in model
# ---------------------------------------------------------------------------


def standard_seeds(model: FanoModel) -> GWTable:
    """The minimal line-count seeds each built-in model starts from."""
    name = model.name
    q = len(model.nondivisor_indices)
    table = GWTable(model, max(model.effective_c1))
    if name == "p1":
        table.add((1,), (), 1)
    elif name == "p2":
        table.add((1,), (2,), 1)
    elif name == "p3":
        table.add((1,), (0, 2), 1)
    elif name == "q3":
        table.add((1,), (1, 1), 1)
    elif name == "p1xp1":
        table.add((1, 0), (1,), 1)
        table.add((0, 1), (1,), 1)
    elif name.startswith("p") and name[1:].isdigit():
        point = (0,) * (q - 1) + (2,)
        table.add((1,), point, 1)
    else:
        raise ValueError(f"no standard seeds for model {model.name!r}")
    return table


def standard_table(model: FanoModel, c1_max: int) -> GWTable:
    """Curve-count table via the fastest validated route for the model."""
    name = model.name
    if name == "p2":
        return nd_plane(max(1, c1_max // 3))
    if name in ("p3", "q3"):
        k = _FANO3[name][0]
        return fano3_solve(name, max(1, c1_max // k))
    if name == "p1":
        table = GWTable(model, max(c1_max, 2))
        table.add((1,), (), 1)
        return table
    return wdvv_solve(model, standard_seeds(model), c1_max)
