"""Exact arithmetic substrate: zero-extended binomials, divided-power series,
and graded integer polynomials.

Everything here is exact.  Integers are Python ints, rationals are
``fractions.Fraction``; no floats appear anywhere.

A divided-power series lives in the module

    Q[[q_1..q_p]] [[y_1..y_r]]   with   y^n/n!  as the monomial basis,

sparse-encoded as a map

    (beta, n)  ->  coefficient of  q^beta * prod_i y_i^{n_i} / n_i!

where beta is a vector of curve-class exponents (the "divisor" directions,
which only ever enter through exponentials q_i = e^{y_i}) and n is a
multi-index over the remaining variables.  Storing the divided-power
coefficient means curve counts appear verbatim as coefficients.

Series are truncated: keys are capped by a bound on the c1-degree of beta
(each beta coordinate carries a fixed positive weight) and by a bound on the
total degree of n.  Operations silently drop out-of-bound keys, i.e. we work
modulo the truncation ideal.  Each series additionally tracks the region on
which its stored coefficients are known to be exact (the completeness
frontier); products and derivatives shrink that region by the obvious rules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

# A multi-index: one non-negative exponent per variable.
MultiIndex = tuple[int, ...]

# Series key: (curve-class exponent vector, non-divisor multi-index).
Key = tuple[MultiIndex, MultiIndex]

#: Marker for "complete at every degree" frontiers.
NO_LIMIT = math.inf


def binomial_z(n: int, m: int) -> int:
    """Binomial coefficient C(n, m), defined as 0 if n, m or n-m is negative."""
    if n < 0 or m < 0 or n - m < 0:
        return 0
    return math.comb(n, m)


def total_degree(n: MultiIndex) -> int:
    """Total degree of a multi-index."""
    return sum(n)


def index_add(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def index_sub(a: MultiIndex, b: MultiIndex) -> MultiIndex | None:
    """Componentwise difference, or None if any entry would go negative."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def splittings(n: MultiIndex) -> Iterator[tuple[MultiIndex, MultiIndex]]:
    """All ordered splittings n = n1 + n2 with non-negative parts."""
    if not n:
        yield (), ()
        return
    head, rest = n[0], n[1:]
    for r1, r2 in splittings(rest):
        for h in range(head + 1):
            yield (h,) + r1, (head - h,) + r2


def split_binomial(n: MultiIndex, n1: MultiIndex) -> int:
    """Product of per-variable binomials C(n_i, n1_i); the divided-power
    convolution weight of the splitting n = n1 + (n - n1)."""
    out = 1
    for total, part in zip(n, n1):
        out *= binomial_z(total, part)
        if out == 0:
            return 0
    return out


def compositions(weights: tuple[int, ...], target: int) -> Iterator[MultiIndex]:
    """All multi-indices n with sum(n_i * weights_i) = target.

    All weights must be positive, so the enumeration is finite.
    """
    if target < 0:
        return
    if not weights:
        if target == 0:
            yield ()
        return
    w, rest = weights[0], weights[1:]
    for head in range(target // w + 1):
        for tail in compositions(rest, target - head * w):
            yield (head,) + tail


@dataclass(frozen=True)
class SeriesBounds:
    """Ambient data shared by a family of divided-power series.

    beta_weights: positive c1-weight of each curve-class coordinate.
    max_c1: hard cap on the weighted beta degree of stored keys.
    n_vars: number of non-divisor variables.
    max_total: hard cap on the total degree of non-divisor exponents.
    """

    beta_weights: tuple[int, ...]
    max_c1: int
    n_vars: int
    max_total: int

    def __post_init__(self) -> None:
        if any(w <= 0 for w in self.beta_weights):
            raise ValueError("beta weights must be positive")
        if self.max_c1 < 0 or self.max_total < 0:
            raise ValueError("truncation bounds must be non-negative")

    def c1_degree(self, beta: MultiIndex) -> int:
        return sum(w * d for w, d in zip(self.beta_weights, beta))

    def in_bounds(self, beta: MultiIndex, n: MultiIndex) -> bool:
        return self.c1_degree(beta) <= self.max_c1 and total_degree(n) <= self.max_total

    def check_key(self, beta: MultiIndex, n: MultiIndex) -> None:
        if len(beta) != len(self.beta_weights) or len(n) != self.n_vars:
            raise ValueError(
                f"key arity ({len(beta)}, {len(n)}) does not match bounds "
                f"({len(self.beta_weights)}, {self.n_vars})"
            )
        if any(x < 0 for x in beta) or any(x < 0 for x in n):
            raise ValueError("series keys must be non-negative")


@dataclass(frozen=True)
class GWSeries:
    """Truncated divided-power series with exact rational coefficients.

    Immutable after construction; zero coefficients are never stored.
    ``complete_c1``/``complete_total`` bound the region on which the stored
    coefficients are exact (NO_LIMIT means exact at every degree).
    """

    bounds: SeriesBounds
    coeffs: Mapping[Key, Fraction] = field(default_factory=dict)
    complete_c1: int | float = None  # type: ignore[assignment]
    complete_total: int | float = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.complete_c1 is None:
            object.__setattr__(self, "complete_c1", self.bounds.max_c1)
        if self.complete_total is None:
            object.__setattr__(self, "complete_total", self.bounds.max_total)

    # -- constructors ---------------------------------------------------

    @classmethod
    def build(
        cls,
        bounds: SeriesBounds,
        terms: Mapping[Key, int | Fraction] | Iterable[tuple[Key, int | Fraction]],
        complete_c1: int | float | None = None,
        complete_total: int | float | None = None,
    ) -> "GWSeries":
        items = terms.items() if isinstance(terms, Mapping) else terms
        coeffs: dict[Key, Fraction] = {}
        for (beta, n), value in items:
            bounds.check_key(beta, n)
            if not bounds.in_bounds(beta, n):
                raise ValueError(f"key {(beta, n)} exceeds truncation bounds")
            frac = Fraction(value)
            if frac:
                coeffs[(beta, n)] = coeffs.get((beta, n), Fraction(0)) + frac
        coeffs = {k: v for k, v in coeffs.items() if v}
        return cls(bounds, coeffs, complete_c1, complete_total)

    @classmethod
    def zero(cls, bounds: SeriesBounds) -> "GWSeries":
        return cls(bounds, {})

    @classmethod
    def constant(cls, bounds: SeriesBounds, value: int | Fraction) -> "GWSeries":
        frac = Fraction(value)
        if not frac:
            return cls.zero(bounds)
        key = ((0,) * len(bounds.beta_weights), (0,) * bounds.n_vars)
        return cls(bounds, {key: frac})

    # -- queries ----------------------------------------------------------

    def coefficient(self, beta: MultiIndex, n: MultiIndex) -> Fraction:
        return self.coeffs.get((beta, n), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def in_complete_region(self, key: Key) -> bool:
        beta, n = key
        return (
            self.bounds.c1_degree(beta) <= self.complete_c1
            and total_degree(n) <= self.complete_total
        )

    def nonzero_complete_keys(self) -> list[Key]:
        """Nonzero keys inside the completeness frontier, sorted."""
        return sorted(k for k in self.coeffs if self.in_complete_region(k))

    def is_zero_on_complete(self) -> bool:
        return not self.nonzero_complete_keys()

    def terms(self) -> list[tuple[Key, Fraction]]:
        return sorted(self.coeffs.items())

    # -- arithmetic -------------------------------------------------------

    def _require_same_bounds(self, other: "GWSeries") -> None:
        if self.bounds != other.bounds:
            raise ValueError("series bounds mismatch")

    def __add__(self, other: "GWSeries") -> "GWSeries":
        self._require_same_bounds(other)
        coeffs = dict(self.coeffs)
        for key, value in other.coeffs.items():
            acc = coeffs.get(key, Fraction(0)) + value
            if acc:
                coeffs[key] = acc
            else:
                coeffs.pop(key, None)
        return GWSeries(
            self.bounds,
            coeffs,
            min(self.complete_c1, other.complete_c1),
            min(self.complete_total, other.complete_total),
        )

    def __sub__(self, other: "GWSeries") -> "GWSeries":
        return self + other.scale(-1)

    def scale(self, value: int | Fraction) -> "GWSeries":
        frac = Fraction(value)
        if not frac:
            return GWSeries(self.bounds, {}, self.complete_c1, self.complete_total)
        return GWSeries(
            self.bounds,
            {k: v * frac for k, v in self.coeffs.items()},
            self.complete_c1,
            self.complete_total,
        )

    def __mul__(self, other: "GWSeries") -> "GWSeries":
        """Divided-power product, truncated to the shared bounds.

        The coefficient at (beta, n) is the convolution over beta = b1 + b2,
        n = n1 + n2 weighted by the per-variable binomials C(n_i, n1_i).
        """
        self._require_same_bounds(other)
        bounds = self.bounds
        coeffs: dict[Key, Fraction] = {}
        for (b1, n1), v1 in self.coeffs.items():
            for (b2, n2), v2 in other.coeffs.items():
                beta = index_add(b1, b2)
                n = index_add(n1, n2)
                if not bounds.in_bounds(beta, n):
                    continue
                weight = split_binomial(n, n1)
                acc = coeffs.get((beta, n), Fraction(0)) + v1 * v2 * weight
                if acc:
                    coeffs[(beta, n)] = acc
                else:
                    coeffs.pop((beta, n), None)
        return GWSeries(
            bounds,
            coeffs,
            min(self.complete_c1, other.complete_c1, bounds.max_c1),
            min(self.complete_total, other.complete_total, bounds.max_total),
        )


def series_mul(a: GWSeries, b: GWSeries) -> GWSeries:
    """Divided-power product of two series on matching bounds."""
    return a * b


def series_partial(a: GWSeries, var: int) -> GWSeries:
    """Partial derivative with respect to variable ``var`` (1-based).

    Variables 1..p are the divisor directions, entering via q_i = e^{y_i}:
    differentiation multiplies the (beta, n) coefficient by beta_{var}.
    Variables p+1..p+n_vars are divided-power directions: the coefficient at
    n is the old coefficient at n + e_var.
    """
    bounds = a.bounds
    p = len(bounds.beta_weights)
    if 1 <= var <= p:
        i = var - 1
        coeffs = {}
        for (beta, n), value in a.coeffs.items():
            if beta[i]:
                coeffs[(beta, n)] = value * beta[i]
        return GWSeries(bounds, coeffs, a.complete_c1, a.complete_total)
    if p < var <= p + bounds.n_vars:
        j = var - p - 1
        coeffs = {}
        for (beta, n), value in a.coeffs.items():
            if n[j]:
                shifted = list(n)
                shifted[j] -= 1
                coeffs[(beta, tuple(shifted))] = value
        limit = a.complete_total
        if limit is not NO_LIMIT:
            limit = limit - 1
        return GWSeries(bounds, coeffs, a.complete_c1, limit)
    raise ValueError(f"unknown variable {var} (expected 1..{p + bounds.n_vars})")


# ---------------------------------------------------------------------------
# Graded integer polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedPoly:
    """Sparse polynomial over the integers with graded variables.

    ``degrees`` assigns each variable a positive integer degree; ``names``
    are used only for printing.  Zero terms are never stored.
    """

    degrees: tuple[int, ...]
    coeffs: Mapping[MultiIndex, int] = field(default_factory=dict)
    names: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        for mono, value in self.coeffs.items():
            if len(mono) != len(self.degrees):
                raise ValueError("monomial arity mismatch")
            if value == 0:
                raise ValueError("zero coefficients must not be stored")

    @classmethod
    def build(
        cls,
        degrees: tuple[int, ...],
        terms: Mapping[MultiIndex, int] | Iterable[tuple[MultiIndex, int]],
        names: tuple[str, ...] | None = None,
    ) -> "GradedPoly":
        items = terms.items() if isinstance(terms, Mapping) else terms
        coeffs: dict[MultiIndex, int] = {}
        for mono, value in items:
            acc = coeffs.get(tuple(mono), 0) + value
            if acc:
                coeffs[tuple(mono)] = acc
            else:
                coeffs.pop(tuple(mono), None)
        return cls(degrees, coeffs, names)

    @classmethod
    def zero(cls, degrees: tuple[int, ...], names: tuple[str, ...] | None = None) -> "GradedPoly":
        return cls(degrees, {}, names)

    @classmethod
    def constant(cls, degrees: tuple[int, ...], value: int,
                 names: tuple[str, ...] | None = None) -> "GradedPoly":
        if value == 0:
            return cls.zero(degrees, names)
        return cls(degrees, {(0,) * len(degrees): value}, names)

    @classmethod
    def variable(cls, degrees: tuple[int, ...], index: int,
                 names: tuple[str, ...] | None = None) -> "GradedPoly":
        mono = [0] * len(degrees)
        mono[index] = 1
        return cls(degrees, {tuple(mono): 1}, names)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def monomial_degree(self, mono: MultiIndex) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def homogeneous_degree(self) -> int | None:
        """The common graded degree of all terms, or None if inhomogeneous.

        The zero polynomial reports degree 0.
        """
        found = {self.monomial_degree(m) for m in self.coeffs}
        if not found:
            return 0
        if len(found) > 1:
            return None
        return found.pop()

    def coefficient(self, mono: MultiIndex) -> int:
        return self.coeffs.get(tuple(mono), 0)

    def terms(self) -> list[tuple[MultiIndex, int]]:
        return sorted(self.coeffs.items())

    # -- arithmetic -------------------------------------------------------

    def _same_ring(self, other: "GradedPoly") -> None:
        if self.degrees != other.degrees:
            raise ValueError("polynomial ring mismatch")

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        self._same_ring(other)
        coeffs = dict(self.coeffs)
        for mono, value in other.coeffs.items():
            acc = coeffs.get(mono, 0) + value
            if acc:
                coeffs[mono] = acc
            else:
                coeffs.pop(mono, None)
        return GradedPoly(self.degrees, coeffs, self.names or other.names)

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + other.scale(-1)

    def __neg__(self) -> "GradedPoly":
        return self.scale(-1)

    def scale(self, value: int) -> "GradedPoly":
        if value == 0:
            return GradedPoly(self.degrees, {}, self.names)
        return GradedPoly(
            self.degrees, {m: c * value for m, c in self.coeffs.items()}, self.names
        )

    def __mul__(self, other: "GradedPoly") -> "GradedPoly":
        self._same_ring(other)
        coeffs: dict[MultiIndex, int] = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                mono = index_add(m1, m2)
                acc = coeffs.get(mono, 0) + c1 * c2
                if acc:
                    coeffs[mono] = acc
                else:
                    coeffs.pop(mono, None)
        return GradedPoly(self.degrees, coeffs, self.names or other.names)

    def set_var_to_zero(self, index: int) -> "GradedPoly":
        """Specialize one variable to zero (drop every term containing it)."""
        coeffs = {m: c for m, c in self.coeffs.items() if m[index] == 0}
        return GradedPoly(self.degrees, coeffs, self.names)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        names = self.names or tuple(f"x{i}" for i in range(len(self.degrees)))
        parts = []
        for mono, value in self.terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, mono)
                if e
            ]
            body = "*".join(factors) if factors else "1"
            parts.append(f"{value}*{body}" if factors else str(value))
        return " + ".join(parts)
