"""Cohomological models of small homogeneous spaces.

A :class:`FanoModel` packages the static intersection data every other module
consumes: a graded basis T_0..T_m (T_0 the unit, T_1..T_p the divisor
classes), the Poincare pairing and its exact inverse, the classical triple
products, and the lattice of effective curve classes.  Effective classes are
non-negative integer vectors in the basis dual to T_1..T_p; each generator
carries its anticanonical degree, which is at least 2.

Models carry no curve counts; those live in tables produced by the engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .series import MultiIndex, SeriesBounds


class ModelError(ValueError):
    """A model file or constructor violated a structural invariant."""


def _invert_exact(matrix: list[list[int]]) -> list[list[Fraction]]:
    """Exact inverse of a square integer matrix via Gauss-Jordan elimination."""
    size = len(matrix)
    work = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(size)]
            for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot is None:
            raise ModelError("pairing matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [v * inv for v in work[col]]
        for row in range(size):
            if row != col and work[row][col]:
                factor = work[row][col]
                work[row] = [a - factor * b for a, b in zip(work[row], work[col])]
    return [row[size:] for row in work]


@dataclass(frozen=True)
class FanoModel:
    """Intersection-theoretic data of a space, immutable after validation."""

    name: str
    dimension: int
    basis_names: tuple[str, ...]
    codims: tuple[int, ...]
    pairing: tuple[tuple[int, ...], ...]
    pairing_inverse: tuple[tuple[Fraction, ...], ...]
    triples: dict[tuple[int, int, int], int]  # keyed by sorted index triple
    effective_c1: tuple[int, ...]  # anticanonical degree of each generator

    # -- basic structure ----------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.codims)

    @property
    def top_index(self) -> int:
        """m, the largest basis index."""
        return len(self.codims) - 1

    @property
    def divisor_count(self) -> int:
        return sum(1 for c in self.codims if c == 1)

    @property
    def nondivisor_indices(self) -> tuple[int, ...]:
        p = self.divisor_count
        return tuple(range(p + 1, self.rank))

    def codim(self, i: int) -> int:
        return self.codims[i]

    def g(self, i: int, j: int) -> int:
        return self.pairing[i][j]

    def g_inv(self, i: int, j: int) -> Fraction:
        return self.pairing_inverse[i][j]

    def g_inv_pairs(self) -> list[tuple[int, int, Fraction]]:
        """Nonzero entries (e, f, g^{ef}) of the inverse pairing."""
        out = []
        for e in range(self.rank):
            for f in range(self.rank):
                value = self.pairing_inverse[e][f]
                if value:
                    out.append((e, f, value))
        return out

    def triple(self, i: int, j: int, k: int) -> int:
        return self.triples.get(tuple(sorted((i, j, k))), 0)

    # -- curve classes -------------------------------------------------------

    def zero_class(self) -> MultiIndex:
        return (0,) * self.divisor_count

    def c1_degree(self, beta: MultiIndex) -> int:
        return sum(c * d for c, d in zip(self.effective_c1, beta))

    def divisor_pairing(self, beta: MultiIndex, divisor: int) -> int:
        """Degree of the divisor class T_divisor on the curve class beta."""
        if not 1 <= divisor <= self.divisor_count:
            raise ValueError(f"T_{divisor} is not a divisor class")
        return beta[divisor - 1]

    def effective_classes(self, c1_max: int) -> list[MultiIndex]:
        """All effective classes with anticanonical degree at most c1_max."""
        out: list[MultiIndex] = []

        def rec(prefix: tuple[int, ...], budget: int, weights: tuple[int, ...]) -> None:
            if not weights:
                out.append(prefix)
                return
            for count in range(budget // weights[0] + 1):
                rec(prefix + (count,), budget - count * weights[0], weights[1:])

        rec((), c1_max, self.effective_c1)
        return sorted(out)

    def insertion_weights(self) -> tuple[int, ...]:
        """codim(T_i) - 1 for the non-divisor classes, the degree weights of
        insertion multi-indices."""
        return tuple(self.codims[i] - 1 for i in self.nondivisor_indices)

    def dimension_matches(self, beta: MultiIndex, n: MultiIndex) -> bool:
        """Whether insertions n against class beta can give a nonzero count."""
        weights = self.insertion_weights()
        return sum(w * e for w, e in zip(weights, n)) == (
            self.dimension + self.c1_degree(beta) - 3
        )

    def series_bounds(self, max_c1: int, max_total: int | None = None) -> SeriesBounds:
        """Series bounds compatible with this model's grading.

        The default total-degree cap is dim + max_c1 - 3, which no insertion
        multi-index within the c1 bound can exceed.
        """
        if max_total is None:
            max_total = max(self.dimension + max_c1 - 3, 0)
        return SeriesBounds(
            beta_weights=self.effective_c1,
            max_c1=max_c1,
            n_vars=len(self.nondivisor_indices),
            max_total=max_total,
        )

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dimension": self.dimension,
            "basis": [
                {"name": name, "codim": codim}
                for name, codim in zip(self.basis_names, self.codims)
            ],
            "pairing": [list(row) for row in self.pairing],
            "triples": [
                {"i": i, "j": j, "k": k, "value": value}
                for (i, j, k), value in sorted(self.triples.items())
            ],
            "effective": [
                {"dual_divisor_index": i + 1, "c1_degree": c1}
                for i, c1 in enumerate(self.effective_c1)
            ],
        }


def expected_dimension(model: FanoModel, beta: MultiIndex, n: int) -> int:
    """Dimension of the space of n-pointed rational maps in class beta."""
    return model.dimension + model.c1_degree(beta) + n - 3


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------


def _build_model(
    name: str,
    dimension: int,
    basis: list[tuple[str, int]],
    pairing: list[list[int]],
    triples: dict[tuple[int, int, int], int],
    effective: list[tuple[int, int]],
) -> FanoModel:
    """Assemble and validate a model from raw data.

    ``effective`` lists (dual_divisor_index, c1_degree) pairs; generators are
    reordered so that generator i is dual to the divisor T_i.
    """
    names = tuple(n for n, _ in basis)
    codims = tuple(c for _, c in basis)
    rank = len(codims)

    if rank == 0 or codims[0] != 0:
        raise ModelError("basis must start with the unit class of codimension 0")
    if sum(1 for c in codims if c == 0) != 1:
        raise ModelError("exactly one basis class may have codimension 0")
    p = sum(1 for c in codims if c == 1)
    if tuple(codims[1 : p + 1]) != (1,) * p or any(c < 2 for c in codims[p + 1 :]):
        raise ModelError("basis must be ordered unit, divisors, higher codimension")
    if any(c > dimension for c in codims):
        raise ModelError("basis codimension exceeds the dimension")

    for k in range(dimension + 1):
        low = sum(1 for c in codims if c == k)
        high = sum(1 for c in codims if c == dimension - k)
        if low != high:
            raise ModelError(
                f"basis counts violate duality: {low} classes in codimension {k} "
                f"but {high} in codimension {dimension - k}"
            )

    if len(pairing) != rank or any(len(row) != rank for row in pairing):
        raise ModelError("pairing matrix has the wrong shape")
    for i in range(rank):
        for j in range(rank):
            if pairing[i][j] != pairing[j][i]:
                raise ModelError("pairing matrix is not symmetric")
            if pairing[i][j] and codims[i] + codims[j] != dimension:
                raise ModelError(
                    "pairing must vanish off complementary codimension"
                )
    inverse = _invert_exact([list(row) for row in pairing])

    normalized: dict[tuple[int, int, int], int] = {}
    for (i, j, k), value in triples.items():
        if value == 0:
            continue
        key = tuple(sorted((i, j, k)))
        if normalized.setdefault(key, value) != value:
            raise ModelError(f"conflicting triple product at {key}")
        if codims[i] + codims[j] + codims[k] != dimension:
            raise ModelError(f"triple {key} violates the codimension constraint")
    for j in range(rank):
        for k in range(rank):
            expected = pairing[j][k]
            if normalized.get(tuple(sorted((0, j, k))), 0) != expected:
                raise ModelError(
                    f"unit law fails: triple (0,{j},{k}) must equal the pairing"
                )

    if len(effective) != p:
        raise ModelError("need exactly one effective generator per divisor class")
    by_divisor: dict[int, int] = {}
    for dual, c1 in effective:
        if not 1 <= dual <= p:
            raise ModelError(f"dual divisor index {dual} out of range")
        if dual in by_divisor:
            raise ModelError(f"duplicate effective generator for divisor {dual}")
        if c1 < 2:
            raise ModelError(
                f"effective generator dual to T_{dual} has anticanonical degree "
                f"{c1}; non-constant rational curves force at least 2"
            )
        by_divisor[dual] = c1
    effective_c1 = tuple(by_divisor[i + 1] for i in range(p))

    return FanoModel(
        name=name,
        dimension=dimension,
        basis_names=names,
        codims=codims,
        pairing=tuple(tuple(row) for row in pairing),
        pairing_inverse=tuple(tuple(row) for row in inverse),
        triples=normalized,
        effective_c1=effective_c1,
    )


def _projective_space(r: int) -> FanoModel:
    basis = [("T0", 0)] + [(f"T{i}", i) for i in range(1, r + 1)]
    pairing = [[int(i + j == r) for j in range(r + 1)] for i in range(r + 1)]
    triples = {
        (i, j, k): 1
        for i in range(r + 1)
        for j in range(i, r + 1)
        for k in range(j, r + 1)
        if i + j + k == r
    }
    return _build_model(
        name=f"p{r}" if r <= 9 else f"pr({r})",
        dimension=r,
        basis=basis,
        pairing=pairing,
        triples=triples,
        effective=[(1, r + 1)],
    )


def _quadric_threefold() -> FanoModel:
    basis = [("T0", 0), ("T1", 1), ("T2", 2), ("T3", 3)]
    pairing = [
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
    ]
    # T1 cup T1 = 2 T2 on the quadric, so the hyperplane cube is 2.
    triples = {(0, 0, 3): 1, (0, 1, 2): 1, (1, 1, 1): 2}
    return _build_model(
        name="q3",
        dimension=3,
        basis=basis,
        pairing=pairing,
        triples=triples,
        effective=[(1, 3)],
    )


def _product_of_lines() -> FanoModel:
    basis = [("T0", 0), ("T1", 1), ("T2", 1), ("T3", 2)]
    pairing = [
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
    ]
    triples = {(0, 0, 3): 1, (0, 1, 2): 1}
    return _build_model(
        name="p1xp1",
        dimension=2,
        basis=basis,
        pairing=pairing,
        triples=triples,
        effective=[(1, 2), (2, 2)],
    )


def builtin_model(name: str, r: int | None = None) -> FanoModel:
    """Construct a built-in model: p1, p2, p3, q3, pr (with r), or p1xp1."""
    if name == "pr":
        if r is None or r < 1:
            raise ModelError("model 'pr' needs a projective dimension r >= 1")
        return _projective_space(r)
    if name in {"p1", "p2", "p3", "p4"}:
        return _projective_space(int(name[1:]))
    if name == "q3":
        return _quadric_threefold()
    if name == "p1xp1":
        return _product_of_lines()
    raise ModelError(f"unknown model name {name!r}")


# ---------------------------------------------------------------------------
# File ingestion
# ---------------------------------------------------------------------------


def model_from_dict(data: dict) -> FanoModel:
    """Build a validated model from the documented JSON structure."""
    try:
        basis = [(entry["name"], int(entry["codim"])) for entry in data["basis"]]
        pairing = [[int(v) for v in row] for row in data["pairing"]]
        triples = {
            (int(t["i"]), int(t["j"]), int(t["k"])): int(t["value"])
            for t in data.get("triples", [])
        }
        effective = [
            (int(e["dual_divisor_index"]), int(e["c1_degree"]))
            for e in data["effective"]
        ]
        name = str(data.get("name", "user"))
        dimension = int(data["dimension"])
    except (KeyError, TypeError) as exc:
        raise ModelError(f"malformed model data: {exc}") from exc
    return _build_model(name, dimension, basis, pairing, triples, effective)


def load_model(path: str | Path) -> FanoModel:
    """Load and validate a model file (JSON, exact integers only)."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError(f"cannot parse model file {path}: {exc}") from exc
    return model_from_dict(data)


def save_model(model: FanoModel, path: str | Path) -> None:
    Path(path).write_text(json.dumps(model.to_dict(), indent=2), encoding="utf-8")
