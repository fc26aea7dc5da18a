"""Quantum cohomology as structure-constant algebras, with presentations.

The big ring deforms the cup product by all counts: structure constants are
divided-power series contracted from third partials of the potential.  The
small ring keeps only the 3-point counts, giving a genuine graded deformation
over polynomials in one parameter per divisor class; setting the parameters
to zero recovers the cup product.

Presentations are quotient descriptions of the small rings.  Normal forms
are computed degree by degree: the ideal's graded piece is spanned by
monomial multiples of the relations, and exact linear elimination expresses
every monomial in a chosen monomial basis of the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .engine import GWTable, gw_invariant
from .model import FanoModel
from .potential import PotentialBundle
from .series import GWSeries, GradedPoly, MultiIndex, compositions, index_add

Expansion = dict[int, GWSeries]


# ---------------------------------------------------------------------------
# Big quantum ring
# ---------------------------------------------------------------------------


def big_product(bundle: PotentialBundle, i: int, j: int) -> Expansion:
    """Expansion of T_i * T_j over the basis, with series coefficients."""
    model = bundle.model
    out: Expansion = {f: GWSeries.zero(bundle.bounds) for f in range(model.rank)}
    for e, f, gef in model.g_inv_pairs():
        out[f] = out[f] + bundle.phi(i, j, e).scale(gef)
    return out


def _star_expansion(bundle: PotentialBundle, expansion: Expansion, k: int) -> Expansion:
    """Multiply an expansion by the basis class T_k on the right."""
    model = bundle.model
    out: Expansion = {f: GWSeries.zero(bundle.bounds) for f in range(model.rank)}
    for e, coeff in expansion.items():
        if coeff.is_zero():
            continue
        for f, factor in big_product(bundle, e, k).items():
            out[f] = out[f] + coeff * factor
    return out


def big_associator(bundle: PotentialBundle, i: int, j: int, k: int) -> Expansion:
    """(T_i * T_j) * T_k - T_i * (T_j * T_k), coefficient by coefficient."""
    left = _star_expansion(bundle, big_product(bundle, i, j), k)
    rights = _star_expansion(bundle, big_product(bundle, j, k), i)
    return {f: left[f] - rights[f] for f in left}


@dataclass
class QuantumRing:
    """Structure constants of a quantum product over the model's basis.

    ``kind`` is "big" (series coefficients) or "small" (polynomials in one
    deformation parameter per divisor class).  Constants are stored for
    i <= j; the product is symmetric.
    """

    model: FanoModel
    kind: str
    constants: dict[tuple[int, int], dict[int, object]]
    q_degrees: tuple[int, ...] = ()

    def product(self, i: int, j: int) -> dict[int, object]:
        return self.constants[(min(i, j), max(i, j))]

    # -- small-ring element arithmetic ---------------------------------

    def _zero_poly(self) -> GradedPoly:
        names = tuple(f"q{t + 1}" for t in range(len(self.q_degrees)))
        return GradedPoly.zero(self.q_degrees, names)

    def star_element(self, element: dict[int, GradedPoly], j: int) -> dict[int, GradedPoly]:
        """Right-multiply an expansion sum_e a_e T_e by T_j (small ring)."""
        if self.kind != "small":
            raise ValueError("element arithmetic is provided for small rings")
        out = {f: self._zero_poly() for f in range(self.model.rank)}
        for e, coeff in element.items():
            if coeff.is_zero():
                continue
            for f, factor in self.product(e, j).items():
                out[f] = out[f] + coeff * factor
        return {f: v for f, v in out.items()}

    def basis_power(self, i: int, exponent: int) -> dict[int, GradedPoly]:
        """The exponent-fold product T_i * ... * T_i as an expansion."""
        names = tuple(f"q{t + 1}" for t in range(len(self.q_degrees)))
        element = {0: GradedPoly.constant(self.q_degrees, 1, names)}
        for _ in range(exponent):
            element = self.star_element(element, i)
        return element

    def specialize_q0(self) -> dict[tuple[int, int], dict[int, int]]:
        """Constant terms of all structure constants (the classical product)."""
        if self.kind != "small":
            raise ValueError("q=0 specialization applies to small rings")
        zero_mono = (0,) * len(self.q_degrees)
        out = {}
        for key, expansion in self.constants.items():
            out[key] = {
                f: poly.coefficient(zero_mono)
                for f, poly in expansion.items()
                if poly.coefficient(zero_mono)
            }
        return out


def big_ring(bundle: PotentialBundle) -> QuantumRing:
    """All big-ring structure constants of a potential bundle."""
    rank = bundle.model.rank
    constants = {
        (i, j): big_product(bundle, i, j)
        for i in range(rank)
        for j in range(i, rank)
    }
    return QuantumRing(bundle.model, "big", constants)


# ---------------------------------------------------------------------------
# Small quantum ring
# ---------------------------------------------------------------------------


def small_ring(model: FanoModel, table: GWTable) -> QuantumRing:
    """Small quantum ring from the 3-point counts of a table.

    T_i * T_j = T_i cup T_j + corrections q^beta per effective class whose
    anticanonical degree matches the codimension bookkeeping.  Requires the
    table to cover c1-degree up to twice the dimension.
    """
    rank = model.rank
    q_degrees = model.effective_c1
    names = tuple(f"q{t + 1}" for t in range(len(q_degrees)))
    constants: dict[tuple[int, int], dict[int, GradedPoly]] = {}
    for i in range(rank):
        for j in range(i, rank):
            accum: dict[int, dict[MultiIndex, Fraction]] = {
                f: {} for f in range(rank)
            }
            for e, f, gef in model.g_inv_pairs():
                # classical part
                cup = model.triple(i, j, e)
                if cup:
                    _bump(accum[f], (0,) * len(q_degrees), Fraction(cup) * gef)
                # quantum part: the needed c1-degree is pinned by codimensions
                needed = model.codim(i) + model.codim(j) + model.codim(e) - model.dimension
                if needed < 2:
                    continue
                for beta in model.effective_classes(needed):
                    if not any(beta) or model.c1_degree(beta) != needed:
                        continue
                    value = gw_invariant(model, table, beta, [i, j, e])
                    if value:
                        _bump(accum[f], beta, Fraction(value) * gef)
            expansion = {}
            for f, monos in accum.items():
                terms = {}
                for mono, coeff in monos.items():
                    if coeff == 0:
                        continue
                    if coeff.denominator != 1:
                        raise ArithmeticError(
                            f"non-integral structure constant {coeff} at "
                            f"T_{i} * T_{j} -> T_{f}"
                        )
                    terms[mono] = int(coeff)
                expansion[f] = GradedPoly(q_degrees, terms, names)
            constants[(i, j)] = expansion
    return QuantumRing(model, "small", constants, q_degrees)


def _bump(store: dict[MultiIndex, Fraction], mono: MultiIndex, value: Fraction) -> None:
    acc = store.get(mono, Fraction(0)) + value
    if acc:
        store[mono] = acc
    else:
        store.pop(mono, None)


# ---------------------------------------------------------------------------
# Presentations with per-degree normal forms
# ---------------------------------------------------------------------------


@dataclass
class PresentationIdeal:
    """Graded polynomial relations with exact normal-form reduction.

    The quotient's graded pieces are computed degree by degree: the span of
    monomial multiples of the relations is eliminated over the rationals and
    every monomial is rewritten in the surviving monomial basis.  Reductions
    of integer polynomials are required to stay integral.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    relations: tuple[GradedPoly, ...]
    _cache: dict[int, tuple[list[MultiIndex], dict[MultiIndex, dict[MultiIndex, Fraction]]]] = field(
        default_factory=dict, repr=False
    )

    def __post_init__(self) -> None:
        for rel in self.relations:
            if rel.degrees != self.degrees:
                raise ValueError("relation lives in a different graded ring")
            if rel.homogeneous_degree() is None:
                raise ValueError(f"relation {rel} is not homogeneous")

    def ring_zero(self) -> GradedPoly:
        return GradedPoly.zero(self.degrees, self.names)

    def variable(self, index: int) -> GradedPoly:
        return GradedPoly.variable(self.degrees, index, self.names)

    def monomials(self, degree: int) -> list[MultiIndex]:
        """All monomials of the given graded degree, in decreasing lex order."""
        return sorted(compositions(self.degrees, degree), reverse=True)

    def _reduction(self, degree: int):
        cached = self._cache.get(degree)
        if cached is not None:
            return cached
        monos = self.monomials(degree)
        position = {m: idx for idx, m in enumerate(monos)}
        rows: list[list[Fraction]] = []
        for rel in self.relations:
            rel_degree = rel.homogeneous_degree()
            shift = degree - rel_degree
            if shift < 0:
                continue
            for mono in compositions(self.degrees, shift):
                row = [Fraction(0)] * len(monos)
                for term, coeff in rel.coeffs.items():
                    row[position[index_add(term, mono)]] = Fraction(coeff)
                rows.append(row)
        pivots: dict[int, list[Fraction]] = {}
        for row in rows:
            row = list(row)
            for col, pivot_row in pivots.items():
                if row[col]:
                    factor = row[col]
                    row = [a - factor * b for a, b in zip(row, pivot_row)]
            lead = next((idx for idx, v in enumerate(row) if v), None)
            if lead is None:
                continue
            inv = 1 / row[lead]
            row = [v * inv for v in row]
            for col, pivot_row in list(pivots.items()):
                if pivot_row[lead]:
                    factor = pivot_row[lead]
                    pivots[col] = [a - factor * b for a, b in zip(pivot_row, row)]
            pivots[lead] = row
        basis = [m for idx, m in enumerate(monos) if idx not in pivots]
        rewrite: dict[MultiIndex, dict[MultiIndex, Fraction]] = {}
        for lead, row in pivots.items():
            rewrite[monos[lead]] = {
                monos[idx]: -value
                for idx, value in enumerate(row)
                if value and idx != lead
            }
        result = (basis, rewrite)
        self._cache[degree] = result
        return result

    def basis(self, degree: int) -> list[MultiIndex]:
        """Monomial basis of the quotient in one graded degree."""
        return self._reduction(degree)[0]

    def rank(self, degree: int) -> int:
        return len(self.basis(degree))

    def normal_form(self, poly: GradedPoly) -> GradedPoly:
        """Reduce a polynomial to the quotient's monomial basis.

        Works per homogeneous component; raises if a reduction coefficient
        fails to be an integer.
        """
        if poly.degrees != self.degrees:
            raise ValueError("polynomial lives in a different graded ring")
        out: dict[MultiIndex, Fraction] = {}
        for mono, coeff in poly.coeffs.items():
            degree = sum(e * d for e, d in zip(mono, self.degrees))
            _, rewrite = self._reduction(degree)
            replacement = rewrite.get(mono)
            if replacement is None:
                _bump(out, mono, Fraction(coeff))
            else:
                for target, factor in replacement.items():
                    _bump(out, target, Fraction(coeff) * factor)
        terms = {}
        for mono, coeff in out.items():
            if coeff.denominator != 1:
                raise ArithmeticError(
                    f"normal form of {poly} has non-integral coefficient {coeff}"
                )
            terms[mono] = int(coeff)
        return GradedPoly(self.degrees, terms, self.names)

    def reduces_to_zero(self, poly: GradedPoly) -> bool:
        return self.normal_form(poly).is_zero()


def pr_presentation(r: int) -> PresentationIdeal:
    """Quotient description of the small ring of projective r-space:
    one generator of degree 1, one parameter of degree r+1, one relation."""
    if r < 1:
        raise ValueError("r must be at least 1")
    names = ("T", "q")
    degrees = (1, r + 1)
    relation = GradedPoly(degrees, {(r + 1, 0): 1, (0, 1): -1}, names)
    return PresentationIdeal(names, degrees, (relation,))


# ---------------------------------------------------------------------------
# Grassmannians
# ---------------------------------------------------------------------------


def s_r_determinant(p: int, n: int, r: int) -> GradedPoly:
    """The r x r determinant det(sigma_{1+j-i}) in sigma_1..sigma_{n-p}.

    sigma_0 is 1 and sigma_i vanishes for i < 0 or i > n-p; the result is
    homogeneous of degree r.
    """
    k = n - p
    if k < 1:
        raise ValueError("need p < n")
    degrees = tuple(range(1, k + 1))
    names = tuple(f"s{i}" for i in range(1, k + 1))

    def entry(value: int) -> GradedPoly:
        if value == 0:
            return GradedPoly.constant(degrees, 1, names)
        if value < 0 or value > k:
            return GradedPoly.zero(degrees, names)
        return GradedPoly.variable(degrees, value - 1, names)

    matrix = [[entry(1 + j - i) for j in range(r)] for i in range(r)]
    return _determinant(matrix, degrees, names)


def _determinant(matrix, degrees, names) -> GradedPoly:
    size = len(matrix)
    if size == 0:
        return GradedPoly.constant(degrees, 1, names)
    if size == 1:
        return matrix[0][0]
    total = GradedPoly.zero(degrees, names)
    for col in range(size):
        factor = matrix[0][col]
        if factor.is_zero():
            continue
        minor = [
            [row[c] for c in range(size) if c != col]
            for row in matrix[1:]
        ]
        term = factor * _determinant(minor, degrees, names)
        total = total + (term if col % 2 == 0 else -term)
    return total


def _box_betti(p: int, k: int) -> list[int]:
    """Number of partitions inside a p x k box by size (the graded ranks of
    the classical cohomology)."""
    counts = [0] * (p * k + 1)
    partitions = [()]
    stack = [(0, k, ())]
    while stack:
        depth, limit, shape = stack.pop()
        counts[sum(shape)] += 1
        if depth == p:
            continue
        for part in range(1, limit + 1):
            stack.append((depth + 1, part, shape + (part,)))
    return counts


def grassmannian_presentation(p: int, n: int) -> PresentationIdeal:
    """Small-ring presentation of the Grassmannian of p-planes in n-space.

    Generators sigma_1..sigma_{n-p} (degrees 1..n-p) and q (degree n);
    relations are the determinantal classes in degrees p+1..n-1 together
    with the degree-n one corrected by (-1)^{n-p} q.  The quotient's graded
    ranks are verified against the count of partitions in the p x (n-p) box.
    """
    if not 1 <= p < n:
        raise ValueError("need 1 <= p < n")
    k = n - p
    if p * k > 6:
        raise ValueError("presentation supported up to p*(n-p) <= 6")
    degrees = tuple(range(1, k + 1)) + (n,)
    names = tuple(f"s{i}" for i in range(1, k + 1)) + ("q",)

    def lift(poly: GradedPoly) -> GradedPoly:
        return GradedPoly(
            degrees, {mono + (0,): c for mono, c in poly.coeffs.items()}, names
        )

    relations = [lift(s_r_determinant(p, n, r)) for r in range(p + 1, n)]
    q_mono = (0,) * k + (1,)
    top = lift(s_r_determinant(p, n, n)) + GradedPoly(
        degrees, {q_mono: (-1) ** k}, names
    )
    relations.append(top)
    ideal = PresentationIdeal(names, degrees, tuple(relations))

    # The quotient must be free of rank C(n,p) over the parameter: degree by
    # degree its rank has to equal the box-partition counts, repeated with
    # period deg(q).
    betti = _box_betti(p, k)
    from math import comb

    if sum(betti) != comb(n, p):
        raise ArithmeticError("partition count disagrees with the basis count")
    for degree in range(p * k + n + 1):
        expected = sum(
            betti[degree - n * j]
            for j in range(degree // n + 1)
            if degree - n * j <= p * k
        )
        if ideal.rank(degree) != expected:
            raise ArithmeticError(
                f"quotient rank mismatch in degree {degree}: got "
                f"{ideal.rank(degree)}, expected {expected}"
            )
    return ideal


# ---------------------------------------------------------------------------
# Big-ring presentation of the plane
# ---------------------------------------------------------------------------


@dataclass
class BigRingPresentation:
    """The verified cubic satisfied by the hyperplane class of the plane's
    big ring: Z^3 = c2 Z^2 + c1 Z + c0 with series coefficients."""

    bundle: PotentialBundle
    coefficient_series: dict[int, GWSeries]
    residuals: Expansion

    def holds(self) -> bool:
        return all(series.is_zero_on_complete() for series in self.residuals.values())


def presentation_from_big(bundle: PotentialBundle) -> BigRingPresentation:
    """Verify the hyperplane cubic in the plane's big ring.

    Expands the triple star power of T_1 and subtracts the cubic with
    coefficients given by the three quantum third partials; the residual
    must vanish on the completeness region in every basis coefficient.
    """
    model = bundle.model
    if (model.dimension, model.top_index, model.divisor_count) != (2, 2, 1):
        raise ValueError("the cubic presentation applies to the plane model")
    g111 = bundle.gamma_partial(1, 1, 1)
    g112 = bundle.gamma_partial(1, 1, 2)
    g122 = bundle.gamma_partial(1, 2, 2)
    pow2 = big_product(bundle, 1, 1)
    pow3 = _star_expansion(bundle, pow2, 1)
    residuals: Expansion = {}
    for f in range(model.rank):
        series = pow3[f] - g111 * pow2[f]
        if f == 1:
            series = series - g112.scale(2)
        if f == 0:
            series = series - g122
        residuals[f] = series
    result = BigRingPresentation(
        bundle,
        coefficient_series={2: g111, 1: g112.scale(2), 0: g122},
        residuals=residuals,
    )
    if not result.holds():
        bad = {f: s.nonzero_complete_keys() for f, s in residuals.items() if not s.is_zero_on_complete()}
        raise ArithmeticError(f"cubic relation fails at {bad}")
    return result


# ---------------------------------------------------------------------------
# Fixed-point counts
# ---------------------------------------------------------------------------


def fixed_points_number(
    model: FanoModel,
    table: GWTable,
    beta: MultiIndex,
    classes: Sequence[int],
    k: int = 2,
) -> Fraction:
    """Count of maps sending n fixed domain points into the given classes.

    For three insertions this is the plain invariant; for more it splits at
    position ``k`` into two shorter counts glued through the inverse pairing,
    summed over effective splittings of the class.  The result does not
    depend on the chosen split.
    """
    n = len(classes)
    if n < 3:
        raise ValueError("need at least three insertions")
    if n == 3:
        return Fraction(gw_invariant(model, table, beta, classes))
    if not 1 < k < n - 1:
        raise ValueError(f"split position must satisfy 1 < k < {n - 1}")
    total = Fraction(0)
    head, tail = list(classes[:k]), list(classes[k:])
    for beta1 in _all_splits(beta):
        beta2 = tuple(x - y for x, y in zip(beta, beta1))
        for e, f, gef in model.g_inv_pairs():
            left = fixed_points_number(model, table, beta1, head + [e])
            if left == 0:
                continue
            right = fixed_points_number(model, table, beta2, [f] + tail)
            if right == 0:
                continue
            total += gef * left * right
    return total


def _all_splits(beta: MultiIndex) -> list[MultiIndex]:
    out: list[tuple[int, ...]] = [()]
    for entry in beta:
        out = [prefix + (x,) for prefix in out for x in range(entry + 1)]
    return out
