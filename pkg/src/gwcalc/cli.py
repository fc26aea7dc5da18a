"""Command-line surface: compute tables, run verification suites, emit
machine-readable results.

Subcommands: ``nd``, ``fano3``, ``wdvv-count``, ``solve``, ``qring``,
``verify``.  Output formats: text (default), json, csv.  Big integers are
serialized as decimal strings in JSON, and rows are emitted in sorted key
order, so output is stable and safe to diff.

Exit codes: 0 success, 1 verification or computation failure, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import boundary as boundary_mod
from .engine import (
    GWTable,
    SolveError,
    TableDepthError,
    fano3_solve,
    nd_plane,
    standard_seeds,
    standard_table,
    wdvv_canonical_equations,
    wdvv_count,
    wdvv_solve,
)
from .model import FanoModel, ModelError, builtin_model, load_model
from .potential import build_potential, wdvv_residual
from .qring import (
    big_associator,
    big_product,
    grassmannian_presentation,
    pr_presentation,
    presentation_from_big,
    s_r_determinant,
    small_ring,
)
from .series import GradedPoly

_FANO3_LINE_DEGREE = {"p3": 4, "q3": 3}


@dataclass
class RunConfig:
    """Validated invocation parameters shared by the subcommands."""

    command: str
    model: str | None = None
    model_file: str | None = None
    r: int | None = None
    d_max: int | None = None
    m: int | None = None
    space: str | None = None
    trunc: int | None = None
    suite: str | None = None
    fmt: str = "text"
    check: bool = False


@dataclass
class Report:
    """Uniform result structure rendered by every output format."""

    model: str
    command: str
    bounds: dict
    key_names: list[str]
    rows: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_json(self) -> str:
        payload = {
            "model": self.model,
            "command": self.command,
            "bounds": self.bounds,
            "rows": [
                {"key": list(key), "value": str(value)}
                for key, value in sorted(self.rows)
            ],
            "checks": [
                {"name": name, "pass": ok, "detail": detail}
                for name, ok, detail in self.checks
            ],
        }
        return json.dumps(payload, indent=2)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow([*self.key_names, "value"])
        for key, value in sorted(self.rows):
            writer.writerow([*key, value])
        for name, ok, detail in self.checks:
            writer.writerow([f"check:{name}", "pass" if ok else "FAIL", detail])
        return buffer.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.command} on {self.model}  bounds={self.bounds}"]
        if self.rows:
            lines.append("  ".join(self.key_names + ["value"]))
            for key, value in sorted(self.rows):
                lines.append("  ".join(str(x) for x in (*key, value)))
        for name, ok, detail in self.checks:
            status = "PASS" if ok else "FAIL"
            lines.append(f"{status} {name}" + (f": {detail}" if detail else ""))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()


class ConfigError(ValueError):
    """Invalid flag combination or bound; maps to exit code 2."""


def _resolve_model(config: RunConfig) -> FanoModel:
    if config.model_file:
        return load_model(config.model_file)
    name = config.model
    if name is None:
        raise ConfigError("a model is required (--model or --model-file)")
    if name == "pr":
        if config.r is None:
            raise ConfigError("--model pr needs --r")
        return builtin_model("pr", r=config.r)
    return builtin_model(name)


def _require_dmax(config: RunConfig, minimum: int = 1) -> int:
    if config.d_max is None:
        raise ConfigError(f"{config.command} needs --dmax")
    if config.d_max < minimum:
        raise ConfigError(f"--dmax must be at least {minimum}")
    return config.d_max


def _table_rows(table: GWTable) -> list[tuple[tuple[int, ...], int]]:
    return [
        (tuple(beta) + tuple(n), value)
        for (beta, n), value in table.sorted_items()
    ]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_nd(config: RunConfig) -> Report:
    d_max = _require_dmax(config)
    table = nd_plane(d_max)
    rows = [((d,), table.get((d,), (3 * d - 1,))) for d in range(1, d_max + 1)]
    report = Report("p2", "nd", {"dmax": d_max}, ["d"], rows)
    if config.check:
        for d in range(2, d_max + 1):
            counts = boundary_mod.intersection_counts(d, table)
            report.checks.append(
                (
                    f"boundary-equivalence-d{d}",
                    counts.balanced,
                    f"lhs={counts.lhs.total} rhs={counts.rhs.total}",
                )
            )
    return report


def _cmd_fano3(config: RunConfig) -> Report:
    if config.space not in _FANO3_LINE_DEGREE:
        raise ConfigError("--space must be p3 or q3")
    d_max = _require_dmax(config)
    table = fano3_solve(config.space, d_max)
    rows = [(n, value) for (_, n), value in table.sorted_items()]
    report = Report(config.space, "fano3", {"dmax": d_max}, ["a", "b"], rows)
    if config.check:
        report.checks.append(
            (
                "recursion-cross-validation",
                True,
                "every applicable recursion instance re-checked during solve",
            )
        )
    return report


def _cmd_wdvv_count(config: RunConfig) -> Report:
    if config.m is None or config.m < 2:
        raise ConfigError("wdvv-count needs --m of at least 2")
    rows = [((m,), wdvv_count(m)) for m in range(2, config.m + 1)]
    report = Report("-", "wdvv-count", {"m": config.m}, ["m"], rows)
    for m in range(2, min(config.m, 7) + 1):
        classes = len(wdvv_canonical_equations(m))
        report.checks.append(
            (
                f"canonical-classes-m{m}",
                classes == wdvv_count(m),
                f"{classes} canonical representatives",
            )
        )
    return report


def _solve_c1_max(model: FanoModel, d_max: int) -> int:
    # One "degree" step is the largest generator weight, so single-generator
    # models get exactly degrees 1..d_max.
    return d_max * max(model.effective_c1)


def _cmd_solve(config: RunConfig) -> Report:
    model = _resolve_model(config)
    d_max = _require_dmax(config)
    c1_max = _solve_c1_max(model, d_max)
    table = wdvv_solve(model, standard_seeds(model), c1_max)
    p = model.divisor_count
    q = len(model.nondivisor_indices)
    names = [f"b{i+1}" for i in range(p)] + [f"n{i+1}" for i in range(q)]
    report = Report(
        model.name, "solve", {"dmax": d_max, "c1max": c1_max}, names, _table_rows(table)
    )
    if config.check:
        report.checks.extend(_wdvv_checks(model, table, config.trunc))
    return report


def _cmd_qring(config: RunConfig) -> Report:
    model = _resolve_model(config)
    c1_max = 2 * model.dimension
    table = standard_table(model, c1_max)
    ring = small_ring(model, table)
    rows = []
    p = len(ring.q_degrees)
    for (i, j), expansion in sorted(ring.constants.items()):
        for f, poly in sorted(expansion.items()):
            for mono, coeff in poly.terms():
                rows.append(((i, j, f) + mono, coeff))
    names = ["i", "j", "f"] + [f"q{t+1}" for t in range(p)]
    return Report(model.name, "qring", {"c1max": c1_max}, names, rows)


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------


def _wdvv_checks(model: FanoModel, table: GWTable, trunc: int | None):
    checks = []
    bundle = build_potential(model, table, table.c1_max, trunc)
    equations = wdvv_canonical_equations(model.top_index)
    expected = wdvv_count(model.top_index)
    checks.append(
        (
            "canonical-equation-count",
            len(equations) == expected,
            f"{len(equations)} classes, formula gives {expected}",
        )
    )
    for eq in equations:
        residual = wdvv_residual(bundle, *eq.indices)
        bad = residual.nonzero_complete_keys()
        checks.append(
            (
                "residual-A" + "".join(map(str, eq.indices)),
                not bad,
                "zero series" if not bad else f"nonzero at {bad[:3]}",
            )
        )
    return checks


def _ring_checks(model: FanoModel, table: GWTable, trunc: int | None):
    checks = []
    bundle = build_potential(model, table, table.c1_max, trunc)
    rank = model.rank
    unit_ok = all(
        big_product(bundle, 0, j)[f].coeffs
        == ({((0,) * model.divisor_count, (0,) * len(model.nondivisor_indices)): 1} if f == j else {})
        for j in range(rank)
        for f in range(rank)
    )
    checks.append(("big-unit", unit_ok, "T0 is a two-sided unit"))
    comm_ok = all(
        big_product(bundle, i, j)[f].coeffs == big_product(bundle, j, i)[f].coeffs
        for i in range(rank)
        for j in range(rank)
        for f in range(rank)
    )
    checks.append(("big-commutative", comm_ok, "all pairs"))
    assoc_ok = True
    worst = ""
    for i in range(1, rank):
        for j in range(1, rank):
            for k in range(1, rank):
                residual = big_associator(bundle, i, j, k)
                for f, series in residual.items():
                    if not series.is_zero_on_complete():
                        assoc_ok = False
                        worst = f"({i},{j},{k}) -> T{f}"
    checks.append(("big-associative", assoc_ok, worst or "all triples to truncation"))

    if model.name == "p2":
        try:
            presentation_from_big(bundle)
            checks.append(("plane-cubic-presentation", True, "residual zero"))
        except ArithmeticError as exc:
            checks.append(("plane-cubic-presentation", False, str(exc)))

    ring = small_ring(model, standard_table(model, 2 * model.dimension))
    homogeneous = True
    for (i, j), expansion in ring.constants.items():
        for f, poly in expansion.items():
            for mono, _ in poly.terms():
                degree = sum(e * d for e, d in zip(mono, ring.q_degrees))
                if degree + model.codim(f) != model.codim(i) + model.codim(j):
                    homogeneous = False
    checks.append(("small-homogeneous", homogeneous, "structure constants graded"))
    cup_ok = True
    classical = ring.specialize_q0()
    for (i, j), expansion in classical.items():
        for f in range(rank):
            total = sum(
                model.triple(i, j, e) * model.g_inv(e, f) for e in range(rank)
            )
            if expansion.get(f, 0) != total:
                cup_ok = False
    checks.append(("small-q0-is-cup", cup_ok, "classical product recovered"))
    return checks


def _pr_checks(r: int):
    checks = []
    model = builtin_model("pr", r=r)
    table = standard_table(model, 2 * r)
    ring = small_ring(model, table)
    rules_ok = True
    for i in range(1, r + 1):
        for j in range(i, r + 1):
            expansion = {
                f: poly for f, poly in ring.product(i, j).items() if not poly.is_zero()
            }
            if i + j <= r:
                expected_keys = {i + j}
                good = list(expansion) == [i + j] and str(expansion[i + j]) == "1"
            else:
                target = i + j - r - 1
                good = list(expansion) == [target] and expansion[target].coeffs == {
                    (1,): 1
                }
            if not good:
                rules_ok = False
    checks.append((f"pr{r}-product-rules", rules_ok, "cup below the fold, q above"))
    power = ring.basis_power(1, r + 1)
    nonzero = {f: poly for f, poly in power.items() if not poly.is_zero()}
    power_ok = list(nonzero) == [0] and nonzero[0].coeffs == {(1,): 1}
    checks.append((f"pr{r}-hyperplane-power", power_ok, "(r+1)-st power is q"))
    pres = pr_presentation(r)
    t_var = pres.variable(0)
    q_var = pres.variable(1)
    high = pres.ring_zero() + GradedPoly.constant(pres.degrees, 1, pres.names)
    for _ in range(r + 2):
        high = high * t_var
    nf_ok = pres.normal_form(high) == pres.normal_form(q_var * t_var)
    checks.append((f"pr{r}-normal-form", nf_ok, "T^(r+2) reduces to q*T"))
    return checks


def _grassmannian_checks(p: int, n: int):
    checks = []
    k = n - p
    try:
        ideal = grassmannian_presentation(p, n)
        checks.append(("gr-presentation-rank", True, f"graded ranks match, basis count verified"))
    except ArithmeticError as exc:
        return [("gr-presentation-rank", False, str(exc))]

    def lift(poly: GradedPoly) -> GradedPoly:
        return GradedPoly(
            ideal.degrees, {mono + (0,): c for mono, c in poly.coeffs.items()}, ideal.names
        )

    classical_ok = True
    for i in range(p + 1, n):
        reduced = ideal.normal_form(lift(s_r_determinant(p, n, i)))
        if not reduced.is_zero():
            classical_ok = False
    top = ideal.normal_form(lift(s_r_determinant(p, n, n)))
    q_mono = (0,) * k + (1,)
    if top.coeffs != {q_mono: -((-1) ** k)}:
        classical_ok = False
    checks.append(("gr-classical-relations", classical_ok, "S_i vanish at q=0"))

    identity = s_r_determinant(p, n, n)
    sign = -1
    for i in range(1, k + 1):
        term = s_r_determinant(p, n, n - i) * GradedPoly.variable(
            identity.degrees, i - 1, identity.names
        )
        identity = identity + term.scale(sign)
        sign = -sign
    checks.append(("gr-alternating-identity", identity.is_zero(), "formal identity"))

    sigma_k = ideal.variable(k - 1)
    dual = lift(s_r_determinant(p, n, p))
    product = ideal.normal_form(sigma_k * dual)
    q_poly = ideal.variable(k)
    seed_ok = product == ideal.normal_form(q_poly)
    checks.append(("gr-seed-product", seed_ok, "sigma_k * sigma_(1^p) = q"))
    return checks


def _boundary_checks(d_max: int):
    checks = []
    table = nd_plane(max(d_max, 2))
    for d in range(2, max(d_max, 2) + 1):
        counts = boundary_mod.intersection_counts(d, table)
        checks.append(
            (
                f"boundary-equivalence-d{d}",
                counts.balanced,
                f"lhs={counts.lhs.total} rhs={counts.rhs.total}",
            )
        )
    p2 = builtin_model("p2")
    oracle_ok = True
    for n in range(0, 6):
        for degree in range(0, 3):
            fast = {x.unordered() for x in boundary_mod.enumerate_boundary(n, (degree,))}
            slow = _brute_force_boundary(p2, n, (degree,))
            if fast != slow:
                oracle_ok = False
    checks.append(("boundary-enumeration-oracle", oracle_ok, "n<=5, degree<=2 sweep"))
    return checks


def _brute_force_boundary(model, n, beta):
    found = set()
    splits = [()]
    for entry in beta:
        splits = [prefix + (x,) for prefix in splits for x in range(entry + 1)]
    for mask in range(1 << n):
        side_a = frozenset(x for x in range(1, n + 1) if mask >> (x - 1) & 1)
        side_b = frozenset(range(1, n + 1)) - side_a
        for beta1 in splits:
            beta2 = tuple(x - y for x, y in zip(beta, beta1))
            datum = boundary_mod.BoundaryDatum(side_a, side_b, beta1, beta2)
            if datum.is_valid(n, beta):
                found.add(datum.unordered())
    return found


def _cmd_verify(config: RunConfig) -> Report:
    if config.suite not in {"wdvv", "rings", "boundary", "all"}:
        raise ConfigError("--suite must be wdvv, rings, boundary, or all")
    name = config.model or "p2"
    d_max = config.d_max if config.d_max is not None else 3
    if d_max < 1:
        raise ConfigError("--dmax must be at least 1")
    report = Report(name, "verify", {"suite": config.suite, "dmax": d_max}, [])

    grass = name.startswith("gr") and name[2:].isdigit() and len(name) == 4
    if grass:
        if config.suite not in {"rings", "all"}:
            raise ConfigError(f"model {name} supports only the rings suite")
        report.checks.extend(_grassmannian_checks(int(name[2]), int(name[3])))
        return report

    model = _resolve_model(RunConfig(command="verify", model=name, model_file=config.model_file, r=config.r))
    if config.suite in {"wdvv", "all"}:
        table = standard_table(model, _solve_c1_max(model, d_max))
        report.checks.extend(_wdvv_checks(model, table, config.trunc))
    if config.suite in {"rings", "all"}:
        table = standard_table(model, _solve_c1_max(model, d_max))
        report.checks.extend(_ring_checks(model, table, config.trunc))
        if model.name.startswith("p") and model.name[1:].isdigit() and model.dimension <= 4 and model.name != "p1xp1":
            report.checks.extend(_pr_checks(model.dimension))
    if config.suite == "boundary" or (config.suite == "all" and model.name == "p2"):
        if model.name != "p2":
            raise ConfigError("the boundary suite replays the plane argument; use --model p2")
        report.checks.extend(_boundary_checks(d_max))
    return report


# ---------------------------------------------------------------------------
# Argument parsing and entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gwcalc",
        description="Exact rational-curve counts and quantum cohomology checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, model: bool = True) -> None:
        p.add_argument("--format", choices=["json", "csv", "text"], default="text")
        if model:
            p.add_argument("--model", help="built-in model name (p1, p2, p3, q3, pr, p1xp1)")
            p.add_argument("--model-file", help="path to a model description file")
            p.add_argument("--r", type=int, help="projective dimension for --model pr")

    p_nd = sub.add_parser("nd", help="plane-curve counts through d_max")
    p_nd.add_argument("--dmax", type=int, required=True)
    p_nd.add_argument("--check", action="store_true", help="re-derive via boundary counts")
    add_common(p_nd, model=False)

    p_f3 = sub.add_parser("fano3", help="line/point incidence counts on p3 or q3")
    p_f3.add_argument("--space", required=True)
    p_f3.add_argument("--dmax", type=int, required=True)
    p_f3.add_argument("--check", action="store_true")
    add_common(p_f3, model=False)

    p_wc = sub.add_parser("wdvv-count", help="number of independent associativity equations")
    p_wc.add_argument("--m", type=int, required=True)
    add_common(p_wc, model=False)

    p_solve = sub.add_parser("solve", help="solve the associativity system from seeds")
    p_solve.add_argument("--dmax", type=int, required=True)
    p_solve.add_argument("--trunc", type=int, help="series total-degree cap for --check")
    p_solve.add_argument("--check", action="store_true", help="run the residual sweep")
    add_common(p_solve)

    p_qr = sub.add_parser("qring", help="small quantum ring structure constants")
    add_common(p_qr)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("--suite", required=True)
    p_ver.add_argument("--dmax", type=int)
    p_ver.add_argument("--trunc", type=int)
    add_common(p_ver)
    return parser


_HANDLERS = {
    "nd": _cmd_nd,
    "fano3": _cmd_fano3,
    "wdvv-count": _cmd_wdvv_count,
    "solve": _cmd_solve,
    "qring": _cmd_qring,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        command=args.command,
        model=getattr(args, "model", None),
        model_file=getattr(args, "model_file", None),
        r=getattr(args, "r", None),
        d_max=getattr(args, "dmax", None),
        m=getattr(args, "m", None),
        space=getattr(args, "space", None),
        trunc=getattr(args, "trunc", None),
        suite=getattr(args, "suite", None),
        fmt=args.format,
        check=getattr(args, "check", False),
    )
    try:
        report = _HANDLERS[config.command](config)
    except (ConfigError, ModelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SolveError, TableDepthError, ArithmeticError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(report.render(config.fmt))
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
