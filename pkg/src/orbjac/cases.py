"""Built-in elliptic orbifold cases and their end-to-end checks.

Each case bundles a potential, its cyclic symmetry, the Kodaira-Spencer
images of the two divisor classes (with an explicit 1/cL), and the reduction
relations used when comparing the point class with the Hessian.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Mapping, Sequence

from .milnor import JacobianRing
from .parser import parse_polynomial, parse_scalar
from .poly import PolyRing, Polynomial
from .qseries import verify_series_identity
from .scalars import FieldScalar, param
from .symmetry import DiagonalGroup, xi_action_factor
from .twist import LGOrbifold, TwistedElement

__all__ = [
    "CaseDefinition",
    "CaseError",
    "CancellationError",
    "BUILTIN_CASES",
    "builtin_case",
    "load_case_file",
    "case_from_mapping",
    "ks_point_class",
    "verify_main_theorem",
    "verify_trace",
    "verify_reductions",
    "verify_case",
    "TheoremReport",
    "TraceReport",
    "ReductionReport",
    "CaseReport",
]


class CaseError(ValueError):
    """Malformed or inconsistent case data."""


class CancellationError(RuntimeError):
    """cL failed to cancel from cL^2 * (ks_h . ks_v)."""


class CaseDefinition:
    def __init__(
        self,
        name: str,
        W: Polynomial,
        group: DiagonalGroup,
        ks_h: Mapping[int, FieldScalar],
        ks_v: Mapping[int, FieldScalar],
        params: Sequence[str],
        expected_mu: int | None = None,
        weights: Sequence[Fraction] | None = None,
        reductions: Sequence[tuple[str, str]] = (),
        series_case: str | None = None,
    ):
        self.name = name
        self.W = W
        self.group = group
        self.params = tuple(params)
        self.expected_mu = expected_mu
        self.weights = None if weights is None else tuple(Fraction(w) for w in weights)
        self.reduction_texts = tuple(reductions)
        self.series_case = series_case
        self.orbifold = LGOrbifold(W, group)
        self.ks_h = self._twisted(ks_h)
        self.ks_v = self._twisted(ks_v)
        for h in self.ks_h.sectors() + self.ks_v.sectors():
            if xi_action_factor(group.generator, h) != FieldScalar.one():
                raise CaseError(f"sector {h} is not invariant under the group")

    def _twisted(self, data: Mapping[int, FieldScalar]) -> TwistedElement:
        R = self.W.ring
        return TwistedElement(self.group, {self.group.element(k): R.constant(c) for k, c in data.items()})

    @property
    def ring(self) -> PolyRing:
        return self.W.ring

    @property
    def group_order(self) -> int:
        return self.group.order

    @cached_property
    def jacobian(self) -> JacobianRing:
        return JacobianRing.build(self.W, weights=self.weights)

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self.ring, self.params)

    @property
    def reductions(self) -> list[tuple[str, Polynomial, Polynomial]]:
        return [(f"{l} = {r}", self.parse(l), self.parse(r)) for l, r in self.reduction_texts]

    def __repr__(self) -> str:
        return f"CaseDefinition({self.name!r}, order={self.group.order})"


# built-in data ---------------------------------------------------------------------
# w is the primitive 12th root of unity: rho = w^4, i = w^3, zeta = w^2, sqrt(3)i = 2w^2 - 1.

_Z6_DEN = "(4*q^4*a4^2 + 3*a2 - 12*q^4*a2*a3)"

BUILTIN_CASES: dict[str, dict] = {
    "z3": {
        "W": "phi*(x^3 + y^3 + z^3) - psi*x*y*z",
        "params": ["phi", "psi", "cL"],
        "group": {"order": 3, "weights": [1, 1, 1]},
        "ks_h": {1: "-w^4/cL", 2: "-w^8/cL"},
        "ks_v": {1: "-w^8/cL", 2: "-w^4/cL"},
        "expected_mu": 8,
        "weights": ["1/3", "1/3", "1/3"],
        "reductions": [
            ("y^3", "psi/(3*phi)*x*y*z"),
            ("z^3", "psi/(3*phi)*x*y*z"),
        ],
        "series": "z3",
    },
    "z4": {
        "W": "-q*x*y*z + q^6*x^2 + a*(y^4 + z^4) + b*y^2*z^2",
        "params": ["q", "a", "b", "cL"],
        "group": {"order": 4, "weights": [2, 1, 1]},
        "ks_h": {1: "(-1 - w^3)/(2*cL)", 3: "(-1 + w^3)/(2*cL)"},
        "ks_v": {1: "(1 - w^3)/(2*cL)", 3: "(1 + w^3)/(2*cL)"},
        "expected_mu": 9,
        "weights": ["1/2", "1/4", "1/4"],
        "reductions": [
            ("x*y*z", "2*q^5*x^2"),
            ("y^2*z^2", "4*q^10*x^2"),
            ("2*a*y^4", "(q^6 - 4*b*q^10)*x^2"),
            ("2*a*z^4", "(q^6 - 4*b*q^10)*x^2"),
        ],
        "series": "z4",
    },
    "z6": {
        "W": "-q*x*y*z + q^6*x^2 + a1*y^3 + a2*z^6 + a3*y^2*z^2 + a4*y*z^4",
        "params": ["q", "a1", "a2", "a3", "a4", "cL"],
        "group": {"order": 6, "weights": [3, 2, 1]},
        "ks_h": {1: "(-w^2 - w^4)/(3*cL)", 5: "(w^2 + w^4)/(3*cL)"},
        "ks_v": {1: "(1 + w^2)/(3*cL)", 5: "(1 - w^4)/(3*cL)"},
        "expected_mu": 10,
        "weights": ["1/2", "1/3", "1/6"],
        "reductions": [
            ("x*y*z", "2*q^5*x^2"),
            (
                "a1*y^3",
                "(-8*q^14*a3*a4^2 - 16*q^10*a2*a3 + 32*q^14*a2*a3^2 - 24*q^14*a1*a2*a4"
                f" + 2*q^10*a4^2 + 2*q^6*a2)/{_Z6_DEN}*x^2",
            ),
            ("z^6", f"q^6*(-8*q^4*a3 - 48*q^8*a1*a4 + 16*q^8*a3^2 + 1)/{_Z6_DEN}*x^2"),
            ("y*z^4", f"2*q^10*(36*q^4*a1*a2 - 4*q^4*a3*a4 + a4)/{_Z6_DEN}*x^2"),
        ],
        "series": None,
    },
}


def case_from_mapping(name: str, data: Mapping) -> CaseDefinition:
    try:
        params = list(data.get("params", []))
        if "cL" not in params:
            params.append("cL")
        ring = PolyRing(tuple(data.get("variables", ("x", "y", "z"))))
        W = parse_polynomial(data["W"], ring, params)
        g = data["group"]
        group = DiagonalGroup(int(g["order"]), tuple(int(w) for w in g["weights"]))
        ks_h = {int(k): parse_scalar(v, params) for k, v in data["ks_h"].items()}
        ks_v = {int(k): parse_scalar(v, params) for k, v in data["ks_v"].items()}
    except KeyError as exc:
        raise CaseError(f"case {name!r} is missing field {exc.args[0]!r}") from None
    weights = data.get("weights")
    return CaseDefinition(
        name,
        W,
        group,
        ks_h,
        ks_v,
        params,
        expected_mu=data.get("expected_mu"),
        weights=None if weights is None else [Fraction(w) for w in weights],
        reductions=[tuple(r) if not isinstance(r, Mapping) else (r["lhs"], r["rhs"]) for r in data.get("reductions", [])],
        series_case=data.get("series"),
    )


@lru_cache(maxsize=None)
def builtin_case(name: str) -> CaseDefinition:
    if name not in BUILTIN_CASES:
        raise CaseError(f"unknown case {name!r}; expected one of {', '.join(BUILTIN_CASES)}")
    return case_from_mapping(name, BUILTIN_CASES[name])


def load_case_file(path: str | Path) -> CaseDefinition:
    """Read a TOML case description (same fields as the built-in tables)."""
    try:
        import tomllib
    except ModuleNotFoundError:  # Python < 3.11
        import tomli as tomllib

    path = Path(path)
    with path.open("rb") as fh:
        data = tomllib.load(fh)
    return case_from_mapping(data.get("name", path.stem), data)


# verification -----------------------------------------------------------------------


def ks_point_class(case: CaseDefinition, reverse: bool = False) -> TwistedElement:
    """cL^2 * ks(PD[C_h]) . ks(PD[C_v]), over all sectors, reduced."""
    orb = case.orbifold
    a, b = (case.ks_v, case.ks_h) if reverse else (case.ks_h, case.ks_v)
    cL = param("cL")
    prod = orb.multiply(a, b).scale(cL * cL)
    if "cL" in prod.scalar_names():
        raise CancellationError(f"cL survives in the point class of {case.name}: {prod}")
    return prod


@dataclass(frozen=True)
class TheoremReport:
    case: str
    holds: bool
    lhs: Polynomial
    rhs: Polynomial
    difference: Polynomial
    mu: int
    group_order: int
    other_sectors: dict = field(default_factory=dict)


def verify_main_theorem(case: CaseDefinition) -> TheoremReport:
    J = case.orbifold.jacobian_ring()
    point = ks_point_class(case)
    ident = case.group.identity
    lhs = point.sector(ident) or case.ring.zero()
    rhs = J.hessian_class().scale(FieldScalar.one() / (-(case.group_order * J.mu)))
    diff = J.normal_form(lhs - rhs)
    others = {str(h): point.terms[h] for h in point.sectors() if not h.is_identity()}
    return TheoremReport(case.name, diff.is_zero(), lhs, rhs, diff, J.mu, case.group_order, others)


@dataclass(frozen=True)
class TraceReport:
    case: str
    holds: bool
    value: FieldScalar


def verify_trace(case: CaseDefinition) -> TraceReport:
    """<cL ks(pt), cL 1>_res with ks(pt) = |G| ks_orb(pt); the cL^2 is already inside the point class."""
    J = case.orbifold.jacobian_ring()
    point = ks_point_class(case).sector(case.group.identity) or case.ring.zero()
    value = J.pairing(point * case.group_order, case.ring.one())
    return TraceReport(case.name, value == FieldScalar.one(), value)


@dataclass(frozen=True)
class ReductionReport:
    case: str
    holds: bool
    results: tuple[tuple[str, bool], ...]

    @property
    def failed(self) -> list[str]:
        return [label for label, ok in self.results if not ok]


def verify_reductions(case: CaseDefinition) -> ReductionReport:
    J = case.orbifold.jacobian_ring()
    results = tuple((label, J.normal_form(l - r).is_zero()) for label, l, r in case.reductions)
    return ReductionReport(case.name, all(ok for _, ok in results), results)


@dataclass(frozen=True)
class CaseReport:
    case: str
    theorem: TheoremReport
    trace: TraceReport
    reductions: ReductionReport
    series: object | None
    mu_ok: bool

    @property
    def ok(self) -> bool:
        series_ok = self.series is None or self.series.holds
        return self.theorem.holds and self.trace.holds and self.reductions.holds and series_ok and self.mu_ok

    def as_dict(self) -> dict:
        return {
            "case": self.case,
            "theorem_ok": self.theorem.holds,
            "trace_ok": self.trace.holds,
            "reductions_ok": self.reductions.holds,
            "series_ok": None if self.series is None else self.series.holds,
            "mu_ok": self.mu_ok,
            "lhs": str(self.theorem.lhs),
            "rhs": str(self.theorem.rhs),
            "mu": self.theorem.mu,
            "group_order": self.theorem.group_order,
            "failed_reductions": self.reductions.failed,
            "other_sectors": {k: str(v) for k, v in self.theorem.other_sectors.items()},
            "series": None if self.series is None else self.series.as_dict(),
        }


def verify_case(case: CaseDefinition, series_order: int | None = 200) -> CaseReport:
    theorem = verify_main_theorem(case)
    trace = verify_trace(case)
    reductions = verify_reductions(case)
    series = None
    if case.series_case and series_order:
        series = verify_series_identity(case.series_case, series_order)
    mu_ok = case.expected_mu is None or case.expected_mu == theorem.mu
    return CaseReport(case.name, theorem, trace, reductions, series, mu_ok)
