"""Truncated power series in q with rational coefficients, the theta-type
coefficient series of the elliptic mirror potentials, and checks of the two
power-series identities that follow from the orbifold product."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Callable, Iterator, Mapping

__all__ = [
    "TruncatedSeries",
    "TruncationMismatchError",
    "SeriesReport",
    "q_d_dq",
    "theta_series",
    "SERIES_NAMES",
    "verify_series_identity",
    "identity_sides",
]


class TruncationMismatchError(ValueError):
    """Arithmetic between series truncated at different orders."""


class TruncatedSeries:
    """sum_{n <= N} c_n q^n, stored sparsely; everything above q^N is discarded."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[int, Fraction | int] | None = None):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        self.order = order
        clean: dict[int, Fraction] = {}
        for e, c in (coeffs or {}).items():
            if e < 0:
                raise ValueError(f"negative exponent {e} in a power series")
            c = Fraction(c)
            if e <= order and c:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.coeffs = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, order: int, exponent: int, coeff=1) -> "TruncatedSeries":
        return cls(order, {exponent: coeff})

    @classmethod
    def constant(cls, order: int, c=1) -> "TruncatedSeries":
        return cls(order, {0: c})

    def __getitem__(self, e: int) -> Fraction:
        return self.coeffs.get(e, Fraction(0))

    def valuation(self) -> int | None:
        return min(self.coeffs, default=None)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise TruncationMismatchError(f"orders differ: {self.order} vs {other.order}")

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return TruncatedSeries(self.order, out)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.order, {e: c * other for e, c in self.coeffs.items()})
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        N = self.order
        out: dict[int, Fraction] = {}
        right = sorted(other.coeffs.items())
        for e1, c1 in self.coeffs.items():
            for e2, c2 in right:
                e = e1 + e2
                if e > N:
                    break
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return TruncatedSeries(N, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            raise ValueError("negative powers are not power series")
        result = TruncatedSeries.constant(self.order)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return TruncatedSeries(self.order, {e + k: c for e, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self.coeffs.items())

    def __str__(self) -> str:
        if not self.coeffs:
            return f"O(q^{self.order + 1})"
        out = ""
        for e, c in self.items():
            mag = abs(c)
            power = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not power:
                body = str(mag)
            else:
                body = power if mag == 1 else f"{mag}*{power}"
            if not out:
                out = body if c > 0 else f"-{body}"
            else:
                out += f" {'+' if c > 0 else '-'} {body}"
        return f"{out} + O(q^{self.order + 1})"

    __repr__ = __str__


def q_d_dq(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(a.order, {e: e * c for e, c in a.coeffs.items()})


# index enumeration -----------------------------------------------------------


def _integers_until(exponent: Callable[[int], int], N: int) -> Iterator[int]:
    """All k in Z with exponent(k) <= N, for an exponent that grows in |k|."""
    for direction in (count(0), count(-1, -1)):
        for k in direction:
            if exponent(k) > N:
                break
            yield k


def _phi(N: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for k in _integers_until(lambda k: (6 * k + 3) ** 2, N):
        e = (6 * k + 3) ** 2
        out[e] = out.get(e, Fraction(0)) + (-1) ** (k + 1) * (k + Fraction(1, 2))
    return out


def _psi(N: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for k in _integers_until(lambda k: (6 * k + 1) ** 2, N):
        e = (6 * k + 1) ** 2
        out[e] = out.get(e, Fraction(0)) + (-1) ** (k + 1) * (6 * k + 1)
    return out


def _c333(N: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for k in _integers_until(lambda k: (6 * k + 1) ** 2, N):
        e = (6 * k + 1) ** 2
        out[e] = out.get(e, Fraction(0)) + (-1) ** k
    return out


def _a244(N: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for r in count(0):
        e = 16 * (2 * r + 1) ** 2 - 4
        if e > N:
            break
        out[e] = out.get(e, Fraction(0)) + (2 * r + 1)
    for r in count(0):
        if 16 * (2 * r + 1) * (2 * r + 3) - 4 > N:
            break
        for s in count(r + 1):
            e = 16 * (2 * r + 1) * (2 * s + 1) - 4
            if e > N:
                break
            out[e] = out.get(e, Fraction(0)) + (2 * r + 2 * s + 2)
    return out


def _b244(N: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for r in count(1):
        # for s = 1 both exponents are smallest; stop once both exceed N
        if min(32 * (2 * r - 1) - 4, 64 * r - 4) > N:
            break
        for s in count(1):
            e1 = 16 * (2 * r - 1) * 2 * s - 4
            e2 = 64 * r * s - 4
            if min(e1, e2) > N:
                break
            if e1 <= N:
                out[e1] = out.get(e1, Fraction(0)) - (4 * r + 4 * s - 2)
            if e2 <= N:
                out[e2] = out.get(e2, Fraction(0)) + (2 * r + 2 * s)
    return out


_BUILDERS: dict[str, Callable[[int], dict[int, Fraction]]] = {
    "phi": _phi,
    "psi": _psi,
    "c333": _c333,
    "a244": _a244,
    "b244": _b244,
}
SERIES_NAMES = tuple(_BUILDERS)


def theta_series(name: str, N: int) -> TruncatedSeries:
    if name not in _BUILDERS:
        raise ValueError(f"unknown series {name!r}; expected one of {', '.join(SERIES_NAMES)}")
    if N < 1:
        raise ValueError("truncation order must be at least 1")
    return TruncatedSeries(N, _BUILDERS[name](N))


# identities --------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesReport:
    case: str
    order: int
    holds: bool
    first_mismatch: int | None
    lhs_coeff: Fraction | None = None
    rhs_coeff: Fraction | None = None

    def as_dict(self) -> dict:
        return {
            "case": self.case,
            "order": self.order,
            "holds": self.holds,
            "first_mismatch": self.first_mismatch,
            "lhs": None if self.lhs_coeff is None else str(self.lhs_coeff),
            "rhs": None if self.rhs_coeff is None else str(self.rhs_coeff),
        }


def identity_sides(
    case: str, N: int, overrides: Mapping[str, TruncatedSeries] | None = None
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the denominator-cleared identity for the given case."""
    overrides = dict(overrides or {})

    def get(name: str) -> TruncatedSeries:
        return overrides[name] if name in overrides else theta_series(name, N)

    if case == "z3":
        phi, psi, c = get("phi"), get("psi"), get("c333")
        lhs = c * c * (psi * q_d_dq(phi) - phi * q_d_dq(psi)) * Fraction(1, 24)
        rhs = (phi ** 3 * -9 + psi ** 3 * Fraction(1, 3)) * phi
        return lhs, rhs
    if case == "z4":
        a, b = get("a244"), get("b244")
        da, db = q_d_dq(a), q_d_dq(b)
        # q^3 * d/dq = q^2 * (q d/dq), so every term stays a power series
        lhs = (a.shift(8) * 4 + da.shift(8) - (b * da).shift(12) * 4 + (a * db).shift(12) * 4) * Fraction(1, 32)
        rhs = (
            a.shift(8) * Fraction(1, 2)
            - (b * a).shift(12) * 4
            + (b * b * a).shift(16) * 8
            - (a * a * a).shift(16) * 32
        )
        return lhs, rhs
    raise ValueError(f"no series identity for case {case!r} (available: z3, z4)")


def verify_series_identity(
    case: str, N: int, overrides: Mapping[str, TruncatedSeries] | None = None
) -> SeriesReport:
    lhs, rhs = identity_sides(case, N, overrides)
    diff = lhs - rhs
    if diff.is_zero():
        return SeriesReport(case, N, True, None)
    e = diff.valuation()
    return SeriesReport(case, N, False, e, lhs[e], rhs[e])
