"""Sparse polynomials in x_1..x_n and primed copies x_1'..x_n' over FieldScalar.

Monomials are exponent tuples of length 2n (unprimed block first).  The
monomial order everywhere is graded-lex with x_1 > ... > x_n > x_1' > ... > x_n'.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .scalars import CycloRational, FieldScalar, as_scalar

__all__ = [
    "PolyRing",
    "Polynomial",
    "NonExactDivisionError",
    "grlex_key",
    "partial_derivative",
    "substitute",
    "exact_div",
    "divide",
    "hessian_det",
]


class NonExactDivisionError(ArithmeticError):
    """Raised by exact_div when the divisor does not divide; carries the remainder."""

    def __init__(self, remainder: "Polynomial"):
        super().__init__(f"division is not exact, remainder {remainder}")
        self.remainder = remainder


def grlex_key(m: tuple[int, ...]) -> tuple:
    return (sum(m), m)


@dataclass(frozen=True)
class PolyRing:
    """Ring descriptor: n base variables and their primed copies."""

    base_names: tuple[str, ...] = ("x", "y", "z")

    @property
    def n(self) -> int:
        return len(self.base_names)

    @property
    def names(self) -> tuple[str, ...]:
        return self.base_names + tuple(v + "'" for v in self.base_names)

    @property
    def nvars(self) -> int:
        return 2 * self.n

    def index(self, name: str) -> int:
        return self.names.index(name)

    def var(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): FieldScalar.one()})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: as_scalar(c)})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): as_scalar(coeff)})


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero scalars."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple[int, ...], FieldScalar]):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}
        self._hash = None

    # basic queries ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.ring.nvars}

    def constant_term(self) -> FieldScalar:
        return self.terms.get((0,) * self.ring.nvars, FieldScalar.zero())

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def used_vars(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def uses_primed(self) -> bool:
        n = self.ring.n
        return any(any(m[n:]) for m in self.terms)

    def leading_monomial(self) -> tuple[int, ...]:
        return max(self.terms, key=grlex_key)

    def leading_term(self) -> tuple[tuple[int, ...], FieldScalar]:
        m = self.leading_monomial()
        return m, self.terms[m]

    def coefficient(self, exps: Sequence[int]) -> FieldScalar:
        return self.terms.get(tuple(exps), FieldScalar.zero())

    def scalar_names(self) -> set[str]:
        out: set[str] = set()
        for c in self.terms.values():
            out |= c.names()
        return out

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return self.ring.constant(s)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            s = as_scalar(other)
            if s is NotImplemented:
                return NotImplemented
            return self.scale(s)
        out: dict[tuple[int, ...], FieldScalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                out[m] = out[m] + c if m in out else c
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, s) -> "Polynomial":
        if isinstance(s, CycloRational):
            return Polynomial(self.ring, {m: c.scale(s) for m, c in self.terms.items()})
        s = as_scalar(s)
        if s.is_zero():
            return self.ring.zero()
        if s.is_constant():
            return self.scale(s.constant_value())
        return Polynomial(self.ring, {m: c * s for m, c in self.terms.items()})

    def mul_term(self, mono: tuple[int, ...], coeff: FieldScalar) -> "Polynomial":
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self.terms.items()},
        )

    def __truediv__(self, other):
        s = as_scalar(other)
        if s is NotImplemented:
            if isinstance(other, Polynomial) and other.is_constant() and not other.is_zero():
                s = other.constant_term()
            else:
                return NotImplemented
        return self.scale(1 / s)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return (self - other).is_zero()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # calculus and substitution ----------------------------------------------
    def diff(self, var: int) -> "Polynomial":
        return partial_derivative(self, var)

    def subs(self, assignment: Mapping[int, "Polynomial"]) -> "Polynomial":
        return substitute(self, assignment)

    def evaluate(self, point: Sequence[complex], params: Mapping[str, complex]) -> complex:
        total = 0j
        for m, c in self.terms.items():
            t = c.evaluate(params)
            for v, e in zip(point, m):
                if e:
                    t *= v**e
            total += t
        return total

    # rendering ------------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[tuple[int, ...], FieldScalar]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.names
        out = ""
        for k, (m, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
            )
            sign, body = _coeff_str(c, mono)
            if k == 0:
                out = ("-" if sign == "-" else "") + body
            else:
                out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _coeff_str(c: FieldScalar, mono: str) -> tuple[str, str]:
    if c.is_rational_number():
        r = c.constant_value().rational()
        sign = "-" if r < 0 else "+"
        r = abs(r)
        if not mono:
            return sign, str(r)
        return sign, mono if r == 1 else f"{r}*{mono}"
    neg = -c
    if neg.den.is_constant() and len(neg.num.terms) == 1 and _simple(neg):
        body = str(neg)
        return "-", body if not mono else f"{body}*{mono}"
    if c.den.is_constant() and len(c.num.terms) == 1 and _simple(c):
        body = str(c)
        return "+", body if not mono else f"{body}*{mono}"
    body = f"({c})"
    return "+", body if not mono else f"{body}*{mono}"


def _simple(c: FieldScalar) -> bool:
    # a single monomial with a positive rational coefficient prints without parentheses
    (m, v), = c.num.terms.items()
    return v.is_rational() and v.rational() > 0


def partial_derivative(p: Polynomial, var: int) -> Polynomial:
    out = {}
    for m, c in p.terms.items():
        e = m[var]
        if e:
            mm = list(m)
            mm[var] = e - 1
            out[tuple(mm)] = c.scale(CycloRational.from_rational(e))
    return Polynomial(p.ring, out)


def _monomial_image(img: Polynomial):
    """Return (target var or None, scalar) if img is c*x_k or a constant c."""
    if len(img.terms) != 1:
        return None
    (m, c), = img.terms.items()
    nz = [i for i, e in enumerate(m) if e]
    if not nz:
        return (None, c)
    if len(nz) == 1 and m[nz[0]] == 1:
        return (nz[0], c)
    return None


def substitute(p: Polynomial, assignment: Mapping[int, Polynomial]) -> Polynomial:
    """Simultaneous substitution x_i -> assignment[i]; other variables are kept."""
    ring = p.ring
    images = {i: q for i, q in assignment.items()}
    linear = {i: _monomial_image(q) for i, q in images.items()}
    if all(v is not None for v in linear.values()):
        out: dict[tuple[int, ...], FieldScalar] = {}
        for m, c in p.terms.items():
            new = [0] * ring.nvars
            coeff = c
            dead = False
            for i, e in enumerate(m):
                if not e:
                    continue
                if i in linear:
                    tgt, s = linear[i]
                    if s.is_zero():
                        dead = True
                        break
                    coeff = coeff * s**e if not s.is_one() else coeff
                    if tgt is not None:
                        new[tgt] += e
                else:
                    new[i] += e
            if dead:
                continue
            key = tuple(new)
            out[key] = out[key] + coeff if key in out else coeff
        return Polynomial(ring, out)
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        if (i, e) not in powers:
            powers[(i, e)] = images[i] ** e
        return powers[(i, e)]

    result = ring.zero()
    for m, c in p.terms.items():
        kept = [0] * ring.nvars
        term = ring.constant(c)
        for i, e in enumerate(m):
            if not e:
                continue
            if i in images:
                term = term * power(i, e)
            else:
                kept[i] = e
        result = result + term.mul_term(tuple(kept), FieldScalar.one())
    return result


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def divide(p: Polynomial, divisors: Sequence[Polynomial]) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division in grlex order; returns (quotients, remainder)."""
    ring = p.ring
    leads = [d.leading_term() for d in divisors]
    quots: list[dict] = [{} for _ in divisors]
    rem: dict[tuple[int, ...], FieldScalar] = {}
    work = dict(p.terms)
    while work:
        m = max(work, key=grlex_key)
        c = work[m]
        for k, (lm, lc) in enumerate(leads):
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                t = c / lc
                quots[k][shift] = quots[k][shift] + t if shift in quots[k] else t
                for dm, dc in divisors[k].terms.items():
                    mm = tuple(a + b for a, b in zip(dm, shift))
                    v = work.get(mm)
                    nv = -(dc * t) if v is None else v - dc * t
                    if nv.is_zero():
                        work.pop(mm, None)
                    else:
                        work[mm] = nv
                break
        else:
            rem[m] = c
            del work[m]
    return [Polynomial(ring, q) for q in quots], Polynomial(ring, rem)


def exact_div(p: Polynomial, d: Polynomial) -> Polynomial:
    """Return q with p = q*d; raise NonExactDivisionError otherwise."""
    if d.is_zero():
        raise ZeroDivisionError("exact_div by the zero polynomial")
    (q,), r = divide(p, [d])
    if not r.is_zero():
        raise NonExactDivisionError(r)
    return q


def _det(m: list[list[Polynomial]]) -> Polynomial:
    size = len(m)
    if size == 1:
        return m[0][0]
    if size == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = None
    for col in range(size):
        if m[0][col].is_zero():
            continue
        minor = [row[:col] + row[col + 1 :] for row in m[1:]]
        term = m[0][col] * _det(minor)
        if col % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else m[0][0].ring.zero()


def hessian_matrix(W: Polynomial, variables: Iterable[int] | None = None) -> list[list[Polynomial]]:
    idx = list(range(W.ring.n)) if variables is None else list(variables)
    first = [W.diff(i) for i in idx]
    return [[first[a].diff(j) for j in idx] for a in range(len(idx))]


def hessian_det(W: Polynomial, n: int | None = None) -> Polynomial:
    """Determinant of the matrix of second partials in the first n unprimed
    variables, by cofactor expansion."""
    if W.uses_primed():
        raise ValueError("hessian_det expects a polynomial in unprimed variables")
    n = W.ring.n if n is None else n
    return _det(hessian_matrix(W, range(n)))
