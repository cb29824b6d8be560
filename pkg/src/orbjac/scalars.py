"""Exact scalars: rationals, the cyclotomic field Q(w) with w = exp(2*pi*i/12),
polynomials in formal parameters over Q(w), and their fraction field.

Elements of Q(w) are stored in the basis 1, w, w^2, w^3 modulo the twelfth
cyclotomic polynomial w^4 - w^2 + 1.  Every value is immutable.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Union

Rational = Fraction

__all__ = [
    "Rational",
    "CycloRational",
    "ParamPolynomial",
    "FieldScalar",
    "UnsupportedOrderError",
    "root_of_unity",
    "param",
    "as_scalar",
    "is_zero",
    "scalar_arith",
]


class UnsupportedOrderError(ValueError):
    """Raised for roots of unity whose order does not divide 12."""


def _reduce_list(c: list[int]) -> list[int]:
    # w^k = w^(k-2) - w^(k-4)
    for k in range(len(c) - 1, 3, -1):
        v = c[k]
        if v:
            c[k - 2] += v
            c[k - 4] -= v
    return c[:4] + [0] * (4 - len(c[:4]))


def _power_table() -> tuple[tuple[int, int, int, int], ...]:
    table = []
    for m in range(12):
        c = [0] * (m + 1)
        c[m] = 1
        table.append(tuple(_reduce_list(c)))
    return tuple(table)


_POW = _power_table()


class CycloRational:
    """An element c0 + c1*w + c2*w^2 + c3*w^3 of Q(w), w a primitive 12th root of unity.

    Stored as four integers over one positive common denominator in lowest terms.
    """

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, coeffs: Iterable[Union[int, Fraction]] = (0,)):
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        nums = [int(f * den) for f in fr]
        self._set(_reduce_list(nums), den)

    def _set(self, nums: list[int], den: int) -> None:
        g = gcd(gcd(gcd(nums[0], nums[1]), gcd(nums[2], nums[3])), den)
        if g > 1:
            nums = [v // g for v in nums]
            den //= g
        if not any(nums):
            den = 1
        self._n = tuple(nums)
        self._d = den
        self._hash = None

    @classmethod
    def _raw(cls, nums: list[int], den: int) -> "CycloRational":
        obj = cls.__new__(cls)
        if den < 0:
            nums = [-v for v in nums]
            den = -den
        obj._set(nums, den)
        return obj

    @classmethod
    def from_rational(cls, r: Union[int, Fraction]) -> "CycloRational":
        r = Fraction(r)
        return cls._raw([r.numerator, 0, 0, 0], r.denominator)

    @classmethod
    def w(cls, power: int = 1) -> "CycloRational":
        return cls._raw(list(_POW[power % 12]), 1)

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(v, self._d) for v in self._n)  # type: ignore[return-value]

    def is_zero(self) -> bool:
        return not any(self._n)

    def is_rational(self) -> bool:
        return not (self._n[1] or self._n[2] or self._n[3])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._n[0], self._d)

    def __add__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        d1, d2 = self._d, other._d
        return CycloRational._raw([a * d2 + b * d1 for a, b in zip(self._n, other._n)], d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> "CycloRational":
        return CycloRational._raw([-a for a in self._n], self._d)

    def __sub__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._n, other._n
        c = [0] * 7
        for i in range(4):
            ai = a[i]
            if ai:
                for j in range(4):
                    if b[j]:
                        c[i + j] += ai * b[j]
        return CycloRational._raw(_reduce_list(c), self._d * other._d)

    __rmul__ = __mul__

    def conjugate(self, k: int) -> "CycloRational":
        """Image under the Galois automorphism w -> w^k (k coprime to 12)."""
        if gcd(k, 12) != 1:
            raise ValueError("k must be coprime to 12")
        acc = [0, 0, 0, 0]
        for j, v in enumerate(self._n):
            if v:
                img = _POW[(j * k) % 12]
                for t in range(4):
                    acc[t] += v * img[t]
        return CycloRational._raw(acc, self._d)

    def norm(self) -> Fraction:
        n = self * self.conjugate(5) * self.conjugate(7) * self.conjugate(11)
        return n.rational()

    def inverse(self) -> "CycloRational":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(w)")
        co = self.conjugate(5) * self.conjugate(7) * self.conjugate(11)
        nrm = (self * co).rational()
        return co * CycloRational.from_rational(1 / nrm)

    def __truediv__(self, other):
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_cyclo(other) * self.inverse()

    def __pow__(self, e: int) -> "CycloRational":
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloRational.from_rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _as_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._n[0], self._d))
            else:
                self._hash = hash((self._n, self._d))
        return self._hash

    def to_complex(self) -> complex:
        w = cmath.exp(2j * cmath.pi / 12)
        return sum(float(c) * w**k for k, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"CycloRational({self})"

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mono = "w" if k == 1 else f"w^{k}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _as_cyclo(x):
    if isinstance(x, CycloRational):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloRational.from_rational(x)
    return NotImplemented


def root_of_unity(order: int, power: int = 1) -> CycloRational:
    """exp(2*pi*i*power/order) as an element of Q(w); ``order`` must divide 12."""
    if order <= 0 or 12 % order:
        raise UnsupportedOrderError(f"root of unity of order {order} is not in Q(w12)")
    return CycloRational.w((12 // order) * power)


# ----------------------------------------------------------------------------
# polynomials in formal parameters

# Display/sort order for the parameters the built-in cases use.
PARAM_ORDER = ("phi", "psi", "q", "a", "b", "a1", "a2", "a3", "a4", "cL")
_RANK = {name: i for i, name in enumerate(PARAM_ORDER)}

Mono = tuple  # tuple of (name, exponent) pairs, sorted by _param_key


def _param_key(name: str) -> tuple:
    return (_RANK.get(name, len(_RANK)), name)


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for k, e in m2:
        d[k] = d.get(k, 0) + e
    return tuple(sorted(d.items(), key=lambda kv: _param_key(kv[0])))


def _mono_deg(m: Mono) -> int:
    return sum(e for _, e in m)


def _mono_order_key(m: Mono) -> tuple:
    # graded, then lexicographic in the parameter order
    return (_mono_deg(m), tuple((-_param_key(n)[0], n, e) for n, e in m))


def _mono_str(m: Mono) -> str:
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in m)


class ParamPolynomial:
    """Sparse polynomial in named parameters with CycloRational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Mono, CycloRational] | None = None):
        self.terms: dict[Mono, CycloRational] = {
            m: c for m, c in (terms or {}).items() if not c.is_zero()
        }
        self._hash = None

    @classmethod
    def constant(cls, c) -> "ParamPolynomial":
        c = _as_cyclo(c)
        return cls({(): c})

    @classmethod
    def symbol(cls, name: str) -> "ParamPolynomial":
        return cls({((name, 1),): CycloRational.from_rational(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> CycloRational:
        return self.terms.get((), CycloRational())

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def names(self) -> set[str]:
        return {n for m in self.terms for n, _ in m}

    def __add__(self, other: "ParamPolynomial") -> "ParamPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return ParamPolynomial(out)

    def __neg__(self) -> "ParamPolynomial":
        return ParamPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "ParamPolynomial") -> "ParamPolynomial":
        return self + (-other)

    def __mul__(self, other: "ParamPolynomial") -> "ParamPolynomial":
        out: dict[Mono, CycloRational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                out[m] = out[m] + c if m in out else c
        return ParamPolynomial(out)

    def scale(self, c: CycloRational) -> "ParamPolynomial":
        if c.is_zero():
            return ParamPolynomial()
        return ParamPolynomial({m: v * c for m, v in self.terms.items()})

    def conjugate(self, k: int) -> "ParamPolynomial":
        return ParamPolynomial({m: c.conjugate(k) for m, c in self.terms.items()})

    def leading(self) -> tuple[Mono, CycloRational]:
        m = max(self.terms, key=_mono_order_key)
        return m, self.terms[m]

    def components(self) -> list[dict[Mono, Fraction]]:
        """Split into four rational polynomials along the basis 1, w, w^2, w^3."""
        comps: list[dict[Mono, Fraction]] = [{}, {}, {}, {}]
        for m, c in self.terms.items():
            for k, v in enumerate(c.coeffs):
                if v:
                    comps[k][m] = v
        return comps

    @classmethod
    def from_components(cls, comps: list[dict[Mono, Fraction]]) -> "ParamPolynomial":
        acc: dict[Mono, list[Fraction]] = {}
        for k, comp in enumerate(comps):
            for m, v in comp.items():
                acc.setdefault(m, [Fraction(0)] * 4)[k] = v
        return cls({m: CycloRational(v) for m, v in acc.items()})

    def evaluate(self, values: Mapping[str, complex]) -> complex:
        total = 0j
        for m, c in self.terms.items():
            t = c.to_complex()
            for n, e in m:
                t *= values[n] ** e
            total += t
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def sorted_terms(self) -> list[tuple[Mono, CycloRational]]:
        return sorted(self.terms.items(), key=lambda t: _mono_order_key(t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            sign, body = _term_str(c, _mono_str(m))
            pieces.append((sign, body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"ParamPolynomial({self})"


def _term_str(c: CycloRational, mono: str) -> tuple[str, str]:
    """Render coefficient times a monomial string as (sign, body)."""
    if c.is_rational():
        r = c.rational()
        sign = "-" if r < 0 else "+"
        r = abs(r)
        if not mono:
            return sign, str(r)
        return sign, mono if r == 1 else f"{r}*{mono}"
    nz = [v for v in c.coeffs if v]
    if len(nz) == 1:
        # single basis element: keep the sign outside
        sign = "-" if nz[0] < 0 else "+"
        body = str(-c if nz[0] < 0 else c)
        return sign, body if not mono else f"{body}*{mono}"
    body = f"({c})"
    return "+", body if not mono else f"{body}*{mono}"


# ----------------------------------------------------------------------------
# gcd over Q of parameter polynomials (delegated to sympy's sparse rings)


@lru_cache(maxsize=64)
def _sympy_ring(names: tuple[str, ...]):
    from sympy import QQ
    from sympy.polys.rings import ring

    return ring(",".join(names), QQ)[0]


def _to_sympy(R, names: tuple[str, ...], poly: dict[Mono, Fraction]):
    from sympy import QQ

    idx = {n: i for i, n in enumerate(names)}
    d = {}
    for m, v in poly.items():
        e = [0] * len(names)
        for n, k in m:
            e[idx[n]] = k
        d[tuple(e)] = QQ(v.numerator, v.denominator)
    return R.from_dict(d)


def _from_sympy(p, names: tuple[str, ...]) -> dict[Mono, Fraction]:
    out = {}
    for e, v in p.to_dict().items():
        m = tuple((names[i], k) for i, k in enumerate(e) if k)
        out[m] = Fraction(int(v.numerator), int(v.denominator))
    return out


def _cancel_rational_content(
    num: ParamPolynomial, den: ParamPolynomial
) -> tuple[ParamPolynomial, ParamPolynomial]:
    """Divide num and den (den rational) by the gcd over Q of den and the
    components of num."""
    names = tuple(sorted(num.names() | den.names(), key=_param_key))
    if not names:
        return num, den
    R = _sympy_ring(names)
    d = _to_sympy(R, names, den.components()[0])
    comps = [_to_sympy(R, names, c) for c in num.components()]
    g = d
    for c in comps:
        if g.is_ground:
            break
        if c:
            g = g.gcd(c)
    if g.is_ground:
        return num, den
    d = d.exquo(g)
    comps = [c.exquo(g) if c else c for c in comps]
    return (
        ParamPolynomial.from_components([_from_sympy(c, names) for c in comps]),
        ParamPolynomial.from_components([_from_sympy(d, names), {}, {}, {}]),
    )


_ONE = ParamPolynomial.constant(1)


class FieldScalar:
    """A rational function num/den in formal parameters with Q(w) coefficients.

    The stored form is canonical: den has rational coefficients, shares no
    common factor over Q with num, and its leading coefficient is 1.  Equality
    is decided by cross-multiplication, so it never depends on that form.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: ParamPolynomial, den: ParamPolynomial | None = None, *, _canonical=False):
        if den is None:
            den = _ONE
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _canonical:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(num: ParamPolynomial, den: ParamPolynomial):
        if num.is_zero():
            return num, _ONE
        if den.is_constant():
            c = den.constant_value()
            if c == 1:
                return num, den
            return num.scale(c.inverse()), _ONE
        if not den.is_rational():
            co = den.conjugate(5) * den.conjugate(7) * den.conjugate(11)
            num, den = num * co, den * co
        num, den = _cancel_rational_content(num, den)
        lc = den.leading()[1].inverse()
        num, den = num.scale(lc), den.scale(lc)
        if den.is_constant():
            return num, _ONE
        return num, den

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls) -> "FieldScalar":
        return cls(ParamPolynomial(), _canonical=True)

    @classmethod
    def one(cls) -> "FieldScalar":
        return cls(_ONE, _canonical=True)

    @classmethod
    def from_cyclo(cls, c) -> "FieldScalar":
        return cls(ParamPolynomial.constant(_as_cyclo(c)), _canonical=True)

    # predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_constant() and self.num == self.den

    def is_constant(self) -> bool:
        return self.den.is_constant() and self.num.is_constant()

    def is_rational_number(self) -> bool:
        return self.is_constant() and self.num.constant_value().is_rational()

    def constant_value(self) -> CycloRational:
        if not self.is_constant():
            raise ValueError(f"{self} depends on parameters")
        return self.num.constant_value() / self.den.constant_value()

    def names(self) -> set[str]:
        return self.num.names() | self.den.names()

    # arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            if self.den.is_constant():
                return FieldScalar(self.num + other.num, _canonical=True)
            return FieldScalar(self.num + other.num, self.den)
        return FieldScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "FieldScalar":
        return FieldScalar(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_constant() and other.den.is_constant():
            return FieldScalar(self.num * other.num, _canonical=True)
        return FieldScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def scale(self, c: CycloRational) -> "FieldScalar":
        """Multiply by a constant of Q(w); keeps the canonical form."""
        if c.is_zero():
            return FieldScalar.zero()
        return FieldScalar(self.num.scale(c), self.den, _canonical=True)

    def inverse(self) -> "FieldScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return FieldScalar(self.den, self.num)

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if other.is_constant():
            return self.scale(other.constant_value().inverse())
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def __pow__(self, e: int) -> "FieldScalar":
        if e < 0:
            return self.inverse() ** (-e)
        result = FieldScalar.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def evaluate(self, values: Mapping[str, complex]) -> complex:
        return self.num.evaluate(values) / self.den.evaluate(values)

    def __str__(self) -> str:
        if self.den.is_constant():
            return str(self.num)
        n = str(self.num)
        if len(self.num.terms) > 1:
            n = f"({n})"
        d = str(self.den)
        single = len(self.den.terms) == 1 and len(next(iter(self.den.terms))) == 1
        if not single or next(iter(self.den.terms.values())) != 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self) -> str:
        return f"FieldScalar({self})"


ScalarLike = Union[int, Fraction, CycloRational, ParamPolynomial, FieldScalar]


def as_scalar(x) -> FieldScalar:
    if isinstance(x, FieldScalar):
        return x
    if isinstance(x, (int, Fraction, CycloRational)):
        return FieldScalar.from_cyclo(x)
    if isinstance(x, ParamPolynomial):
        return FieldScalar(x, _canonical=True)
    return NotImplemented


def param(name: str) -> FieldScalar:
    """The formal parameter ``name`` as a scalar."""
    return FieldScalar(ParamPolynomial.symbol(name), _canonical=True)


def is_zero(a: ScalarLike) -> bool:
    return as_scalar(a).is_zero()


def scalar_arith(a: ScalarLike, b: ScalarLike, op: str) -> FieldScalar:
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
