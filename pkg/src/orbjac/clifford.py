"""Normal-ordered words in theta_1..theta_n, d_1..d_n with polynomial coefficients.

Relations: theta_i theta_j = -theta_j theta_i, d_i d_j = -d_j d_i,
d_i theta_j = -theta_j d_i + delta_ij.  A key (I, J) stands for
theta_{i1}...theta_{ik} d_{j1}...d_{jl} with I, J strictly increasing
(1-based indices).  Coefficients live in S and are central.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .poly import PolyRing, Polynomial
from .scalars import CycloRational

__all__ = [
    "CliffordElement",
    "theta_partial",
    "theta_partial2",
    "normal_ordered_product",
    "pushforward",
    "coefficient_of",
    "normal_order_word",
]

Key = tuple[tuple[int, ...], tuple[int, ...]]


def _sort_sign(idx: list[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting an anticommuting block; 0 on repeats."""
    if len(set(idx)) != len(idx):
        return 0, ()
    inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return (-1 if inversions % 2 else 1), tuple(sorted(idx))


@lru_cache(maxsize=None)
def normal_order_word(word: tuple[tuple[str, int], ...]) -> tuple[tuple[Key, int], ...]:
    """Rewrite a word of letters ('t', i) / ('d', i) into normal order.

    Returns ((I, J), integer coefficient) pairs.
    """
    for pos in range(len(word) - 1):
        (a, i), (b, j) = word[pos], word[pos + 1]
        if a == "d" and b == "t":
            out: dict[Key, int] = {}
            swapped = word[:pos] + (word[pos + 1], word[pos]) + word[pos + 2 :]
            for key, c in normal_order_word(swapped):
                out[key] = out.get(key, 0) - c
            if i == j:
                for key, c in normal_order_word(word[:pos] + word[pos + 2 :]):
                    out[key] = out.get(key, 0) + c
            return tuple((k, c) for k, c in sorted(out.items()) if c)
    s1, thetas = _sort_sign([i for a, i in word if a == "t"])
    s2, ds = _sort_sign([i for a, i in word if a == "d"])
    if s1 * s2 == 0:
        return ()
    return (((thetas, ds), s1 * s2),)


@lru_cache(maxsize=None)
def _key_product(k1: Key, k2: Key) -> tuple[tuple[Key, int], ...]:
    word = (
        tuple(("t", i) for i in k1[0])
        + tuple(("d", j) for j in k1[1])
        + tuple(("t", i) for i in k2[0])
        + tuple(("d", j) for j in k2[1])
    )
    return normal_order_word(word)


class CliffordElement:
    """Finite sum of coefficient * theta_I d_J over S."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Key, Polynomial] | None = None):
        self.ring = ring
        self.terms: dict[Key, Polynomial] = {
            (tuple(k[0]), tuple(k[1])): c for k, c in (terms or {}).items() if not c.is_zero()
        }

    @classmethod
    def theta(cls, ring: PolyRing, indices: Iterable[int]) -> "CliffordElement":
        """theta_{i1} ... theta_{ik} in the given (possibly unsorted) order."""
        word = tuple(("t", i) for i in indices)
        return cls._from_word(ring, word)

    @classmethod
    def d(cls, ring: PolyRing, indices: Iterable[int]) -> "CliffordElement":
        return cls._from_word(ring, tuple(("d", i) for i in indices))

    @classmethod
    def scalar(cls, ring: PolyRing, c) -> "CliffordElement":
        p = c if isinstance(c, Polynomial) else ring.constant(c)
        return cls(ring, {((), ()): p})

    @classmethod
    def _from_word(cls, ring: PolyRing, word) -> "CliffordElement":
        return cls(ring, {k: ring.constant(c) for k, c in normal_order_word(word)})

    def is_zero(self) -> bool:
        return not self.terms

    def theta_degree(self) -> int:
        return max((len(k[0]) for k in self.terms), default=-1)

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return CliffordElement(self.ring, out)

    def __neg__(self) -> "CliffordElement":
        return CliffordElement(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self + (-other)

    def __mul__(self, other) -> "CliffordElement":
        if isinstance(other, CliffordElement):
            return normal_ordered_product(self, other)
        return self.map_coefficients(lambda c: c * other)

    def __rmul__(self, other) -> "CliffordElement":
        return self.map_coefficients(lambda c: other * c)

    def map_coefficients(self, fn: Callable[[Polynomial], Polynomial]) -> "CliffordElement":
        return CliffordElement(self.ring, {k: fn(c) for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return (self - other).is_zero()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (I, J), c in sorted(self.terms.items(), key=lambda t: (len(t[0][0]), t[0][0], len(t[0][1]), t[0][1])):
            word = " ".join([f"t{i}" for i in I]) or ""
            dword = " ".join([f"d{j}" for j in J])
            pieces = [f"({c})"] + [w for w in (word, dword) if w]
            parts.append(" * ".join(pieces))
        return " + ".join(parts)

    __repr__ = __str__


def normal_ordered_product(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    out: dict[Key, Polynomial] = {}
    for k1, c1 in a.terms.items():
        for k2, c2 in b.terms.items():
            rewritten = _key_product(k1, k2)
            if not rewritten:
                continue
            c = c1 * c2
            for key, sign in rewritten:
                t = c if sign == 1 else c.scale(CycloRational.from_rational(sign))
                out[key] = out[key] + t if key in out else t
    return CliffordElement(a.ring, out)


def _drop(I: tuple[int, ...], i: int) -> tuple[int, tuple[int, ...]] | None:
    if i not in I:
        return None
    pos = I.index(i)
    return (-1 if pos % 2 else 1), I[:pos] + I[pos + 1 :]


def theta_partial(e: CliffordElement, i: int) -> CliffordElement:
    """Left derivative in theta_i: d(theta_I)/d(theta_i) = (-1)^pos theta_{I minus i}."""
    out: dict[Key, Polynomial] = {}
    for (I, J), c in e.terms.items():
        hit = _drop(I, i)
        if hit is None:
            continue
        sign, rest = hit
        out[(rest, J)] = c if sign == 1 else -c
    return CliffordElement(e.ring, out)


def theta_partial2(e: CliffordElement, j: int, i: int) -> CliffordElement:
    """d^2/(d theta_j d theta_i): differentiate in theta_i first, then theta_j."""
    return theta_partial(theta_partial(e, i), j)


def pushforward(h, e: CliffordElement) -> CliffordElement:
    """h_*: x_i' -> h_i^{-1} x_i' in coefficients, theta_I d_J scaled by the h^{-1}-action."""
    ring = e.ring
    n = ring.n
    ev = [h.eigenvalue(i) for i in range(n)]
    inv = [v.inverse() for v in ev]
    assignment = {n + i: ring.var(n + i).scale(inv[i]) for i in range(n) if ev[i] != 1}
    out: dict[Key, Polynomial] = {}
    for (I, J), c in e.terms.items():
        factor = CycloRational.from_rational(1)
        for i in I:
            factor = factor * ev[i - 1]
        for j in J:
            factor = factor * inv[j - 1]
        c = c.subs(assignment) if assignment else c
        out[(I, J)] = c.scale(factor)
    return CliffordElement(ring, out)


def coefficient_of(e: CliffordElement, I: Iterable[int]) -> Polynomial:
    """Coefficient of theta_I (with no d's); I is sorted before lookup."""
    return e.terms.get((tuple(sorted(I)), ()), e.ring.zero())
