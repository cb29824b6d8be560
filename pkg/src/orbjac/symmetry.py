"""Diagonal cyclic group actions on the polynomial ring."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Polynomial
from .scalars import CycloRational, FieldScalar, root_of_unity

__all__ = ["DiagonalGroup", "GroupElement", "act_on_poly", "fixed_indices", "project_fixed", "xi_action_factor", "is_invariant"]


@dataclass(frozen=True)
class DiagonalGroup:
    """Cyclic group of order m whose generator sends x_i to zeta_m^{w_i} x_i."""

    order: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        root_of_unity(self.order, 1)  # validates that the order divides 12

    @property
    def n(self) -> int:
        return len(self.weights)

    def element(self, k: int) -> "GroupElement":
        return GroupElement(self, k % self.order)

    @property
    def identity(self) -> "GroupElement":
        return self.element(0)

    @property
    def generator(self) -> "GroupElement":
        return self.element(1)

    def elements(self) -> list["GroupElement"]:
        return [self.element(k) for k in range(self.order)]


@dataclass(frozen=True)
class GroupElement:
    group: DiagonalGroup
    k: int

    def eigenvalue(self, i: int) -> CycloRational:
        """h_i, with h . x_i = h_i x_i (0-based i)."""
        return root_of_unity(self.group.order, self.k * self.group.weights[i])

    def eigenvalues(self) -> tuple[CycloRational, ...]:
        return tuple(self.eigenvalue(i) for i in range(self.group.n))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.group.element(self.k + other.k)

    def inverse(self) -> "GroupElement":
        return self.group.element(-self.k)

    def is_identity(self) -> bool:
        return self.k == 0

    def non_fixed(self) -> tuple[int, ...]:
        """0-based indices i with h . x_i != x_i."""
        return tuple(i for i in range(self.group.n) if (self.k * self.group.weights[i]) % self.group.order)

    def fixed(self) -> tuple[int, ...]:
        moved = set(self.non_fixed())
        return tuple(i for i in range(self.group.n) if i not in moved)

    def __str__(self) -> str:
        return "1" if self.k == 0 else ("chi" if self.k == 1 else f"chi^{self.k}")


def act_on_poly(h: GroupElement, p: Polynomial, which: str = "unprimed") -> Polynomial:
    """Apply x_i -> h_i x_i on the unprimed, primed, or both variable blocks."""
    n = p.ring.n
    if which not in ("unprimed", "primed", "both"):
        raise ValueError(f"unknown block {which!r}")
    offsets = {"unprimed": (0,), "primed": (n,), "both": (0, n)}[which]
    assignment = {}
    for off in offsets:
        for i in range(n):
            ev = h.eigenvalue(i)
            if ev != 1:
                assignment[off + i] = p.ring.var(off + i).scale(ev)
    return p.subs(assignment) if assignment else p


def fixed_indices(h: GroupElement) -> tuple[frozenset[int], frozenset[int]]:
    """(I_h, I^h) as 1-based index sets: moved and fixed variables."""
    moved = frozenset(i + 1 for i in h.non_fixed())
    return moved, frozenset(range(1, h.group.n + 1)) - moved


def project_fixed(p: Polynomial, h: GroupElement) -> Polynomial:
    """Set every variable moved by h to zero (the restriction W -> W^h)."""
    zero = p.ring.zero()
    return p.subs({i: zero for i in h.non_fixed()})


def xi_action_factor(hprime: GroupElement, h: GroupElement) -> FieldScalar:
    """The scalar by which h' acts on the sector generator xi_h."""
    factor = CycloRational.from_rational(1)
    for i in h.non_fixed():
        factor = factor * hprime.eigenvalue(i).inverse()
    return FieldScalar.from_cyclo(factor)


def is_invariant(p: Polynomial, group: DiagonalGroup) -> bool:
    return all(act_on_poly(h, p) == p for h in group.elements())

