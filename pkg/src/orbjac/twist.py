"""Products of twisted sectors in the orbifold Jacobian algebra of (W, H).

The structure constant of xi_h . xi_h' is computed by building the mixed
potentials W-bar/W-tilde, their difference quotients g and f, the
Clifford-module operator eta_h and its exponential, and then extracting the
theta_{I_{hh'}} coefficient of h'_*(exp(eta_h) theta_{I_h}) . exp(eta_h') theta_{I_h'}.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Mapping

from .clifford import CliffordElement, coefficient_of, normal_ordered_product, pushforward, theta_partial
from .milnor import JacobianRing
from .poly import PolyRing, Polynomial, exact_div
from .scalars import CycloRational, FieldScalar, as_scalar
from .symmetry import DiagonalGroup, GroupElement, act_on_poly, project_fixed

__all__ = [
    "LGOrbifold",
    "TwistedElement",
    "NotInvariantError",
    "UnsupportedProductError",
]


class NotInvariantError(ValueError):
    """The potential is not preserved by the group action."""


class UnsupportedProductError(NotImplementedError):
    """Product of two non-identity sectors with non-constant coefficients."""


class TwistedElement:
    """A finite sum of coefficient * xi_h over sectors h of one cyclic group."""

    def __init__(self, group: DiagonalGroup, terms: Mapping[GroupElement, Polynomial] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[GroupElement, Polynomial] = {}
        for h, c in items:
            acc[h] = acc[h] + c if h in acc else c
        self.group = group
        self.terms = {h: c for h, c in acc.items() if not c.is_zero()}

    def sectors(self) -> list[GroupElement]:
        return sorted(self.terms, key=lambda h: h.k)

    def sector(self, h: GroupElement) -> Polynomial | None:
        return self.terms.get(h)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TwistedElement") -> "TwistedElement":
        return TwistedElement(self.group, list(self.terms.items()) + list(other.terms.items()))

    def scale(self, s) -> "TwistedElement":
        return TwistedElement(self.group, {h: c * s for h, c in self.terms.items()})

    def __neg__(self) -> "TwistedElement":
        return self.scale(-1)

    def __sub__(self, other: "TwistedElement") -> "TwistedElement":
        return self + (-other)

    def scalar_names(self) -> set[str]:
        out: set[str] = set()
        for c in self.terms.values():
            out |= c.scalar_names()
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedElement):
            return NotImplemented
        return (self - other).is_zero()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[h]})*xi[{h}]" for h in self.sectors())

    __repr__ = __str__


class LGOrbifold:
    """A potential W in the unprimed variables with a diagonal cyclic symmetry."""

    def __init__(self, W: Polynomial, group: DiagonalGroup):
        if W.uses_primed():
            raise ValueError("W must only use unprimed variables")
        if group.n != W.ring.n:
            raise ValueError("group weights must match the number of variables")
        self.W = W
        self.group = group
        self.ring: PolyRing = W.ring
        self.n = W.ring.n
        for h in group.elements():
            if act_on_poly(h, W) != W:
                raise NotInvariantError(f"W is not invariant under {h}")
        self._cache: dict = {}

    def _memo(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    def element(self, k: int) -> GroupElement:
        return self.group.element(k)

    # mixed potentials --------------------------------------------------------
    def _check(self, j: int, i: int) -> None:
        if not 0 <= j <= i <= self.n:
            raise IndexError(f"need 0 <= j <= i <= {self.n}, got j={j}, i={i}")

    def wbar(self, h: GroupElement, j: int, i: int) -> Polynomial:
        """W(x_1',...,x_j', x_{j+1},...,x_i, h x_{i+1},...,h x_n)."""
        self._check(j, i)

        def compute():
            R = self.ring
            assignment = {}
            for k in range(self.n):
                if k < j:
                    assignment[k] = R.var(self.n + k)
                elif k >= i:
                    assignment[k] = R.var(k).scale(h.eigenvalue(k))
            return self.W.subs(assignment)

        return self._memo(("wbar", h.k, j, i), compute)

    def wtilde(self, h: GroupElement, j: int, i: int) -> Polynomial:
        """As wbar, but the first j variables are kept when h fixes them and zeroed otherwise."""
        self._check(j, i)

        def compute():
            R = self.ring
            moved = set(h.non_fixed())
            assignment = {}
            for k in range(self.n):
                if k < j:
                    if k in moved:
                        assignment[k] = R.zero()
                elif k >= i:
                    assignment[k] = R.var(k).scale(h.eigenvalue(k))
            return self.W.subs(assignment)

        return self._memo(("wtilde", h.k, j, i), compute)

    def _moves(self, h: GroupElement, i: int) -> bool:
        return (i - 1) in h.non_fixed()

    def _shift(self, h: GroupElement, i: int) -> Polynomial:
        # x_i - h x_i
        x = self.ring.var(i - 1)
        return x - x.scale(h.eigenvalue(i - 1))

    def _prime_gap(self, i: int) -> Polynomial:
        # x_i' - x_i
        return self.ring.var(self.n + i - 1) - self.ring.var(i - 1)

    def g_coeff(self, h: GroupElement, j: int, i: int) -> Polynomial:
        if not 1 <= j <= i <= self.n:
            raise IndexError(f"g needs 1 <= j <= i <= {self.n}")

        def compute():
            if not self._moves(h, i):
                return self.ring.zero()
            wb = lambda a, b: self.wbar(h, a, b)  # noqa: E731
            if j < i:
                num = (wb(j, i) - wb(j - 1, i)) - (wb(j, i - 1) - wb(j - 1, i - 1))
                return exact_div(num, self._prime_gap(j) * self._shift(h, i))
            xp = self.ring.var(self.n + i - 1)
            twisted_gap = xp - self.ring.var(i - 1).scale(h.eigenvalue(i - 1))
            first = exact_div(wb(i, i) - wb(i - 1, i - 1), twisted_gap)
            second = exact_div(wb(i - 1, i) - wb(i - 1, i - 1), self._shift(h, i))
            return exact_div(first - second, self._prime_gap(i))

        return self._memo(("g", h.k, j, i), compute)

    def f_coeff(self, h: GroupElement, j: int, i: int) -> Polynomial:
        if not 1 <= j < i <= self.n:
            raise IndexError(f"f needs 1 <= j < i <= {self.n}")

        def compute():
            if not (self._moves(h, i) and self._moves(h, j)):
                return self.ring.zero()
            wt = lambda a, b: self.wtilde(h, a, b)  # noqa: E731
            num = (wt(j, i) - wt(j - 1, i)) - (wt(j, i - 1) - wt(j - 1, i - 1))
            return exact_div(num, self._shift(h, j) * self._shift(h, i))

        return self._memo(("f", h.k, j, i), compute)

    # the Clifford-module operator -------------------------------------------------
    def eta_apply(self, h: GroupElement, e: CliffordElement) -> CliffordElement:
        R = self.ring
        out = CliffordElement(R)
        for (I, J), c in e.terms.items():
            sign = -1 if len(I) % 2 else 1
            single = CliffordElement(R, {(I, ()): c})
            tail = CliffordElement._from_word(R, tuple(("d", b) for b in J))
            for i in I:
                if not self._moves(h, i):
                    continue
                d_i = theta_partial(single, i)
                for j in range(1, i + 1):
                    g = self.g_coeff(h, j, i)
                    if g.is_zero():
                        continue
                    piece = normal_ordered_product(d_i, CliffordElement.d(R, [j]))
                    piece = normal_ordered_product(piece, tail)
                    out = out + piece * (g if sign == 1 else -g)
            for a, i in enumerate(I):
                for j in I[:a]:
                    f = self.f_coeff(h, j, i)
                    if f.is_zero():
                        continue
                    d2 = theta_partial(theta_partial(single, i), j)
                    out = out + normal_ordered_product(d2, tail) * f
        return out

    def exp_eta(self, h: GroupElement, e: CliffordElement) -> CliffordElement:
        """sum_k eta_h^k(e) / k!; eta_h lowers theta-degree, so the sum is finite."""
        result = e
        term = e
        k = 0
        while True:
            k += 1
            term = self.eta_apply(h, term)
            if term.is_zero():
                break
            if k > self.n + 1:
                raise RuntimeError("eta_h failed to be nilpotent")
            result = result + term.map_coefficients(lambda p, k=k: p.scale(CycloRational.from_rational(1) / factorial(k)))
        return result

    def exp_eta_generator(self, h: GroupElement) -> CliffordElement:
        """exp(eta_h)(theta_{I_h})."""
        I = tuple(i + 1 for i in h.non_fixed())
        return self._memo(("expgen", h.k), lambda: self.exp_eta(h, CliffordElement.theta(self.ring, I)))

    # structure constants -------------------------------------------------------
    def twisted_quotient(self, h: GroupElement, p: Polynomial) -> Polynomial:
        """pi_h: x_i' -> h_i x_i."""
        R = self.ring
        return p.subs({self.n + i: R.var(i).scale(h.eigenvalue(i)) for i in range(self.n)})

    def _factors(self, h: GroupElement, hp: GroupElement):
        left = pushforward(hp, self.exp_eta_generator(h))
        right = self.exp_eta_generator(hp)
        return left, right

    def sigma_tilde(self, h: GroupElement, hp: GroupElement) -> Polynomial:
        """theta_{I_{hh'}}-coefficient of h'_*(exp(eta_h) theta_{I_h}) . exp(eta_h') theta_{I_h'}, in S."""
        left, right = self._factors(h, hp)
        target = tuple(i + 1 for i in (h * hp).non_fixed())
        return coefficient_of(normal_ordered_product(left, right), target)

    def sigma(self, h: GroupElement, hp: GroupElement) -> Polynomial:
        """pi_{hh'} of sigma-tilde, before any Jacobian reduction."""

        def compute():
            hh = h * hp
            left, right = self._factors(h, hp)
            # pi is a ring map on the central coefficients, so apply it before multiplying
            left = left.map_coefficients(lambda p: self.twisted_quotient(hh, p))
            right = right.map_coefficients(lambda p: self.twisted_quotient(hh, p))
            target = tuple(i + 1 for i in hh.non_fixed())
            return coefficient_of(normal_ordered_product(left, right), target)

        return self._memo(("sigma", h.k, hp.k), compute)

    # sector rings and products --------------------------------------------------
    def sector_ring(self, h: GroupElement) -> JacobianRing:
        return self._memo(
            ("jac", h.k), lambda: JacobianRing.build(project_fixed(self.W, h), variables=h.fixed())
        )

    def jacobian_ring(self) -> JacobianRing:
        return self.sector_ring(self.group.identity)

    def reduce_in_sector(self, h: GroupElement, p: Polynomial) -> Polynomial:
        return self.sector_ring(h).normal_form(project_fixed(p, h))

    def reduce(self, t: TwistedElement) -> TwistedElement:
        return TwistedElement(t.group, {h: self.reduce_in_sector(h, c) for h, c in t.terms.items()})

    def xi_product(self, h: GroupElement, hp: GroupElement) -> TwistedElement:
        hh = h * hp
        return TwistedElement(self.group, {hh: self.reduce_in_sector(hh, self.sigma(h, hp))})

    def generator(self, h: GroupElement, coeff=1) -> TwistedElement:
        c = coeff if isinstance(coeff, Polynomial) else self.ring.constant(as_scalar(coeff))
        return TwistedElement(self.group, {h: c})

    def multiply(self, a: TwistedElement, b: TwistedElement) -> TwistedElement:
        """Distributive product; non-identity sectors need constant coefficients."""
        out = TwistedElement(self.group)
        for h, f in a.terms.items():
            for hp, g in b.terms.items():
                if f.is_constant() and g.is_constant():
                    s = f.constant_term() * g.constant_term()
                    term = self.xi_product(h, hp).scale(s)
                elif h.is_identity():
                    term = TwistedElement(self.group, {hp: self.reduce_in_sector(hp, f * g)})
                elif hp.is_identity():
                    term = TwistedElement(self.group, {h: self.reduce_in_sector(h, f * g)})
                else:
                    raise UnsupportedProductError(
                        "products of non-constant twisted coefficients are not defined here"
                    )
                out = out + term
        return self.reduce(out)

    def is_sector_invariant(self, h: GroupElement) -> bool:
        from .symmetry import xi_action_factor

        return xi_action_factor(self.group.generator, h) == FieldScalar.one()
