"""Jacobian (Milnor) rings: Groebner bases of the partials, normal forms,
Milnor numbers, and the residue pairing normalised by Res(det Hess W) = mu."""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import Polynomial, _det, divide, grlex_key, hessian_matrix
from .scalars import FieldScalar

__all__ = [
    "JacobianRing",
    "NonIsolatedSingularityError",
    "UnsupportedSingularityError",
    "groebner_basis",
    "quasi_homogeneous_weights",
    "max_degree_default",
]

MAX_DEGREE_ENV = "LG_ORBIFOLD_MAX_DEGREE"


class NonIsolatedSingularityError(ValueError):
    """The Jacobian ideal has infinite colength (or the degree bound was hit)."""


class UnsupportedSingularityError(ValueError):
    """Residues need a quasi-homogeneous W with a one-dimensional socle."""


def max_degree_default() -> int:
    return int(os.environ.get(MAX_DEGREE_ENV, "60"))


def _lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monic(p: Polynomial) -> Polynomial:
    return p.scale(p.leading_term()[1].inverse())


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    mf, cf = f.leading_term()
    mg, cg = g.leading_term()
    lcm = _lcm(mf, mg)
    one = FieldScalar.one()
    a = f.mul_term(tuple(x - y for x, y in zip(lcm, mf)), one / cf)
    b = g.mul_term(tuple(x - y for x, y in zip(lcm, mg)), one / cg)
    return a - b


def groebner_basis(gens: Iterable[Polynomial], max_degree: int | None = None) -> list[Polynomial]:
    """Reduced grlex Groebner basis by Buchberger's algorithm with the
    coprime and chain criteria."""
    max_degree = max_degree_default() if max_degree is None else max_degree
    G: list[Polynomial] = [_monic(g) for g in gens if not g.is_zero()]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    def pair_key(p):
        lcm = _lcm(G[p[0]].leading_monomial(), G[p[1]].leading_monomial())
        return (grlex_key(lcm), p)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        mi, mj = G[i].leading_monomial(), G[j].leading_monomial()
        lcm = _lcm(mi, mj)
        if all(a == 0 or b == 0 for a, b in zip(mi, mj)):
            continue
        if any(
            k not in (i, j)
            and _divides(G[k].leading_monomial(), lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(G))
        ):
            continue
        if sum(lcm) > max_degree:
            raise NonIsolatedSingularityError(
                f"Groebner computation exceeded degree bound {max_degree} (set {MAX_DEGREE_ENV})"
            )
        _, r = divide(_spoly(G[i], G[j]), G)
        if not r.is_zero():
            G.append(_monic(r))
            k = len(G) - 1
            pairs |= {(a, k) for a in range(k)}
    # minimise, then interreduce
    G.sort(key=lambda g: grlex_key(g.leading_monomial()))
    minimal: list[Polynomial] = []
    for g in G:
        if not any(_divides(h.leading_monomial(), g.leading_monomial()) for h in minimal):
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        lm, lc = g.leading_term()
        _, r = divide(g - g.ring.monomial(lm, lc), others)
        reduced.append(_monic(g.ring.monomial(lm, lc) + r))
    return reduced


def quasi_homogeneous_weights(W: Polynomial, variables: Sequence[int]) -> tuple[Fraction, ...] | None:
    """Rational weights q_v with sum q_v e_v = 1 on every monomial of W, if unique."""
    rows = []
    for m in W.terms:
        if any(e for v, e in enumerate(m) if v not in variables):
            return None
        rows.append([Fraction(m[v]) for v in variables] + [Fraction(1)])
    nv = len(variables)
    if not rows or nv == 0:
        return None
    # Gauss-Jordan elimination over Q
    pivots = []
    r = 0
    for col in range(nv):
        piv = next((k for k in range(r, len(rows)) if rows[k][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
    if any(all(v == 0 for v in row[:nv]) and row[nv] != 0 for row in rows):
        return None
    if len(pivots) < nv:
        return None
    weights = tuple(rows[k][nv] for k in range(nv))
    if any(w <= 0 for w in weights):
        return None
    return weights


class JacobianRing:
    """The quotient k[x_v : v in variables] / (dW/dx_v) with a grlex Groebner basis."""

    def __init__(
        self,
        W: Polynomial,
        variables: tuple[int, ...],
        groebner: list[Polynomial],
        basis_monomials: list[tuple[int, ...]],
        weights: tuple[Fraction, ...] | None,
    ):
        self.W = W
        self.variables = variables
        self.generators = [W.diff(v) for v in variables]
        self.groebner_basis = groebner
        self.basis_monomials = basis_monomials
        self.weights = weights
        self.monomial_order = "grlex"
        self._hess_nf: Polynomial | None = None

    @classmethod
    def build(
        cls,
        W: Polynomial,
        variables: Sequence[int] | None = None,
        weights: Sequence[Fraction] | None = None,
        max_degree: int | None = None,
    ) -> "JacobianRing":
        if W.uses_primed():
            raise ValueError("the potential must not involve primed variables")
        variables = tuple(range(W.ring.n)) if variables is None else tuple(variables)
        G = groebner_basis([W.diff(v) for v in variables], max_degree)
        basis = _standard_monomials(W.ring.nvars, variables, G)
        if weights is None:
            weights = quasi_homogeneous_weights(W, variables)
        else:
            weights = tuple(Fraction(w) for w in weights)
        return cls(W, variables, G, basis, weights)

    @property
    def milnor_number(self) -> int:
        return len(self.basis_monomials)

    mu = milnor_number

    def normal_form(self, p: Polynomial) -> Polynomial:
        stray = p.used_vars() - set(self.variables)
        if stray:
            names = ", ".join(p.ring.names[v] for v in sorted(stray))
            raise ValueError(f"polynomial uses variables outside the ring: {names}")
        if not self.groebner_basis:
            return p
        return divide(p, self.groebner_basis)[1]

    def weighted_degree(self, m: tuple[int, ...]) -> Fraction:
        if self.weights is None:
            raise UnsupportedSingularityError("potential is not quasi-homogeneous")
        return sum((w * m[v] for w, v in zip(self.weights, self.variables)), Fraction(0))

    @property
    def socle_monomial(self) -> tuple[int, ...]:
        if self.weights is None:
            raise UnsupportedSingularityError("potential is not quasi-homogeneous")
        top = max(self.weighted_degree(m) for m in self.basis_monomials)
        tops = [m for m in self.basis_monomials if self.weighted_degree(m) == top]
        if len(tops) != 1:
            raise UnsupportedSingularityError(f"top graded piece has dimension {len(tops)}")
        return tops[0]

    def hessian(self) -> Polynomial:
        return _det(hessian_matrix(self.W, self.variables)) if self.variables else self.W.ring.one()

    def hessian_class(self) -> Polynomial:
        if self._hess_nf is None:
            self._hess_nf = self.normal_form(self.hessian())
        return self._hess_nf

    def residue(self, f: Polynomial) -> FieldScalar:
        """Grothendieck residue of f dx / dW, normalised so that Res(det Hess W) = mu."""
        socle = self.socle_monomial
        h = self.hessian_class().coefficient(socle)
        if h.is_zero():
            raise UnsupportedSingularityError("Hessian class vanishes on the socle")
        lam = self.normal_form(f).coefficient(socle) / h
        return lam * self.milnor_number

    def pairing(self, f: Polynomial, g: Polynomial, rescale=1) -> FieldScalar:
        """Signed residue pairing (-1)^{n(n-1)/2} Res(rescale^2 f g)."""
        n = len(self.variables)
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        s = FieldScalar.one() * rescale
        return self.residue(f * g * (s * s)) * sign

    def info(self) -> dict:
        names = self.W.ring.names
        return {
            "mu": self.milnor_number,
            "variables": [names[v] for v in self.variables],
            "order": self.monomial_order,
            "basis": [_mono_name(m, names) for m in self.basis_monomials],
            "groebner_basis": [str(g) for g in self.groebner_basis],
            "hessian_class": str(self.hessian_class()),
        }


def _mono_name(m: tuple[int, ...], names: Sequence[str]) -> str:
    s = "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e)
    return s or "1"


def _standard_monomials(nvars: int, variables: tuple[int, ...], G: list[Polynomial]) -> list[tuple[int, ...]]:
    leads = [g.leading_monomial() for g in G]
    bounds = []
    for v in variables:
        pure = [m[v] for m in leads if m[v] and all(e == 0 for k, e in enumerate(m) if k != v)]
        if not pure:
            raise NonIsolatedSingularityError(
                "Jacobian ideal has infinite colength (singularity is not isolated)"
            )
        bounds.append(min(pure))
    out = []
    for exps in itertools.product(*(range(b) for b in bounds)):
        m = [0] * nvars
        for v, e in zip(variables, exps):
            m[v] = e
        m = tuple(m)
        if not any(_divides(lm, m) for lm in leads):
            out.append(m)
    return sorted(out, key=grlex_key)
