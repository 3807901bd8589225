"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Mapping, Optional, Sequence

from .abgroup import GroupElement, MixedGroupError
from .lattice import solve_rational


class VariableCountError(ValueError):
    pass


class _AnyDegree:
    """Degree marker for the zero polynomial, homogeneous of every degree."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ANY_DEGREE"


ANY_DEGREE = _AnyDegree()


class SparsePoly:
    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], object]] = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise VariableCountError(f"exponent vector {exps} for {nvars} variables")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = clean.get(exps, Fraction(0)) + Fraction(c)
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self._terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c=1) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "SparsePoly":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePoly":
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, {tuple(e): 1})

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self._terms, reverse=True)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _same(self, other: "SparsePoly"):
        if other.nvars != self.nvars:
            raise VariableCountError(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            other = SparsePoly.constant(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._same(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return SparsePoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, (int, Rational)):
            other = SparsePoly.constant(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "SparsePoly":
        c = Fraction(c)
        return SparsePoly(self.nvars, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._same(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return SparsePoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = SparsePoly.constant(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = SparsePoly.constant(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        """Deterministic text form, terms in decreasing lexicographic order."""
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        out = []
        for exps in self.support():
            c = self._terms[exps]
            factors = [names[i] if e == 1 else f"{names[i]}^{e}"
                       for i, e in enumerate(exps) if e]
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(out)

    def __repr__(self):
        return f"SparsePoly({self.render()})"


def monomial_degree(exponents: Sequence[int], degrees: Sequence[GroupElement]) -> GroupElement:
    if len(exponents) != len(degrees):
        raise VariableCountError("exponent vector and degree list differ in length")
    if not degrees:
        raise ValueError("need at least one degree to know the group")
    group = degrees[0].group
    for g in degrees:
        if g.group != group:
            raise MixedGroupError("degrees live in different groups")
    total = group.identity()
    for e, g in zip(exponents, degrees):
        if e:
            total = total + e * g
    return total


def is_homogeneous(p: SparsePoly, degrees: Sequence[GroupElement]):
    """Common degree of all terms, ``ANY_DEGREE`` for zero, ``None`` if mixed."""
    if p.is_zero():
        return ANY_DEGREE
    found = None
    for exps in p.support():
        w = monomial_degree(exps, degrees)
        if found is None:
            found = w
        elif w != found:
            return None
    return found


def in_linear_span(target: SparsePoly, generators: Sequence[SparsePoly]) -> Optional[list[Fraction]]:
    """Rational ``lam`` with ``sum(lam[s] * generators[s]) == target``, or None."""
    for g in generators:
        target._same(g)
    monos = sorted(set(target.support()).union(*(g.support() for g in generators)))
    A = [[g.coefficient(m) for g in generators] for m in monos]
    b = [target.coefficient(m) for m in monos]
    if not generators:
        return [] if target.is_zero() else None
    return solve_rational(A, b)
