"""Combinatorics of a single Schubert variety X(w) in G/B.

Weights of the tangent space of G/B at a fixed point ``x`` are taken to be
``{gamma : x^{-1}(gamma) < 0}``; the T-curve weights of X(w) at ``x`` are the
subset of those ``gamma`` with ``r_gamma x <= w``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import CriteriaDisagree, NotInInterval
from .rootsys import Root
from .weyl import BruhatInterval, WeylElement, lower_interval, reflection_of


@dataclass(frozen=True)
class WeightSet:
    """A set of roots, with optional ``(w, x)`` provenance.

    Equality ignores provenance.
    """

    roots: frozenset[Root]
    w: WeylElement | None = field(default=None, compare=False)
    x: WeylElement | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[Root]:
        return iter(sorted(self.roots))

    def __contains__(self, r: Root) -> bool:
        return r in self.roots

    def __le__(self, other: "WeightSet") -> bool:
        return self.roots <= other.roots

    def __or__(self, other: "WeightSet") -> "WeightSet":
        return WeightSet(self.roots | other.roots, self.w, self.x)

    def coords(self) -> list[list[int]]:
        return sorted(list(r.coords) for r in self.roots)

    def to_json(self) -> list[list[int]]:
        return self.coords()

    @classmethod
    def of(cls, roots: Iterable[Root], w=None, x=None) -> "WeightSet":
        return cls(frozenset(roots), w, x)


class SchubertVariety:
    """Cached per-``w`` data: the interval and T-curve weights at each point."""

    def __init__(self, w: WeylElement):
        self.w = w
        self.rs = w.system
        self.dim = w.length
        self.interval: BruhatInterval = lower_interval(w)
        self._weights: dict[WeylElement, WeightSet] = {}
        self._refl = [reflection_of(self.rs, g) for g in self.rs.roots]

    def check(self, x: WeylElement) -> None:
        if x not in self.interval:
            raise NotInInterval(f"{x!r} is not <= {self.w!r}")

    def curve_weights(self, x: WeylElement) -> WeightSet:
        ws = self._weights.get(x)
        if ws is None:
            self.check(x)
            inv = x.inverse()
            out = []
            for g in self.rs.roots:
                if not inv.sends_negative(g.index):
                    continue
                # g > 0 forces r_g x < x, which is already in the interval
                if g.is_positive or (self._refl[g.index] * x) in self.interval:
                    out.append(g)
            ws = WeightSet.of(out, self.w, x)
            self._weights[x] = ws
        return ws

    def curve_count(self, x: WeylElement) -> int:
        return len(self.curve_weights(x))

    def upward_roots(self, x: WeylElement) -> list[Root]:
        """Positive ``gamma`` with ``x < r_gamma x <= w``."""
        self.check(x)
        return [g for g in self.rs.positive_roots if self._up(x, g)]

    def _up(self, x: WeylElement, g: Root) -> bool:
        y = self._refl[g.index] * x
        return y.length > x.length and y in self.interval


@lru_cache(maxsize=2048)
def variety(w: WeylElement) -> SchubertVariety:
    return SchubertVariety(w)


def curve_weights(w: WeylElement, x: WeylElement) -> WeightSet:
    return variety(w).curve_weights(x)


def curve_count(w: WeylElement, x: WeylElement) -> int:
    n = variety(w).curve_count(x)
    assert n >= w.length, (w, x, n)
    return n


def bruhat_graph(w: WeylElement) -> list[tuple[WeylElement, WeylElement]]:
    """Edges ``{x, r_gamma x}`` of the Bruhat graph on ``[e, w]``, lower endpoint first."""
    X = variety(w)
    edges = []
    for x in X.interval:
        for g in X.upward_roots(x):
            edges.append((x, X._refl[g.index] * x))
    return edges


def deodhar_check(w: WeylElement, x: WeylElement) -> bool:
    """``#{gamma > 0 : x < r_gamma x <= w} >= l(w) - l(x)``."""
    return len(variety(w).upward_roots(x)) >= w.length - x.length


@dataclass
class RationalSmoothnessEvidence:
    poincare: list[int]
    poincare_symmetric: bool
    curve_counts_ok: bool
    bad_points: list[WeylElement]
    average_length: Fraction
    average_ok: bool


def rationally_smooth_variety(w: WeylElement) -> tuple[bool, RationalSmoothnessEvidence]:
    """Evaluate the palindromic-Poincare, curve-count and average-length criteria.

    Rank symmetry of ``[e, w]`` is the same data as palindromicity of the
    rank table, so it is not checked separately.
    """
    X = variety(w)
    poly = list(X.interval.rank_table)
    symmetric = poly == poly[::-1]
    bad = [x for x in X.interval if X.curve_count(x) != w.length]
    avg = Fraction(sum(x.length for x in X.interval), len(X.interval))
    avg_ok = avg == Fraction(w.length, 2)
    ev = RationalSmoothnessEvidence(poly, symmetric, not bad, bad, avg, avg_ok)
    if not (symmetric == (not bad) == avg_ok):
        raise CriteriaDisagree(f"{w!r}: {ev}")
    return symmetric, ev


def rationally_smooth_at(w: WeylElement, x: WeylElement) -> bool:
    """Curve-count criterion on the upper interval ``[x, w]``."""
    X = variety(w)
    X.check(x)
    return all(X.curve_count(y) == w.length for y in X.interval.upper(x))
