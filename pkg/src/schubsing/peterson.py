"""Peterson translates of tangent spaces along T-curves of X(w).

Everything is done on weight sets: tangent spaces of G/B at fixed points
are multiplicity free, so a T-stable subspace is determined by its weights.

A curve is given by its upper fixed point ``y`` and a positive root
``alpha`` with ``x = r_alpha y < y <= w``.  The tangent weights at ``y`` are
split into classes modulo ``alpha``; each class of size ``l`` is replaced by
the bottom ``l`` members of the run of its alpha-string lying in the tangent
space of G/B at ``y``, and the result is reflected by ``r_alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CurveNotLong,
    InvalidCurve,
    MismatchedBase,
    NonConsecutiveRun,
    NotSmoothUpperPoint,
    RunTooShort,
)
from .rootsys import Root, RootSystem, alpha_string, is_long, pairing, reflect
from .schubert import WeightSet, variety
from .weyl import WeylElement, reflection_of


@dataclass(frozen=True)
class TranslateRequest:
    w: WeylElement
    y: WeylElement
    alpha: Root

    def __post_init__(self):
        if not self.alpha.is_positive:
            raise InvalidCurve(f"curve root {self.alpha!r} must be positive")
        X = variety(self.w)
        X.check(self.y)
        if self.x.length >= self.y.length:
            raise InvalidCurve(f"r_alpha y is not below y for alpha={self.alpha!r}, y={self.y!r}")

    @property
    def x(self) -> WeylElement:
        return reflection_of(self.w.system, self.alpha) * self.y


def _class_key(rs: RootSystem, g: Root, alpha: Root) -> tuple[int, ...]:
    # 2g - <g, alpha^vee> alpha is the projection orthogonal to alpha, scaled by 2
    k = pairing(rs, g, alpha)
    return tuple(2 * a - k * b for a, b in zip(g.coords, alpha.coords))


def s_weight_classes(weights, alpha: Root) -> list[list[Root]]:
    """Partition ``weights`` into classes modulo ``Z alpha``.

    Each class is ordered top-down along alpha; classes are ordered by the
    pairing of their top member with alpha, then by root index.
    """
    roots = list(weights)
    if not roots:
        return []
    rs = alpha.system
    groups: dict[tuple[int, ...], list[Root]] = {}
    for g in roots:
        groups.setdefault(_class_key(rs, g, alpha), []).append(g)
    classes = [
        sorted(c, key=lambda g: (-pairing(rs, g, alpha), g.index)) for c in groups.values()
    ]
    classes.sort(key=lambda c: (-pairing(rs, c[0], alpha), c[0].index))
    return classes


@dataclass
class MStarRun:
    """How one class was placed on its alpha-string (kept for diagnostics)."""

    string: list[Root]
    run: list[Root]
    chosen: list[Root]
    candidates: int


def m_star_run(rs: RootSystem, y: WeylElement, alpha: Root, cls: list[Root]) -> MStarRun:
    if not cls:
        raise ValueError("empty class")
    string = alpha_string(rs, alpha, cls[0])
    if any(g not in string for g in cls):
        raise ValueError(f"class {cls} does not lie on one {alpha!r}-string")
    yinv = y.inverse()
    flags = [yinv.sends_negative(g.index) for g in string]
    pos = [i for i, f in enumerate(flags) if f]
    if pos and pos != list(range(pos[0], pos[-1] + 1)):
        raise NonConsecutiveRun(f"string {string} has gaps in the tangent run at {y!r}")
    run = [string[i] for i in pos]
    if any(not yinv.sends_negative(g.index) for g in cls):
        raise RunTooShort(f"class {cls} is not inside the tangent space of G/B at {y!r}")
    ell = len(cls)
    if ell > len(run):
        raise RunTooShort(f"class of size {ell} but run {run} at {y!r}")
    n = len(string)
    starts = [
        s for s in range(n - ell + 1)
        if all(flags[s:s + ell]) and (s + ell == n or not flags[s + ell])
    ]
    if len(starts) != 1:
        raise NonConsecutiveRun(f"{len(starts)} bottom-anchored runs for {cls} on {string}")
    s = starts[0]
    return MStarRun(string, run, string[s:s + ell], len(starts))


def m_star(rs: RootSystem, y: WeylElement, alpha: Root, cls: list[Root]) -> list[Root]:
    """Weights ``beta, beta - alpha, ..., beta - (l-1) alpha`` of the class's normalised module."""
    return m_star_run(rs, y, alpha, cls).chosen


def peterson_translate(req: TranslateRequest, runs: list | None = None) -> WeightSet:
    """Weights of the translate of ``T_y(X)`` into ``x = r_alpha y``.

    ``y`` is assumed smooth, so its tangent weights are the T-curve weights.
    If ``runs`` is a list, the :class:`MStarRun` of each class is appended.
    """
    rs = req.w.system
    X = variety(req.w)
    tangent = X.curve_weights(req.y)
    out = set()
    for cls in s_weight_classes(tangent, req.alpha):
        r = m_star_run(rs, req.y, req.alpha, cls)
        if runs is not None:
            runs.append(r)
        out.update(reflect(rs, req.alpha, g) for g in r.chosen)
    assert len(out) == len(tangent), (req, out, tangent)
    return WeightSet.of(out, req.w, req.x)


def translates_equal(req1: TranslateRequest, req2: TranslateRequest) -> bool:
    if req1.w != req2.w or req1.x != req2.x:
        raise MismatchedBase("translates must be into the same fixed point of the same X(w)")
    return peterson_translate(req1) == peterson_translate(req2)


def bbT_weights(w: WeylElement, x: WeylElement) -> WeightSet:
    """Weights of the module generated by the T-curve tangents under the isotropy of x in B.

    Saturate the T-curve weights under ``g -> g + gamma`` for positive
    ``gamma`` with ``x^{-1}(gamma) > 0``, keeping only roots that are
    tangent to G/B at ``x``.
    """
    X = variety(w)
    start = X.curve_weights(x)
    rs = w.system
    xinv = x.inverse()
    iso = [g for g in rs.positive_roots if not xinv.sends_negative(g.index)]
    found = set(start.roots)
    frontier = list(found)
    while frontier:
        nxt = []
        for g in frontier:
            for h in iso:
                s = rs.find(a + b for a, b in zip(g.coords, h.coords))
                if s is not None and s not in found and xinv.sends_negative(s.index):
                    found.add(s)
                    nxt.append(s)
        frontier = nxt
    return WeightSet.of(found, w, x)


def v_c_weights(
    w: WeylElement,
    x: WeylElement,
    mu: Root,
    *,
    upper_smooth: bool | None = None,
    branches: str = "both",
) -> WeightSet:
    """Extra weights ``I_mu`` for the long curve joining ``x`` and ``y = r_mu x``.

    ``gamma = -(mu + phi)/2`` is kept when ``phi`` is a long positive root
    orthogonal to ``mu`` with ``-phi`` a T-curve weight at ``x`` but not at
    ``y``, and ``delta = mu + gamma`` is a root satisfying one of

    * ``delta < 0`` and ``x^{-1}(delta) > 0``,
    * ``delta > 0`` and ``x^{-1}(delta) < 0``.

    ``branches="negative"`` keeps only the first kind.  That narrower set
    misses weights of some long translates, e.g. in B2 at ``x = r_1`` along
    the curve of ``2a+b`` (see tests).

    ``upper_smooth`` states whether ``y`` is known to be smooth; when left as
    ``None`` it is computed.
    """
    if branches not in ("both", "negative"):
        raise ValueError(f"unknown branches={branches!r}")
    rs = w.system
    if not mu.is_positive or not is_long(rs, mu):
        raise CurveNotLong(f"{mu!r} is not a long positive root")
    X = variety(w)
    X.check(x)
    y = reflection_of(rs, mu) * x
    if not (y.length > x.length and y in X.interval):
        raise InvalidCurve(f"r_mu x is not in (x, w] for mu={mu!r}")
    if upper_smooth is None:
        from .singloc import smooth_at

        upper_smooth = smooth_at(w, y)
    if not upper_smooth:
        raise NotSmoothUpperPoint(f"{y!r} is not a smooth point of X({w!r})")
    tx = X.curve_weights(x)
    ty = X.curve_weights(y)
    xinv = x.inverse()
    out = []
    for phi in rs.positive_roots:
        if not is_long(rs, phi) or rs.form_value(phi, mu) != 0:
            continue
        if -phi not in tx or -phi in ty:
            continue
        half = [Fraction(-(a + b), 2) for a, b in zip(mu.coords, phi.coords)]
        if any(h.denominator != 1 for h in half):
            continue
        gamma = rs.find(int(h) for h in half)
        if gamma is None:
            continue
        delta = rs.find(a + b for a, b in zip(mu.coords, gamma.coords))
        if delta is None:
            continue
        if delta.is_positive:
            if branches == "negative" or not xinv.sends_negative(delta.index):
                continue
        elif xinv.sends_negative(delta.index):
            continue
        out.append(gamma)
    return WeightSet.of(out, w, x)
