"""Smoothness of X(w) at every T-fixed point, and its singular locus.

Points of ``[e, w]`` are decided from the top down:

1. ``w`` itself is smooth.
2. A point below a singular point is singular (the singular locus is a
   union of Schubert varieties).
3. A point of codimension one is smooth.
4. Otherwise every curve up from ``x`` ends at a smooth point, so every such
   curve is good.  ``x`` is smooth iff some Peterson translate along one of
   them equals the T-curve weights at ``x`` (Schubert varieties are
   Cohen-Macaulay, so a single good curve suffices).

The two-curve form of the criterion and Deodhar's inequality are checked
on the fly; a failure raises :class:`InternalInconsistency`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    G2Disallowed,
    InternalInconsistency,
    NotMinimalRepresentative,
    QuotientOrderViolation,
)
from .peterson import TranslateRequest, peterson_translate
from .rootsys import Root
from .schubert import SchubertVariety, WeightSet, rationally_smooth_variety, variety
from .weyl import WeylElement, bruhat_leq, parabolic_longest


class Verdict(str, enum.Enum):
    SMOOTH = "smooth"
    SINGULAR = "singular"


@dataclass
class TranslateRecord:
    y: WeylElement
    curve_root: Root
    tau: WeightSet
    equals_te: bool

    def to_json(self, x: WeylElement) -> dict:
        return {
            "x": list(x.word),
            "y": list(self.y.word),
            "curve_root": list(self.curve_root.coords),
            "tau": self.tau.to_json(),
            "equals_TE": self.equals_te,
        }


@dataclass
class PointDiagnostics:
    te: WeightSet
    translates: list[TranslateRecord] = field(default_factory=list)
    rule: str = ""

    @property
    def n_equal(self) -> int:
        return sum(t.equals_te for t in self.translates)


@dataclass
class SmoothnessReport:
    w: WeylElement
    verdicts: dict[WeylElement, Verdict]
    tangent_weights: dict[WeylElement, WeightSet]
    max_singular: list[WeylElement]
    diagnostics: dict[WeylElement, PointDiagnostics]
    verified: bool = True

    def is_smooth(self, x: WeylElement) -> bool:
        return self.verdicts[x] is Verdict.SMOOTH

    @property
    def singular(self) -> list[WeylElement]:
        return [x for x, v in self.verdicts.items() if v is Verdict.SINGULAR]

    def to_json(self) -> dict:
        w = self.w
        rs_smooth, _ = rationally_smooth_variety(w)
        return {
            "type": w.system.name,
            "word": list(w.word),
            "dim": w.length,
            "verdicts": [
                {"element": list(x.word), "length": x.length, "verdict": v.value}
                for x, v in self.verdicts.items()
            ],
            "max_singular": [list(x.word) for x in self.max_singular],
            "poincare": list(variety(w).interval.rank_table),
            "rationally_smooth": rs_smooth,
            "verified": self.verified,
        }


def _require_no_g2(w: WeylElement, experimental_g2: bool) -> bool:
    if w.system.has_g2:
        if not experimental_g2:
            raise G2Disallowed("smoothness verdicts are not supported for G2 factors")
        return False
    return True


def _decide(X: SchubertVariety, elements: list[WeylElement]) -> tuple[dict, dict, dict]:
    """Run the top-down descent over an up-closed list sorted by decreasing length."""
    w = X.w
    dim = w.length
    covers = X.interval.covers
    verdicts: dict[WeylElement, Verdict] = {}
    tangents: dict[WeylElement, WeightSet] = {}
    diags: dict[WeylElement, PointDiagnostics] = {}
    for x in elements:
        if x == w:
            verdicts[x] = Verdict.SMOOTH
            tangents[x] = X.curve_weights(x)
            continue
        if any(verdicts[y] is Verdict.SINGULAR for y in covers[x]):
            verdicts[x] = Verdict.SINGULAR
            continue
        te = X.curve_weights(x)
        diag = PointDiagnostics(te)
        up = X.upward_roots(x)
        if len(up) < dim - x.length:
            raise InternalInconsistency(f"Deodhar's inequality fails at {x!r} in X({w!r})")
        for g in up:
            req = TranslateRequest(w, _reflect_elt(X, g, x), g)
            tau = peterson_translate(req)
            diag.translates.append(TranslateRecord(req.y, g, tau, tau == te))
        if dim - x.length == 1:
            smooth = True
            diag.rule = "codimension one"
        else:
            smooth = diag.n_equal >= 1
            diag.rule = "translate equals TE" if smooth else "no translate equals TE"
        if smooth:
            if diag.n_equal != len(diag.translates):
                raise InternalInconsistency(
                    f"smooth point {x!r} of X({w!r}) has a translate different from TE"
                )
            if len(up) >= 2 and diag.n_equal < 2:
                raise InternalInconsistency(f"one-curve and two-curve tests disagree at {x!r}")
            tangents[x] = te
        verdicts[x] = Verdict.SMOOTH if smooth else Verdict.SINGULAR
        diags[x] = diag
    return verdicts, tangents, diags


def _reflect_elt(X: SchubertVariety, g: Root, x: WeylElement) -> WeylElement:
    return X._refl[g.index] * x


_REPORTS: dict[tuple[WeylElement, bool], SmoothnessReport] = {}


def smoothness_report(w: WeylElement, *, experimental_g2: bool = False) -> SmoothnessReport:
    key = (w, experimental_g2)
    rep = _REPORTS.get(key)
    if rep is not None:
        return rep
    verified = _require_no_g2(w, experimental_g2)
    X = variety(w)
    verdicts, tangents, diags = _decide(X, X.interval.elements)
    covers = X.interval.covers
    max_sing = [
        x for x, v in verdicts.items()
        if v is Verdict.SINGULAR and all(verdicts[y] is Verdict.SMOOTH for y in covers[x])
    ]
    rep = SmoothnessReport(w, verdicts, tangents, max_sing, diags, verified)
    if len(_REPORTS) > 4096:
        _REPORTS.clear()
    _REPORTS[key] = rep
    return rep


def smooth_at(w: WeylElement, x: WeylElement, *, experimental_g2: bool = False) -> bool:
    """Verdict at ``x``, deciding only the points of ``[x, w]``."""
    _require_no_g2(w, experimental_g2)
    X = variety(w)
    X.check(x)
    rep = _REPORTS.get((w, experimental_g2))
    if rep is not None:
        return rep.is_smooth(x)
    verdicts, _, _ = _decide(X, X.interval.upper(x))
    return verdicts[x] is Verdict.SMOOTH


def singular_locus(w: WeylElement, *, experimental_g2: bool = False) -> list[WeylElement]:
    """Maximal singular fixed points; empty iff X(w) is smooth."""
    return smoothness_report(w, experimental_g2=experimental_g2).max_singular


def is_minimal_representative(x: WeylElement, J: Iterable[int]) -> bool:
    return not any(j in J for j in x.right_descents())


def gp_smooth_at(J: Iterable[int], w: WeylElement, x: WeylElement, *, experimental_g2: bool = False) -> bool:
    """Smoothness of the G/P Schubert variety of ``w W_J`` at ``x W_J``.

    ``w`` and ``x`` must be minimal coset representatives.  The verdict is
    read off the pullback ``X(w w_0(J))`` at ``x``, which is valid because
    the projection to G/P is smooth.
    """
    J = sorted(set(J))
    rs = w.system
    if any(not 1 <= j <= rs.rank for j in J):
        raise NotMinimalRepresentative(f"J={J} has indices outside 1..{rs.rank}")
    for name, v in (("w", w), ("x", x)):
        if not is_minimal_representative(v, J):
            raise NotMinimalRepresentative(f"{name}={v!r} is not minimal in its W_J coset, J={J}")
    if not bruhat_leq(x, w):
        raise QuotientOrderViolation(f"{x!r} W_J is not below {w!r} W_J")
    top = w * parabolic_longest(rs, J)
    return smooth_at(top, x, experimental_g2=experimental_g2)


@dataclass
class TangentBounds:
    """Bounds on the weights of the Zariski tangent space ``T_x(X(w))``."""

    lower: WeightSet
    upper: WeightSet

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


def zariski_tangent_bounds(w: WeylElement, *, experimental_g2: bool = False) -> dict[WeylElement, TangentBounds]:
    """Weight bounds for the Zariski tangent space at every point of ``[e, w]``.

    At a smooth point both bounds are the T-curve weights.  At a singular
    point the lower bound collects the T-curve weights and every translate
    along a curve up to a smooth point, and the upper bound is the tangent
    space of G/B.  Both are then transported along ``x -> s x`` for every
    simple left descent ``s`` of ``w``, since such an ``s`` maps X(w) to
    itself.
    """
    rep = smoothness_report(w, experimental_g2=experimental_g2)
    rs = w.system
    lower: dict[WeylElement, set] = {}
    upper: dict[WeylElement, set] = {}
    for x, v in rep.verdicts.items():
        if v is Verdict.SMOOTH:
            lower[x] = set(rep.tangent_weights[x].roots)
            upper[x] = set(lower[x])
            continue
        X = variety(w)
        lo = set(X.curve_weights(x).roots)
        for g in X.upward_roots(x):
            y = X._refl[g.index] * x
            if rep.is_smooth(y):
                lo |= peterson_translate(TranslateRequest(w, y, g)).roots
        xinv = x.inverse()
        lower[x] = lo
        upper[x] = {g for g in rs.roots if xinv.sends_negative(g.index)}
    from .rootsys import reflect
    from .weyl import simple_reflection

    descents = [(simple_reflection(rs, i), rs.simple_roots[i - 1]) for i in w.left_descents()]
    changed = True
    while changed:
        changed = False
        for x in rep.verdicts:
            for s, a in descents:
                sx = s * x
                moved_lo = {reflect(rs, a, g) for g in lower[x]}
                moved_up = {reflect(rs, a, g) for g in upper[x]}
                if not moved_lo <= lower[sx]:
                    lower[sx] |= moved_lo
                    changed = True
                if not upper[sx] <= moved_up:
                    upper[sx] &= moved_up
                    changed = True
    out = {}
    for x in rep.verdicts:
        if not lower[x] <= upper[x]:
            raise InternalInconsistency(f"tangent bounds cross at {x!r} in X({w!r})")
        out[x] = TangentBounds(WeightSet.of(lower[x], w, x), WeightSet.of(upper[x], w, x))
    return out
