"""Independent checks used by the test suite and the acceptance harness.

Nothing in the engine imports this module.  The pattern-avoidance test for
type A is an outside criterion, kept here purely to cross-check verdicts.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .errors import BudgetExceeded, NotTypeA
from .peterson import TranslateRequest, m_star_run, peterson_translate, s_weight_classes
from .rootsys import build_root_system, is_long
from .schubert import (
    curve_count,
    deodhar_check,
    rationally_smooth_at,
    rationally_smooth_variety,
    variety,
)
from .singloc import Verdict, smoothness_report
from .weyl import WeylElement, all_elements, from_word

PATTERNS = {"3412": (3, 4, 1, 2), "4231": (4, 2, 3, 1)}


def to_permutation(w: WeylElement) -> tuple[int, ...]:
    """One-line notation of a type A_n element; ``s_i`` swaps positions i and i+1."""
    rs = w.system
    if len(rs.descriptor) != 1 or rs.descriptor[0][0] != "A":
        raise NotTypeA(f"{rs.name} is not of type A")
    n = rs.rank + 1
    perm = list(range(1, n + 1))
    for i in w.word:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def from_permutation(rs, perm) -> WeylElement:
    """Inverse of :func:`to_permutation` via bubble sort."""
    perm = list(perm)
    word = []
    # sort perm to the identity with adjacent swaps on positions
    changed = True
    while changed:
        changed = False
        for i in range(len(perm) - 1):
            if perm[i] > perm[i + 1]:
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                word.append(i + 1)
                changed = True
    return from_word(rs, reversed(word))


def inversions(perm) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])


def contains_pattern(p, q) -> bool:
    """True iff four entries of ``p`` are order-isomorphic to the pattern ``q``."""
    if isinstance(q, str):
        q = PATTERNS[q]
    q = tuple(q)
    if len(p) < len(q):
        return False
    for pos in itertools.combinations(range(len(p)), len(q)):
        vals = [p[i] for i in pos]
        ranks = tuple(sorted(vals).index(v) + 1 for v in vals)
        if ranks == q:
            return True
    return False


def smooth_by_patterns(w: WeylElement) -> bool:
    p = to_permutation(w)
    return not (contains_pattern(p, "3412") or contains_pattern(p, "4231"))


def tableau_leq(p, q) -> bool:
    """Bruhat order on permutations in one-line notation (rank-matrix comparison).

    ``p <= q`` iff for all i, k the number of j <= i with p(j) >= k is at most
    the same count for q.
    """
    n = len(p)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if sum(v >= k for v in p[:i]) > sum(v >= k for v in q[:i]):
                return False
    return True


def bruhat_leq_by_definition(rs) -> dict[WeylElement, set[WeylElement]]:
    """Full Bruhat order as the transitive closure of ``x < r x`` with length increase.

    Returns ``below[w] = {x : x <= w}``.  Quadratic in |W|; only for small groups.
    """
    from .weyl import reflection_of

    elems = all_elements(rs)
    refl = [reflection_of(rs, g) for g in rs.positive_roots]
    below: dict[WeylElement, set[WeylElement]] = {}
    for w in elems:  # increasing length
        s = {w}
        for r in refl:
            x = r * w
            if x.length < w.length:
                s |= below[x]
        below[w] = s
    return below


@dataclass
class ConsistencyReport:
    descriptor: str
    elements: int
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def tap(self) -> str:
        lines = [f"1..{len(self.checks)}"]
        for k, (name, n) in enumerate(sorted(self.checks.items()), 1):
            bad = [f for f in self.failures if f.startswith(name + ":")]
            status = "not ok" if bad else "ok"
            lines.append(f"{status} {k} - {name} ({n} cases)")
            lines.extend(f"# {b}" for b in bad[:5])
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "type": self.descriptor,
                "elements": self.elements,
                "checks": self.checks,
                "ok": self.ok,
                "first_failure": self.failures[0] if self.failures else None,
            },
            sort_keys=True,
        )


def exhaustive_consistency(descriptor, max_rank: int | None = None, budget: int = 2000,
                           max_length: int | None = None) -> ConsistencyReport:
    """Sweep every invariant over all ``w`` in W (optionally only ``l(w) <= max_length``)."""
    rs = build_root_system(descriptor)
    if max_rank is not None and rs.rank > max_rank:
        raise BudgetExceeded(f"rank {rs.rank} exceeds {max_rank}")
    elems = all_elements(rs) if max_length is None else _short_elements(rs, max_length)
    if len(elems) > budget:
        raise BudgetExceeded(f"{len(elems)} elements exceed budget {budget}")
    rep = ConsistencyReport(rs.name, len(elems))

    def tick(name: str, ok: bool, msg) -> None:
        rep.checks[name] = rep.checks.get(name, 0) + 1
        if not ok:
            rep.failures.append(f"{name}: {msg() if callable(msg) else msg}")

    for w in elems:
        X = variety(w)
        sm = smoothness_report(w)
        rsv, _ = rationally_smooth_variety(w)
        tick("criteria_agree", True, "")
        tick("global_rs_vs_locus", (not sm.max_singular) == rsv or not rs.simply_laced, lambda: w)
        for x in X.interval:
            tick("lemma_tc", curve_count(w, x) >= w.length, lambda: (w, x))
            tick("deodhar", deodhar_check(w, x), lambda: (w, x))
            smooth = sm.is_smooth(x)
            tick("up_closed", not smooth or all(sm.is_smooth(y) for y in X.interval.covers[x]), lambda: (w, x))
            rsa = rationally_smooth_at(w, x)
            tick("smooth_implies_rs", not smooth or rsa, lambda: (w, x))
            if rs.simply_laced:
                tick("ade_equivalence", smooth == rsa, lambda: (w, x))
            if x == w or not all(sm.is_smooth(y) for y in X.interval.covers[x]):
                continue
            for g in X.upward_roots(x):
                y = X._refl[g.index] * x
                req = TranslateRequest(w, y, g)
                runs: list = []
                tau = peterson_translate(req, runs)
                tick("translate_dim", len(tau) == w.length, lambda: (w, x, g))
                tick("mstar_unique", all(r.candidates == 1 for r in runs), lambda: (w, x, g))
                if not is_long(rs, g):
                    tick("short_containment", tau <= X.curve_weights(x), lambda: (w, x, g))
    return rep


def _short_elements(rs, max_length: int) -> list[WeylElement]:
    from .weyl import identity, simple_reflection

    level = {identity(rs)}
    out = list(level)
    for _ in range(max_length):
        nxt = set()
        for x in level:
            for i in range(1, rs.rank + 1):
                y = x * simple_reflection(rs, i)
                if y.length == x.length + 1:
                    nxt.add(y)
        level = nxt
        out.extend(sorted(nxt, key=lambda v: v.word))
    return out


def elements_up_to_length(descriptor, max_length: int) -> list[WeylElement]:
    return _short_elements(build_root_system(descriptor), max_length)


def s_classes_of_translate(req: TranslateRequest):
    """Class multiset of the input tangent weights after reflecting by r_alpha."""
    from .rootsys import reflect

    rs = req.w.system
    tangent = variety(req.w).curve_weights(req.y)
    return [[reflect(rs, req.alpha, g) for g in c] for c in s_weight_classes(tangent, req.alpha)]
