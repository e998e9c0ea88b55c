"""Weyl group elements, Bruhat order and lower intervals.

An element is stored as the permutation it induces on the interned root
list of its :class:`~schubsing.rootsys.RootSystem`.  Equality and hashing go
through that permutation, never through a word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import IndexOutOfRange
from .rootsys import Root, RootSystem, build_root_system


class WeylElement:
    __slots__ = ("system", "perm", "_length", "_word", "_hash", "__weakref__")

    def __init__(self, system: RootSystem, perm: tuple[int, ...]):
        self.system = system
        self.perm = perm
        self._length: int | None = None
        self._word: tuple[int, ...] | None = None
        self._hash = hash(perm)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.perm == other.perm and self.system is other.system

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        p = self.perm
        return WeylElement(self.system, tuple([p[i] for i in other.perm]))

    def __call__(self, gamma: Root) -> Root:
        return self.system.roots[self.perm[gamma.index]]

    def __repr__(self):
        return f"W[{','.join(map(str, self.word))}]"

    def __reduce__(self):
        return (_unpickle_element, (self.system, self.perm))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return WeylElement(self.system, tuple(inv))

    def sends_negative(self, i: int) -> bool:
        """True iff this element maps root index ``i`` to a negative root."""
        return self.perm[i] >= self.system.npos

    @property
    def length(self) -> int:
        if self._length is None:
            npos = self.system.npos
            self._length = sum(1 for j in self.perm[:npos] if j >= npos)
        return self._length

    @property
    def word(self) -> tuple[int, ...]:
        """Lexicographically first reduced word, 1-based simple indices."""
        if self._word is None:
            rs = self.system
            word = []
            cur = self
            while cur.length:
                inv = cur.inverse()
                for i, a in enumerate(rs.simple_roots):
                    if inv.sends_negative(a.index):
                        word.append(i + 1)
                        cur = simple_reflection(rs, i + 1) * cur
                        break
            self._word = tuple(word)
        return self._word

    def left_descents(self) -> list[int]:
        inv = self.inverse()
        return [i + 1 for i, a in enumerate(self.system.simple_roots) if inv.sends_negative(a.index)]

    def right_descents(self) -> list[int]:
        return [i + 1 for i, a in enumerate(self.system.simple_roots) if self.sends_negative(a.index)]


def _unpickle_element(system, perm):
    return WeylElement(system, perm)


@lru_cache(maxsize=None)
def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, tuple(range(len(rs.roots))))


@lru_cache(maxsize=None)
def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"simple index {i} out of range 1..{rs.rank}")
    return WeylElement(rs, rs.reflection_table[rs.simple_roots[i - 1].index])


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """Product ``s_{i1} s_{i2} ... s_{ik}`` of simple reflections (need not be reduced)."""
    w = identity(rs)
    for i in word:
        w = w * simple_reflection(rs, int(i))
    return w


def apply(w: WeylElement, gamma: Root) -> Root:
    return w(gamma)


def reflection_of(rs: RootSystem, gamma: Root) -> WeylElement:
    return WeylElement(rs, rs.reflection_table[gamma.index])


@lru_cache(maxsize=None)
def longest_element(rs: RootSystem) -> WeylElement:
    w = identity(rs)
    while True:
        for i in range(1, rs.rank + 1):
            s = simple_reflection(rs, i)
            if not w.sends_negative(rs.simple_roots[i - 1].index):
                w = w * s
                break
        else:
            return w


def parabolic_longest(rs: RootSystem, J: Iterable[int]) -> WeylElement:
    """Longest element of the standard parabolic subgroup W_J."""
    J = sorted(set(J))
    w = identity(rs)
    while True:
        for i in J:
            if not w.sends_negative(rs.simple_roots[i - 1].index):
                w = w * simple_reflection(rs, i)
                break
        else:
            return w


def bruhat_leq(x: WeylElement, w: WeylElement, word: Sequence[int] | None = None) -> bool:
    """Subword criterion via the greedy matcher.

    Scan a reduced word ``s_1 ... s_k`` of ``w`` from the left and strip
    ``s_i`` off ``x`` whenever it is a left descent of the current ``x``;
    ``x <= w`` iff this reaches the identity.  ``word`` overrides the
    canonical reduced word of ``w``.
    """
    if x.length > w.length:
        return False
    rs = w.system
    cur = x
    remaining = cur.length
    for i in (w.word if word is None else word):
        if remaining == 0:
            return True
        a = rs.simple_roots[i - 1].index
        # s_i is a left descent of cur iff cur^{-1}(alpha_i) < 0
        if _left_descent(cur, a):
            cur = simple_reflection(rs, i) * cur
            remaining -= 1
    return remaining == 0


def _left_descent(x: WeylElement, simple_index: int) -> bool:
    # x^{-1}(alpha) < 0  <=>  alpha = x(gamma) for a negative gamma
    return x.perm.index(simple_index) >= x.system.npos


@dataclass
class BruhatInterval:
    """The lower interval ``[e, w]``."""

    w: WeylElement
    elements: list[WeylElement]
    index: dict[WeylElement, int]
    rank_table: list[int]
    covers: dict[WeylElement, list[WeylElement]] = field(repr=False)  # x -> upper covers

    def __contains__(self, x: WeylElement) -> bool:
        return x in self.index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def lower_covers(self) -> dict[WeylElement, list[WeylElement]]:
        down: dict[WeylElement, list[WeylElement]] = {x: [] for x in self.elements}
        for x, ups in self.covers.items():
            for y in ups:
                down[y].append(x)
        return down

    def upper(self, x: WeylElement) -> list[WeylElement]:
        """Elements of ``[x, w]``, in interval order."""
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for z in self.covers[y]:
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return [y for y in self.elements if y in seen]


def _subword_products(w: WeylElement) -> set[WeylElement]:
    rs = w.system
    out = {identity(rs)}
    for i in w.word:
        s = simple_reflection(rs, i)
        out |= {x * s for x in out}
    return out


@lru_cache(maxsize=4096)
def lower_interval(w: WeylElement) -> BruhatInterval:
    rs = w.system
    elems = sorted(_subword_products(w), key=lambda x: (-x.length, x.word))
    index = {x: k for k, x in enumerate(elems)}
    rank_table = [0] * (w.length + 1)
    for x in elems:
        rank_table[x.length] += 1
    covers: dict[WeylElement, list[WeylElement]] = {x: [] for x in elems}
    refl = [reflection_of(rs, g) for g in rs.positive_roots]
    for y in elems:
        ly = y.length
        for r in refl:
            x = r * y
            if x.length == ly - 1:
                covers[x].append(y)
    for ups in covers.values():
        ups.sort(key=index.__getitem__)
    return BruhatInterval(w, elems, index, rank_table, covers)


def poincare(w: WeylElement) -> list[int]:
    """Coefficients ``c_k = #{x <= w : l(x) = k}``."""
    return list(lower_interval(w).rank_table)


@lru_cache(maxsize=None)
def all_elements(rs: RootSystem) -> tuple[WeylElement, ...]:
    """Every element of W, sorted by (length, canonical word)."""
    elems = lower_interval(longest_element(rs)).elements
    return tuple(sorted(elems, key=lambda x: (x.length, x.word)))


def parse_word(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(t) for t in text.split(",") if t.strip()]


def element(descriptor, word: str | Sequence[int], allow_g2: bool = False) -> WeylElement:
    """Convenience: ``element("B2", "1,2,1")``."""
    rs = build_root_system(descriptor, allow_g2=allow_g2)
    if isinstance(word, str):
        word = parse_word(word)
    return from_word(rs, word)
