"""Finite crystallographic root systems built from Cartan data.

Roots are integer vectors in the simple-root basis and are interned: each
:class:`RootSystem` owns a canonical tuple of :class:`Root` objects, and a
root is identified by its position in that tuple.  Positive roots come
first (sorted by height, then coordinates), followed by their negatives in
the same order, so ``-roots[i] == roots[i +/- npos]``.

Simple roots are numbered per factor as follows:

* ``A_n``, ``D_n``, ``E_n``, ``F_4``, ``G_2``: Bourbaki numbering.
* ``B_n``: node 1 is the unique short simple root, nodes 2..n are long.
  For ``B2`` this makes index 1 the short root and index 2 the long one.
* ``C_n``: node 1 is the unique long simple root, nodes 2..n are short.

The invariant form is exact (``fractions.Fraction``) and normalised so that
short roots of every factor have squared length 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import G2Disallowed, InvalidDescriptor, InvalidRank, NotARoot

SIMPLY_LACED = frozenset("ADE")

# expected |Phi| per simple type, used as a construction self-check
def classification_count(series: str, rank: int) -> int:
    n = rank
    if series == "A":
        return n * (n + 1)
    if series in "BC":
        return 2 * n * n
    if series == "D":
        return 2 * n * (n - 1)
    return {("E", 6): 72, ("E", 7): 126, ("E", 8): 240, ("F", 4): 48, ("G", 2): 12}[(series, n)]


def _check_rank(series: str, n: int) -> None:
    ok = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 2,
        "D": n >= 3,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }.get(series)
    if ok is None:
        raise InvalidDescriptor(f"unknown series {series!r}")
    if not ok:
        raise InvalidRank(f"{series}{n} is not a valid type")


def cartan_matrix(series: str, n: int) -> list[list[int]]:
    """Cartan matrix with entry ``[i][j] = <alpha_j, alpha_i^vee>``."""
    _check_rank(series, n)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if series in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if series == "B":
            bond(0, 1, -2, -1)
        elif series == "C":
            bond(0, 1, -1, -2)
    elif series == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif series == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif series == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif series == "G":
        bond(0, 1, -3, -1)
    return a


def parse_descriptor(text: str) -> tuple[tuple[str, int], ...]:
    """Parse ``"A3xA1"``-style descriptors (case-insensitive)."""
    if isinstance(text, (list, tuple)):
        return tuple((str(s).upper(), int(r)) for s, r in text)
    parts = [p for p in re.split(r"[x×]", text.strip(), flags=re.IGNORECASE)]
    out = []
    for p in parts:
        m = re.fullmatch(r"\s*([a-gA-G])\s*(\d+)\s*", p)
        if not m:
            raise InvalidDescriptor(f"cannot parse type factor {p!r} in {text!r}")
        out.append((m.group(1).upper(), int(m.group(2))))
    if not out:
        raise InvalidDescriptor("empty type descriptor")
    return tuple(out)


def format_descriptor(descriptor: Sequence[tuple[str, int]]) -> str:
    return "x".join(f"{s}{n}" for s, n in descriptor)


class Root:
    """An interned root; compare and hash by index within its system."""

    __slots__ = ("system", "index", "coords")

    def __init__(self, system: "RootSystem", index: int, coords: tuple[int, ...]):
        self.system = system
        self.index = index
        self.coords = coords

    def __eq__(self, other):
        if not isinstance(other, Root):
            return NotImplemented
        return self.index == other.index and self.system is other.system

    def __hash__(self):
        return hash(self.index)

    def __lt__(self, other: "Root") -> bool:
        return self.index < other.index

    def __neg__(self) -> "Root":
        return self.system.roots[self.system.negation[self.index]]

    def __add__(self, other: "Root") -> "Root":
        return self.system.root(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Root") -> "Root":
        return self.system.root(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __repr__(self):
        return f"Root{self.coords}"

    def __reduce__(self):
        return (_unpickle_root, (self.system.descriptor, self.system.allow_g2, self.index))

    @property
    def is_positive(self) -> bool:
        return self.index < self.system.npos

    @property
    def height(self) -> int:
        return sum(self.coords)


def _unpickle_root(descriptor, allow_g2, index):
    return build_root_system(descriptor, allow_g2=allow_g2).roots[index]


@dataclass(eq=False)
class RootSystem:
    descriptor: tuple[tuple[str, int], ...]
    cartan: tuple[tuple[int, ...], ...]
    form: tuple[tuple[Fraction, ...], ...]
    allow_g2: bool = False
    # filled in by __post_init__
    roots: tuple[Root, ...] = field(init=False, repr=False)
    npos: int = field(init=False)
    rank: int = field(init=False)
    factor_of_simple: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        self.rank = len(self.cartan)
        self.factor_of_simple = tuple(
            k for k, (_, n) in enumerate(self.descriptor) for _ in range(n)
        )
        positives = _positive_roots(self.cartan)
        positives.sort(key=lambda c: (sum(c), c))
        coords = positives + [tuple(-c for c in p) for p in positives]
        self.npos = n = len(positives)
        self.roots = tuple(Root(self, i, c) for i, c in enumerate(coords))
        self.index = {c: i for i, c in enumerate(coords)}
        self.negation = tuple((i + n) % (2 * n) for i in range(2 * n))
        self.simple_roots = tuple(self.roots[self.index[_unit(i, self.rank)]] for i in range(self.rank))
        # gram[i][j] = 2 F(root_i, root_j), an integer
        two_f = [[int(2 * v) for v in row] for row in self.form]
        images = [[sum(r[k] * c[k] for k in range(self.rank)) for r in two_f] for c in coords]
        self.gram = tuple(
            tuple(sum(a * b for a, b in zip(u, c)) for c in coords) for u in images
        )
        self.pairing_table = tuple(
            tuple(2 * self.gram[b][a] // self.gram[a][a] for a in range(2 * n)) for b in range(2 * n)
        )
        assert all(
            (2 * self.gram[b][a]) % self.gram[a][a] == 0 for a in range(2 * n) for b in range(2 * n)
        ), "non-integral pairing"
        self._norms = tuple(Fraction(self.gram[i][i], 2) for i in range(2 * n))
        self._strings: dict[tuple[int, int], list[Root]] = {}
        self.factor_of_root = tuple(self._factor_of_coords(c) for c in coords)
        self._max_norm = {}
        for i, k in enumerate(self.factor_of_root):
            self._max_norm[k] = max(self._max_norm.get(k, 0), self._norms[i])
        # reflection_table[a][b] = index of r_a(root b)
        self.reflection_table = tuple(
            tuple(self.index[self._reflect_coords(a, b)] for b in range(2 * n))
            for a in range(2 * n)
        )

    # -- basic arithmetic on coordinate vectors --------------------------------
    def _f(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui:
                row = self.form[i]
                for j, vj in enumerate(v):
                    if vj:
                        total += ui * vj * row[j]
        return total

    def _pair_coords(self, b: Sequence[int], a: Sequence[int]) -> int:
        val = 2 * self._f(b, a) / self._f(a, a)
        assert val.denominator == 1, (b, a)
        return int(val)

    def _reflect_coords(self, a: int, b: int) -> tuple[int, ...]:
        ca = self.roots[a].coords
        cb = self.roots[b].coords
        k = self.pairing_table[b][a]
        return tuple(y - k * x for x, y in zip(ca, cb))

    def _factor_of_coords(self, c: Sequence[int]) -> int:
        factors = {self.factor_of_simple[i] for i, v in enumerate(c) if v}
        assert len(factors) == 1, c
        return factors.pop()

    # -- public helpers --------------------------------------------------------
    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __repr__(self):
        return f"RootSystem({format_descriptor(self.descriptor)})"

    def __reduce__(self):
        return (build_root_system, (self.descriptor, self.allow_g2))

    @property
    def name(self) -> str:
        return format_descriptor(self.descriptor)

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return self.roots[: self.npos]

    @property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        return self.cartan

    def find(self, coords: Iterable[int]) -> Root | None:
        i = self.index.get(tuple(coords))
        return None if i is None else self.roots[i]

    def root(self, coords: Iterable[int]) -> Root:
        coords = tuple(coords)
        i = self.index.get(coords)
        if i is None:
            raise NotARoot(f"{coords} is not a root of {self.name}")
        return self.roots[i]

    def norm(self, r: Root) -> Fraction:
        return self._norms[r.index]

    def form_value(self, a: Root, b: Root) -> Fraction:
        return Fraction(self.gram[a.index][b.index], 2)

    def factor_series(self, r: Root) -> str:
        return self.descriptor[self.factor_of_root[r.index]][0]

    @property
    def simply_laced(self) -> bool:
        return all(s in SIMPLY_LACED for s, _ in self.descriptor)

    @property
    def has_g2(self) -> bool:
        return any(s == "G" for s, _ in self.descriptor)


def _unit(i: int, n: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(n))


def _positive_roots(cartan) -> list[tuple[int, ...]]:
    n = len(cartan)
    simple = [_unit(i, n) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(n):
                if b == simple[i]:
                    continue
                # s_i(b) = b - <b, alpha_i^vee> alpha_i
                k = sum(b[j] * cartan[i][j] for j in range(n))
                c = tuple(b[j] - (k if j == i else 0) for j in range(n))
                if c not in seen:
                    assert all(v >= 0 for v in c), c
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return list(seen)


def _symmetrizer(cartan) -> list[Fraction]:
    """Root norms d_i with d_i A_ij = d_j A_ji, short roots of each component = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    comp.append(j)
                    stack.append(j)
        lo = min(d[i] for i in comp)
        for i in comp:
            d[i] /= lo
    return d  # type: ignore[return-value]


@lru_cache(maxsize=None)
def _build(descriptor: tuple[tuple[str, int], ...], allow_g2: bool) -> RootSystem:
    for s, n in descriptor:
        _check_rank(s, n)
        if s == "G" and not allow_g2:
            raise G2Disallowed("G2 factors are not supported (pass allow_g2=True to override)")
    total = sum(n for _, n in descriptor)
    cartan = [[0] * total for _ in range(total)]
    off = 0
    for s, n in descriptor:
        block = cartan_matrix(s, n)
        for i in range(n):
            for j in range(n):
                cartan[off + i][off + j] = block[i][j]
        off += n
    d = _symmetrizer(cartan)
    form = tuple(
        tuple(d[i] * cartan[i][j] / 2 for j in range(total)) for i in range(total)
    )
    rs = RootSystem(descriptor, tuple(map(tuple, cartan)), form, allow_g2)
    expected = sum(classification_count(s, n) for s, n in descriptor)
    assert len(rs.roots) == expected, (descriptor, len(rs.roots), expected)
    return rs


def build_root_system(descriptor, allow_g2: bool = False) -> RootSystem:
    """Build (and cache) the root system for a descriptor like ``"B2"`` or ``[("A", 3)]``."""
    return _build(parse_descriptor(descriptor), bool(allow_g2))


def pairing(rs: RootSystem, beta: Root, alpha: Root) -> int:
    """``<beta, alpha^vee> = 2 F(beta, alpha) / F(alpha, alpha)``."""
    return rs.pairing_table[beta.index][alpha.index]


def reflect(rs: RootSystem, alpha: Root, beta: Root) -> Root:
    """``r_alpha(beta) = beta - <beta, alpha^vee> alpha``."""
    return rs.roots[rs.reflection_table[alpha.index][beta.index]]


def is_long(rs: RootSystem, gamma: Root) -> bool:
    """Long iff of maximal length in a non-simply-laced factor.

    Every root of a simply-laced factor counts as short.
    """
    k = rs.factor_of_root[gamma.index]
    if rs.descriptor[k][0] in SIMPLY_LACED:
        return False
    return rs.norm(gamma) == rs._max_norm[k]


def alpha_string(rs: RootSystem, alpha: Root, beta: Root) -> list[Root]:
    """All roots ``beta + k alpha``, top (largest k) first.

    For ``beta = +-alpha`` the degenerate singleton ``[beta]`` is returned.
    """
    key = (alpha.index, beta.index)
    cached = rs._strings.get(key)
    if cached is not None:
        return list(cached)
    if beta == alpha or beta == -alpha:
        return [beta]
    up = []
    cur = beta
    while True:
        nxt = rs.find(a + b for a, b in zip(cur.coords, alpha.coords))
        if nxt is None:
            break
        up.append(nxt)
        cur = nxt
    down = []
    cur = beta
    while True:
        nxt = rs.find(b - a for a, b in zip(alpha.coords, cur.coords))
        if nxt is None:
            break
        down.append(nxt)
        cur = nxt
    string = up[::-1] + [beta] + down
    # root strings have no gaps: p - q = <beta, alpha^vee> with p, q the up/down extents
    assert len(down) - len(up) == pairing(rs, beta, alpha), (alpha, beta)
    rs._strings[key] = string
    return list(string)
