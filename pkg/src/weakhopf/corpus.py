"""Named example presentations: cyclic groups, the octonion sign loop, a
searched nonassociative I.P. loop, pair groupoids and bigroupoids."""

from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian

from .constructors import BigroupoidPresentation, GroupoidPresentation, LoopTable


def cyclic_group(n: int) -> LoopTable:
    return LoopTable([[(i + j) % n for j in range(n)] for i in range(n)],
                     labels=[f"g{i}" for i in range(n)])


# -- octonions --------------------------------------------------------------

def _cd_conj(x: list[int]) -> list[int]:
    return [x[0]] + [-a for a in x[1:]]


def _cd_mul(x: list[int], y: list[int]) -> list[int]:
    """Cayley-Dickson product ``(a, b)(c, d) = (ac - d*b, da + bc*)``."""
    n = len(x)
    if n == 1:
        return [x[0] * y[0]]
    h = n // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    left = [s - t for s, t in zip(_cd_mul(a, c), _cd_mul(_cd_conj(d), b))]
    right = [s + t for s, t in zip(_cd_mul(d, a), _cd_mul(b, _cd_conj(c)))]
    return left + right


def octonion_loop() -> LoopTable:
    """The 16 signed octonion units; element ``8*s + i`` is ``(-1)^s e_i``."""
    def unit(k):
        v = [0] * 8
        v[k % 8] = -1 if k >= 8 else 1
        return v

    table = []
    for x in range(16):
        row = []
        for y in range(16):
            prod = _cd_mul(unit(x), unit(y))
            (k, s), = [(k, s) for k, s in enumerate(prod) if s]
            row.append(k if s == 1 else k + 8)
        table.append(row)
    labels = [("+" if s == 0 else "-") + f"e{i}" for s in (0, 1) for i in range(8)]
    return LoopTable(table, labels=labels)


# -- I.P. loop search -------------------------------------------------------

def _involutions(items: tuple[int, ...]):
    if not items:
        yield {}
        return
    x, rest = items[0], items[1:]
    for inv in _involutions(rest):
        yield {x: x, **inv}
    for k, y in enumerate(rest):
        for inv in _involutions(rest[:k] + rest[k + 1:]):
            yield {x: y, y: x, **inv}


class _IPSearch:
    """Backtracking fill of a loop table with the inverse properties
    propagated: ``x.y = z`` forces ``x^-1.z = y`` and ``z.y^-1 = x``."""

    def __init__(self, n: int, inv: list[int]):
        self.n, self.inv = n, inv
        self.t = [[-1] * n for _ in range(n)]
        self.row_used = [set() for _ in range(n)]
        self.col_used = [set() for _ in range(n)]
        self.trail: list[tuple[int, int]] = []

    def _set(self, x, y, z) -> bool:
        t = self.t
        if t[x][y] != -1:
            return t[x][y] == z
        if z in self.row_used[x] or z in self.col_used[y]:
            return False
        t[x][y] = z
        self.row_used[x].add(z)
        self.col_used[y].add(z)
        self.trail.append((x, y))
        return True

    def assign(self, x, y, z) -> bool:
        inv = self.inv
        stack = [(x, y, z)]
        while stack:
            a, b, c = stack.pop()
            if self.t[a][b] == c:
                continue
            if not self._set(a, b, c):
                return False
            stack.append((inv[a], c, b))
            stack.append((c, inv[b], a))
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            x, y = self.trail.pop()
            z = self.t[x][y]
            self.t[x][y] = -1
            self.row_used[x].discard(z)
            self.col_used[y].discard(z)

    def solutions(self):
        n = self.n
        for x in range(n):
            if not self.assign(0, x, x) or not self.assign(x, 0, x) \
                    or not self.assign(x, self.inv[x], 0):
                return
        yield from self._fill(0)

    def _fill(self, cell: int):
        n = self.n
        while cell < n * n and self.t[cell // n][cell % n] != -1:
            cell += 1
        if cell == n * n:
            yield [row[:] for row in self.t]
            return
        x, y = divmod(cell, n)
        for z in range(n):
            if z in self.row_used[x] or z in self.col_used[y]:
                continue
            mark = len(self.trail)
            if self.assign(x, y, z):
                yield from self._fill(cell + 1)
            self.undo(mark)


def ip_loops(n: int):
    """All I.P. loop tables of order ``n`` with identity 0, in a fixed order
    (possibly with isomorphic repeats)."""
    for inv_map in _involutions(tuple(range(1, n))):
        inv = [0] + [inv_map[x] for x in range(1, n)]
        yield from _IPSearch(n, inv).solutions()


@lru_cache(maxsize=None)
def smallest_nonassociative_ip_loop(max_order: int = 7) -> LoopTable | None:
    """First nonassociative I.P. loop found by exhaustive search over orders
    ``1..max_order``; deterministic."""
    for n in range(1, max_order + 1):
        for table in ip_loops(n):
            L = LoopTable(table)
            if L.associativity_witness() is not None:
                return L
    return None


# -- groupoids --------------------------------------------------------------

def pair_groupoid(objects=("x", "y")) -> GroupoidPresentation:
    """One arrow ``j<-i`` for every ordered pair of objects."""
    objects = tuple(objects)
    name = {(i, j): f"{j}<-{i}" for i in objects for j in objects}
    arrows = [name[i, j] for i in objects for j in objects]
    src = {name[i, j]: i for i, j in name}
    tgt = {name[i, j]: j for i, j in name}
    comp = {(name[j, k], name[i, j]): name[i, k]
            for i in objects for j in objects for k in objects}
    return GroupoidPresentation(objects, arrows, src, tgt,
                                {x: name[x, x] for x in objects}, comp,
                                {name[i, j]: name[j, i] for i, j in name})


def group_groupoid(L: LoopTable, obj: str = "*", prefix: str = "") -> GroupoidPresentation:
    """A group seen as a one-object groupoid."""
    labels = L.labels or tuple(str(k) for k in range(L.order))
    names = [prefix + s for s in labels]
    inv = L.inverses()
    n = L.order
    return GroupoidPresentation(
        (obj,), names, {a: obj for a in names}, {a: obj for a in names},
        {obj: names[L.identity]},
        {(names[a], names[b]): names[L.table[a][b]] for a in range(n) for b in range(n)},
        {names[a]: names[inv[a]] for a in range(n)})


def disjoint_union(*groupoids: GroupoidPresentation) -> GroupoidPresentation:
    objects, arrows = [], []
    src, tgt, ids, comp, inv = {}, {}, {}, {}, {}
    for G in groupoids:
        objects += G.objects
        arrows += G.arrows
        for d, part in ((src, G.source), (tgt, G.target), (ids, G.identities),
                        (comp, G.composition), (inv, G.inverse)):
            d.update(part)
    return GroupoidPresentation(objects, arrows, src, tgt, ids, comp, inv)


def two_copies_of_z2() -> GroupoidPresentation:
    z2 = cyclic_group(2)
    return disjoint_union(group_groupoid(z2, "p", "p."), group_groupoid(z2, "q", "q."))


# -- bigroupoids ------------------------------------------------------------

def groupoid_bigroupoid(G: GroupoidPresentation) -> BigroupoidPresentation:
    return BigroupoidPresentation(G.objects, G.arrows, G.source, G.target,
                                  G.identities, G.composition, G.inverse)


def loop_bigroupoid(L: LoopTable, obj: str = "*") -> BigroupoidPresentation:
    """An I.P. loop as a one-object bigroupoid (composition ``g o f = g.f``)."""
    labels = L.labels or tuple(str(k) for k in range(L.order))
    inv = L.inverses()
    n = L.order
    return BigroupoidPresentation(
        (obj,), labels, {a: obj for a in labels}, {a: obj for a in labels},
        {obj: labels[L.identity]},
        {(labels[a], labels[b]): labels[L.table[a][b]] for a in range(n) for b in range(n)},
        {labels[a]: labels[inv[a]] for a in range(n)})


def doubled_z2_bigroupoid() -> BigroupoidPresentation:
    """``Z/2 = {e, a}`` with a second copy ``b`` of ``a``: ``a.b = b.a = b.b = e``.

    The table is not associative, and the ideal identifies ``a`` with ``b``,
    so the quotient is the group algebra of Z/2 with a one-dimensional ideal.
    """
    cells = ("e", "a", "b")
    table = {"e": {"e": "e", "a": "a", "b": "b"},
             "a": {"e": "a", "a": "e", "b": "e"},
             "b": {"e": "b", "a": "e", "b": "e"}}
    comp = {(g, f): table[g][f] for g in cells for f in cells}
    return BigroupoidPresentation(("*",), cells, {c: "*" for c in cells},
                                  {c: "*" for c in cells}, {"*": "e"}, comp,
                                  {"e": "e", "a": "a", "b": "b"})


def loop_pair_bigroupoid(L: LoopTable, objects=("x", "y")) -> BigroupoidPresentation:
    """Product of an I.P. loop with the pair groupoid on ``objects``.

    One-cells are ``(l, j<-i)`` composing as ``(l', k<-j) o (l, j<-i) =
    (l'.l, k<-i)``. With a nonassociative loop and several objects this is a
    candidate for an algebra that is neither a weak Hopf algebra nor a Hopf
    quasigroup.
    """
    objects = tuple(objects)
    labels = L.labels or tuple(str(k) for k in range(L.order))
    inv = L.inverses()
    n = L.order

    def name(a, i, j):
        return f"{labels[a]}:{j}<-{i}"

    cells, src, tgt = [], {}, {}
    for a, i, j in cartesian(range(n), objects, objects):
        c = name(a, i, j)
        cells.append(c)
        src[c], tgt[c] = i, j
    comp = {(name(b, j, k), name(a, i, j)): name(L.table[b][a], i, k)
            for a, b in cartesian(range(n), range(n))
            for i, j, k in cartesian(objects, objects, objects)}
    return BigroupoidPresentation(
        objects, cells, src, tgt, {x: name(L.identity, x, x) for x in objects},
        comp, {name(a, i, j): name(inv[a], j, i)
               for a, i, j in cartesian(range(n), objects, objects)})
