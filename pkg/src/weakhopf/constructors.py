"""Weak Hopf quasigroups from I.P. loops, groupoids and normal bigroupoids.

All three constructions produce "grouplike" algebras: every basis vector
``x`` satisfies ``delta(x) = x (x) x`` and ``eps(x) = 1``, and the antipode
permutes the basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import (
    ImproperIdeal, InconsistentPresentation, InvalidPresentation, NotGroupoid,
    NotIPLoop,
)
from .exact_linear import QQ, Field, LinMap, _Echelon
from .structure import WHQ


def grouplike_whq(n: int, product: Mapping[tuple[int, int], int],
                  unit: Sequence[int], inverse: Sequence[int],
                  field: Field = QQ, labels: Sequence[str] | None = None) -> WHQ:
    """Algebra on basis ``0..n-1`` with ``x . y = product[x, y]`` (absent
    pairs multiply to zero), unit ``sum(e_u for u in unit)``, grouplike
    coproduct, counit 1 and antipode ``x -> inverse[x]``."""
    mul = [dict() for _ in range(n * n)]
    for (x, y), z in product.items():
        mul[x * n + y] = {z: 1}
    return WHQ(
        unit=LinMap(field, n, 1, [{u: 1 for u in unit}]),
        mul=LinMap(field, n, n * n, mul),
        counit=LinMap(field, 1, n, [{0: 1} for _ in range(n)]),
        comul=LinMap(field, n * n, n, [{x * n + x: 1} for x in range(n)]),
        antipode=LinMap(field, n, n, [{inverse[x]: 1} for x in range(n)]),
        labels=labels,
    )


# -- loops ------------------------------------------------------------------

@dataclass(frozen=True)
class LoopTable:
    """Multiplication table ``table[x][y] = x . y`` of a finite loop."""

    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(r) for r in self.table))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inverses(self) -> list[int]:
        """Two-sided inverses; raises NotIPLoop if some element lacks one."""
        n, e = self.order, self.identity
        inv = []
        for x in range(n):
            right = [y for y in range(n) if self.table[x][y] == e]
            if len(right) != 1 or self.table[right[0]][x] != e:
                raise NotIPLoop(f"element {x} has no two-sided inverse", (x,))
            inv.append(right[0])
        return inv

    def is_associative(self) -> bool:
        t = self.table
        r = range(self.order)
        return all(t[t[x][y]][z] == t[x][t[y][z]] for x in r for y in r for z in r)

    def associativity_witness(self) -> tuple[int, int, int] | None:
        t = self.table
        r = range(self.order)
        for x in r:
            for y in r:
                for z in r:
                    if t[t[x][y]][z] != t[x][t[y][z]]:
                        return (x, y, z)
        return None


def validate_ip_loop(L: LoopTable) -> list[int]:
    """Check the I.P. loop invariants and return the inverse map."""
    n, t, e = L.order, L.table, L.identity
    if n < 1 or any(len(row) != n for row in t):
        raise NotIPLoop("table must be square and nonempty")
    if not 0 <= e < n:
        raise NotIPLoop("identity index out of range")
    full = set(range(n))
    for x in range(n):
        if set(t[x]) != full:
            raise NotIPLoop(f"row {x} is not a permutation", (x,))
        if {t[y][x] for y in range(n)} != full:
            raise NotIPLoop(f"column {x} is not a permutation", (x,))
        if t[e][x] != x or t[x][e] != x:
            raise NotIPLoop(f"identity does not act trivially on {x}", (e, x))
    inv = L.inverses()
    for x in range(n):
        for y in range(n):
            if t[inv[x]][t[x][y]] != y:
                raise NotIPLoop(f"left inverse property fails for ({x}, {y})",
                                (inv[x], x, y))
            if t[t[y][x]][inv[x]] != y:
                raise NotIPLoop(f"right inverse property fails for ({y}, {x})",
                                (y, x, inv[x]))
    return inv


def from_loop(L: LoopTable, field: Field = QQ) -> WHQ:
    """Loop algebra of an I.P. loop: a Hopf quasigroup."""
    inv = validate_ip_loop(L)
    n = L.order
    product = {(x, y): L.table[x][y] for x in range(n) for y in range(n)}
    return grouplike_whq(n, product, [L.identity], inv, field, L.labels)


# -- groupoids --------------------------------------------------------------

@dataclass(frozen=True)
class GroupoidPresentation:
    """A finite groupoid: arrows with source/target, identities, a composition
    table ``(g, f) -> g o f`` for ``s(g) == t(f)`` and an inverse map."""

    objects: tuple[str, ...]
    arrows: tuple[str, ...]
    source: Mapping[str, str]
    target: Mapping[str, str]
    identities: Mapping[str, str]
    composition: Mapping[tuple[str, str], str]
    inverse: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "arrows", tuple(self.arrows))


def _check_cells(objects, arrows, source, target, identities, composition, err):
    if len(set(arrows)) != len(arrows):
        raise err("duplicate arrow names")
    if len(set(objects)) != len(objects):
        raise err("duplicate object names")
    objs = set(objects)
    for f in arrows:
        if source.get(f) not in objs or target.get(f) not in objs:
            raise err(f"arrow {f} has unknown source or target")
    for x in objects:
        u = identities.get(x)
        if u not in source or source[u] != x or target[u] != x:
            raise err(f"identity of {x} missing or not an endo-arrow of {x}")
    names = set(arrows)
    for (g, f), h in composition.items():
        if g not in names or f not in names or h not in names:
            raise err(f"composition {g} o {f} = {h} mentions an unknown arrow")
        if source[g] != target[f]:
            raise err(f"composition {g} o {f} given for a non-composable pair")
        if source[h] != source[f] or target[h] != target[g]:
            raise err(f"{g} o {f} = {h} has the wrong source or target")
    for g in arrows:
        for f in arrows:
            if source[g] == target[f] and (g, f) not in composition:
                raise err(f"composition {g} o {f} is missing")
    for f in arrows:
        if composition[identities[target[f]], f] != f or \
                composition[f, identities[source[f]]] != f:
            raise err(f"identities do not act trivially on {f}")


def validate_groupoid(G: GroupoidPresentation) -> None:
    _check_cells(G.objects, G.arrows, G.source, G.target, G.identities,
                 G.composition, NotGroupoid)
    comp, s, t = G.composition, G.source, G.target
    for f in G.arrows:
        g = G.inverse.get(f)
        if g is None or s[g] != t[f] or t[g] != s[f]:
            raise NotGroupoid(f"inverse of {f} missing or with wrong source/target")
        if comp[g, f] != G.identities[s[f]] or comp[f, g] != G.identities[t[f]]:
            raise NotGroupoid(f"{g} is not inverse to {f}")
    for h in G.arrows:
        for g in G.arrows:
            if s[h] != t[g]:
                continue
            for f in G.arrows:
                if s[g] == t[f] and comp[comp[h, g], f] != comp[h, comp[g, f]]:
                    raise NotGroupoid(f"composition not associative at ({h}, {g}, {f})")


def from_groupoid(G: GroupoidPresentation, field: Field = QQ) -> WHQ:
    """Groupoid algebra: a weak Hopf algebra with unit the sum of identities."""
    validate_groupoid(G)
    idx = {f: k for k, f in enumerate(G.arrows)}
    product = {(idx[g], idx[f]): idx[h] for (g, f), h in G.composition.items()}
    unit = [idx[G.identities[x]] for x in G.objects]
    inv = [idx[G.inverse[f]] for f in G.arrows]
    return grouplike_whq(len(G.arrows), product, unit, inv, field, G.arrows)


# -- bigroupoids ------------------------------------------------------------

@dataclass(frozen=True)
class BigroupoidPresentation:
    """One-cell data of a finite normal bigroupoid.

    ``composition`` must be defined exactly on composable pairs but need not
    be associative. ``inv`` designates one member of ``Inv(f)`` per one-cell;
    ``extra_inverses`` lists further members, which only feed the ideal.
    """

    zero_cells: tuple[str, ...]
    one_cells: tuple[str, ...]
    source: Mapping[str, str]
    target: Mapping[str, str]
    identities: Mapping[str, str]
    composition: Mapping[tuple[str, str], str]
    inv: Mapping[str, str]
    extra_inverses: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "zero_cells", tuple(self.zero_cells))
        object.__setattr__(self, "one_cells", tuple(self.one_cells))


@dataclass(frozen=True)
class QuotientResult:
    """``H = F B / I(B)`` together with the class map and the ideal."""

    whq: WHQ
    class_of: Mapping[str, int | None]
    classes: tuple[tuple[str, ...], ...]
    ideal_dim: int
    ideal_basis: tuple[dict, ...]


def validate_bigroupoid(B: BigroupoidPresentation) -> None:
    _check_cells(B.zero_cells, B.one_cells, B.source, B.target, B.identities,
                 B.composition, InvalidPresentation)
    s, t = B.source, B.target
    for f in B.one_cells:
        members = [B.inv.get(f)] + list(B.extra_inverses.get(f, ()))
        for g in members:
            if g not in s:
                raise InconsistentPresentation(f"inverse of {f} is missing or unknown")
            if s[g] != t[f] or t[g] != s[f]:
                raise InconsistentPresentation(
                    f"inverse {g} of {f} does not run from t({f}) to s({f})")


def _ideal_generators(B: BigroupoidPresentation, idx: Mapping[str, int]):
    comp, s, t = B.composition, B.source, B.target
    for f in B.one_cells:
        for g in (B.inv[f],) + tuple(B.extra_inverses.get(f, ())):
            for h in B.one_cells:
                if t[h] == s[f]:
                    yield _difference(idx[h], idx[comp[g, comp[f, h]]])
            for p in B.one_cells:
                if s[p] == t[f]:
                    yield _difference(idx[p], idx[comp[comp[p, f], g]])


def _difference(a: int, b: int) -> dict[int, int]:
    return {} if a == b else {a: 1, b: -1}


def _multiply(vec, cell: int, left: bool, table) -> dict:
    """``cell . vec`` (left) or ``vec . cell`` in the one-cell algebra."""
    out: dict = {}
    for k, a in vec.items():
        z = table.get((cell, k) if left else (k, cell))
        if z is not None:
            out[z] = out.get(z, 0) + a
    return out


def ideal_closure(B: BigroupoidPresentation, field: Field = QQ) -> _Echelon:
    """Two-sided ideal of F B generated by the inverse relations.

    Worklist fixpoint: every vector that enlarges the span is multiplied on
    both sides by every basis one-cell and the products are fed back.
    """
    idx = {f: k for k, f in enumerate(B.one_cells)}
    table = {(idx[g], idx[f]): idx[h] for (g, f), h in B.composition.items()}
    n = len(B.one_cells)
    ech = _Echelon(field)
    work = []
    for v in _ideal_generators(B, idx):
        if ech.insert(v):
            work.append(v)
    while work:
        v = work.pop()
        for cell in range(n):
            for left in (True, False):
                w = field.clean(_multiply(v, cell, left, table))
                if w and ech.insert(w):
                    work.append(w)
    return ech


def from_bigroupoid(B: BigroupoidPresentation, field: Field = QQ) -> QuotientResult:
    validate_bigroupoid(B)
    cells = B.one_cells
    n = len(cells)
    idx = {f: k for k, f in enumerate(cells)}
    s, t, comp = B.source, B.target, B.composition
    ech = ideal_closure(B, field)
    ideal_dim = len(ech.rows)

    reps: dict[tuple, int] = {}
    members: list[list[str]] = []
    class_of: dict[str, int | None] = {}
    for f in cells:
        r = ech.reduce({idx[f]: 1})
        if not r:
            raise ImproperIdeal(
                f"[{f}] = 0, so the ideal is the whole algebra (ideal_dim={ideal_dim}"
                f" of {n})")
        key = tuple(sorted(r.items()))
        if key not in reps:
            reps[key] = len(members)
            members.append([])
        class_of[f] = reps[key]
        members[reps[key]].append(f)
    if ideal_dim != n - len(members):
        raise ImproperIdeal("ideal is not spanned by differences of one-cells")

    for group in members:
        f = group[0]
        for g in group[1:]:
            if s[g] != s[f] or t[g] != t[f]:
                raise InconsistentPresentation(
                    f"[{f}] = [{g}] but they have different source or target")
    for f in cells:
        expected = class_of[B.inv[f]]
        for g in B.extra_inverses.get(f, ()):
            if class_of[g] != expected:
                raise InconsistentPresentation(f"class of Inv({f}) is not unique")
        for f2 in members[class_of[f]]:
            if class_of[B.inv[f2]] != expected:
                raise InconsistentPresentation(
                    f"[{f}]^-1 depends on the representative ({f} vs {f2})")

    product: dict[tuple[int, int], int] = {}
    for (g, f), h in comp.items():
        key = (class_of[g], class_of[f])
        val = class_of[h]
        if product.setdefault(key, val) != val:
            raise InconsistentPresentation(
                f"product of classes [{g}].[{f}] is not well defined")
    unit = sorted({class_of[B.identities[x]] for x in B.zero_cells})
    inverse = [class_of[B.inv[group[0]]] for group in members]
    labels = [group[0] for group in members]
    whq = grouplike_whq(len(members), product, unit, inverse, field, labels)
    return QuotientResult(whq, class_of, tuple(tuple(g) for g in members),
                          ideal_dim, tuple(ech.basis()))
