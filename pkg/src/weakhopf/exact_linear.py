"""Exact linear algebra over Q and F_p on tensor powers of a finite basis.

Linear maps are stored column-sparse: column ``j`` is a dict ``{row: value}``
holding only nonzero entries. Values are Python ``int`` or
``fractions.Fraction`` over Q and reduced residues ``0 <= v < p`` over F_p.
Nothing is ever rounded.

Tensor indexing is row-major and recursive: the basis vector
``e_i (x) e_j`` of ``A (x) B`` has flat index ``i * dim(B) + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import DimensionMismatch, FieldError, NotIdempotent, NotInvertible

Scalar = Union[int, Fraction]
Column = Mapping[int, Scalar]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Either the rationals (characteristic 0) or a prime field F_p."""

    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise FieldError("the rationals have characteristic 0")
        elif self.kind == "prime_field":
            if not _is_prime(self.characteristic):
                raise FieldError(f"{self.characteristic} is not prime")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "Field":
        return cls("rationals", 0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls("prime_field", int(p))

    @property
    def is_prime(self) -> bool:
        return self.characteristic != 0

    def __str__(self) -> str:
        return "QQ" if not self.is_prime else f"GF({self.characteristic})"

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction or literal string into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return value % self.characteristic if self.is_prime else value
        if isinstance(value, Fraction):
            if self.is_prime:
                p = self.characteristic
                if value.denominator % p == 0:
                    raise FieldError(f"{value} has no image in GF({p})")
                return value.numerator * pow(value.denominator, -1, p) % p
            return value.numerator if value.denominator == 1 else value
        raise FieldError(f"cannot coerce {value!r} into {self}")

    def parse(self, text: str) -> Scalar:
        """Parse ``"7"``, ``"-3/4"`` or ``"5 mod 11"`` exactly."""
        s = text.strip()
        try:
            if "mod" in s:
                val, _, mod = s.partition("mod")
                p = int(mod)
                if not self.is_prime or p != self.characteristic:
                    raise FieldError(f"literal {text!r} does not belong to {self}")
                return int(val) % p
            if "/" in s:
                num, _, den = s.partition("/")
                if int(den) == 0:
                    raise FieldError(f"zero denominator in {text!r}")
                return self(Fraction(int(num), int(den)))
            return self(int(s))
        except ValueError as exc:
            if isinstance(exc, FieldError):
                raise
            raise FieldError(f"bad scalar literal {text!r}") from exc

    def format(self, value: Scalar) -> str:
        if self.is_prime:
            return f"{int(value) % self.characteristic} mod {self.characteristic}"
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return str(value.numerator)
            return f"{value.numerator}/{value.denominator}"
        return str(value)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        if not b:
            raise ZeroDivisionError("division by zero in field")
        if self.is_prime:
            p = self.characteristic
            return a * pow(b, -1, p) % p
        q = Fraction(a) / b
        return q.numerator if q.denominator == 1 else q

    def clean(self, col: Mapping[int, Scalar]) -> dict[int, Scalar]:
        """Reduce values and drop zeros."""
        if self.is_prime:
            p = self.characteristic
            out = {}
            for r, v in col.items():
                v %= p
                if v:
                    out[r] = v
            return out
        out = {}
        for r, v in col.items():
            if v:
                if type(v) is Fraction and v.denominator == 1:
                    v = v.numerator
                out[r] = v
        return out


QQ = Field.rationals()


class LinMap:
    """An exact matrix ``codomain_dim x domain_dim`` stored column-sparse.

    Instances are treated as immutable; column dicts may be shared between
    maps and must never be modified in place.
    """

    __slots__ = ("field", "domain_dim", "codomain_dim", "cols",
                 "domain_labels", "codomain_labels")

    def __init__(self, field: Field, codomain_dim: int, domain_dim: int,
                 cols: Sequence[Column],
                 domain_labels: Sequence[str] | None = None,
                 codomain_labels: Sequence[str] | None = None,
                 _trusted: bool = False):
        if domain_dim < 0 or codomain_dim < 0:
            raise DimensionMismatch("dimensions must be nonnegative")
        if len(cols) != domain_dim:
            raise DimensionMismatch(
                f"expected {domain_dim} columns, got {len(cols)}")
        if not _trusted:
            cleaned = []
            for col in cols:
                col = field.clean({int(r): field(v) for r, v in col.items()})
                for r in col:
                    if not 0 <= r < codomain_dim:
                        raise DimensionMismatch(
                            f"row index {r} out of range for dimension {codomain_dim}")
                cleaned.append(col)
            cols = cleaned
        if domain_labels is not None and len(domain_labels) != domain_dim:
            raise DimensionMismatch("domain label count differs from domain_dim")
        if codomain_labels is not None and len(codomain_labels) != codomain_dim:
            raise DimensionMismatch("codomain label count differs from codomain_dim")
        self.field = field
        self.domain_dim = domain_dim
        self.codomain_dim = codomain_dim
        self.cols = tuple(cols)
        self.domain_labels = tuple(domain_labels) if domain_labels is not None else None
        self.codomain_labels = tuple(codomain_labels) if codomain_labels is not None else None

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ,
                  domain_dim: int | None = None) -> "LinMap":
        m = len(rows)
        n = len(rows[0]) if m else (domain_dim or 0)
        cols = [{} for _ in range(n)]
        for r, row in enumerate(rows):
            if len(row) != n:
                raise DimensionMismatch("ragged matrix")
            for c, v in enumerate(row):
                v = field(v)
                if v:
                    cols[c][r] = v
        return cls(field, m, n, cols, _trusted=True)

    @classmethod
    def from_triples(cls, codomain_dim: int, domain_dim: int,
                     triples: Iterable[tuple[int, int, Scalar]],
                     field: Field = QQ) -> "LinMap":
        cols: list[dict[int, Scalar]] = [{} for _ in range(domain_dim)]
        for r, c, v in triples:
            if not (0 <= c < domain_dim and 0 <= r < codomain_dim):
                raise DimensionMismatch(f"entry ({r}, {c}) out of range")
            if r in cols[c]:
                raise DimensionMismatch(f"duplicate entry ({r}, {c})")
            cols[c][r] = v
        return cls(field, codomain_dim, domain_dim, cols)

    @classmethod
    def from_columns(cls, codomain_dim: int, cols: Sequence[Column],
                     field: Field = QQ) -> "LinMap":
        return cls(field, codomain_dim, len(cols), cols)

    # -- accessors --------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.codomain_dim, self.domain_dim)

    def __getitem__(self, rc: tuple[int, int]) -> Scalar:
        r, c = rc
        return self.cols[c].get(r, 0)

    def column(self, j: int) -> dict[int, Scalar]:
        return dict(self.cols[j])

    def rows(self) -> list[dict[int, Scalar]]:
        out: list[dict[int, Scalar]] = [{} for _ in range(self.codomain_dim)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                out[r][c] = v
        return out

    def to_dense(self) -> list[list[Scalar]]:
        dense = [[0] * self.domain_dim for _ in range(self.codomain_dim)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                dense[r][c] = v
        return dense

    def triples(self) -> list[tuple[int, int, Scalar]]:
        """Nonzero entries sorted by (row, col)."""
        return sorted((r, c, v) for c, col in enumerate(self.cols)
                      for r, v in col.items())

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def apply(self, vec: Mapping[int, Scalar]) -> dict[int, Scalar]:
        acc: dict[int, Scalar] = {}
        for k, a in vec.items():
            for r, v in self.cols[k].items():
                acc[r] = acc.get(r, 0) + v * a
        return self.field.clean(acc)

    # -- algebra ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.cols == other.cols)

    def __hash__(self):
        return hash((self.field, self.shape,
                     tuple(tuple(sorted(c.items())) for c in self.cols)))

    def __matmul__(self, other: "LinMap") -> "LinMap":
        return compose(self, other)

    def __add__(self, other: "LinMap") -> "LinMap":
        return add(self, other)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return add(self, scale(other, -1))

    def __neg__(self) -> "LinMap":
        return scale(self, -1)

    def __rmul__(self, c) -> "LinMap":
        return scale(self, c)

    def __repr__(self) -> str:
        return (f"LinMap({self.codomain_dim}x{self.domain_dim} over {self.field}, "
                f"nnz={self.nnz()})")

    def is_square(self) -> bool:
        return self.domain_dim == self.codomain_dim

    def relabel(self, domain_labels=None, codomain_labels=None) -> "LinMap":
        return LinMap(self.field, self.codomain_dim, self.domain_dim, self.cols,
                      domain_labels, codomain_labels, _trusted=True)


@dataclass(frozen=True)
class Splitting:
    """``section`` (Z -> Y) and ``retraction`` (Y -> Z) with p o i = id_Z."""

    section: LinMap
    retraction: LinMap
    rank: int

    @property
    def i(self) -> LinMap:
        return self.section

    @property
    def p(self) -> LinMap:
        return self.retraction


# -- elementary maps --------------------------------------------------------

def identity(n: int, field: Field = QQ) -> LinMap:
    return LinMap(field, n, n, [{j: 1} for j in range(n)], _trusted=True)


def zero(codomain_dim: int, domain_dim: int, field: Field = QQ) -> LinMap:
    return LinMap(field, codomain_dim, domain_dim,
                  [{} for _ in range(domain_dim)], _trusted=True)


def flip(a: int, b: int, field: Field = QQ) -> LinMap:
    """The symmetric braiding ``A (x) B -> B (x) A``; ``i*b + j -> j*a + i``."""
    if a < 0 or b < 0:
        raise DimensionMismatch("flip dimensions must be nonnegative")
    cols = [None] * (a * b)
    for i in range(a):
        for j in range(b):
            cols[i * b + j] = {j * a + i: 1}
    return LinMap(field, a * b, a * b, cols, _trusted=True)


def _check_field(*maps: LinMap) -> Field:
    field = maps[0].field
    for m in maps[1:]:
        if m.field != field:
            raise DimensionMismatch(f"field mismatch: {field} vs {m.field}")
    return field


def compose(*maps: LinMap) -> LinMap:
    """``compose(h, g, f) = h o g o f`` (rightmost applied first)."""
    if not maps:
        raise ValueError("compose needs at least one map")
    result = maps[-1]
    for g in reversed(maps[:-1]):
        result = _compose2(g, result)
    return result


def _compose2(g: LinMap, f: LinMap) -> LinMap:
    if g.domain_dim != f.codomain_dim:
        raise DimensionMismatch(
            f"cannot compose {g.shape} after {f.shape}")
    field = _check_field(g, f)
    gcols = g.cols
    prime = field.characteristic
    out = []
    for col in f.cols:
        if not col:
            out.append({})
            continue
        if len(col) == 1:
            (k, a), = col.items()
            gc = gcols[k]
            if a == 1:
                out.append(gc)
            elif prime:
                out.append(field.clean({r: v * a for r, v in gc.items()}))
            else:
                out.append({r: v * a for r, v in gc.items()})
            continue
        acc: dict[int, Scalar] = {}
        get = acc.get
        for k, a in col.items():
            for r, v in gcols[k].items():
                acc[r] = get(r, 0) + v * a
        out.append(field.clean(acc))
    return LinMap(field, g.codomain_dim, f.domain_dim, out,
                  f.domain_labels, g.codomain_labels, _trusted=True)


def tensor(*maps: LinMap) -> LinMap:
    """Kronecker product under the row-major flat-index convention."""
    if not maps:
        raise ValueError("tensor needs at least one map")
    result = maps[0]
    for g in maps[1:]:
        result = _tensor2(result, g)
    return result


def _tensor2(f: LinMap, g: LinMap) -> LinMap:
    field = _check_field(f, g)
    bd = g.codomain_dim
    prime = field.characteristic
    gcols = g.cols
    out = []
    for fc in f.cols:
        items = [(r * bd, a) for r, a in fc.items()]
        for gc in gcols:
            col: dict[int, Scalar] = {}
            for off, a in items:
                if a == 1:
                    for s, b in gc.items():
                        col[off + s] = b
                else:
                    for s, b in gc.items():
                        col[off + s] = a * b
            if prime and any(a != 1 for _, a in items):
                col = field.clean(col)
            out.append(col)
    dl = cl = None
    if f.domain_labels is not None and g.domain_labels is not None:
        dl = [f"{x}⊗{y}" for x in f.domain_labels for y in g.domain_labels]
    if f.codomain_labels is not None and g.codomain_labels is not None:
        cl = [f"{x}⊗{y}" for x in f.codomain_labels for y in g.codomain_labels]
    return LinMap(field, f.codomain_dim * g.codomain_dim,
                  f.domain_dim * g.domain_dim, out, dl, cl, _trusted=True)


def add(f: LinMap, g: LinMap) -> LinMap:
    if f.shape != g.shape:
        raise DimensionMismatch(f"cannot add {f.shape} and {g.shape}")
    field = _check_field(f, g)
    out = []
    for fc, gc in zip(f.cols, g.cols):
        acc = dict(fc)
        for r, v in gc.items():
            acc[r] = acc.get(r, 0) + v
        out.append(field.clean(acc))
    return LinMap(field, f.codomain_dim, f.domain_dim, out,
                  f.domain_labels, f.codomain_labels, _trusted=True)


def scale(f: LinMap, c) -> LinMap:
    c = f.field(c)
    out = [f.field.clean({r: v * c for r, v in col.items()}) for col in f.cols]
    return LinMap(f.field, f.codomain_dim, f.domain_dim, out,
                  f.domain_labels, f.codomain_labels, _trusted=True)


def transpose(f: LinMap) -> LinMap:
    return LinMap(f.field, f.domain_dim, f.codomain_dim, f.rows(),
                  f.codomain_labels, f.domain_labels, _trusted=True)


def power(f: LinMap, n: int) -> LinMap:
    if not f.is_square():
        raise DimensionMismatch("power of a non-square map")
    result = identity(f.domain_dim, f.field)
    for _ in range(n):
        result = compose(f, result)
    return result


def first_difference(f: LinMap, g: LinMap) -> tuple[int, dict[int, Scalar]] | None:
    """Lowest column index where ``f`` and ``g`` differ, with ``f - g`` there."""
    if f.shape != g.shape:
        raise DimensionMismatch(f"cannot compare {f.shape} with {g.shape}")
    field = _check_field(f, g)
    for j, (a, b) in enumerate(zip(f.cols, g.cols)):
        if a != b:
            diff = dict(a)
            for r, v in b.items():
                diff[r] = diff.get(r, 0) - v
            return j, field.clean(diff)
    return None


# -- echelon machinery ------------------------------------------------------

class _Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace.

    ``rows`` maps pivot column -> vector with a 1 at the pivot and zeros at
    every other pivot column.
    """

    def __init__(self, field: Field):
        self.field = field
        self.rows: dict[int, dict[int, Scalar]] = {}

    def reduce(self, vec: Mapping[int, Scalar]) -> dict[int, Scalar]:
        field = self.field
        v = dict(vec)
        for p in [p for p in v if p in self.rows]:
            a = v.get(p)
            if not a:
                continue
            for c, b in self.rows[p].items():
                v[c] = v.get(c, 0) - a * b
        return field.clean(v)

    def insert(self, vec: Mapping[int, Scalar]) -> bool:
        """Add ``vec`` to the span; return True if the rank grew."""
        v = self.reduce(vec)
        if not v:
            return False
        field = self.field
        p = min(v)
        lead = v[p]
        if lead != 1:
            v = {c: field.div(x, lead) for c, x in v.items()}
        for q, row in self.rows.items():
            a = row.get(p)
            if a:
                for c, b in v.items():
                    row[c] = row.get(c, 0) - a * b
                self.rows[q] = field.clean(row)
        self.rows[p] = v
        return True

    def contains(self, vec: Mapping[int, Scalar]) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list[dict[int, Scalar]]:
        return [self.rows[p] for p in sorted(self.rows)]

    def pivots(self) -> list[int]:
        return sorted(self.rows)


def _span(field: Field, vectors: Iterable[Mapping[int, Scalar]]) -> _Echelon:
    ech = _Echelon(field)
    for v in vectors:
        ech.insert(v)
    return ech


def rank(f: LinMap) -> int:
    return len(_span(f.field, f.cols).rows)


def image_basis(f: LinMap) -> LinMap:
    """Injective map whose columns are the reduced echelon basis of im(f)."""
    basis = _span(f.field, f.cols).basis()
    return LinMap(f.field, f.codomain_dim, len(basis), basis,
                  codomain_labels=f.codomain_labels, _trusted=True)


def kernel_basis(f: LinMap) -> LinMap:
    """Injective map whose columns are the reduced echelon basis of ker(f)."""
    field = f.field
    row_space = _span(field, f.rows())
    pivots = set(row_space.rows)
    kernel = []
    for c in range(f.domain_dim):
        if c in pivots:
            continue
        v = {c: 1}
        for p, row in row_space.rows.items():
            a = row.get(c)
            if a:
                v[p] = -a
        kernel.append(field.clean(v))
    basis = _span(field, kernel).basis()
    return LinMap(field, f.domain_dim, len(basis), basis,
                  codomain_labels=f.domain_labels, _trusted=True)


def same_subspace(f: LinMap, g: LinMap) -> bool:
    """Whether ``im(f) == im(g)`` inside a common codomain."""
    if f.codomain_dim != g.codomain_dim:
        raise DimensionMismatch("subspaces live in different spaces")
    _check_field(f, g)
    return image_basis(f).cols == image_basis(g).cols


def is_idempotent(e: LinMap) -> bool:
    return e.is_square() and compose(e, e) == e


def split_idempotent(e: LinMap) -> Splitting:
    """Split ``e = i o p`` with ``p o i = id``.

    ``i`` consists of the pivot columns of ``e`` (left-to-right pivoting) and
    ``p`` is the nonzero part of the reduced row echelon form of ``e``.
    """
    if not e.is_square():
        raise DimensionMismatch("only square maps can be idempotent")
    witness = first_difference(compose(e, e), e)
    if witness is not None:
        raise NotIdempotent(f"e o e != e (first differing column {witness[0]})")
    row_space = _span(e.field, e.rows())
    pivots = row_space.pivots()
    section = LinMap(e.field, e.codomain_dim, len(pivots),
                     [e.cols[p] for p in pivots],
                     codomain_labels=e.codomain_labels, _trusted=True)
    retraction = transpose(LinMap(e.field, e.domain_dim, len(pivots),
                                  row_space.basis(), _trusted=True))
    if e.domain_labels is not None:
        retraction = retraction.relabel(e.domain_labels, None)
    return Splitting(section, retraction, len(pivots))


def equalizer(f: LinMap, g: LinMap) -> LinMap:
    """Inclusion of ker(f - g), columns in reduced echelon form."""
    if f.shape != g.shape:
        raise DimensionMismatch(f"equalizer of {f.shape} and {g.shape}")
    return kernel_basis(f - g)


def coequalizer(f: LinMap, g: LinMap) -> LinMap:
    """Surjection with kernel im(f - g).

    The complement is spanned by the standard basis vectors at the non-pivot
    coordinates of the echelon basis of im(f - g); the quotient coordinates
    are those coordinates in increasing order.
    """
    if f.shape != g.shape:
        raise DimensionMismatch(f"coequalizer of {f.shape} and {g.shape}")
    d = f - g
    field = d.field
    ech = _span(field, d.cols)
    pivots = ech.rows
    free = [c for c in range(d.codomain_dim) if c not in pivots]
    slot = {c: k for k, c in enumerate(free)}
    cols = []
    for c in range(d.codomain_dim):
        if c in slot:
            cols.append({slot[c]: 1})
        else:
            cols.append(field.clean({slot[j]: -v for j, v in pivots[c].items()
                                     if j != c}))
    return LinMap(field, len(free), d.codomain_dim, cols,
                  domain_labels=d.codomain_labels, _trusted=True)


def inverse(f: LinMap) -> LinMap:
    if not f.is_square():
        raise NotInvertible("non-square map")
    n = f.domain_dim
    ech = _Echelon(f.field)
    for r, row in enumerate(f.rows()):
        aug = dict(row)
        aug[n + r] = 1
        ech.insert(aug)
    inv_rows = []
    for k in range(n):
        row = ech.rows.get(k)
        if row is None or any(c < n and c != k for c in row):
            raise NotInvertible("map is singular")
        inv_rows.append({c - n: v for c, v in row.items() if c >= n})
    inv = transpose(LinMap(f.field, n, n, inv_rows, _trusted=True))
    return LinMap(f.field, n, n, inv.cols, f.codomain_labels, f.domain_labels,
                  _trusted=True)


def solve_coordinates(basis: LinMap, f: LinMap) -> LinMap:
    """Coordinates ``x`` with ``basis o x = f``.

    ``basis`` must be injective and ``im(f)`` must lie in ``im(basis)``.
    """
    if basis.codomain_dim != f.codomain_dim:
        raise DimensionMismatch("codomain mismatch")
    field = _check_field(basis, f)
    m, k = basis.codomain_dim, basis.domain_dim
    # rows (b_j | e_j): reducing (t | 0) leaves (t - B y | -y)
    ech = _Echelon(field)
    for j, col in enumerate(basis.cols):
        aug = dict(col)
        aug[m + j] = 1
        ech.insert(aug)
    out = []
    for col in f.cols:
        v = ech.reduce(col)
        if any(c < m for c in v):
            raise DimensionMismatch("target not in the image of basis")
        out.append(field.clean({c - m: -a for c, a in v.items()}))
    return LinMap(field, k, f.domain_dim, out, _trusted=True)
