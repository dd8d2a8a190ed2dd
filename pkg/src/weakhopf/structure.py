"""Weak Hopf quasigroup data, convolution, target/source maps and H_L, H_R."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import DimensionMismatch, InvalidStructure, NotInvertible
from .exact_linear import (
    Field, LinMap, Splitting, compose, first_difference, flip, identity,
    image_basis, inverse, kernel_basis, same_subspace, split_idempotent, tensor,
)
from .verdicts import Verdict, compare, holds


def _law(name: str, lhs: LinMap, rhs: LinMap) -> None:
    diff = first_difference(lhs, rhs)
    if diff is not None:
        raise InvalidStructure(name, diff[0])


def _shape(name: str, f: LinMap, codomain: int, domain: int) -> None:
    if f.shape != (codomain, domain):
        raise InvalidStructure(
            f"shape of {name}", detail=f"expected {codomain}x{domain}, got "
            f"{f.codomain_dim}x{f.domain_dim}")


class WHQ:
    """A weak Hopf quasigroup candidate on a ``dim``-dimensional space.

    Construction enforces the shapes, invertibility of the braiding, the
    unital magma laws, counitality and coassociativity. The weak Hopf
    quasigroup axioms themselves are left to :mod:`weakhopf.axioms` so that
    near-examples can be represented and diagnosed.

    A user-supplied braiding must also satisfy the Yang-Baxter relation on
    ``H (x) H (x) H``. Equality compares the field and the structure maps
    and ignores basis labels.
    """

    def __init__(self, unit: LinMap, mul: LinMap, counit: LinMap, comul: LinMap,
                 antipode: LinMap, braiding: LinMap | None = None,
                 braiding_inv: LinMap | None = None,
                 labels: Sequence[str] | None = None):
        n = unit.codomain_dim
        if n < 1:
            raise InvalidStructure("shape of unit", detail="dimension must be positive")
        field = unit.field
        for f in (mul, counit, comul, antipode, braiding, braiding_inv):
            if f is not None and f.field != field:
                raise InvalidStructure("field", detail="structure maps over different fields")
        _shape("unit", unit, n, 1)
        _shape("mul", mul, n, n * n)
        _shape("counit", counit, 1, n)
        _shape("comul", comul, n * n, n)
        _shape("antipode", antipode, n, n)
        custom = braiding is not None
        if braiding is None:
            braiding = flip(n, n, field)
            braiding_inv = braiding
        _shape("braiding", braiding, n * n, n * n)
        if braiding_inv is None:
            try:
                braiding_inv = inverse(braiding)
            except NotInvertible as exc:
                raise InvalidStructure("braiding invertible", detail=str(exc)) from None
        _shape("braiding_inv", braiding_inv, n * n, n * n)
        if labels is not None and len(labels) != n:
            raise InvalidStructure("labels", detail="label count differs from dim")

        self.field: Field = field
        self.dim = n
        self.unit = unit
        self.mul = mul
        self.counit = counit
        self.comul = comul
        self.antipode = antipode
        self.braiding = braiding
        self.braiding_inv = braiding_inv
        self.labels = tuple(labels) if labels is not None else None

        I, I2 = self.I, identity(n * n, field)
        _law("braiding c o c^-1 = id", compose(braiding, braiding_inv), I2)
        _law("braiding c^-1 o c = id", compose(braiding_inv, braiding), I2)
        if custom:
            c1 = tensor(braiding, I)
            c2 = tensor(I, braiding)
            _law("Yang-Baxter", compose(c1, c2, c1), compose(c2, c1, c2))
        _law("right unit mu o (H x eta) = id", compose(mul, tensor(I, unit)), I)
        _law("left unit mu o (eta x H) = id", compose(mul, tensor(unit, I)), I)
        _law("left counit (eps x H) o delta = id", compose(tensor(counit, I), comul), I)
        _law("right counit (H x eps) o delta = id", compose(tensor(I, counit), comul), I)
        _law("coassociativity", compose(tensor(comul, I), comul),
             compose(tensor(I, comul), comul))

    # -- basic pieces ---------------------------------------------------

    @cached_property
    def I(self) -> LinMap:
        return identity(self.dim, self.field)

    @cached_property
    def I2(self) -> LinMap:
        return identity(self.dim * self.dim, self.field)

    @property
    def c(self) -> LinMap:
        return self.braiding

    @property
    def c_inv(self) -> LinMap:
        return self.braiding_inv

    @cached_property
    def one(self) -> LinMap:
        """Identity of the unit object K."""
        return identity(1, self.field)

    @cached_property
    def delta_eta(self) -> LinMap:
        return compose(self.comul, self.unit)

    @cached_property
    def eps_mu(self) -> LinMap:
        return compose(self.counit, self.mul)

    @cached_property
    def mul_HH(self) -> LinMap:
        """Product of the unital magma H (x) H."""
        I = self.I
        return compose(tensor(self.mul, self.mul), tensor(I, self.c, I))

    @cached_property
    def comul_HH(self) -> LinMap:
        """Coproduct of the comonoid H (x) H."""
        I = self.I
        return compose(tensor(I, self.c, I), tensor(self.comul, self.comul))

    # -- target / source maps -------------------------------------------

    @cached_property
    def pi_L(self) -> LinMap:
        return convolution(self.I, self.antipode, self)

    @cached_property
    def pi_R(self) -> LinMap:
        return convolution(self.antipode, self.I, self)

    @cached_property
    def pi_L_closed(self) -> LinMap:
        I = self.I
        return compose(tensor(self.eps_mu, I), tensor(I, self.c),
                       tensor(self.delta_eta, I))

    @cached_property
    def pi_R_closed(self) -> LinMap:
        I = self.I
        return compose(tensor(I, self.eps_mu), tensor(self.c, I),
                       tensor(I, self.delta_eta))

    @cached_property
    def pi_bar_L(self) -> LinMap:
        I = self.I
        return compose(tensor(I, self.eps_mu), tensor(self.delta_eta, I))

    @cached_property
    def pi_bar_R(self) -> LinMap:
        I = self.I
        return compose(tensor(self.eps_mu, I), tensor(I, self.delta_eta))

    # -- misc -----------------------------------------------------------

    def replace(self, **changes) -> "WHQ":
        """A new candidate with some structure maps swapped out."""
        kw = dict(unit=self.unit, mul=self.mul, counit=self.counit,
                  comul=self.comul, antipode=self.antipode, labels=self.labels)
        if "braiding" in changes:
            kw["braiding"] = changes.pop("braiding")
            kw["braiding_inv"] = changes.pop("braiding_inv", None)
        elif self.braiding != flip(self.dim, self.dim, self.field):
            kw["braiding"] = self.braiding
            kw["braiding_inv"] = self.braiding_inv
        kw.update(changes)
        return WHQ(**kw)

    def structure_maps(self) -> tuple[LinMap, ...]:
        return (self.unit, self.mul, self.counit, self.comul, self.antipode,
                self.braiding, self.braiding_inv)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WHQ):
            return NotImplemented
        return (self.field == other.field
                and self.structure_maps() == other.structure_maps())

    def __hash__(self):
        return hash((self.field, self.dim, self.mul))

    def __repr__(self) -> str:
        return f"WHQ(dim={self.dim}, field={self.field})"


def convolution(f: LinMap, g: LinMap, H: WHQ) -> LinMap:
    """``f * g = mu o (f (x) g) o delta`` for endomorphisms of H."""
    n = H.dim
    if f.shape != (n, n) or g.shape != (n, n):
        raise DimensionMismatch("convolution needs endomorphisms of H")
    return compose(H.mul, tensor(f, g), H.comul)


def pi_L(H: WHQ) -> LinMap:
    return H.pi_L


def pi_R(H: WHQ) -> LinMap:
    return H.pi_R


def pi_bar_L(H: WHQ) -> LinMap:
    return H.pi_bar_L


def pi_bar_R(H: WHQ) -> LinMap:
    return H.pi_bar_R


@dataclass(frozen=True)
class SubobjectData:
    """The image of Pi^L (or Pi^R) with its induced unital magma and comonoid."""

    parent: WHQ
    side: str
    splitting: Splitting
    induced_unit: LinMap
    induced_mul: LinMap
    induced_counit: LinMap
    induced_comul: LinMap
    checks: tuple[Verdict, ...]

    @property
    def inclusion(self) -> LinMap:
        return self.splitting.section

    @property
    def projection(self) -> LinMap:
        return self.splitting.retraction

    @property
    def dim(self) -> int:
        return self.splitting.rank

    @property
    def passed(self) -> bool:
        return all(self.checks)


_SUBOBJECT_ANCHOR = {
    "L": "H_L = Im(PiL) equalizes delta forks and coequalizes mu forks",
    "R": "H_R = Im(PiR) equalizes delta forks and coequalizes mu forks",
}


def _subobject(H: WHQ, side: str) -> SubobjectData:
    I = H.I
    if side == "L":
        e = H.pi_L
        eq_maps = {"": tensor(I, H.pi_L), "bar": tensor(I, H.pi_bar_R)}
        coeq_maps = {"": tensor(I, H.pi_L), "bar": tensor(I, H.pi_bar_L)}
    else:
        e = H.pi_R
        eq_maps = {"": tensor(H.pi_R, I), "bar": tensor(H.pi_bar_L, I)}
        coeq_maps = {"": tensor(H.pi_R, I), "bar": tensor(H.pi_bar_R, I)}
    split = split_idempotent(e)
    i, p = split.section, split.retraction
    unit = compose(p, H.unit)
    mul = compose(p, H.mul, tensor(i, i))
    counit = compose(H.counit, i)
    comul = compose(tensor(p, p), H.comul, i)

    anchor = _SUBOBJECT_ANCHOR[side]
    tag = f"H_{side}"
    checks: list[Verdict] = []
    ker_p = kernel_basis(p)
    for suffix, m in eq_maps.items():
        name = f"{tag}-equalizer{'-' + suffix if suffix else ''}"
        other = compose(m, H.comul)
        checks.append(compare(f"{name}-fork", compose(H.comul, i),
                              compose(other, i), anchor, f"{tag}-equalizer"))
        eq = kernel_basis(H.comul - other)
        checks.append(holds(f"{name}-universal",
                            eq.domain_dim == split.rank and same_subspace(eq, i),
                            anchor, f"{tag}-equalizer"))
    for suffix, m in coeq_maps.items():
        name = f"{tag}-coequalizer{'-' + suffix if suffix else ''}"
        other = compose(H.mul, m)
        checks.append(compare(f"{name}-fork", compose(p, H.mul), compose(p, other),
                              anchor, f"{tag}-coequalizer"))
        im = image_basis(H.mul - other)
        checks.append(holds(f"{name}-universal",
                            im.domain_dim == ker_p.domain_dim and
                            (im.domain_dim == 0 or same_subspace(im, ker_p)),
                            anchor, f"{tag}-coequalizer"))
    J = identity(split.rank, H.field)
    group = f"{tag}-induced"
    checks += [
        compare(f"{tag}-unit-right", compose(mul, tensor(J, unit)), J, anchor, group),
        compare(f"{tag}-unit-left", compose(mul, tensor(unit, J)), J, anchor, group),
        compare(f"{tag}-counit-left", compose(tensor(counit, J), comul), J, anchor, group),
        compare(f"{tag}-counit-right", compose(tensor(J, counit), comul), J, anchor, group),
        compare(f"{tag}-coassociative", compose(tensor(comul, J), comul),
                compose(tensor(J, comul), comul), anchor, group),
    ]
    return SubobjectData(H, side, split, unit, mul, counit, comul, tuple(checks))


def subobject_L(H: WHQ) -> SubobjectData:
    """Split Pi^L and induce the structure on H_L."""
    return _subobject(H, "L")


def subobject_R(H: WHQ) -> SubobjectData:
    return _subobject(H, "R")
