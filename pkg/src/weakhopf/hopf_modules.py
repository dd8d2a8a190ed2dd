"""Right-right Hopf modules over a weak Hopf quasigroup.

Covers the module axioms, the coinvariant idempotent ``q = phi (M x lambda) rho``
and its splitting, the idempotent ``nabla`` on ``M^coH x H`` and the explicit
isomorphism ``alpha: M -> M^coH x H`` together with a certificate of every
equation that makes it an isomorphism of Hopf modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    CertificateFailure, DimensionMismatch, InvalidStructure, NotComoduleIso,
    NotIdempotent, NotInvertible,
)
from .exact_linear import (
    LinMap, Splitting, compose as C, first_difference, identity, inverse,
    is_idempotent, kernel_basis, same_subspace, split_idempotent, tensor as T,
)
from .structure import WHQ
from .verdicts import Report, Verdict, compare, holds


class HopfModule:
    """Carrier of dimension ``dim`` with action ``M (x) H -> M`` and coaction
    ``M -> M (x) H``. The comodule laws are enforced at construction."""

    def __init__(self, over: WHQ, action: LinMap, coaction: LinMap,
                 labels: Sequence[str] | None = None):
        m, n = action.codomain_dim, over.dim
        if action.shape != (m, m * n):
            raise InvalidStructure("shape of action", detail=f"expected {m}x{m * n}")
        if coaction.shape != (m * n, m):
            raise InvalidStructure("shape of coaction", detail=f"expected {m * n}x{m}")
        if action.field != over.field or coaction.field != over.field:
            raise InvalidStructure("field", detail="module and algebra over different fields")
        self.over = over
        self.dim = m
        self.action = action
        self.coaction = coaction
        self.labels = tuple(labels) if labels is not None else None
        I = self.I
        diff = first_difference(C(T(I, over.counit), coaction), I)
        if diff is not None:
            raise InvalidStructure("counital coaction (M x eps) rho = id", diff[0])
        diff = first_difference(C(T(coaction, over.I), coaction),
                                C(T(I, over.comul), coaction))
        if diff is not None:
            raise InvalidStructure("coassociative coaction", diff[0])

    @property
    def I(self) -> LinMap:
        return identity(self.dim, self.over.field)

    def __repr__(self) -> str:
        return f"HopfModule(dim={self.dim}, over={self.over!r})"


def regular_module(H: WHQ) -> HopfModule:
    """``(H, mu, delta)``."""
    return HopfModule(H, H.mul, H.comul, H.labels)


# -- module axioms ----------------------------------------------------------

def _c5_lhs(N: HopfModule) -> LinMap:
    H, I, phi = N.over, N.I, N.action
    return C(phi, T(phi, H.I), T(I, H.pi_L, H.I), T(I, H.comul))


def _new_c5_lhs(N: HopfModule) -> LinMap:
    H, I, phi = N.over, N.I, N.action
    return C(phi, T(phi, H.pi_R), T(I, H.comul))


def check_hopf_module(N: HopfModule) -> Report:
    """Evaluate the module axioms and the equations derived from them."""
    H, I, phi, rho = N.over, N.I, N.action, N.coaction
    v = [
        compare("c2-1", C(phi, T(I, H.unit)), I, "phi (M x eta) = id"),
        compare("c2-2", C(rho, phi),
                C(T(phi, H.mul), T(I, H.c, H.I), T(rho, H.comul)),
                "rho phi = (phi x mu)(M x c x H)(rho x delta)"),
        compare("c3", C(phi, T(phi, H.antipode), T(I, H.comul)),
                C(phi, T(I, H.pi_L)),
                "phi (phi x lambda)(M x delta) = phi (M x PiL)"),
        compare("c4", C(phi, T(phi, H.I), T(I, H.antipode, H.I), T(I, H.comul)),
                C(phi, T(I, H.pi_R)),
                "phi (phi x H)(M x lambda x H)(M x delta) = phi (M x PiR)"),
        compare("c5", _c5_lhs(N), phi,
                "phi (phi x H)(M x PiL x H)(M x delta) = phi", "c5"),
    ]
    cond = not all(v)
    v += [
        compare("new-c5", _new_c5_lhs(N), phi,
                "phi (phi x PiR)(M x delta) = phi", "c5", cond),
        compare("new-c5-1", _new_c5_lhs(N), _c5_lhs(N),
                "phi (phi x PiR)(M x delta) = phi (phi x H)(M x PiL x H)(M x delta)",
                conditional=cond),
        compare("new-c2-2-1", C(phi, T(I, H.pi_R), rho), I,
                "phi (M x PiR) rho = id", conditional=cond),
        compare("new-c5-2",
                C(phi, T(phi, H.I), T(I, H.pi_L, H.I), T(I, H.delta_eta)), I,
                "phi (phi x H)(M x PiL x H)(M x delta eta) = id", conditional=cond),
        compare("new-c5-3", C(phi, T(phi, H.pi_R), T(I, H.delta_eta)), I,
                "phi (phi x PiR)(M x delta eta) = id", conditional=cond),
    ]
    return Report(v, {"is_hopf_module": not cond}, {"dim": N.dim})


# -- coinvariants -----------------------------------------------------------

@dataclass(frozen=True)
class CoinvariantData:
    module: HopfModule
    q: LinMap
    splitting: Splitting
    checks: tuple[Verdict, ...]

    @property
    def i(self) -> LinMap:
        return self.splitting.section

    @property
    def p(self) -> LinMap:
        return self.splitting.retraction

    @property
    def coh_dim(self) -> int:
        return self.splitting.rank

    @property
    def passed(self) -> bool:
        return all(self.checks)


def coinvariant_idempotent(N: HopfModule) -> LinMap:
    """``q = phi (M x lambda) rho``."""
    return C(N.action, T(N.I, N.over.antipode), N.coaction)


def coinvariants(N: HopfModule) -> CoinvariantData:
    """Split ``q`` and cross-check it against both equalizer descriptions."""
    H, I, phi, rho = N.over, N.I, N.action, N.coaction
    q = coinvariant_idempotent(N)
    checks = [compare("idemp-1", C(rho, q), C(T(I, H.pi_L), rho, q),
                      "rho q = (M x PiL) rho q")]
    split = split_idempotent(q)
    i, p = split.section, split.retraction
    for name, pi, anchor in (
            ("coinvariants-equalizer-bar", H.pi_bar_R,
             "im q = equalizer of rho and (M x PiR_bar) rho"),
            ("coinvariants-equalizer", H.pi_L,
             "im q = equalizer of rho and (M x PiL) rho")):
        eq = kernel_basis(rho - C(T(I, pi), rho))
        checks.append(holds(name, eq.domain_dim == split.rank and
                            (split.rank == 0 or same_subspace(eq, i)), anchor))
    checks += [
        compare("new-c5-2-1", C(phi, T(q, H.I), rho), I, "phi (q x H) rho = id"),
        compare("new-c5-2-2", C(rho, phi, T(i, H.I)), C(T(phi, H.I), T(i, H.comul)),
                "rho phi (i x H) = (phi x H)(i x delta)"),
        compare("new-c5-2-3", C(p, phi, T(i, H.I)), C(p, phi, T(i, H.pi_L)),
                "p phi (i x H) = p phi (i x PiL)"),
        compare("new-c5-2-4", C(p, phi, T(i, H.I)), C(p, phi, T(i, H.pi_bar_L)),
                "p phi (i x H) = p phi (i x PiL_bar)"),
    ]
    return CoinvariantData(N, q, split, tuple(checks))


# -- fundamental theorem ----------------------------------------------------

def twisted_action(N: HopfModule, q: LinMap | None = None) -> LinMap:
    """``phi^alpha = phi (q x mu)(rho x H)``."""
    H = N.over
    q = coinvariant_idempotent(N) if q is None else q
    return C(N.action, T(q, H.mul), T(N.coaction, H.I))


@dataclass(frozen=True)
class FundamentalCertificate:
    """The isomorphism ``alpha: M -> M^coH x H`` and every verified equation."""

    module: HopfModule
    coinvariants: CoinvariantData
    nabla: LinMap
    tensor_splitting: Splitting
    omega: LinMap
    omega_prime: LinMap
    alpha: LinMap
    alpha_inv: LinMap
    induced: HopfModule
    twisted_action: LinMap
    checks: tuple[Verdict, ...]

    @property
    def induced_action(self) -> LinMap:
        return self.induced.action

    @property
    def induced_coaction(self) -> LinMap:
        return self.induced.coaction

    @property
    def rank_nabla(self) -> int:
        return self.tensor_splitting.rank

    @property
    def coh_dim(self) -> int:
        return self.coinvariants.coh_dim

    @property
    def passed(self) -> bool:
        return all(self.checks)


class _Checklist:
    """Collects verdicts and aborts on the first failure."""

    def __init__(self):
        self.verdicts: list[Verdict] = []

    def add(self, v: Verdict) -> None:
        self.verdicts.append(v)
        if not v.passed:
            raise CertificateFailure(v.id, self.verdicts)

    def extend(self, vs, prefix: str = "") -> None:
        for v in vs:
            if prefix:
                v = Verdict(prefix + v.id, v.anchor, prefix + v.group, v.passed,
                            v.witness, v.difference, v.conditional)
            self.add(v)

    def fail(self, id: str, anchor: str) -> None:
        self.add(holds(id, False, anchor))


def fundamental_certificate(N: HopfModule) -> FundamentalCertificate:
    """Build ``alpha`` and verify it; raises CertificateFailure naming the
    first violated equation."""
    H, I, phi, rho = N.over, N.I, N.action, N.coaction
    ck = _Checklist()
    ck.extend(check_hopf_module(N).verdicts)
    try:
        co = coinvariants(N)
    except NotIdempotent:
        ck.fail("q-idempotent", "q q = q")
    ck.extend(co.checks)
    i, p = co.i, co.p
    K = identity(co.coh_dim, H.field)

    nabla = C(T(p, H.I), rho, phi, T(i, H.I))
    ck.add(holds("nabla-idempotent", is_idempotent(nabla), "nabla nabla = nabla"))
    ck.add(compare("tensor-idempotent-1", nabla, C(T(C(p, phi), H.I), T(i, H.comul)),
                   "nabla = (p phi x H)(i x delta)"))
    ck.add(compare("tensor-idempotent-2", C(T(K, H.comul), nabla),
                   C(T(nabla, H.I), T(K, H.comul)),
                   "(M^coH x delta) nabla = (nabla x H)(M^coH x delta)"))
    ck.add(compare("tensor-idempotent-3", nabla,
                   C(T(K, H.mul), T(C(nabla, T(K, H.unit)), H.I)),
                   "nabla = (M^coH x mu)(nabla (M^coH x eta) x H)"))
    split = split_idempotent(nabla)
    ix, px = split.section, split.retraction
    omega = C(phi, T(i, H.I))
    omega_p = C(T(p, H.I), rho)
    ck.add(compare("omega-section", C(omega, omega_p), I, "omega omega' = id"))
    ck.add(compare("nabla-factorization", nabla, C(omega_p, omega),
                   "nabla = omega' omega"))
    alpha = C(px, omega_p)
    alpha_inv = C(omega, ix)
    J = identity(split.rank, H.field)
    ck.add(compare("alpha-left-inverse", C(alpha_inv, alpha), I,
                   "alpha^-1 alpha = id"))
    ck.add(compare("alpha-right-inverse", C(alpha, alpha_inv), J,
                   "alpha alpha^-1 = id"))

    rho_x = C(T(px, H.I), T(K, H.comul), ix)
    phi_x = C(px, T(K, H.mul), T(ix, H.I))
    ck.add(compare("alpha-comodule", C(rho_x, alpha), C(T(alpha, H.I), rho),
                   "rho_x alpha = (alpha x H) rho"))
    try:
        induced = HopfModule(H, phi_x, rho_x)
    except InvalidStructure as exc:
        ck.fail("induced-comodule", str(exc))
    ck.extend(check_hopf_module(induced).verdicts, "induced:")

    ck.add(compare("nabla-i-phi", C(phi, T(i, H.I), nabla), C(phi, T(i, H.I)),
                   "phi (i x H) nabla = phi (i x H)"))
    ck.add(compare("rho-p-phi", C(nabla, T(p, H.I), rho), C(T(p, H.I), rho),
                   "nabla (p x H) rho = (p x H) rho"))

    phi_a = C(alpha_inv, phi_x, T(alpha, H.I))
    ck.add(compare("action-alpha", phi_a, twisted_action(N, co.q),
                   "alpha^-1 phi_x (alpha x H) = phi (q x mu)(rho x H)"))
    try:
        twisted = HopfModule(H, phi_a, rho)
    except InvalidStructure as exc:
        ck.fail("twisted-comodule", str(exc))
    ck.extend(check_hopf_module(twisted).verdicts, "twisted:")
    q_a = coinvariant_idempotent(twisted)
    ck.add(compare("q-alpha", q_a, co.q, "q^alpha = q"))
    nabla_a = C(T(p, H.I), rho, phi_a, T(i, H.I))
    ck.add(compare("idemp-1-2", nabla_a, nabla, "nabla^alpha = nabla"))
    ck.add(compare("phi-square", twisted_action(twisted, q_a), phi_a,
                   "(phi^alpha)^alpha = phi^alpha"))

    q_x = coinvariant_idempotent(induced)
    ck.add(compare("new-q", q_x, C(px, T(K, H.pi_L), ix),
                   "q_x = p_x (M^coH x PiL) i_x"))
    phi_x_a = twisted_action(induced, q_x)
    ck.add(compare("strong-hoof", phi_x_a, phi_x, "phi_x^alpha = phi_x"))
    ck.add(compare("quasilineal", C(phi_x_a, T(alpha, H.I)), C(alpha, phi_a),
                   "phi_x^alpha (alpha x H) = alpha phi^alpha"))
    return FundamentalCertificate(N, co, nabla, split, omega, omega_p, alpha,
                                  alpha_inv, induced, phi_a, tuple(ck.verdicts))


def is_quasilinear(f: LinMap, N1: HopfModule, N2: HopfModule) -> Verdict:
    """``phi_2^alpha (f x H) == f phi_1^alpha``."""
    if N1.over is not N2.over and N1.over != N2.over:
        raise DimensionMismatch("modules over different algebras")
    if f.shape != (N2.dim, N1.dim):
        raise DimensionMismatch(f"expected a {N2.dim}x{N1.dim} map, got {f.shape}")
    H = N1.over
    return compare("quasilineal", C(twisted_action(N2), T(f, H.I)),
                   C(f, twisted_action(N1)),
                   "phi_N^alpha (f x H) = f phi_M^alpha")


def twisted_module(N: HopfModule, g: LinMap, rho: LinMap | None = None) -> HopfModule:
    """Pull the action of ``N`` back along a comodule isomorphism ``g: M -> N``.

    The source coaction is ``rho`` when given (and ``g`` is checked to be a
    comodule map for it); otherwise it is transported from ``N``.
    """
    H = N.over
    if g.codomain_dim != N.dim or not g.is_square():
        raise NotComoduleIso(f"expected an invertible {N.dim}x{N.dim} map")
    try:
        g_inv = inverse(g)
    except NotInvertible:
        raise NotComoduleIso("map is not invertible") from None
    if rho is None:
        rho = C(T(g_inv, H.I), N.coaction, g)
    elif first_difference(C(N.coaction, g), C(T(g, H.I), rho)) is not None:
        raise NotComoduleIso("map is not a comodule morphism")
    return HopfModule(H, C(g_inv, N.action, T(g, H.I)), rho)
