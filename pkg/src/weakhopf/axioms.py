"""Exact verification of the weak Hopf quasigroup axioms and derived identities.

Every identity is a pair of explicit composition pipelines over the
structure maps of a :class:`~weakhopf.structure.WHQ`. Each catalog entry
carries an id (the conventional equation label), a group (the label without
its ``.k`` suffix when one displayed equation holds several equalities) and
an anchor, a plain-text rendering of the equation it encodes.

Notation in anchors: ``x`` is the tensor product, juxtaposition is
composition, ``PiL``/``PiR`` are the target/source maps, ``PiL_bar``/
``PiR_bar`` their barred variants, ``*`` is convolution and ``c^-1`` the
inverse braiding.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

from .errors import NotIdempotent
from .exact_linear import compose as C, first_difference, power, rank, tensor as T
from .structure import WHQ, convolution, subobject_L, subobject_R
from .verdicts import Identity, Report, Verdict, compare, holds


def _entry(id: str, lhs, rhs, anchor: str) -> Identity:
    return Identity(id, lhs, rhs, anchor, id.split(".")[0])


# -- defining axioms --------------------------------------------------------

def _a2_first(H):
    return C(H.eps_mu, T(H.mul, H.I))


def _a3_first(H):
    return C(T(H.comul, H.I), H.delta_eta)


AXIOMS: tuple[Identity, ...] = (
    _entry("a1",
           lambda H: C(H.comul, H.mul),
           lambda H: C(T(H.mul, H.mul), H.comul_HH),
           "delta mu = (mu x mu) delta_HxH"),
    _entry("a2.1", _a2_first,
           lambda H: C(H.eps_mu, T(H.I, H.mul)),
           "eps mu (mu x H) = eps mu (H x mu)"),
    _entry("a2.2", _a2_first,
           lambda H: C(T(H.eps_mu, H.eps_mu), T(H.I, H.comul, H.I)),
           "eps mu (mu x H) = (eps mu x eps mu)(H x delta x H)"),
    _entry("a2.3", _a2_first,
           lambda H: C(T(H.eps_mu, H.eps_mu), T(H.I, C(H.c_inv, H.comul), H.I)),
           "eps mu (mu x H) = (eps mu x eps mu)(H x c^-1 delta x H)"),
    _entry("a3.1", _a3_first,
           lambda H: C(T(H.I, H.mul, H.I), T(H.delta_eta, H.delta_eta)),
           "(delta x H) delta eta = (H x mu x H)(delta eta x delta eta)"),
    _entry("a3.2", _a3_first,
           lambda H: C(T(H.I, C(H.mul, H.c_inv), H.I), T(H.delta_eta, H.delta_eta)),
           "(delta x H) delta eta = (H x mu c^-1 x H)(delta eta x delta eta)"),
    _entry("a4-1",
           lambda H: H.pi_L, lambda H: H.pi_L_closed,
           "id * lambda = (eps mu x H)(H x c)(delta eta x H)"),
    _entry("a4-2",
           lambda H: H.pi_R, lambda H: H.pi_R_closed,
           "lambda * id = (H x eps mu)(c x H)(H x delta eta)"),
    _entry("a4-3.1",
           lambda H: convolution(H.antipode, H.pi_L, H), lambda H: H.antipode,
           "lambda * PiL = lambda"),
    _entry("a4-3.2",
           lambda H: convolution(H.pi_R, H.antipode, H), lambda H: H.antipode,
           "PiR * lambda = lambda"),
    _entry("a4-4",
           lambda H: C(H.mul, T(H.antipode, H.mul), T(H.comul, H.I)),
           lambda H: C(H.mul, T(H.pi_R, H.I)),
           "mu (lambda x mu)(delta x H) = mu (PiR x H)"),
    _entry("a4-5",
           lambda H: C(H.mul, T(H.I, H.mul), T(H.I, H.antipode, H.I), T(H.comul, H.I)),
           lambda H: C(H.mul, T(H.pi_L, H.I)),
           "mu (H x mu)(H x lambda x H)(delta x H) = mu (PiL x H)"),
    _entry("a4-6",
           lambda H: C(H.mul, T(H.mul, H.antipode), T(H.I, H.comul)),
           lambda H: C(H.mul, T(H.I, H.pi_L)),
           "mu (mu x lambda)(H x delta) = mu (H x PiL)"),
    _entry("a4-7",
           lambda H: C(H.mul, T(H.mul, H.I), T(H.I, H.antipode, H.I), T(H.I, H.comul)),
           lambda H: C(H.mul, T(H.I, H.pi_R)),
           "mu (mu x H)(H x lambda x H)(H x delta) = mu (H x PiR)"),
)

AXIOM_GROUPS: tuple[str, ...] = tuple(dict.fromkeys(e.group for e in AXIOMS))


# -- derived identities -----------------------------------------------------

def _derived_catalog() -> tuple[Identity, ...]:
    E = _entry
    out = [
        E("new-pi-1.1", lambda H: H.pi_L,
          lambda H: C(T(C(H.eps_mu, H.c_inv), H.I), T(H.I, H.delta_eta)),
          "PiL = (eps mu c^-1 x H)(H x delta eta)"),
        E("new-pi-1.2", lambda H: H.pi_L,
          lambda H: C(T(H.I, H.eps_mu), T(C(H.c_inv, H.delta_eta), H.I)),
          "PiL = (H x eps mu)(c^-1 delta eta x H)"),
        E("new-pi-2.1", lambda H: H.pi_R,
          lambda H: C(T(H.I, C(H.eps_mu, H.c_inv)), T(H.delta_eta, H.I)),
          "PiR = (H x eps mu c^-1)(delta eta x H)"),
        E("new-pi-2.2", lambda H: H.pi_R,
          lambda H: C(T(H.eps_mu, H.I), T(H.I, C(H.c_inv, H.delta_eta))),
          "PiR = (eps mu x H)(H x c^-1 delta eta)"),
        E("pi-l.1", lambda H: convolution(H.pi_L, H.I, H), lambda H: H.I,
          "PiL * id = id"),
        E("pi-l.2", lambda H: convolution(H.I, H.pi_R, H), lambda H: H.I,
          "id * PiR = id"),
        E("pi-eta.1", lambda H: C(H.pi_L, H.unit), lambda H: H.unit, "PiL eta = eta"),
        E("pi-eta.2", lambda H: C(H.pi_R, H.unit), lambda H: H.unit, "PiR eta = eta"),
        E("pi-varep.1", lambda H: C(H.counit, H.pi_L), lambda H: H.counit,
          "eps PiL = eps"),
        E("pi-varep.2", lambda H: C(H.counit, H.pi_R), lambda H: H.counit,
          "eps PiR = eps"),
        E("antipode-1.1", lambda H: C(H.antipode, H.unit), lambda H: H.unit,
          "lambda eta = eta"),
        E("antipode-1.2", lambda H: C(H.counit, H.antipode), lambda H: H.counit,
          "eps lambda = eps"),
        E("idemp.1", lambda H: C(H.pi_L, H.pi_L), lambda H: H.pi_L, "PiL PiL = PiL"),
        E("idemp.2", lambda H: C(H.pi_R, H.pi_R), lambda H: H.pi_R, "PiR PiR = PiR"),
        E("idemp.3", lambda H: C(H.pi_bar_L, H.pi_bar_L), lambda H: H.pi_bar_L,
          "PiL_bar PiL_bar = PiL_bar"),
        E("idemp.4", lambda H: C(H.pi_bar_R, H.pi_bar_R), lambda H: H.pi_bar_R,
          "PiR_bar PiR_bar = PiR_bar"),
        E("mu-pi-l", lambda H: C(H.mul, T(H.I, H.pi_L)),
          lambda H: C(T(H.eps_mu, H.I), T(H.I, H.c), T(H.comul, H.I)),
          "mu (H x PiL) = (eps mu x H)(H x c)(delta x H)"),
        E("mu-pi-r", lambda H: C(H.mul, T(H.pi_R, H.I)),
          lambda H: C(T(H.I, H.eps_mu), T(H.c, H.I), T(H.I, H.comul)),
          "mu (PiR x H) = (H x eps mu)(c x H)(H x delta)"),
        E("mu-pi-l-var", lambda H: C(H.mul, T(H.I, H.pi_bar_L)),
          lambda H: C(T(H.I, H.eps_mu), T(H.comul, H.I)),
          "mu (H x PiL_bar) = (H x eps mu)(delta x H)"),
        E("mu-pi-r-var", lambda H: C(H.mul, T(H.pi_bar_R, H.I)),
          lambda H: C(T(H.eps_mu, H.I), T(H.I, H.comul)),
          "mu (PiR_bar x H) = (eps mu x H)(H x delta)"),
        E("mu-pi-l-varep", lambda H: C(H.eps_mu, T(H.I, H.pi_L)),
          lambda H: H.eps_mu, "eps mu (H x PiL) = eps mu"),
        E("mu-pi-r-varep", lambda H: C(H.eps_mu, T(H.pi_R, H.I)),
          lambda H: H.eps_mu, "eps mu (PiR x H) = eps mu"),
        E("mu-pi-l-var-varep", lambda H: C(H.eps_mu, T(H.I, H.pi_bar_L)),
          lambda H: H.eps_mu, "eps mu (H x PiL_bar) = eps mu"),
        E("mu-pi-r-var-varep", lambda H: C(H.eps_mu, T(H.pi_bar_R, H.I)),
          lambda H: H.eps_mu, "eps mu (PiR_bar x H) = eps mu"),
        E("delta-pi-l", lambda H: C(T(H.I, H.pi_L), H.comul),
          lambda H: C(T(H.mul, H.I), T(H.I, H.c), T(H.delta_eta, H.I)),
          "(H x PiL) delta = (mu x H)(H x c)(delta eta x H)"),
        E("delta-pi-r", lambda H: C(T(H.pi_R, H.I), H.comul),
          lambda H: C(T(H.I, H.mul), T(H.c, H.I), T(H.I, H.delta_eta)),
          "(PiR x H) delta = (H x mu)(c x H)(H x delta eta)"),
        E("delta-pi-l-var", lambda H: C(T(H.pi_bar_L, H.I), H.comul),
          lambda H: C(T(H.I, H.mul), T(H.delta_eta, H.I)),
          "(PiL_bar x H) delta = (H x mu)(delta eta x H)"),
        E("delta-pi-r-var", lambda H: C(T(H.I, H.pi_bar_R), H.comul),
          lambda H: C(T(H.mul, H.I), T(H.I, H.delta_eta)),
          "(H x PiR_bar) delta = (mu x H)(H x delta eta)"),
        E("aux-1", lambda H: C(T(H.mul, H.I), T(H.I, H.c), T(H.delta_eta, H.I)),
          lambda H: C(T(C(H.mul, H.c_inv), H.I), T(H.I, H.delta_eta)),
          "(mu x H)(H x c)(delta eta x H) = (mu c^-1 x H)(H x delta eta)"),
        E("aux-2", lambda H: C(T(H.I, H.mul), T(H.c, H.I), T(H.I, H.delta_eta)),
          lambda H: C(T(H.I, C(H.mul, H.c_inv)), T(H.delta_eta, H.I)),
          "(H x mu)(c x H)(H x delta eta) = (H x mu c^-1)(delta eta x H)"),
        E("delta-pi-l-eta", lambda H: C(T(H.I, H.pi_L), H.delta_eta),
          lambda H: H.delta_eta, "(H x PiL) delta eta = delta eta"),
        E("delta-pi-r-eta", lambda H: C(T(H.pi_R, H.I), H.delta_eta),
          lambda H: H.delta_eta, "(PiR x H) delta eta = delta eta"),
        E("delta-pi-l-var-eta", lambda H: C(T(H.pi_bar_L, H.I), H.delta_eta),
          lambda H: H.delta_eta, "(PiL_bar x H) delta eta = delta eta"),
        E("delta-pi-r-var-eta", lambda H: C(T(H.I, H.pi_bar_R), H.delta_eta),
          lambda H: H.delta_eta, "(H x PiR_bar) delta eta = delta eta"),
        E("pi-delta-mu-pi-1", lambda H: C(H.pi_L, H.mul, T(H.I, H.pi_L)),
          lambda H: C(H.pi_L, H.mul), "PiL mu (H x PiL) = PiL mu"),
        E("pi-delta-mu-pi-2", lambda H: C(H.pi_R, H.mul, T(H.pi_R, H.I)),
          lambda H: C(H.pi_R, H.mul), "PiR mu (PiR x H) = PiR mu"),
        E("pi-delta-mu-pi-3", lambda H: C(T(H.I, H.pi_L), H.comul, H.pi_L),
          lambda H: C(H.comul, H.pi_L), "(H x PiL) delta PiL = delta PiL"),
        E("pi-delta-mu-pi-4", lambda H: C(T(H.pi_R, H.I), H.comul, H.pi_R),
          lambda H: C(H.comul, H.pi_R), "(PiR x H) delta PiR = delta PiR"),
        E("pi-delta-mu-pi-1-var", lambda H: C(H.pi_bar_L, H.mul, T(H.I, H.pi_L)),
          lambda H: C(H.pi_bar_L, H.mul), "PiL_bar mu (H x PiL) = PiL_bar mu"),
        E("pi-delta-mu-pi-2-var", lambda H: C(H.pi_bar_R, H.mul, T(H.pi_R, H.I)),
          lambda H: C(H.pi_bar_R, H.mul), "PiR_bar mu (PiR x H) = PiR_bar mu"),
        E("pi-delta-mu-pi-3-var", lambda H: C(T(H.pi_R, H.I), H.comul, H.pi_bar_L),
          lambda H: C(H.comul, H.pi_bar_L), "(PiR x H) delta PiL_bar = delta PiL_bar"),
        E("pi-delta-mu-pi-4-var", lambda H: C(T(H.I, H.pi_L), H.comul, H.pi_bar_R),
          lambda H: C(H.comul, H.pi_bar_R), "(H x PiL) delta PiR_bar = delta PiR_bar"),
    ]
    compositions = [
        ("pi-composition-1.1", "pi_L", "pi_bar_L", "pi_L", "PiL PiL_bar = PiL"),
        ("pi-composition-1.2", "pi_L", "pi_bar_R", "pi_bar_R", "PiL PiR_bar = PiR_bar"),
        ("pi-composition-2.1", "pi_bar_L", "pi_L", "pi_bar_L", "PiL_bar PiL = PiL_bar"),
        ("pi-composition-2.2", "pi_bar_R", "pi_L", "pi_L", "PiR_bar PiL = PiL"),
        ("pi-composition-3.1", "pi_R", "pi_bar_L", "pi_bar_L", "PiR PiL_bar = PiL_bar"),
        ("pi-composition-3.2", "pi_R", "pi_bar_R", "pi_R", "PiR PiR_bar = PiR"),
        ("pi-composition-4.1", "pi_bar_L", "pi_R", "pi_R", "PiL_bar PiR = PiR"),
        ("pi-composition-4.2", "pi_bar_R", "pi_R", "pi_bar_R", "PiR_bar PiR = PiR_bar"),
        ("pi-antipode-composition-1.1", "pi_L", "antipode", ("pi_L", "pi_R"),
         "PiL lambda = PiL PiR"),
        ("pi-antipode-composition-1.2", "antipode", "pi_R", ("pi_L", "pi_R"),
         "lambda PiR = PiL PiR"),
        ("pi-antipode-composition-2.1", "pi_R", "antipode", ("pi_R", "pi_L"),
         "PiR lambda = PiR PiL"),
        ("pi-antipode-composition-2.2", "antipode", "pi_L", ("pi_R", "pi_L"),
         "lambda PiL = PiR PiL"),
        ("pi-antipode-composition-3.1", "pi_bar_R", "antipode", "pi_L",
         "PiR_bar lambda = PiL"),
        ("pi-antipode-composition-3.2", "antipode", "pi_bar_L", "pi_L",
         "lambda PiL_bar = PiL"),
        ("pi-antipode-composition-4.1", "pi_bar_L", "antipode", "pi_R",
         "PiL_bar lambda = PiR"),
        ("pi-antipode-composition-4.2", "antipode", "pi_bar_R", "pi_R",
         "lambda PiR_bar = PiR"),
    ]
    for id, a, b, rhs, anchor in compositions:
        out.append(E(id, _pair(a, b), _pair(*rhs) if isinstance(rhs, tuple)
                     else _attr(rhs), anchor))
    out += [
        E("mu-assoc-1.1",
          lambda H: C(H.mul, T(H.mul, H.I), T(H.I, C(T(H.pi_L, H.I), H.comul))),
          lambda H: H.mul, "mu (mu x H)(H x (PiL x H) delta) = mu"),
        E("mu-assoc-1.2",
          lambda H: C(H.mul, T(H.mul, H.pi_R), T(H.I, H.comul)),
          lambda H: H.mul, "mu (mu x PiR)(H x delta) = mu"),
        E("mu-assoc-2.1",
          lambda H: C(H.mul, T(H.pi_L, H.mul), T(H.comul, H.I)),
          lambda H: H.mul, "mu (PiL x mu)(delta x H) = mu"),
        E("mu-assoc-2.2",
          lambda H: C(H.mul, T(H.I, C(H.mul, T(H.pi_R, H.I))), T(H.comul, H.I)),
          lambda H: H.mul, "mu (H x mu (PiR x H))(delta x H) = mu"),
        E("mu-assoc-3.1",
          lambda H: C(H.mul, T(H.antipode, C(H.mul, T(H.pi_L, H.I))), T(H.comul, H.I)),
          lambda H: C(H.mul, T(H.antipode, H.I)),
          "mu (lambda x mu (PiL x H))(delta x H) = mu (lambda x H)"),
        E("mu-assoc-3.2",
          lambda H: C(H.mul, T(H.pi_R, C(H.mul, T(H.antipode, H.I))), T(H.comul, H.I)),
          lambda H: C(H.mul, T(H.antipode, H.I)),
          "mu (PiR x mu (lambda x H))(delta x H) = mu (lambda x H)"),
        E("mu-assoc-4.1",
          lambda H: C(H.mul, T(H.mul, H.I),
                      T(H.I, C(T(H.antipode, H.pi_L), H.comul))),
          lambda H: C(H.mul, T(H.I, H.antipode)),
          "mu (mu x H)(H x (lambda x PiL) delta) = mu (H x lambda)"),
        E("mu-assoc-4.2",
          lambda H: C(H.mul, T(H.mul, H.I),
                      T(H.I, C(T(H.pi_R, H.antipode), H.comul))),
          lambda H: C(H.mul, T(H.I, H.antipode)),
          "mu (mu x H)(H x (PiR x lambda) delta) = mu (H x lambda)"),
        E("mu-assoc-5.1", lambda H: convolution(H.pi_L, H.I, H), lambda H: H.I,
          "PiL * id = id"),
        E("mu-assoc-5.2", lambda H: convolution(H.I, H.pi_R, H), lambda H: H.I,
          "id * PiR = id"),
        E("2-mu-delta-pi-l",
          lambda H: C(T(H.mul, C(H.mul, T(H.I, H.pi_L))), H.comul_HH),
          lambda H: C(T(H.mul, H.I), T(H.I, H.c), T(H.comul, H.I)),
          "(mu x mu (H x PiL)) delta_HxH = (mu x H)(H x c)(delta x H)"),
        E("2-mu-delta-pi-r",
          lambda H: C(T(C(H.mul, T(H.pi_R, H.I)), H.mul), H.comul_HH),
          lambda H: C(T(H.I, H.mul), T(H.c, H.I), T(H.I, H.comul)),
          "(mu (PiR x H) x mu) delta_HxH = (H x mu)(c x H)(H x delta)"),
        E("mu-delta-anti-1",
          lambda H: C(H.mul, T(H.pi_L, H.pi_R)),
          lambda H: C(H.mul, H.c_inv, T(H.pi_L, H.pi_R)),
          "mu (PiL x PiR) = mu c^-1 (PiL x PiR)"),
        E("mu-delta-anti-2",
          lambda H: C(T(H.pi_L, H.pi_R), H.comul),
          lambda H: C(T(H.pi_L, H.pi_R), H.c_inv, H.comul),
          "(PiL x PiR) delta = (PiL x PiR) c^-1 delta"),
        E("mu-delta-anti-3",
          lambda H: C(H.mul, T(H.pi_R, H.pi_L)),
          lambda H: C(H.mul, H.c, T(H.pi_R, H.pi_L)),
          "mu (PiR x PiL) = mu c (PiR x PiL)"),
        E("mu-delta-anti-4",
          lambda H: C(T(H.pi_R, H.pi_L), H.comul),
          lambda H: C(T(H.pi_R, H.pi_L), H.c, H.comul),
          "(PiR x PiL) delta = (PiR x PiL) c delta"),
        E("anti-antipode-1",
          lambda H: C(H.antipode, H.mul),
          lambda H: C(H.mul, H.c, T(H.antipode, H.antipode)),
          "lambda mu = mu c (lambda x lambda)"),
        E("anti-antipode-2",
          lambda H: C(H.comul, H.antipode),
          lambda H: C(T(H.antipode, H.antipode), H.c, H.comul),
          "delta lambda = (lambda x lambda) c delta"),
    ]
    return tuple(out)


def _attr(name):
    return lambda H: getattr(H, name)


def _pair(a, b):
    return lambda H: C(getattr(H, a), getattr(H, b))


DERIVED: tuple[Identity, ...] = _derived_catalog()
DERIVED_GROUPS: tuple[str, ...] = tuple(dict.fromkeys(e.group for e in DERIVED))


# -- evaluation -------------------------------------------------------------

def _warm(H: WHQ) -> None:
    # fill the cached properties before threads share H
    for name in ("I", "I2", "delta_eta", "eps_mu", "mul_HH", "comul_HH", "pi_L",
                 "pi_R", "pi_L_closed", "pi_R_closed", "pi_bar_L", "pi_bar_R"):
        getattr(H, name)


def evaluate(entries: Sequence[Identity], H: WHQ, conditional: bool = False,
             jobs: int = 1) -> list[Verdict]:
    """Evaluate catalog entries in catalog order, optionally on a thread pool."""
    _warm(H)
    if jobs <= 1:
        return [e.evaluate(H, conditional) for e in entries]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda e: e.evaluate(H, conditional), entries))


def _equal(f, g) -> bool:
    return first_difference(f, g) is None


def classification(H: WHQ, axioms_pass: bool) -> dict[str, bool]:
    I = H.I
    associative = _equal(C(H.mul, T(H.mul, I)), C(H.mul, T(I, H.mul)))
    unital_counit = (_equal(H.eps_mu, T(H.counit, H.counit))
                     and _equal(C(H.counit, H.unit), H.one))
    unital_comul = (_equal(C(H.comul, H.mul), C(H.mul_HH, T(H.comul, H.comul)))
                    and _equal(H.delta_eta, T(H.unit, H.unit)))
    return {
        "is_weak_hopf_quasigroup": axioms_pass,
        "is_weak_hopf_algebra": axioms_pass and associative,
        "is_hopf_quasigroup": axioms_pass and unital_counit and unital_comul,
        "is_associative": associative,
        "is_commutative": _equal(C(H.mul, H.c), H.mul),
        "is_cocommutative": _equal(C(H.c, H.comul), H.comul),
    }


def check_axioms(H: WHQ, jobs: int = 1) -> Report:
    """Evaluate the defining axioms and the classification flags."""
    verdicts = evaluate(AXIOMS, H, jobs=jobs)
    ok = all(verdicts)
    report = Report(verdicts, classification(H, ok), {"dim": H.dim})
    report.dimensions["rank_pi_L"] = rank(H.pi_L)
    report.dimensions["rank_pi_R"] = rank(H.pi_R)
    return report


def _subobject_verdicts(H: WHQ, conditional: bool) -> tuple[list[Verdict], dict]:
    out: list[Verdict] = []
    dims = {}
    for side, build in (("L", subobject_L), ("R", subobject_R)):
        try:
            sub = build(H)
        except NotIdempotent:
            out.append(holds(f"H_{side}-split", False,
                             f"Pi{side} idempotent so that its image splits",
                             f"H_{side}-split", conditional))
            continue
        dims[f"dim_H_{side}"] = sub.dim
        out.extend(_with_conditional(v, conditional) for v in sub.checks)
    return out, dims


def _with_conditional(v: Verdict, conditional: bool) -> Verdict:
    if v.conditional == conditional:
        return v
    return Verdict(v.id, v.anchor, v.group, v.passed, v.witness, v.difference,
                   conditional)


def theorem_verdicts(H: WHQ, flags: dict[str, bool], conditional: bool,
                     max_order: int = 12) -> list[Verdict]:
    """Involutivity for (co)commutative H and dyslexia at the antipode order."""
    out = []
    if flags["is_commutative"] or flags["is_cocommutative"]:
        out.append(compare("cocommutative", power(H.antipode, 2), H.I,
                           "commutative or cocommutative implies lambda^2 = id",
                           conditional=conditional))
    n = antipode_order(H, max_order)
    if n is not None:
        dys, codys = check_dyslexia(H, n)
        anchor = f"lambda^{n} = id implies mu c^{n} = mu and c^{n} delta = delta"
        out.append(holds("dis.1", dys, anchor, "dis", conditional))
        out.append(holds("dis.2", codys, anchor, "dis", conditional))
    return out


def check_derived(H: WHQ, axioms: Report | None = None, jobs: int = 1) -> Report:
    """Evaluate every derived identity, flagged conditional when axioms fail."""
    axioms = axioms or check_axioms(H, jobs)
    conditional = not axioms.passed
    verdicts = evaluate(DERIVED, H, conditional, jobs)
    subs, dims = _subobject_verdicts(H, conditional)
    verdicts += subs
    verdicts += theorem_verdicts(H, axioms.flags, conditional)
    report = Report(verdicts, dict(axioms.flags), dict(axioms.dimensions))
    report.dimensions.update(dims)
    return report


def check_dyslexia(H: WHQ, n: int) -> tuple[bool, bool]:
    """``(mu c^n == mu, c^n delta == delta)``."""
    if n < 1:
        raise ValueError("n must be positive")
    cn = power(H.c, n)
    return _equal(C(H.mul, cn), H.mul), _equal(C(cn, H.comul), H.comul)


def antipode_order(H: WHQ, max_n: int) -> int | None:
    """Least ``n <= max_n`` with ``lambda^n == id``."""
    if max_n < 1:
        raise ValueError("max_n must be positive")
    acc = H.antipode
    for n in range(1, max_n + 1):
        if acc == H.I:
            return n
        acc = C(acc, H.antipode)
    return None


def catalog_ids(entries: Iterable[Identity] = DERIVED) -> list[str]:
    return [e.id for e in entries]
