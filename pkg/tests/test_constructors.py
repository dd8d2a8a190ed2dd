import pytest
from hypothesis import given, settings, strategies as st

from weakhopf import (
    QQ, BigroupoidPresentation, Field, GroupoidPresentation,
    InconsistentPresentation, InvalidPresentation, LoopTable, NotGroupoid,
    NotIPLoop, check_axioms, from_bigroupoid, from_groupoid, from_loop,
)
from weakhopf import corpus
from weakhopf.constructors import ideal_closure, validate_ip_loop

from conftest import build

F5 = Field.prime(5)

IP7 = ((0, 1, 2, 3, 4, 5, 6), (1, 2, 0, 5, 6, 4, 3), (2, 0, 1, 6, 5, 3, 4),
       (3, 6, 5, 4, 0, 1, 2), (4, 5, 6, 0, 3, 2, 1), (5, 3, 4, 2, 1, 6, 0),
       (6, 4, 3, 1, 2, 0, 5))


def normalized_latin_squares(n):
    """Plain backtracking over all Latin squares with first row and column fixed."""
    t = [[-1] * n for _ in range(n)]
    for i in range(n):
        t[0][i] = t[i][0] = i

    def fill(cell):
        if cell == n * n:
            yield tuple(tuple(r) for r in t)
            return
        x, y = divmod(cell, n)
        if t[x][y] != -1:
            yield from fill(cell + 1)
            return
        for z in range(n):
            if z in t[x] or any(t[i][y] == z for i in range(n)):
                continue
            t[x][y] = z
            yield from fill(cell + 1)
            t[x][y] = -1

    yield from fill(0)


def has_inverse_property(t):
    n = len(t)
    inv = []
    for x in range(n):
        ys = [y for y in range(n) if t[x][y] == 0]
        if len(ys) != 1 or t[ys[0]][x] != 0:
            return False
        inv.append(ys[0])
    return all(t[inv[x]][t[x][y]] == y and t[t[y][x]][inv[x]] == y
               for x in range(n) for y in range(n))


# -- loops ------------------------------------------------------------------

def test_cyclic_group_algebra_structure():
    H = build("z2")
    assert H.dim == 2
    assert H.unit.column(0) == {0: 1}
    assert H.comul.column(1) == {3: 1}
    assert H.counit.to_dense() == [[1, 1]]
    assert H.antipode.column(1) == {1: 1}


def test_group_as_groupoid_matches_loop():
    L = corpus.cyclic_group(3)
    assert from_groupoid(corpus.group_groupoid(L)) == from_loop(L)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_ip_loop_search_matches_brute_force(n):
    brute = {t for t in normalized_latin_squares(n) if has_inverse_property(t)}
    searched = {tuple(map(tuple, t)) for t in corpus.ip_loops(n)}
    assert searched == brute
    assert all(LoopTable(t).is_associative() for t in brute)


def test_smallest_nonassociative_ip_loop_has_order_seven():
    L = corpus.smallest_nonassociative_ip_loop()
    assert L.table == IP7
    assert L.associativity_witness() == (1, 1, 3)
    assert has_inverse_property(L.table)


def test_octonion_loop_is_moufang_and_nonassociative():
    L = corpus.octonion_loop()
    t, r = L.table, range(16)
    assert L.order == 16 and not L.is_associative()
    # Moufang: z(x(zy)) = ((zx)z)y
    assert all(t[z][t[x][t[z][y]]] == t[t[t[z][x]][z]][y] for x in r for y in r for z in r)
    assert L.labels[8] == "-e0"
    # e1 e2 = +/- e_k with e_k imaginary and (e1 e2)^2 = -1
    k = t[1][2]
    assert k % 8 not in (0, 1, 2) and t[k][k] == 8


def test_not_ip_loop_missing_inverse():
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 3, 4, 0, 1], [3, 4, 1, 2, 0],
             [4, 2, 0, 1, 3]]
    with pytest.raises(NotIPLoop) as exc:
        from_loop(LoopTable(table))
    assert exc.value.triple == (2,)


def test_not_ip_loop_inverse_property_fails():
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1],
             [4, 3, 1, 2, 0]]
    with pytest.raises(NotIPLoop) as exc:
        validate_ip_loop(LoopTable(table))
    assert exc.value.triple == (1, 1, 2)


def test_not_latin_square():
    with pytest.raises(NotIPLoop):
        from_loop(LoopTable([[0, 1], [1, 1]]))


def test_nonassociative_loop_algebra_axioms_pass_but_not_associative():
    rep = check_axioms(build("ip7"))
    assert rep.passed
    assert not rep.flags["is_associative"]


# -- groupoids --------------------------------------------------------------

def test_pair_groupoid_algebra():
    H = build("pair")
    assert H.dim == 4
    assert H.labels == ("x<-x", "y<-x", "x<-y", "y<-y")
    assert H.unit.column(0) == {0: 1, 3: 1}
    # (x<-y) o (y<-x) = x<-x and non-composable pairs multiply to zero
    assert H.mul.column(2 * 4 + 1) == {0: 1}
    assert H.mul.column(1 * 4 + 1) == {}


def test_two_copies_of_z2():
    H = build("two_z2")
    rep = check_axioms(H)
    assert H.dim == 4 and rep.flags["is_weak_hopf_algebra"]
    assert rep.dimensions["rank_pi_L"] == 2


def test_groupoid_with_bad_inverse_rejected():
    G = corpus.pair_groupoid()
    inv = dict(G.inverse)
    inv["y<-x"] = "y<-x"
    with pytest.raises(NotGroupoid):
        from_groupoid(GroupoidPresentation(G.objects, G.arrows, G.source, G.target,
                                           G.identities, G.composition, inv))


def test_groupoid_missing_composition_rejected():
    G = corpus.pair_groupoid()
    comp = dict(G.composition)
    del comp["x<-y", "y<-x"]
    with pytest.raises(NotGroupoid):
        from_groupoid(GroupoidPresentation(G.objects, G.arrows, G.source, G.target,
                                           G.identities, comp, G.inverse))


def test_non_associative_groupoid_rejected():
    B = corpus.doubled_z2_bigroupoid()
    G = GroupoidPresentation(B.zero_cells, B.one_cells, B.source, B.target,
                             B.identities, B.composition, B.inv)
    with pytest.raises(NotGroupoid):
        from_groupoid(G)


# -- bigroupoids ------------------------------------------------------------

GROUPOIDS = {
    "pair": corpus.pair_groupoid,
    "pair3": lambda: corpus.pair_groupoid(("a", "b", "c")),
    "two_z2": corpus.two_copies_of_z2,
    "z3": lambda: corpus.group_groupoid(corpus.cyclic_group(3)),
}

LOOPS = {
    "z2": lambda: corpus.cyclic_group(2),
    "z3": lambda: corpus.cyclic_group(3),
    "ip7": corpus.smallest_nonassociative_ip_loop,
    "octonion": corpus.octonion_loop,
}


@pytest.mark.parametrize("name", GROUPOIDS)
@pytest.mark.parametrize("field", [QQ, F5], ids=str)
def test_bigroupoid_reproduces_groupoid(name, field):
    G = GROUPOIDS[name]()
    res = from_bigroupoid(corpus.groupoid_bigroupoid(G), field)
    assert res.ideal_dim == 0
    assert res.whq == from_groupoid(G, field)
    assert res.whq.labels == tuple(G.arrows)


@pytest.mark.parametrize("name", LOOPS)
def test_bigroupoid_reproduces_loop(name):
    L = LOOPS[name]()
    res = from_bigroupoid(corpus.loop_bigroupoid(L))
    assert res.ideal_dim == 0
    assert res.whq == from_loop(L)


def test_doubled_z2_quotient():
    res = from_bigroupoid(corpus.doubled_z2_bigroupoid())
    assert res.ideal_dim == 1
    assert res.classes == (("e",), ("a", "b"))
    assert res.class_of == {"e": 0, "a": 1, "b": 1}
    assert res.whq.dim + res.ideal_dim == 3
    assert res.whq == from_loop(corpus.cyclic_group(2))
    assert check_axioms(res.whq).passed


def test_loop_pair_bigroupoid_is_neither():
    res = from_bigroupoid(corpus.loop_pair_bigroupoid(corpus.smallest_nonassociative_ip_loop()))
    assert res.ideal_dim == 0 and res.whq.dim == 28
    flags = check_axioms(res.whq).flags
    assert flags["is_weak_hopf_quasigroup"]
    assert not flags["is_weak_hopf_algebra"] and not flags["is_hopf_quasigroup"]


def test_extra_inverses_only_feed_the_ideal():
    B = corpus.doubled_z2_bigroupoid()
    B2 = BigroupoidPresentation(B.zero_cells, B.one_cells, B.source, B.target,
                                B.identities, B.composition,
                                {"e": "e", "a": "a", "b": "b"}, {"a": ("b",)})
    res = from_bigroupoid(B2)
    assert res.classes == (("e",), ("a", "b"))


def test_inverse_with_wrong_endpoints_rejected():
    G = corpus.pair_groupoid()
    B = corpus.groupoid_bigroupoid(G)
    inv = dict(B.inv)
    inv["y<-x"] = "y<-x"
    with pytest.raises(InconsistentPresentation):
        from_bigroupoid(BigroupoidPresentation(B.zero_cells, B.one_cells, B.source,
                                               B.target, B.identities, B.composition, inv))


def test_non_normal_presentation_rejected():
    B = corpus.doubled_z2_bigroupoid()
    comp = dict(B.composition)
    comp["e", "a"] = "b"
    with pytest.raises(InvalidPresentation):
        from_bigroupoid(BigroupoidPresentation(B.zero_cells, B.one_cells, B.source,
                                               B.target, B.identities, comp, B.inv))


def test_inverse_class_independent_of_designated_inverse():
    # b designates c as its inverse; the ideal identifies a, b and c anyway
    cells = ("e", "a", "b", "c")
    table = {
        "e": {"e": "e", "a": "a", "b": "b", "c": "c"},
        "a": {"e": "a", "a": "e", "b": "e", "c": "e"},
        "b": {"e": "b", "a": "e", "b": "e", "c": "e"},
        "c": {"e": "c", "a": "e", "b": "e", "c": "e"},
    }
    comp = {(g, f): table[g][f] for g in cells for f in cells}
    one = {c: "*" for c in cells}
    B = BigroupoidPresentation(("*",), cells, one, one, {"*": "e"}, comp,
                               {"e": "e", "a": "a", "b": "c", "c": "c"})
    res = from_bigroupoid(B)
    assert res.classes == (("e",), ("a", "b", "c"))


def test_ideal_vectors_have_zero_coefficient_sum():
    # spans of one-cell differences never contain a single cell, so the
    # quotient is never the zero algebra
    ech = ideal_closure(corpus.doubled_z2_bigroupoid())
    assert all(sum(v.values()) == 0 for v in ech.basis())


@pytest.mark.parametrize("name", ["pair", "two_z2", "loop_pair", "doubled_z2"])
def test_target_and_source_formulas_per_class(name):
    presentations = {
        "pair": lambda: corpus.groupoid_bigroupoid(corpus.pair_groupoid()),
        "two_z2": lambda: corpus.groupoid_bigroupoid(corpus.two_copies_of_z2()),
        "loop_pair": lambda: corpus.loop_pair_bigroupoid(
            corpus.smallest_nonassociative_ip_loop()),
        "doubled_z2": corpus.doubled_z2_bigroupoid,
    }
    B = presentations[name]()
    res = from_bigroupoid(B)
    H = res.whq
    for k, members in enumerate(res.classes):
        f = members[0]
        assert H.pi_L.column(k) == {res.class_of[B.identities[B.target[f]]]: 1}
        assert H.pi_R.column(k) == {res.class_of[B.identities[B.source[f]]]: 1}


# -- properties -------------------------------------------------------------

@st.composite
def random_groupoid(draw):
    """Disjoint union of pair groupoids times cyclic groups."""
    parts = []
    for k in range(draw(st.integers(1, 2))):
        n_obj = draw(st.integers(1, 2))
        order = draw(st.integers(1, 3))
        objs = tuple(f"o{k}{i}" for i in range(n_obj))
        if n_obj == 1:
            parts.append(corpus.group_groupoid(corpus.cyclic_group(order), objs[0], f"{k}."))
        else:
            parts.append(corpus.pair_groupoid(objs))
    return corpus.disjoint_union(*parts)


@settings(max_examples=15, deadline=None)
@given(random_groupoid())
def test_groupoid_algebras_are_weak_hopf_algebras(G):
    H = from_groupoid(G)
    rep = check_axioms(H)
    assert rep.passed and rep.flags["is_weak_hopf_algebra"]
    assert from_bigroupoid(corpus.groupoid_bigroupoid(G)).whq == H
    assert rep.dimensions["rank_pi_L"] == len(G.objects)
