"""Shared corpus fixtures. Every algebra is built once per session."""

from functools import lru_cache

import pytest

from weakhopf import QQ, Field, from_bigroupoid, from_groupoid, from_loop
from weakhopf import corpus

F5 = Field.prime(5)


@lru_cache(maxsize=None)
def build(name: str):
    if name == "z2":
        return from_loop(corpus.cyclic_group(2))
    if name == "z3":
        return from_loop(corpus.cyclic_group(3))
    if name == "z2_f5":
        return from_loop(corpus.cyclic_group(2), F5)
    if name == "z3_f5":
        return from_loop(corpus.cyclic_group(3), F5)
    if name == "pair":
        return from_groupoid(corpus.pair_groupoid())
    if name == "two_z2":
        return from_groupoid(corpus.two_copies_of_z2())
    if name == "octonion":
        return from_loop(corpus.octonion_loop())
    if name == "ip7":
        return from_loop(corpus.smallest_nonassociative_ip_loop())
    if name == "loop_pair":
        return from_bigroupoid(
            corpus.loop_pair_bigroupoid(corpus.smallest_nonassociative_ip_loop())).whq
    if name == "doubled_z2":
        return from_bigroupoid(corpus.doubled_z2_bigroupoid()).whq
    raise KeyError(name)


# the corpus named by the axiom-suite acceptance criterion
CORPUS = ("z2", "z3", "z2_f5", "z3_f5", "pair", "two_z2", "octonion", "ip7")
# everything else that should also be a valid weak Hopf quasigroup
EXTENDED = CORPUS + ("loop_pair", "doubled_z2")
SMALL = ("z2", "z3", "z2_f5", "z3_f5", "pair", "two_z2", "ip7", "doubled_z2")


@pytest.fixture(params=CORPUS)
def corpus_whq(request):
    return build(request.param)


@pytest.fixture(params=SMALL)
def small_whq(request):
    return build(request.param)


@pytest.fixture(scope="session")
def pair():
    return build("pair")


@pytest.fixture(scope="session")
def z2():
    return build("z2")


@pytest.fixture(scope="session")
def z3():
    return build("z3")


@lru_cache(maxsize=None)
def axiom_report(name: str):
    from weakhopf import check_axioms
    return check_axioms(build(name))


@lru_cache(maxsize=None)
def derived_report(name: str):
    from weakhopf import check_derived
    return check_derived(build(name), axiom_report(name))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
