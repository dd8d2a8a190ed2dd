"""Pass/fail verdicts for exact identities and the reports that collect them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .exact_linear import LinMap, Scalar, first_difference


@dataclass(frozen=True)
class Verdict:
    """Outcome of one exact identity ``lhs == rhs``.

    On failure ``witness`` is the lowest domain basis index where the sides
    differ and ``difference`` is the sparse column ``lhs - rhs`` there.
    """

    id: str
    anchor: str
    group: str
    passed: bool
    witness: int | None = None
    difference: tuple[tuple[int, Scalar], ...] = ()
    conditional: bool = False

    def __bool__(self) -> bool:
        return self.passed


def compare(id: str, lhs: LinMap, rhs: LinMap, anchor: str = "",
            group: str | None = None, conditional: bool = False) -> Verdict:
    diff = first_difference(lhs, rhs)
    group = group or id
    if diff is None:
        return Verdict(id, anchor, group, True, conditional=conditional)
    col, d = diff
    return Verdict(id, anchor, group, False, col, tuple(sorted(d.items())),
                   conditional)


def holds(id: str, ok: bool, anchor: str = "", group: str | None = None,
          conditional: bool = False) -> Verdict:
    """Verdict for a non-matrix property (subspace equality, rank, ...)."""
    return Verdict(id, anchor, group or id, bool(ok), conditional=conditional)


@dataclass(frozen=True)
class Identity:
    """A catalog entry: two composition pipelines and where they come from."""

    id: str
    lhs: Callable
    rhs: Callable
    anchor: str
    group: str = ""

    def evaluate(self, obj, conditional: bool = False) -> Verdict:
        return compare(self.id, self.lhs(obj), self.rhs(obj), self.anchor,
                       self.group or self.id, conditional)


@dataclass
class Report:
    verdicts: list[Verdict] = field(default_factory=list)
    flags: dict[str, bool] = field(default_factory=dict)
    dimensions: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def first_failure(self) -> Verdict | None:
        return next((v for v in self.verdicts if not v.passed), None)

    def __getitem__(self, id: str) -> Verdict:
        for v in self.verdicts:
            if v.id == id:
                return v
        raise KeyError(id)

    def group(self, name: str) -> list[Verdict]:
        return [v for v in self.verdicts if v.group == name]

    def group_passed(self, name: str) -> bool:
        members = self.group(name)
        if not members:
            raise KeyError(name)
        return all(v.passed for v in members)

    def groups(self) -> list[str]:
        seen: dict[str, None] = {}
        for v in self.verdicts:
            seen.setdefault(v.group, None)
        return list(seen)

    def extend(self, verdicts: Iterable[Verdict]) -> None:
        self.verdicts.extend(verdicts)
